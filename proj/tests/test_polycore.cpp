#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "palinform/polycore.hpp"
#include "palinform/rootloc.hpp"

using namespace palinform;
namespace pc = palinform::polycore;

namespace {

PolyX xpoly(std::initializer_list<long> ints) {
    std::vector<ExactComplex> c;
    for (long v : ints) c.emplace_back(Rational(v));
    return PolyX(std::move(c));
}

ExactComplex ei(long re, long im) { return {QuadRat(Rational(re)), QuadRat(Rational(im))}; }

}  // namespace

TEST_CASE("conjugate") {
    PolyX p(std::vector<ExactComplex>{ei(1, 0), ei(0, 1)});  // 1 + i z
    PolyX c = pc::conjugate(p);
    CHECK(c[1] == ei(0, -1));
    CHECK(pc::conjugate(xpoly({3, 1, 4})) == xpoly({3, 1, 4}));
    PolyX q(std::vector<ExactComplex>{ei(2, -1), ei(3, 0), ei(0, 5)});
    CHECK(pc::conjugate(pc::conjugate(q)) == q);
}

TEST_CASE("reciprocal and inversive") {
    CHECK(pc::reciprocal(xpoly({3, 2, 1})) == xpoly({1, 2, 3}));
    CHECK(pc::reciprocal(xpoly({1, 5, 1})) == xpoly({1, 5, 1}));
    PolyX q = xpoly({2, 7, -3});
    CHECK(pc::reciprocal(pc::reciprocal(q)) == q);

    PolyX p(std::vector<ExactComplex>{ei(2, 0), ei(0, 1)});  // 2 + i z
    PolyX inv = pc::inversive(p);
    CHECK(inv[0] == ei(0, -1));
    CHECK(inv[1] == ei(2, 0));
    CHECK(pc::inversive(xpoly({1, 4, 1})) == xpoly({1, 4, 1}));
    PolyX r(std::vector<ExactComplex>{ei(1, 2), ei(5, 0), ei(0, -3)});
    CHECK(pc::inversive(pc::inversive(r)) == r);
}

TEST_CASE("classify basics") {
    auto c1 = pc::classify(xpoly({1, 3, 3, 1}));  // (x+1)^3
    CHECK(c1.palindromic);
    CHECK(c1.quasi_palindromic);
    CHECK(c1.self_inversive.has_value());

    auto c2 = pc::classify(xpoly({-1, 3, -3, 1}));  // (x-1)^3
    CHECK(c2.antipalindromic);
    CHECK(!c2.palindromic);
    CHECK(c2.quasi_palindromic);

    auto c3 = pc::classify(xpoly({1, 5, 1}));
    CHECK(c3.self_inversive.has_value());
    CHECK(*c3.self_inversive == ei(1, 0));

    CHECK_THROWS_AS(pc::classify(PolyX{}), Error);
}

TEST_CASE("decompose/compose half") {
    auto [m, g] = pc::decompose_half(xpoly({1, 2, 3, 2, 1}));
    CHECK(m == 2);
    CHECK(g == xpoly({1, 2, 1}));
    CHECK(pc::compose_half(m, g) == xpoly({1, 2, 3, 2, 1}));

    auto [m2, g2] = pc::decompose_half(xpoly({1, 0, 2, 0, 1}));
    CHECK(m2 == 2);
    CHECK(g2 == xpoly({0, 0, 1}));

    auto [m3, g3] = pc::decompose_half(xpoly({7}));
    CHECK(m3 == 0);
    CHECK(g3 == xpoly({7}));

    CHECK(pc::compose_half(1, xpoly({0, 1})) == xpoly({1, 0, 1}));
    CHECK_THROWS_AS(pc::decompose_half(xpoly({1, 2, 1, 1})), Error);
}

TEST_CASE("forced roots") {
    auto r = pc::forced_root_quotient(xpoly({1, 2, 2, 1}));
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0] == xpoly({1, 1}));
    CHECK(r.quotient == xpoly({1, 1, 1}));

    auto r2 = pc::forced_root_quotient(xpoly({-1, 0, 0, 1}));
    CHECK(r2.factors[0] == xpoly({-1, 1}));
    CHECK(r2.quotient == xpoly({1, 1, 1}));

    auto r3 = pc::forced_root_quotient(xpoly({-1, 0, 1}));
    CHECK(r3.factors[0] == xpoly({-1, 0, 1}));
    CHECK(r3.quotient == xpoly({1}));
}

TEST_CASE("products") {
    CHECK(pc::product(xpoly({1, 1}), xpoly({1, 1})) == xpoly({1, 2, 1}));
    PolyX prod = pc::product(xpoly({1, 3, 1}), xpoly({-1, 0, 1}));
    CHECK(prod == xpoly({-1, -3, 0, 3, 1}));
    CHECK(pc::classify(prod).antipalindromic);
    CHECK(pc::product(xpoly({4, 5, 6}), xpoly({1})) == xpoly({4, 5, 6}));
}
