#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "palinform/reduction.hpp"

using namespace palinform;
namespace rd = palinform::reduction;
namespace rl = palinform::rootloc;
namespace pc = palinform::polycore;

namespace {

ExactComplex rat(long v) { return ExactComplex(Rational(v)); }
ExactComplex rat(const Rational& v) { return ExactComplex(v); }

FormX form(std::initializer_list<long> ints) {
    std::vector<ExactComplex> c;
    for (long v : ints) c.emplace_back(Rational(v));
    return FormX(std::move(c));
}

Moebius<ExactComplex> imat(long a, long b, long c, long d) {
    return {rat(a), rat(b), rat(c), rat(d)};
}

// Totally real palindromic form from reciprocal root pairs (r, 1/r), plus a
// root -1 (odd degree) to keep the product palindromic.
FormX palindromic_totally_real(std::mt19937& rng, int degree, const Rational& scale) {
    std::vector<ExactComplex> roots;
    std::set<std::pair<long, long>> used;
    auto add_pair = [&]() {
        for (;;) {
            Rational r = oracles::random_nonzero_rational(rng, 7, 4);
            if (r == 1 || r == -1) continue;
            auto key = std::make_pair(r.get_num().get_si(), r.get_den().get_si());
            auto inv = std::make_pair(r.get_den().get_si() * (r < 0 ? -1 : 1),
                                      std::abs(r.get_num().get_si()));
            if (used.count(key) || used.count(inv)) continue;
            used.insert(key);
            used.insert(inv);
            roots.push_back(rat(r));
            roots.push_back(rat(1 / r));
            return;
        }
    };
    int pairs = degree / 2;
    for (int i = 0; i < pairs; ++i) add_pair();
    if (degree % 2) roots.push_back(rat(-1));
    PolyX p = PolyX::from_roots(std::span<const ExactComplex>(roots), rat(scale));
    return FormX::homogenize(p, degree);
}

}  // namespace

TEST_CASE("act on forms") {
    FormX f = form({1, 0, 1});  // x^2 + y^2
    FormX sheared = act(f, imat(1, 1, 0, 1));
    CHECK(sheared == form({2, 2, 1}));  // x^2 + 2xy + 2y^2
    RootSet rs = find_roots(to_complexd_coeffs(sheared.dehomogenize()));
    bool seen = false;
    for (const auto& r : rs.roots) seen = seen || std::abs(r - ComplexD(-1, 1)) < 1e-9;
    CHECK(seen);

    CHECK(act(f, imat(1, 0, 0, 1)) == f);

    FormX g = form({-1, 0, 1});  // x^2 - y^2
    CHECK(act(g, imat(0, -1, 1, 0)) == form({1, 0, -1}));

    CHECK_THROWS_WITH_AS(act(f, imat(1, 2, 2, 4)), doctest::Contains("SingularMatrix"), Error);
}

TEST_CASE("action composition law") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = 2 + trial % 4;
        std::vector<ExactComplex> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(Rational(e(rng)), Rational(e(rng)));
        FormX f(std::move(c));
        Moebius<ExactComplex> M = imat(e(rng), e(rng), e(rng), e(rng));
        Moebius<ExactComplex> N = imat(e(rng), e(rng), e(rng), e(rng));
        if (M.det().is_zero() || N.det().is_zero()) continue;
        CHECK(act(act(f, M), N) == act(f, M * N));
    }
}

TEST_CASE("cayley desk examples") {
    // roots {1, -1} -> {-i, i}
    FormX f = form({-1, 0, 1});
    FormX image = rd::cayley_to_circle(f);
    RootSet rs = find_roots(to_complexd_coeffs(image.dehomogenize()));
    REQUIRE(rs.roots.size() == 2);
    for (const auto& r : rs.roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);

    // roots {0, 1} -> {-1, -i}
    FormX g = form({0, -1, 1});  // x^2 - xy = x(x - y)
    RootSet rs2 = find_roots(to_complexd_coeffs(rd::cayley_to_circle(g).dehomogenize()));
    bool saw_m1 = false, saw_mi = false;
    for (const auto& r : rs2.roots) {
        saw_m1 = saw_m1 || std::abs(r - ComplexD(-1, 0)) < 1e-9;
        saw_mi = saw_mi || std::abs(r - ComplexD(0, -1)) < 1e-9;
    }
    CHECK(saw_m1);
    CHECK(saw_mi);

    // round trip is a scalar multiple
    FormX back = rd::cayley_to_real(image);
    const ExactComplex scalar = back[2] / f[2];
    for (int i = 0; i <= 2; ++i) CHECK(back[i] == scalar * f[i]);
}

TEST_CASE("cayley contract on random totally real forms") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int deg = 2 + trial % 5;
        std::vector<ExactComplex> roots;
        for (int i = 0; i < deg; ++i) roots.push_back(rat(oracles::random_rational(rng, 9, 4)));
        PolyX p = PolyX::from_roots(std::span<const ExactComplex>(roots),
                                    rat(oracles::random_nonzero_rational(rng, 5, 3)));
        FormX f = FormX::homogenize(p, deg);
        FormX image = rd::cayley_to_circle(f);
        Poly<ComplexD> dehom = to_float_form(image).dehomogenize();
        if (dehom.degree() < 1) continue;
        RootSet rs = find_roots(dehom.coeffs());
        for (const auto& r : rs.roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-8);
    }

    // converse: a non-real root pair lands off the circle
    FormX f = form({1, 1, 1});  // x^2 + xy + y^2, roots are primitive 6th roots
    RootSet rs = find_roots(to_complexd_coeffs(rd::cayley_to_circle(f).dehomogenize()));
    bool off = false;
    for (const auto& r : rs.roots) off = off || std::abs(std::abs(r) - 1.0) > 1e-3;
    CHECK(off);
}

TEST_CASE("g covariant desk checks") {
    FormX f = form({0, -1, 0, 1});  // x^3 - x y^2
    FormX g = rd::g_covariant(f);
    CHECK(g == form({-1, 0, -3}));  // -(3x^2 + y^2)
    CHECK(g.degree() == 2);

    FormX cubic = form({1, 0, 0, 1});  // x^3 + y^3
    FormX g2 = rd::g_covariant(cubic);
    CHECK(g2.degree() == 2);

    // scaling f by c rescales G by a fixed power of c
    FormX doubled = ExactComplex(Rational(2)) * f;
    FormX gs = rd::g_covariant(doubled);
    ExactComplex ratio = gs[2] / g[2];
    for (int i = 0; i <= 2; ++i) CHECK(gs[i] == ratio * g[i]);

    CHECK_THROWS_WITH_AS(rd::g_covariant(form({1, 0, 1})), doctest::Contains("DegreeTooLow"), Error);
}

TEST_CASE("julia quadratic and zero map") {
    FormX f = form({0, -1, 0, 1});
    auto j = rd::julia_quadratic(f);
    CHECK(std::abs(j.root - ComplexD(0, 1.0 / std::sqrt(3.0))) < 1e-12);

    // x(x - y)(x + 2y) = x^3 + x^2 y - 2 x y^2
    FormX g = form({0, -2, 1, 1});
    auto jg = rd::julia_quadratic(g);
    CHECK(jg.root.imag() > 0);
    CHECK(jg.c > 0);  // monic with positive constant: positive definite

    // (x - y)(x - 2y)(x - 3y)(x - 4y)
    std::vector<ExactComplex> roots{rat(1), rat(2), rat(3), rat(4)};
    FormX q = FormX::homogenize(PolyX::from_roots(std::span<const ExactComplex>(roots)), 4);
    auto jq = rd::julia_quadratic(q);
    CHECK(jq.root.imag() > 0);

    CHECK(std::abs(rd::zero_map(form({1, 0, 1})).value - ComplexD(0, 1)) < 1e-12);
    CHECK(std::abs(rd::zero_map(form({1, 1, 1})).value - ComplexD(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(rd::zero_map(f).value - ComplexD(0, 1.0 / std::sqrt(3.0))) < 1e-12);
    CHECK_THROWS_WITH_AS(rd::zero_map(form({-1, 0, 1})), doctest::Contains("NotPositiveDefinite"), Error);
}

TEST_CASE("fundamental domain membership") {
    CHECK(rd::in_fundamental_domain(rd::UpperHalfPoint({0, 1})));
    CHECK_FALSE(rd::in_fundamental_domain(rd::UpperHalfPoint({0, 0.6})));
    CHECK_FALSE(rd::in_fundamental_domain(rd::UpperHalfPoint({0.7, 2})));
    CHECK_THROWS_AS(rd::UpperHalfPoint({0.1, -1}), Error);
}

TEST_CASE("region T membership") {
    CHECK(rd::region_T_membership({2, 0}));       // boundary: 4 - 4 = 0
    CHECK_FALSE(rd::region_T_membership({0.5, 0}));
    CHECK(rd::region_T_membership({0.3, 2}));
}

TEST_CASE("reduce desk walks") {
    auto cubic = rd::reduce(form({0, -1, 0, 1}));
    CHECK(cubic.trace == "S");
    CHECK(std::abs(cubic.eps_after - ComplexD(0, std::sqrt(3.0))) < 1e-10);
    CHECK(cubic.max_equivariance_residual < 1e-10);

    // quadratic with zero map 5 + 2i: z^2 - 10 z + 29
    auto shifted = rd::reduce(form({29, -10, 1}));
    CHECK(shifted.trace == "T^-5");
    CHECK(std::abs(shifted.eps_after - ComplexD(0, 2)) < 1e-12);

    auto fixed = rd::reduce(form({1, 0, 1}));
    CHECK(fixed.trace.empty());
    CHECK(fixed.steps == 0);
    CHECK(fixed.matrix.a == 1);
    CHECK(fixed.matrix.b == 0);
    CHECK(fixed.reduced == form({1, 0, 1}));
}

TEST_CASE("reduce matches gauss reduction") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> ad(1, 30), bd(-60, 60), extra(0, 50);
    for (int trial = 0; trial < 300; ++trial) {
        long a = ad(rng), b = bd(rng);
        long cmin = (b * b) / (4 * a) + 1;
        long c = cmin + extra(rng);
        auto result = rd::reduce(form({c, b, a}));
        oracles::Quad want = oracles::gauss_reduce({Integer(a), Integer(b), Integer(c)});
        REQUIRE(result.reduced.degree() == 2);
        Integer ra(result.reduced[2].re.rational_part().get_num());
        Integer rb(result.reduced[1].re.rational_part().get_num());
        Integer rc(result.reduced[0].re.rational_part().get_num());
        CHECK(ra == want.a);
        CHECK(rb == want.b);
        CHECK(rc == want.c);
        CHECK(result.max_equivariance_residual < 1e-10);
        // the returned matrix really transforms f to the reduced form
        CHECK(act(form({c, b, a}), result.matrix.as<ExactComplex>()) == result.reduced);
    }
}

TEST_CASE("reduce_from_circle") {
    // (z^2 + 1)(z + 1): all roots on the unit circle
    PolyX p = PolyX(std::vector<ExactComplex>{rat(1), rat(1), rat(1), rat(1)});
    auto out = rd::reduce_from_circle(p);
    CHECK((out.region == "F" || out.region == "T"));
    for (const auto& c : out.form.coeffs()) CHECK(c.im.is_zero());

    CHECK_THROWS_WITH_AS(rd::reduce_from_circle(PolyX(std::vector<ExactComplex>{rat(1), rat(-5), rat(2)})),
                         doctest::Contains("NotSelfInversive"), Error);
    // self-inversive but roots off the circle
    CHECK_THROWS_WITH_AS(rd::reduce_from_circle(PolyX(std::vector<ExactComplex>{rat(2), rat(-5), rat(2)})),
                         doctest::Contains("HypothesisFailed"), Error);
}

TEST_CASE("sigma involution check") {
    FormX cubic = form({1, -2, -2, 1});
    auto rep = rd::sigma_involution_check(cubic);
    CHECK(rep.relation_holds);
    CHECK(rep.g_class.palindromic);

    // quintic: (x + y)(x^2 - 3xy + y^2)(x^2 - 4xy + y^2)
    FormX quintic = form({1, 1}) * form({1, -3, 1}) * form({1, -4, 1});
    auto rep5 = rd::sigma_involution_check(quintic);
    CHECK(rep5.relation_holds);
    CHECK(rep5.g_class.palindromic);
    CHECK(rep5.g_degree == 12);

    CHECK_THROWS_AS(rd::sigma_involution_check(form({0, -1, 0, 1})), Error);  // not palindromic
}

TEST_CASE("palindromic totally real forms give self-inversive covariants") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = 3 + trial % 4;
        FormX f = palindromic_totally_real(rng, deg, oracles::random_nonzero_rational(rng, 4, 3));
        auto rep = rd::sigma_involution_check(f);
        CHECK(rep.relation_holds);
        CHECK(rep.g_degree == (deg - 1) * (deg - 2));
        CHECK(rep.g_class.self_inversive.has_value());
        if (deg % 2 == 1) CHECK(rep.g_class.palindromic);
        else CHECK(rep.g_class.antipalindromic);
        // the covariant's unique non-real pair gives a point inside H_2
        auto j = rd::julia_quadratic(f);
        CHECK(j.root.imag() > 0);
    }
}
