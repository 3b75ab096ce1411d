#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "palinform/rootloc.hpp"

using namespace palinform;
namespace rl = palinform::rootloc;
namespace pc = palinform::polycore;

namespace {

PolyX xpoly(std::initializer_list<const char*> strs) {
    std::vector<ExactComplex> c;
    for (const char* s : strs) c.emplace_back(parse_rational(s));
    return PolyX(std::move(c));
}

PolyX chain(std::initializer_list<const char*> alphas) {
    std::vector<QuadRat> a;
    for (const char* s : alphas) a.emplace_back(parse_rational(s));
    return rl::product_chain<ExactComplex>(std::span<const QuadRat>(a));
}

bool coeffs_equal(const PolyX& p, std::initializer_list<const char*> strs) {
    std::vector<const char*> v(strs);
    if (p.degree() + 1 != static_cast<int>(v.size())) return false;
    for (int i = 0; i <= p.degree(); ++i) {
        if (!p[i].im.is_zero()) return false;
        if (p[i].re != QuadRat(parse_rational(v[static_cast<std::size_t>(i)]))) return false;
    }
    return true;
}

bool has_root_near(const RootSet& rs, ComplexD want, double tol = 1e-8) {
    for (const auto& r : rs.roots)
        if (std::abs(r - want) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("root solver basics") {
    RootSet rs = rl::roots(xpoly({"1", "0", "1"}));
    CHECK(rs.roots.size() == 2);
    CHECK(has_root_near(rs, {0, 1}));
    CHECK(has_root_near(rs, {0, -1}));

    RootSet quartic = rl::roots(xpoly({"-1", "0", "0", "0", "1"}));
    CHECK(quartic.roots.size() == 4);
    for (ComplexD w : {ComplexD(1, 0), ComplexD(-1, 0), ComplexD(0, 1), ComplexD(0, -1)})
        CHECK(has_root_near(quartic, w));

    RootSet dbl = rl::roots(xpoly({"1", "2", "1"}));
    CHECK(dbl.roots.size() == 2);
    CHECK(has_root_near(dbl, {-1, 0}, 1e-6));
    CHECK(dbl.residual <= 1e-10);

    // deterministic for a fixed seed
    RootSet a = rl::roots(xpoly({"3", "1", "4", "1", "5"}), 1e-12, 7);
    RootSet b = rl::roots(xpoly({"3", "1", "4", "1", "5"}), 1e-12, 7);
    for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i] == b.roots[i]);
}

TEST_CASE("circle report") {
    auto quartic = rl::circle_report(xpoly({"-1", "0", "0", "0", "1"}));
    CHECK(quartic.on_circle == 4);
    CHECK(quartic.inside == 0);
    CHECK(quartic.outside == 0);

    auto split = rl::circle_report(xpoly({"1", "-5/2", "1"}));
    CHECK(split.on_circle == 0);
    CHECK(split.inside == 1);
    CHECK(split.outside == 1);

    // (z - 1.1)(z - 1/1.1)(z^2 + 1)
    std::vector<ExactComplex> roots{ExactComplex(parse_rational("1.1")), ExactComplex(parse_rational("10/11")),
                                    ExactComplex(QuadRat(0), QuadRat(1)), ExactComplex(QuadRat(0), QuadRat(-1))};
    PolyX p = PolyX::from_roots(std::span<const ExactComplex>(roots));
    auto mixed = rl::circle_report(p);
    CHECK(mixed.on_circle == 2);
    CHECK(mixed.inside == 1);
    CHECK(mixed.outside == 1);
    CHECK(mixed.on_circle + mixed.inside + mixed.outside == p.degree());
}

TEST_CASE("cohn test") {
    CHECK(rl::cohn_test(xpoly({"1", "0", "1"})));
    CHECK(rl::cohn_test(xpoly({"1", "0", "0", "0", "1"})));
    CHECK_FALSE(rl::cohn_test(xpoly({"1", "-5/2", "1"})));
    CHECK_THROWS_WITH_AS(rl::cohn_test(xpoly({"1", "2"})), doctest::Contains("NotSelfInversive"), Error);

    // perturbing a unimodular pair to (r, 1/r) flips the verdict
    PolyX good = chain({"-1", "1/2"});
    CHECK(rl::cohn_test(good));
    std::vector<ExactComplex> perturbed{ExactComplex(parse_rational("11/10")), ExactComplex(parse_rational("10/11")),
                                        ExactComplex(QuadRat(0), QuadRat(1)), ExactComplex(QuadRat(0), QuadRat(-1))};
    PolyX bad = PolyX::from_roots(std::span<const ExactComplex>(perturbed));
    CHECK_FALSE(rl::cohn_test(bad));
    auto rep = rl::circle_report(bad);
    CHECK(rep.inside == 1);
    CHECK(rep.outside == 1);
}

TEST_CASE("lakatos-losonczi") {
    PolyX strong = xpoly({"10", "1", "1", "1", "10"});
    CHECK(rl::lakatos_losonczi(strong));
    CHECK(rl::circle_report(strong).on_circle == 4);
    CHECK_FALSE(rl::lakatos_losonczi(xpoly({"1", "10", "1"})));
    CHECK(rl::lakatos_losonczi(xpoly({"1", "1"})));
    CHECK(rl::circle_report(xpoly({"1", "1"})).on_circle == 1);
    // variant drops |a_n| from the sum
    CHECK(rl::lakatos_losonczi(xpoly({"2", "3", "2"}), false));
    CHECK_FALSE(rl::lakatos_losonczi(xpoly({"2", "3", "2"}), true));
}

TEST_CASE("vieira prediction") {
    PolyX strong = xpoly({"10", "1", "1", "1", "10"});
    auto full = rl::vieira_predict(strong, 0);
    REQUIRE(full.has_value());
    CHECK(*full == 4);
    CHECK(rl::circle_report(strong).on_circle == 4);

    PolyX middle = xpoly({"1", "0", "100", "0", "1"});
    auto none = rl::vieira_predict(middle, 2);
    REQUIRE(none.has_value());
    CHECK(*none == 0);
    CHECK(rl::circle_report(middle).on_circle == 0);

    CHECK_FALSE(rl::vieira_predict(xpoly({"1", "10", "1"}), 0).has_value());
    CHECK_THROWS_AS(rl::vieira_predict(strong, 3), Error);
}

TEST_CASE("max modulus") {
    CHECK(rl::max_modulus(xpoly({"0", "1"})) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rl::max_modulus(xpoly({"1", "1"})) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(rl::max_modulus(xpoly({"1", "0", "1"})) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("ohara bounds") {
    auto rep = rl::ohara_bounds(xpoly({"1", "2", "1"}));
    CHECK(rep.p_norm == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(rep.coeff_bound_ok);
    CHECK(rep.middle_sqrt2_ok);
    CHECK(rep.mcc_ok);
    CHECK(rep.mcc_sufficient);

    auto rep2 = rl::ohara_bounds(xpoly({"1", "0", "1"}));
    CHECK(rep2.p_norm == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(rep2.coeff_bound_ok);

    auto rep3 = rl::ohara_bounds(xpoly({"1", "1"}));  // odd degree: no middle coefficient
    CHECK_FALSE(rep3.has_middle);
    CHECK(rep3.coeff_bound_ok);

    CHECK_THROWS_WITH_AS(rl::ohara_bounds(xpoly({"1", "-5/2", "1"})), doctest::Contains("HypothesisFailed"), Error);
}

TEST_CASE("product chain") {
    CHECK(coeffs_equal(chain({"-2"}), {"1", "2", "1"}));
    CHECK(coeffs_equal(chain({}), {"1"}));
    CHECK(coeffs_equal(chain({"-1.05", "0.28", "-1.25"}),
                       {"1", "2.02", "3.6685", "3.6725", "3.6685", "2.02", "1"}));
}

TEST_CASE("the displayed chain products and their verdicts") {
    struct Row {
        std::vector<const char*> alphas;
        std::vector<const char*> coeffs;
        bool satisfies;
    };
    const std::vector<Row> rows = {
        {{"-1.05", "0.28", "-1.25"}, {"1", "2.02", "3.6685", "3.6725", "3.6685", "2.02", "1"}, true},
        {{"-1.05", "0.30", "-1.25"}, {"1", "2", "3.6225", "3.60625", "3.6225", "2", "1"}, false},
        {{"-1.05", "0.3", "-1.25", "0.6"},
         {"1", "1.4", "3.4225", "3.43275", "5.08125", "3.43275", "3.4225", "1.4", "1"},
         true},
        {{"-1.05", "0.3", "-1.25", "0.7"},
         {"1", "1.3", "3.2225", "3.0705", "4.720625", "3.0705", "3.2225", "1.3", "1"},
         false},
        {{"-1.5", "-0.2", "-0.1"}, {"1", "1.8", "3.47", "3.63", "3.47", "1.8", "1"}, true},
        {{"-1.5", "-0.2", "-0.1", "0.5"},
         {"1", "1.3", "3.57", "3.695", "5.125", "3.695", "3.57", "1.3", "1"},
         true},
        {{"-1.5", "-0.2", "-0.1", "0.6"},
         {"1", "1.2", "3.39", "3.348", "4.762", "3.348", "3.39", "1.2", "1"},
         false},
        {{"-0.1", "-0.2", "-0.3", "-0.92"},
         {"1", "1.52", "4.662", "4.6672", "7.32952", "4.6672", "4.662", "1.52", "1"},
         true},
        {{"-0.1", "-0.2", "-0.3", "-0.91"},
         {"1", "1.51", "4.656", "4.6361", "7.31746", "4.6361", "4.656", "1.51", "1"},
         false},
        {{"-0.1", "-0.2", "-0.3", "-0.92", "-0.999"},
         {"1", "2.519", "7.18048", "10.844538", "16.6540528", "16.65659048", "16.6540528", "10.844538",
          "7.18048", "2.519", "1"},
         true},
        {{"-0.1", "-0.2", "-0.3", "-0.92", "-0.99"},
         {"1", "2.51", "7.1668", "10.80258", "16.612048", "16.5906248", "16.612048", "10.80258", "7.1668",
          "2.51", "1"},
         false},
    };
    for (const Row& row : rows) {
        std::vector<QuadRat> alphas;
        for (const char* s : row.alphas) alphas.emplace_back(parse_rational(s));
        PolyX p = rl::product_chain<ExactComplex>(std::span<const QuadRat>(alphas));
        REQUIRE(p.degree() + 1 == static_cast<int>(row.coeffs.size()));
        for (int i = 0; i <= p.degree(); ++i)
            CHECK(p[i].re == QuadRat(parse_rational(row.coeffs[static_cast<std::size_t>(i)])));
        CHECK(rl::symmetric_increasing(p).holds == row.satisfies);
    }
}

TEST_CASE("symmetric increasing report") {
    CHECK(rl::symmetric_increasing(xpoly({"1", "2", "1"})).holds);
    auto bad = rl::symmetric_increasing(xpoly({"1", "3", "1", "3", "1"}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.symmetry_ok);
    CHECK_FALSE(bad.monotone_ok);
    REQUIRE(bad.first_violation.has_value());
    CHECK(bad.first_violation->first == 1);
    CHECK(bad.first_violation->second == 2);

    auto asym = rl::symmetric_increasing(xpoly({"1", "2", "3", "4", "5"}));
    CHECK_FALSE(asym.symmetry_ok);
    CHECK_THROWS_WITH_AS(rl::symmetric_increasing(xpoly({"1", "2", "2", "1"})), doctest::Contains("OddDegree"),
                         Error);
    std::vector<ExactComplex> cc{ExactComplex(1), ExactComplex(QuadRat(0), QuadRat(1)), ExactComplex(1)};
    CHECK_THROWS_WITH_AS(rl::symmetric_increasing(PolyX(std::move(cc))),
                         doctest::Contains("NonRealCoefficients"), Error);
}

TEST_CASE("step condition narrative and equivalence") {
    PolyX a = chain({"-1.05", "0.28", "-1.25"});
    CHECK(rl::symm_incr_step_condition(a, QuadRat(parse_rational("0.6"))));
    CHECK_FALSE(rl::symm_incr_step_condition(a, QuadRat(parse_rational("0.7"))));

    CHECK(rl::symm_incr_step_condition(xpoly({"1", "2", "1"}), QuadRat(Rational(-2))));
    CHECK(rl::symmetric_increasing(chain({"-2", "-2"})).holds);  // (1+z)^4

    CHECK(rl::symm_incr_step_condition(xpoly({"1"}), QuadRat(Rational(-1))));
    CHECK(rl::symm_incr_step_condition(xpoly({"1"}), QuadRat(Rational(-2))));
    CHECK_FALSE(rl::symm_incr_step_condition(xpoly({"1"}), QuadRat(parse_rational("-0.5"))));

    CHECK_THROWS_WITH_AS(rl::symm_incr_step_condition(xpoly({"1", "3", "1", "3", "1"}), QuadRat(0)),
                         doctest::Contains("HypothesisFailed"), Error);

    // the window condition is exactly "the product stays symmetric increasing"
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-20, -10);  // alphas <= -1 keep the base increasing
    std::uniform_int_distribution<int> alpha_num(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        int len = 1 + trial % 3;
        std::vector<QuadRat> alphas;
        for (int i = 0; i < len; ++i) alphas.emplace_back(Rational(num(rng), 10));
        PolyX p = rl::product_chain<ExactComplex>(std::span<const QuadRat>(alphas));
        REQUIRE(rl::symmetric_increasing(p).holds);
        QuadRat alpha(Rational(alpha_num(rng), 10));
        bool cond = rl::symm_incr_step_condition(p, alpha);
        std::vector<QuadRat> one{alpha};
        PolyX prod = p * rl::product_chain<ExactComplex>(std::span<const QuadRat>(one));
        CHECK(cond == rl::symmetric_increasing(prod).holds);
    }
}

TEST_CASE("chains with alpha <= -1 are symmetric increasing") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-25, -10);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<QuadRat> alphas;
        for (int i = 0; i < 1 + trial % 4; ++i) alphas.emplace_back(Rational(num(rng), 10));
        CHECK(rl::symmetric_increasing(rl::product_chain<ExactComplex>(std::span<const QuadRat>(alphas))).holds);
    }
}

TEST_CASE("epsilon corollary helper") {
    CHECK(rl::epsilon_corollary(QuadRat(1), QuadRat(1), QuadRat(2)));
    CHECK_FALSE(rl::epsilon_corollary(QuadRat(0), QuadRat(2), QuadRat(1)));
}

TEST_CASE("lemma-1 sample-point identities") {
    // roots closed under z -> 1/conj(z): pairs (a, 1/conj(a)) plus unimodular points
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ComplexD> roots;
        int pairs = 1 + trial % 3;
        for (int i = 0; i < pairs; ++i) {
            ComplexD a(uni(rng), uni(rng));
            if (std::abs(a) < 0.2) a += ComplexD(0.5, 0.5);
            roots.push_back(a);
            roots.push_back(1.0 / std::conj(a));
        }
        double theta = uni(rng);
        roots.push_back(std::polar(1.0, theta));
        PolyF p = PolyF::from_roots(std::span<const ComplexD>(roots), ComplexD(1.3, -0.4));

        auto cls = pc::classify(p, 1e-9);
        REQUIRE(cls.self_inversive.has_value());
        ComplexD w = *cls.self_inversive;
        CHECK(std::abs(std::abs(w) - 1.0) < 1e-9);

        const int n = p.degree();
        ComplexD an = p[n], a0 = p[0];
        PolyF pbar = pc::conjugate(p);
        double scale = 0;
        for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
        for (int s = 0; s < 50; ++s) {
            ComplexD z = std::polar(0.5 + 1.5 * (s + 1.0) / 51.0, 2.41 * s);
            ComplexD zn = std::pow(z, n);
            ComplexD lhs2 = std::conj(an) * p.eval(z);
            ComplexD rhs2 = a0 * zn * pbar.eval(1.0 / z);
            CHECK(std::abs(lhs2 - rhs2) <= 1e-9 * scale * (1.0 + std::abs(zn)) * 10);
            ComplexD rhs3 = w * zn * pbar.eval(1.0 / z);
            CHECK(std::abs(p.eval(z) - rhs3) <= 1e-9 * scale * (1.0 + std::abs(zn)) * 10);
        }

        // moreover (iii): |n p / (z p') - 1| = 1 on the unit circle
        PolyF dp = p.derivative();
        for (int s = 0; s < 20; ++s) {
            ComplexD z = std::polar(1.0, 0.17 + 0.31 * s);
            ComplexD d = dp.eval(z);
            if (std::abs(d) < 1e-6) continue;
            ComplexD ratio = static_cast<double>(n) * p.eval(z) / (z * d);
            CHECK(std::abs(std::abs(ratio - 1.0) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("f plus/minus reciprocal splits into palindromic and antipalindromic") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ExactComplex> c;
        int deg = 1 + trial % 7;
        for (int i = 0; i <= deg; ++i) c.emplace_back(QuadRat(Rational(num(rng))), QuadRat(Rational(num(rng))));
        PolyX f(std::move(c));
        if (f.is_zero() || f.degree() < 1) continue;
        PolyX rec = pc::reciprocal(f);
        PolyX sum = f + rec;
        PolyX diff = f - rec;
        // compare against the mirror on the full window [0, deg f] (the sum may
        // lose its leading coefficient as a polynomial)
        for (int i = 0; i <= f.degree(); ++i) {
            CHECK(sum[i] == sum[f.degree() - i]);
            CHECK(diff[i] == -diff[f.degree() - i]);
        }
    }
}

TEST_CASE("real unimodular-root polynomials are palindromic or antipalindromic") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uni(0.1, 3.0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<ComplexD> roots;
        for (int i = 0; i < 1 + trial % 3; ++i) {
            double theta = uni(rng);
            roots.push_back(std::polar(1.0, theta));
            roots.push_back(std::polar(1.0, -theta));
        }
        if (coin(rng)) roots.push_back(ComplexD(coin(rng) ? 1.0 : -1.0, 0.0));
        PolyF p = PolyF::from_roots(std::span<const ComplexD>(roots), ComplexD(2.0, 0));
        auto cls = pc::classify(p, 1e-9);
        CHECK((cls.palindromic || cls.antipalindromic));
    }
}
