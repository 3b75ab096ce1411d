#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "palinform/polycore.hpp"
#include "palinform/rootsolver.hpp"

namespace palinform::rootloc {

struct CircleReport {
    int on_circle = 0;
    int inside = 0;
    int outside = 0;
    double tol = 0;            // band half-width on | |root| - 1 |
    double max_deviation = 0;  // max | |root| - 1 | over all roots
};

struct SymmetricIncreasingReport {
    bool holds = false;
    bool symmetry_ok = false;
    bool monotone_ok = false;
    std::optional<std::pair<int, int>> first_violation;  // indices of the failed comparison
};

struct OharaReport {
    double p_norm = 0;             // max |p| on the unit circle
    double max_side_coeff = 0;     // max |a_i|, i != n/2
    double middle_coeff = 0;       // |a_{n/2}| (0 for odd n)
    bool has_middle = false;
    bool coeff_bound_ok = false;   // |a_i| <= ||p||/2 for i != n/2
    bool middle_sqrt2_ok = true;   // |a_{n/2}| <= (sqrt 2 / 2) ||p||
    bool mcc_ok = true;            // |a_{n/2}| <= ||p||
    bool mcc_sufficient = true;    // |a_{n/2}| <= 2 |a_n|
};

template <class K>
RootSet roots(const Poly<K>& p, double tol = 1e-12, unsigned seed = 0) {
    if (p.degree() < 1) fail("BadParameters", "roots needs degree >= 1");
    RootOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    return find_roots(to_complexd_coeffs(p), opt);
}

template <class K>
CircleReport circle_report(const Poly<K>& p, double band = 1e-7, unsigned seed = 0) {
    RootSet rs = roots(p, 1e-12, seed);
    CircleReport rep;
    rep.tol = band;
    for (const auto& r : rs.roots) {
        double dev = std::abs(std::abs(r) - 1.0);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        if (dev <= band)
            ++rep.on_circle;
        else if (std::abs(r) < 1.0)
            ++rep.inside;
        else
            ++rep.outside;
    }
    return rep;
}

// Cohn: a self-inversive polynomial has all zeros on the unit circle iff all
// zeros of its derivative lie in the closed unit disk.
template <class K>
bool cohn_test(const Poly<K>& p, double tol = 1e-9) {
    auto cls = polycore::classify(p, scalar_traits<K>::exact ? 0 : tol);
    if (!cls.self_inversive) fail("NotSelfInversive", "cohn_test needs a self-inversive polynomial");
    Poly<K> dp = p.derivative();
    if (dp.degree() < 1) return true;  // constant derivative: vacuous
    RootSet rs = find_roots(to_complexd_coeffs(dp));
    for (const auto& r : rs.roots)
        if (std::abs(r) > 1.0 + tol) return false;
    return true;
}

namespace detail {

// Coefficient moduli: exact rationals when every coefficient is real rational
// (the common case for the paper's polynomials), doubles otherwise.
template <class K>
bool exact_real_moduli(const Poly<K>& p, std::vector<Rational>& out) {
    if constexpr (scalar_traits<K>::exact) {
        out.clear();
        out.reserve(p.coeffs().size());
        for (const ExactComplex& c : p.coeffs()) {
            if (!c.im.is_zero() || !c.re.is_rational()) return false;
            Rational r = c.re.rational_part();
            out.push_back(r < 0 ? Rational(-r) : r);
        }
        return true;
    } else {
        (void)p;
        (void)out;
        return false;
    }
}

template <class K>
std::vector<double> float_moduli(const Poly<K>& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const K& c : p.coeffs()) out.push_back(scalar_traits<K>::magnitude(c));
    return out;
}

template <class K>
void require_self_inversive(const Poly<K>& p, const char* who) {
    auto cls = polycore::classify(p, scalar_traits<K>::exact ? 0 : 1e-9);
    if (!cls.self_inversive) fail("NotSelfInversive", std::string(who) + " needs a self-inversive polynomial");
}

}  // namespace detail

// Lakatos-Losonczi sufficient condition |a_n| >= (1/2) sum_{k=1}^{n} |a_k|.
// The displayed sum includes a_n itself; include_top = false gives the
// k = 1..n-1 variant.
template <class K>
bool lakatos_losonczi(const Poly<K>& p, bool include_top = true) {
    detail::require_self_inversive(p, "lakatos_losonczi");
    const int n = p.degree();
    std::vector<Rational> mags;
    if (detail::exact_real_moduli(p, mags)) {
        Rational sum = 0;
        for (int k = 1; k <= n; ++k)
            if (include_top || k != n) sum += mags[static_cast<std::size_t>(k)];
        return 2 * mags[static_cast<std::size_t>(n)] >= sum;
    }
    std::vector<double> fm = detail::float_moduli(p);
    double sum = 0;
    for (int k = 1; k <= n; ++k)
        if (include_top || k != n) sum += fm[static_cast<std::size_t>(k)];
    return 2 * fm[static_cast<std::size_t>(n)] >= sum;
}

// Vieira: if |a_{n-l}| > (1/2) C(n, n-2l) sum_{k != l, n-l} |a_k| for l < n/2,
// predicts exactly n-2l roots on the unit circle; for even n and l = n/2 the
// test |a_{n/2}| > 2 sum_{k != n/2} |a_k| predicts none. Absent when neither
// hypothesis fires.
template <class K>
std::optional<int> vieira_predict(const Poly<K>& p, int lambda) {
    detail::require_self_inversive(p, "vieira_predict");
    const int n = p.degree();
    if (lambda < 0 || 2 * lambda > n) fail("LambdaOutOfRange", "vieira_predict needs 0 <= lambda <= n/2");

    std::vector<Rational> mags;
    bool exact = detail::exact_real_moduli(p, mags);
    std::vector<double> fm;
    if (!exact) fm = detail::float_moduli(p);
    auto mag_d = [&](int k) {
        return exact ? to_double(mags[static_cast<std::size_t>(k)]) : fm[static_cast<std::size_t>(k)];
    };

    if (2 * lambda == n) {
        if (exact) {
            Rational sum = 0;
            for (int k = 0; k <= n; ++k)
                if (k != lambda) sum += mags[static_cast<std::size_t>(k)];
            if (mags[static_cast<std::size_t>(lambda)] > 2 * sum) return 0;
        } else {
            double sum = 0;
            for (int k = 0; k <= n; ++k)
                if (k != lambda) sum += mag_d(k);
            if (mag_d(lambda) > 2 * sum) return 0;
        }
        return std::nullopt;
    }

    Integer binom = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2 * lambda));
    if (exact) {
        Rational sum = 0;
        for (int k = 0; k <= n; ++k)
            if (k != lambda && k != n - lambda) sum += mags[static_cast<std::size_t>(k)];
        if (2 * mags[static_cast<std::size_t>(n - lambda)] > Rational(binom) * sum) return n - 2 * lambda;
        return std::nullopt;
    }
    double sum = 0;
    for (int k = 0; k <= n; ++k)
        if (k != lambda && k != n - lambda) sum += mag_d(k);
    if (2 * mag_d(n - lambda) > binom.get_d() * sum) return n - 2 * lambda;
    return std::nullopt;
}

// max |p(e^{i theta})| by dense sampling plus golden-section refinement around
// the best brackets; relative accuracy ~1e-8 for the degrees used here.
template <class K>
double max_modulus(const Poly<K>& p, int grid = 0) {
    if (p.is_zero()) return 0;
    const int n = std::max(p.degree(), 0);
    int samples = std::max(grid, std::max(64 * (n + 1), 8 * n));
    std::vector<ComplexD> c = to_complexd_coeffs(p);
    auto value = [&](double theta) {
        ComplexD z = std::polar(1.0, theta);
        ComplexD acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return std::abs(acc);
    };

    const double step = 2.0 * std::numbers::pi / samples;
    std::vector<double> vals(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) vals[static_cast<std::size_t>(i)] = value(i * step);

    double best = 0;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < samples; ++i) {
        double prev = vals[static_cast<std::size_t>((i + samples - 1) % samples)];
        double next = vals[static_cast<std::size_t>((i + 1) % samples)];
        double here = vals[static_cast<std::size_t>(i)];
        best = std::max(best, here);
        if (here < prev || here < next) continue;  // not a local max bracket
        double lo = (i - 1) * step, hi = (i + 1) * step;
        double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
        double f1 = value(x1), f2 = value(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = value(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = value(x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

// O'Hara-style coefficient bounds for self-inversive p with all roots on the
// unit circle, plus the middle-coefficient-conjecture bound and its
// |a_{n/2}| <= 2|a_n| sufficient condition.
template <class K>
OharaReport ohara_bounds(const Poly<K>& p) {
    if (!cohn_test(p)) fail("HypothesisFailed", "ohara_bounds needs all roots on the unit circle");
    const int n = p.degree();
    OharaReport rep;
    rep.p_norm = max_modulus(p);
    std::vector<double> mags = detail::float_moduli(p);
    const double slack = 1e-9 * (1.0 + rep.p_norm);

    rep.has_middle = (n % 2 == 0);
    int middle = rep.has_middle ? n / 2 : -1;
    for (int i = 0; i <= n; ++i) {
        if (i == middle) continue;
        rep.max_side_coeff = std::max(rep.max_side_coeff, mags[static_cast<std::size_t>(i)]);
    }
    rep.coeff_bound_ok = rep.max_side_coeff <= rep.p_norm / 2 + slack;
    if (rep.has_middle) {
        rep.middle_coeff = mags[static_cast<std::size_t>(middle)];
        rep.middle_sqrt2_ok = rep.middle_coeff <= rep.p_norm * std::numbers::sqrt2 / 2 + slack;
        rep.mcc_ok = rep.middle_coeff <= rep.p_norm + slack;
        rep.mcc_sufficient = rep.middle_coeff <= 2 * mags[static_cast<std::size_t>(n)] + slack;
    }
    return rep;
}

// scale * prod_k (1 - alpha_k z + z^2); all roots unimodular when every
// |alpha_k| <= 2 (alpha = 2 cos theta).
template <class K>
Poly<K> product_chain(std::span<const typename scalar_traits<K>::real_type> alphas,
                      const typename scalar_traits<K>::real_type& scale =
                          typename scalar_traits<K>::real_type(1)) {
    using T = scalar_traits<K>;
    Poly<K> result = Poly<K>::constant(T::from_real(scale));
    for (const auto& alpha : alphas) {
        Poly<K> factor(std::vector<K>{K(1), -T::from_real(alpha), K(1)});
        result *= factor;
    }
    return result;
}

// 0 < a_0 <= a_1 <= ... <= a_d with mirror symmetry, for real p of degree 2d.
template <class K>
SymmetricIncreasingReport symmetric_increasing(const Poly<K>& p, double tol = 0) {
    using T = scalar_traits<K>;
    if (p.is_zero() || p.degree() % 2 != 0) fail("OddDegree", "symmetric_increasing needs even degree");
    for (const K& c : p.coeffs())
        if (!T::is_real(c, tol)) fail("NonRealCoefficients", "symmetric_increasing needs real coefficients");

    const int n = p.degree();
    const int d = n / 2;
    SymmetricIncreasingReport rep;
    rep.symmetry_ok = true;
    rep.monotone_ok = true;

    auto real_at = [&](int i) { return T::real(p[i]); };
    for (int i = 0; i <= d; ++i) {
        if (!T::close(p[d - i], p[d + i], tol)) {
            rep.symmetry_ok = false;
            if (!rep.first_violation) rep.first_violation = {d - i, d + i};
            break;
        }
    }
    if (!(real_at(0) > typename T::real_type(0))) {
        rep.monotone_ok = false;
        if (!rep.first_violation) rep.first_violation = {0, 0};
    }
    for (int i = 0; rep.monotone_ok && i + 1 <= d; ++i) {
        if (real_at(i) > real_at(i + 1)) {
            rep.monotone_ok = false;
            if (!rep.first_violation) rep.first_violation = {i, i + 1};
        }
    }
    rep.holds = rep.symmetry_ok && rep.monotone_ok;
    return rep;
}

// Window condition (a_i, a_{i+1}, a_{i+2}, a_{i+3}) . (1, -1-alpha, 1+alpha, -1) <= 0
// with zero padding outside [0, n]. Windows i = -2 .. d-2 cover every monotone
// step of p * (1 - alpha z + z^2) up to its middle, so "true" is equivalent to
// the product staying symmetric increasing.
template <class K>
bool symm_incr_step_condition(const Poly<K>& p, const typename scalar_traits<K>::real_type& alpha,
                              double tol = 0) {
    using T = scalar_traits<K>;
    using R = typename T::real_type;
    if (!symmetric_increasing(p, tol).holds)
        fail("HypothesisFailed", "symm_incr_step_condition needs a symmetric increasing input");
    if (!(R(-2) <= alpha && alpha <= R(2)))
        fail("HypothesisFailed", "symm_incr_step_condition needs alpha in [-2, 2]");

    const int d = p.degree() / 2;
    auto a = [&](int i) { return T::real(p[i]); };
    for (int i = -2; i <= d - 2; ++i) {
        R dot = a(i) - (R(1) + alpha) * a(i + 1) + (R(1) + alpha) * a(i + 2) - a(i + 3);
        if (dot > R(0)) return false;
    }
    return true;
}

// The epsilon-form corollary: with a_i = a, a_{i+1} = a+e1, a_{i+2} = a+e2,
// a_{i+3} = a+e3 the window condition holds whenever e2 <= (e1+e3)/2.
template <class R>
bool epsilon_corollary(const R& e1, const R& e2, const R& e3) {
    return R(2) * e2 <= e1 + e3;
}

}  // namespace palinform::rootloc
