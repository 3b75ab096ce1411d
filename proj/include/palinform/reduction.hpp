#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "palinform/form.hpp"
#include "palinform/rootloc.hpp"

namespace palinform::reduction {

struct UpperHalfPoint {
    ComplexD value;

    explicit UpperHalfPoint(ComplexD z) : value(z) {
        if (!(z.imag() > 0)) fail("NotPositiveDefinite", "point not in the upper half plane");
    }
};

template <class K>
Moebius<K> cayley_matrix() {
    if constexpr (scalar_traits<K>::exact) {
        ExactComplex i(QuadRat(0), QuadRat(1));
        return {ExactComplex(1), -i, ExactComplex(1), i};
    } else {
        return {ComplexD(1, 0), ComplexD(0, -1), ComplexD(1, 0), ComplexD(0, 1)};
    }
}

// Substitution by the adjugate Cayley matrix: real roots -> unit circle
// (projective infinity lands on the circle point 1).
template <class K>
BinaryForm<K> cayley_to_circle(const BinaryForm<K>& f) {
    return act(f, cayley_matrix<K>().adjugate());
}

// Substitution by the literal Cayley matrix: unit-circle roots -> real axis.
// Inverse of cayley_to_circle up to a nonzero scalar.
template <class K>
BinaryForm<K> cayley_to_real(const BinaryForm<K>& f) {
    return act(f, cayley_matrix<K>());
}

// G(x,y) = [x f_x(-f_y, f_x) + y f_y(-f_y, f_x)] / (n f); degree (n-1)(n-2).
// The division is exact for squarefree totally real f; a nonzero remainder is
// reported as DivisionNotExact.
template <class K>
BinaryForm<K> g_covariant(const BinaryForm<K>& f, double tol = 1e-9) {
    const int n = f.degree();
    if (n < 3) fail("DegreeTooLow", "g_covariant needs degree >= 3");
    for (const K& c : f.coeffs())
        if (!scalar_traits<K>::is_real(c, tol)) fail("BadParameters", "g_covariant needs real coefficients");

    BinaryForm<K> fx = f.partial_x();
    BinaryForm<K> fy = f.partial_y();
    BinaryForm<K> u = -fy;
    const BinaryForm<K>& v = fx;

    BinaryForm<K> x_form(std::vector<K>{K(0), K(1)});
    BinaryForm<K> y_form(std::vector<K>{K(1), K(0)});
    BinaryForm<K> numerator = x_form * compose(fx, u, v) + y_form * compose(fy, u, v);
    BinaryForm<K> denominator = K(n) * f;
    BinaryForm<K> g = divide_exact(numerator, denominator);
    if (g.degree() != (n - 1) * (n - 2)) fail("DivisionNotExact", "unexpected covariant degree");
    return g;
}

struct JuliaQuadratic {
    // Monic positive definite quadratic x^2 + b xy + c y^2.
    double b = 0;
    double c = 1;
    ComplexD root{0, 1};  // its zero in the upper half plane

    BinaryForm<ComplexD> form() const {
        return BinaryForm<ComplexD>(std::vector<ComplexD>{ComplexD(c), ComplexD(b), ComplexD(1)});
    }
};

// Unique real-irreducible quadratic factor of G_f, located by pairing the
// single non-real conjugate root pair of G_f.
template <class K>
JuliaQuadratic julia_quadratic(const BinaryForm<K>& f, double tol = 1e-6) {
    BinaryForm<K> g = g_covariant(f);
    Poly<ComplexD> gp = to_float_form(g).dehomogenize();
    if (gp.degree() < 2) fail("NoUniqueQuadratic", "covariant has no quadratic factor");
    RootSet rs = find_roots(gp.coeffs());

    std::vector<ComplexD> nonreal;
    for (const ComplexD& r : rs.roots)
        if (std::abs(r.imag()) > tol * (1.0 + std::abs(r))) nonreal.push_back(r);
    if (nonreal.size() != 2)
        fail("NoUniqueQuadratic", "expected one conjugate pair, found " + std::to_string(nonreal.size() / 2) +
                                      " (hypothesis violation or numeric failure)");
    ComplexD a = nonreal[0], b = nonreal[1];
    if (std::abs(a - std::conj(b)) > 1e-6 * (1.0 + std::abs(a)))
        fail("NoUniqueQuadratic", "non-real roots are not a conjugate pair");

    JuliaQuadratic j;
    ComplexD eps = a.imag() > 0 ? a : b;
    j.b = -2.0 * eps.real();
    j.c = std::norm(eps);
    j.root = eps;
    return j;
}

namespace detail {

template <class K>
bool quadratic_real_posdef(const BinaryForm<K>& f, double& a, double& b, double& c) {
    using T = scalar_traits<K>;
    double tol = 1e-9;
    for (const K& v : f.coeffs())
        if (!T::is_real(v, tol * (1.0 + T::magnitude(v)))) return false;
    a = to_complexd(f[2]).real();
    b = to_complexd(f[1]).real();
    c = to_complexd(f[0]).real();
    return a > 0 && b * b - 4 * a * c < 0;
}

}  // namespace detail

// Root in H_2: directly for positive definite quadratics, through the Julia
// quadratic for totally real forms of higher degree.
template <class K>
UpperHalfPoint zero_map(const BinaryForm<K>& f) {
    if (f.degree() == 2) {
        double a, b, c;
        if (!detail::quadratic_real_posdef(f, a, b, c))
            fail("NotPositiveDefinite", "zero_map needs a positive definite quadratic");
        double disc = 4 * a * c - b * b;
        return UpperHalfPoint(ComplexD(-b / (2 * a), std::sqrt(disc) / (2 * a)));
    }
    return UpperHalfPoint(julia_quadratic(f).root);
}

inline bool in_fundamental_domain(const UpperHalfPoint& z) {
    return std::norm(z.value) >= 1.0 && std::abs(z.value.real()) <= 0.5;
}

// T = { a+bi : a^2 - 2a + b^2 >= 0 and a^2 + 2a + b^2 >= 0 }.
inline bool region_T_membership(const ComplexD& z) {
    double a = z.real(), b = z.imag();
    return a * a - 2 * a + b * b >= 0 && a * a + 2 * a + b * b >= 0;
}

template <class K>
struct ReduceResult {
    BinaryForm<K> reduced;
    IntMoebius matrix;        // reduced == act(f, matrix)
    std::string trace;        // point moves, e.g. "T^-5 S T^2"
    ComplexD eps_before{0, 1};
    ComplexD eps_after{0, 1};
    double norm_before = 0;
    double norm_after = 0;
    int steps = 0;
    double max_equivariance_residual = 0;
};

namespace detail {

// Walk state on exact rationals (positive definite rational quadratics): no
// float ties, so boundary conventions are deterministic.
struct ExactPoint {
    Rational re, n2;  // Re z and |z|^2

    long shift() const {
        Rational t = re + Rational(1, 2);
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
        return static_cast<long>(k.get_si());
    }
    void translate(long t) {
        n2 += Rational(2 * t) * re + Rational(t) * Rational(t);
        re += t;
    }
    bool done() const { return n2 > 1 || (n2 == 1 && re <= 0); }
    void invert() {
        re = -re / n2;
        n2 = 1 / n2;
    }
    ComplexD approx() const {
        double r = to_double(re);
        double imag2 = to_double(n2) - r * r;
        return {r, std::sqrt(std::max(imag2, 0.0))};
    }
};

struct FloatPoint {
    ComplexD z;
    static constexpr double eps = 1e-12;

    long shift() const { return static_cast<long>(std::floor(z.real() + 0.5 + eps)); }
    void translate(long t) { z += static_cast<double>(t); }
    bool done() const {
        double n2 = std::norm(z);
        if (n2 > 1 + eps) return true;
        return std::abs(n2 - 1) <= eps && z.real() <= eps;
    }
    void invert() { z = -1.0 / z; }
    ComplexD approx() const { return z; }
};

}  // namespace detail

// S/T walk moving the zero map into the fundamental domain. The form is
// transformed exactly by integer matrices; equivariance of the zero map is
// re-checked after every step.
template <class K>
ReduceResult<K> reduce(const BinaryForm<K>& f) {
    using T = scalar_traits<K>;
    ReduceResult<K> out;
    out.reduced = f;
    for (const K& c : f.coeffs()) out.norm_before = std::max(out.norm_before, T::magnitude(c));

    // Exact path for rational positive definite quadratics.
    bool exact_quad = false;
    detail::ExactPoint ep;
    detail::FloatPoint fp{ComplexD(0, 1)};
    if constexpr (T::exact) {
        if (f.degree() == 2 && f[0].is_real() && f[1].is_real() && f[2].is_real() &&
            f[0].re.is_rational() && f[1].re.is_rational() && f[2].re.is_rational()) {
            Rational a = f[2].re.rational_part(), b = f[1].re.rational_part(), c = f[0].re.rational_part();
            if (a > 0 && b * b - 4 * a * c < 0) {
                exact_quad = true;
                ep.re = -b / (2 * a);
                ep.n2 = c / a;
            }
        }
    }
    if (!exact_quad) {
        fp.z = zero_map(f).value;
    } else {
        fp.z = ep.approx();
    }
    out.eps_before = exact_quad ? ep.approx() : fp.z;

    double im = out.eps_before.imag();
    int cap = std::max(64, static_cast<int>(std::ceil(10.0 * (1.0 + std::abs(std::log(std::max(im, 1e-300)))))));

    auto apply_form = [&](const IntMoebius& step) {
        out.matrix = out.matrix * step;
        out.reduced = act(out.reduced, step.template as<K>());
    };
    // After every move, the zero map of the transformed form must equal the
    // walked point. Exact path: assert the rational identity and report the
    // drift of the float shadow; float path: recompute the zero map.
    auto record_equivariance = [&]() {
        ComplexD xi;
        if (exact_quad) {
            if constexpr (T::exact) {
                Rational a = out.reduced[2].re.rational_part();
                Rational b = out.reduced[1].re.rational_part();
                Rational c = out.reduced[0].re.rational_part();
                require(-b / (2 * a) == ep.re && c / a == ep.n2, "Internal",
                        "exact equivariance violated in reduce");
            }
            xi = ep.approx();
        } else {
            xi = zero_map(out.reduced).value;
        }
        out.max_equivariance_residual =
            std::max(out.max_equivariance_residual, std::abs(xi - fp.z));
    };

    std::vector<std::string> trace;
    int iter = 0;
    while (true) {
        if (++iter > cap) fail("MaxIterations", "reduction walk exceeded its iteration cap");
        long k = exact_quad ? ep.shift() : fp.shift();
        if (k != 0) {
            long t = -k;
            if (exact_quad) ep.translate(t);
            fp.translate(t);
            IntMoebius shear{1, Integer(-t), 0, 1};  // form matrix for point move z -> z + t
            apply_form(shear);
            trace.push_back(t == 1 ? "T" : "T^" + std::to_string(t));
            record_equivariance();
            ++out.steps;
        }
        bool done = exact_quad ? ep.done() : fp.done();
        if (done) break;
        if (exact_quad) ep.invert();
        fp.invert();
        IntMoebius s{0, 1, -1, 0};  // form matrix for point move z -> -1/z
        apply_form(s);
        trace.push_back("S");
        record_equivariance();
        ++out.steps;
    }

    out.eps_after = exact_quad ? ep.approx() : fp.z;
    for (const K& c : out.reduced.coeffs()) out.norm_after = std::max(out.norm_after, T::magnitude(c));
    std::string joined;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i) joined += ' ';
        joined += trace[i];
    }
    out.trace = joined;
    return out;
}

template <class K>
struct CircleReduceResult {
    BinaryForm<K> form;     // the Lemma-certified totally real form
    std::string region;     // "F" or "T"
    bool in_f_after = false;
    ComplexD eps_initial{0, 1};
    ComplexD eps_final{0, 1};
    double norm_before = 0;
    double norm_after = 0;
};

// Cayley bridge for a self-inversive polynomial with all roots on the unit
// circle: maps to a totally real form, evaluates the zero map, and applies the
// x<->y swap when it lands in region T.
template <class K>
CircleReduceResult<K> reduce_from_circle(const Poly<K>& p, double tol = 1e-9) {
    using T = scalar_traits<K>;
    if (!rootloc::cohn_test(p, tol))
        fail("HypothesisFailed", "reduce_from_circle needs all roots on the unit circle");

    CircleReduceResult<K> out;
    for (const K& c : p.coeffs()) out.norm_before = std::max(out.norm_before, T::magnitude(c));

    BinaryForm<K> real_form = cayley_to_real(BinaryForm<K>::homogenize(p));
    // A self-inversive input realifies up to one overall phase: divide by the
    // largest coefficient.
    int pivot = 0;
    double best = -1;
    for (int i = 0; i <= real_form.degree(); ++i) {
        double m = T::magnitude(real_form[i]);
        if (m > best) {
            best = m;
            pivot = i;
        }
    }
    K phase = real_form[pivot];
    std::vector<K> realified(real_form.coeffs());
    for (K& v : realified) {
        v = v / phase;
        if (!T::is_real(v, tol * (1.0 + T::magnitude(v))))
            fail("HypothesisFailed", "Cayley image did not realify (roots not on the circle?)");
        if constexpr (!T::exact) v = ComplexD(v.real(), 0.0);
    }
    BinaryForm<K> g(std::move(realified));

    UpperHalfPoint eps = zero_map(g);
    out.eps_initial = eps.value;
    if (in_fundamental_domain(eps)) {
        out.region = "F";
        out.form = g;
        out.in_f_after = true;
        out.eps_final = eps.value;
    } else if (region_T_membership(eps.value)) {
        out.region = "T";
        Moebius<K> swap{K(0), K(1), K(1), K(0)};
        out.form = act(g, swap);
        UpperHalfPoint eps2 = zero_map(out.form);
        out.eps_final = eps2.value;
        out.in_f_after = in_fundamental_domain(eps2);
    } else {
        fail("NotInRegion", "zero map lies in neither F nor T");
    }
    for (const K& c : out.form.coeffs()) out.norm_after = std::max(out.norm_after, T::magnitude(c));
    return out;
}

template <class K>
struct SigmaReport {
    bool relation_holds = false;  // g_i == (-1)^{n-1} g_{d-i} for all i
    int g_degree = 0;
    polycore::Classification<K> g_class;
    BinaryForm<K> g;
};

// For palindromic f the coefficient involution fixes f, so the covariant
// satisfies g_i = (-1)^{n-1} g_{d-i}: self-inversive always, palindromic for
// odd n.
template <class K>
SigmaReport<K> sigma_involution_check(const BinaryForm<K>& f, double tol = 1e-9) {
    using T = scalar_traits<K>;
    auto cls = polycore::classify_span<K>(f.coeffs(), T::exact ? 0 : tol);
    if (!cls.palindromic) fail("BadParameters", "sigma_involution_check needs a palindromic form");

    SigmaReport<K> out;
    out.g = g_covariant(f, tol);
    const int n = f.degree();
    const int d = out.g.degree();
    out.g_degree = d;

    double scale = 0;
    for (const K& c : out.g.coeffs()) scale = std::max(scale, T::magnitude(c));
    const int sign = (n - 1) % 2 == 0 ? 1 : -1;
    out.relation_holds = true;
    for (int i = 0; i <= d; ++i) {
        K mirrored = sign > 0 ? out.g[d - i] : -out.g[d - i];
        if (!T::close(out.g[i], mirrored, tol * scale)) {
            out.relation_holds = false;
            break;
        }
    }
    out.g_class = polycore::classify_span<K>(out.g.coeffs(), T::exact ? 0 : tol * scale);
    return out;
}

}  // namespace palinform::reduction
