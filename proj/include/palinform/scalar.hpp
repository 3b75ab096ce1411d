#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "palinform/error.hpp"
#include "palinform/quadrat.hpp"

namespace palinform {

// Exact complex scalar: re + i*im with QuadRat components.
struct ExactComplex {
    QuadRat re, im;

    ExactComplex() = default;
    ExactComplex(int value) : re(value), im(0) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(QuadRat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(QuadRat r, QuadRat i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ExactComplex operator-() const { return {-re, -im}; }
    ExactComplex& operator+=(const ExactComplex& rhs) {
        re += rhs.re;
        im += rhs.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& rhs) {
        re -= rhs.re;
        im -= rhs.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& rhs) {
        QuadRat r = re * rhs.re - im * rhs.im;
        QuadRat i = re * rhs.im + im * rhs.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ExactComplex& operator/=(const ExactComplex& rhs) {
        QuadRat norm = rhs.re * rhs.re + rhs.im * rhs.im;
        if (norm.is_zero()) fail("BadNumber", "division by zero scalar");
        QuadRat r = (re * rhs.re + im * rhs.im) / norm;
        QuadRat i = (im * rhs.re - re * rhs.im) / norm;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

using ComplexD = std::complex<double>;

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }
inline QuadRat abs2(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }
inline double abs2(const ComplexD& z) { return std::norm(z); }
inline ComplexD to_complexd(const ExactComplex& z) { return {z.re.to_double(), z.im.to_double()}; }
inline ComplexD to_complexd(const ComplexD& z) { return z; }

// Scalar traits shared by exact and float polynomial code. `real_type` carries
// coefficients of provably-real quantities; predicates take an absolute
// tolerance that exact scalars ignore.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
    static constexpr bool exact = true;
    using real_type = QuadRat;

    static bool close(const ExactComplex& a, const ExactComplex& b, double /*tol*/) { return a == b; }
    static bool is_zero(const ExactComplex& a, double /*tol*/) { return a.is_zero(); }
    static bool is_real(const ExactComplex& a, double /*tol*/) { return a.im.is_zero(); }
    static real_type real(const ExactComplex& a) { return a.re; }
    static real_type imag(const ExactComplex& a) { return a.im; }
    static ExactComplex from_real(const real_type& r) { return ExactComplex(r); }
    static ExactComplex from_integer(const Integer& n) { return ExactComplex(Rational(n)); }
    static double magnitude(const ExactComplex& a) { return std::sqrt(abs2(a).to_double()); }
};

template <>
struct scalar_traits<ComplexD> {
    static constexpr bool exact = false;
    using real_type = double;

    static bool close(const ComplexD& a, const ComplexD& b, double tol) { return std::abs(a - b) <= tol; }
    static bool is_zero(const ComplexD& a, double tol) { return std::abs(a) <= tol; }
    static bool is_real(const ComplexD& a, double tol) { return std::abs(a.imag()) <= tol; }
    static real_type real(const ComplexD& a) { return a.real(); }
    static real_type imag(const ComplexD& a) { return a.imag(); }
    static ComplexD from_real(double r) { return {r, 0.0}; }
    static ComplexD from_integer(const Integer& n) { return {n.get_d(), 0.0}; }
    static double magnitude(const ComplexD& a) { return std::abs(a); }
};

std::string format_scalar(const ExactComplex& z);

}  // namespace palinform
