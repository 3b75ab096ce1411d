#pragma once

#include <complex>
#include <string>

#include "palinform/scalar.hpp"

namespace palinform {

// 2x2 invertible matrix acting on binary forms by substitution and on points
// of the Riemann sphere by linear fractional transformations.
template <class K>
struct Moebius {
    K a{1}, b{0}, c{0}, d{1};

    K det() const { return a * d - b * c; }
    Moebius adjugate() const { return {d, -b, -c, a}; }

    friend Moebius operator*(const Moebius& lhs, const Moebius& rhs) {
        return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
    }

    ComplexD apply(const ComplexD& z) const {
        ComplexD num = to_complexd(a) * z + to_complexd(b);
        ComplexD den = to_complexd(c) * z + to_complexd(d);
        return num / den;
    }

    static Moebius identity() { return {}; }
    static Moebius shear(long k) {  // T^k: z -> z + k
        return {K(1), scalar_traits<K>::from_integer(Integer(k)), K(0), K(1)};
    }
    static Moebius inversion() { return {K(0), K(-1), K(1), K(0)}; }  // S: z -> -1/z
};

inline Moebius<ExactComplex> cayley() {
    // [1 -i; 1 i]: as a substitution it sends totally-real forms to forms with
    // all roots real; its adjugate substitution sends them to the unit circle.
    ExactComplex i(QuadRat(0), QuadRat(1));
    return {ExactComplex(1), -i, ExactComplex(1), i};
}

// Integer words in the modular group, accumulated during reduction walks.
struct IntMoebius {
    Integer a{1}, b{0}, c{0}, d{1};

    friend IntMoebius operator*(const IntMoebius& lhs, const IntMoebius& rhs) {
        return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
    }

    template <class K>
    Moebius<K> as() const {
        using T = scalar_traits<K>;
        return {T::from_integer(a), T::from_integer(b), T::from_integer(c), T::from_integer(d)};
    }

    std::string str() const {
        return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
    }
};

}  // namespace palinform
