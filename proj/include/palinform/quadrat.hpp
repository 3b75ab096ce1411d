#pragma once

#include <string>

#include "palinform/rational.hpp"

namespace palinform {

// Element of a real quadratic extension: a + b*sqrt(m) with a, b rational and
// m a squarefree nonnegative integer carried per value (m = 0 when b = 0).
// Arithmetic between incompatible radicals throws IncompatibleRadical; in this
// project every computation stays inside a single extension (Q, Q(sqrt 2),
// Q(sqrt 3), Q(sqrt q)) so the merge never actually fails on valid inputs.
class QuadRat {
public:
    QuadRat() : a_(0), b_(0), m_(0) {}
    QuadRat(int value) : a_(value), b_(0), m_(0) {}           // NOLINT(google-explicit-constructor)
    QuadRat(const Rational& value) : a_(value), b_(0), m_(0) {}  // NOLINT(google-explicit-constructor)
    QuadRat(const Rational& a, const Rational& b, long m);

    // Exact sqrt(m) for m >= 0: extracts the square part (sqrt(12) = 2*sqrt(3)).
    static QuadRat sqrt_integer(long m);
    // q^(k/2) for integer q >= 1 (used for MacWilliams / normalized zetas).
    static QuadRat half_power(long q, long k);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return m_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign of a + b*sqrt(m): -1, 0, +1.
    int sign() const;
    QuadRat abs() const { return sign() < 0 ? -*this : *this; }
    double to_double() const;

    QuadRat operator-() const { return QuadRat(-a_, -b_, m_); }
    QuadRat& operator+=(const QuadRat& rhs);
    QuadRat& operator-=(const QuadRat& rhs);
    QuadRat& operator*=(const QuadRat& rhs);
    QuadRat& operator/=(const QuadRat& rhs);

    friend QuadRat operator+(QuadRat lhs, const QuadRat& rhs) { return lhs += rhs; }
    friend QuadRat operator-(QuadRat lhs, const QuadRat& rhs) { return lhs -= rhs; }
    friend QuadRat operator*(QuadRat lhs, const QuadRat& rhs) { return lhs *= rhs; }
    friend QuadRat operator/(QuadRat lhs, const QuadRat& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadRat& lhs, const QuadRat& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.m_ == rhs.m_;
    }
    friend bool operator!=(const QuadRat& lhs, const QuadRat& rhs) { return !(lhs == rhs); }
    friend bool operator<(const QuadRat& lhs, const QuadRat& rhs) { return (lhs - rhs).sign() < 0; }
    friend bool operator<=(const QuadRat& lhs, const QuadRat& rhs) { return (lhs - rhs).sign() <= 0; }
    friend bool operator>(const QuadRat& lhs, const QuadRat& rhs) { return (lhs - rhs).sign() > 0; }
    friend bool operator>=(const QuadRat& lhs, const QuadRat& rhs) { return (lhs - rhs).sign() >= 0; }

    // "1.05", "-2/3", "1/5+2*sqrt(3)", "sqrt(2)"; round-trips with parse_quadrat.
    std::string str() const;

private:
    void canonicalize();
    // Returns the common radicand, or throws IncompatibleRadical.
    static long merge_radicand(const QuadRat& lhs, const QuadRat& rhs);

    Rational a_, b_;
    long m_;
};

QuadRat parse_quadrat(const std::string& text);

inline int sign(const QuadRat& value) { return value.sign(); }
inline QuadRat abs(const QuadRat& value) { return value.abs(); }
inline double to_double(const QuadRat& value) { return value.to_double(); }

}  // namespace palinform
