#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <random>
#include <vector>

#include "palinform/poly.hpp"
#include "palinform/rational.hpp"

namespace oracles {

using palinform::Integer;
using palinform::Rational;

struct Quad {
    Integer a, b, c;
    friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

// Classical Gauss reduction of a positive definite integer quadratic to the
// unique representative with -a < b <= a <= c and b >= 0 when a == c.
inline Quad gauss_reduce(Quad f) {
    for (int guard = 0; guard < 10000; ++guard) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            Integer k, num = f.b - f.a, den = 2 * f.a;
            mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // ceil((b-a)/(2a))
            f.c = f.a * k * k - f.b * k + f.c;
            f.b = f.b - 2 * f.a * k;
        }
        if (f.a > f.c) {
            Quad g{f.c, -f.b, f.a};
            f = g;
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
            continue;
        }
        return f;
    }
    return f;  // unreachable for positive definite input
}

// Random generators with caller-owned engines so suites stay deterministic.

inline Rational random_rational(std::mt19937& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 9, int max_den = 5) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

// Exact rational point on the unit circle: ((1-t^2) + 2ti)/(1+t^2).
inline palinform::ExactComplex unimodular_point(const Rational& t) {
    Rational den = 1 + t * t;
    return {palinform::QuadRat((1 - t * t) / den), palinform::QuadRat((2 * t) / den)};
}

// Brute-force weight distribution of the q-ary repetition code of length n.
inline std::vector<long> repetition_weights(int n, long q) {
    std::vector<long> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    a[static_cast<std::size_t>(n)] = q - 1;
    return a;
}

// Brute-force weight distribution of the full space F_q^n.
inline std::vector<long> full_space_weights(int n, long q) {
    std::vector<long> a(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (;;) {
        int weight = 0;
        for (int v : word)
            if (v != 0) ++weight;
        ++a[static_cast<std::size_t>(weight)];
        int pos = 0;
        while (pos < n && ++word[static_cast<std::size_t>(pos)] == q) {
            word[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return a;
}

}  // namespace oracles
