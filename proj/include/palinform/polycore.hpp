#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "palinform/poly.hpp"
#include "palinform/rational.hpp"

namespace palinform::polycore {

template <class K>
struct Classification {
    bool palindromic = false;
    bool antipalindromic = false;
    bool quasi_palindromic = false;
    std::optional<K> self_inversive;  // unimodular witness w with a_j = w * conj(a_{n-j})
};

template <class K>
Poly<K> conjugate(const Poly<K>& p) {
    std::vector<K> c;
    c.reserve(p.coeffs().size());
    for (const K& v : p.coeffs()) c.push_back(conj(v));
    return Poly<K>(std::move(c));
}

// z^n * p(1/z): coefficient reversal.
template <class K>
Poly<K> reciprocal(const Poly<K>& p) {
    std::vector<K> c(p.coeffs());
    std::reverse(c.begin(), c.end());
    return Poly<K>(std::move(c));
}

// Conjugated coefficient reversal: (p*)_j = conj(a_{n-j}).
template <class K>
Poly<K> inversive(const Poly<K>& p) {
    std::vector<K> c(p.coeffs());
    std::reverse(c.begin(), c.end());
    for (K& v : c) v = conj(v);
    return Poly<K>(std::move(c));
}

// Classification core on a raw coefficient window (also used for binary forms,
// whose trailing zero coefficients are significant). Float comparisons use an
// absolute tolerance scaled by the largest coefficient magnitude.
template <class K>
Classification<K> classify_span(std::span<const K> a, double tol) {
    using T = scalar_traits<K>;
    bool all_zero = true;
    for (const K& v : a)
        if (!T::is_zero(v, 0)) all_zero = false;
    if (a.empty() || all_zero) fail("ZeroPolynomial", "classification of the zero polynomial");

    double scale = 0;
    for (const K& v : a) scale = std::max(scale, T::magnitude(v));
    double eps = tol * scale;

    const std::size_t n = a.size() - 1;
    Classification<K> out;
    out.palindromic = out.antipalindromic = out.quasi_palindromic = true;
    for (std::size_t i = 0; i <= n; ++i) {
        const K& lo = a[i];
        const K& hi = a[n - i];
        if (!T::close(lo, hi, eps)) out.palindromic = false;
        if (!T::close(lo, -hi, eps)) out.antipalindromic = false;
        if constexpr (T::exact) {
            if (abs2(lo) != abs2(hi)) out.quasi_palindromic = false;
        } else {
            if (std::abs(std::abs(lo) - std::abs(hi)) > eps) out.quasi_palindromic = false;
        }
    }

    // Lemma-style witness: w = a_n / conj(a_0), then a_j = w * conj(a_{n-j}) for all j.
    if (!T::is_zero(a[0], eps) && !T::is_zero(a[n], eps)) {
        K w = a[n] / conj(a[0]);
        bool unimodular;
        if constexpr (T::exact)
            unimodular = (abs2(w) == QuadRat(1));
        else
            unimodular = std::abs(std::abs(w) - 1.0) <= (tol > 0 ? tol : 0);
        if (unimodular) {
            bool ok = true;
            for (std::size_t j = 0; j <= n && ok; ++j)
                ok = T::close(a[j], w * conj(a[n - j]), eps);
            if (ok) out.self_inversive = w;
        }
    }
    return out;
}

template <class K>
Classification<K> classify(const Poly<K>& p, double tol = 0) {
    return classify_span<K>(p.coeffs(), tol);
}

// Lemma decomposition p(z) = z^m * g(z + 1/z) for palindromic p of even degree 2m.
template <class K>
std::pair<int, Poly<K>> decompose_half(const Poly<K>& p, double tol = 0) {
    if (p.degree() >= 0 && p.degree() % 2 != 0) fail("OddDegree", "decompose_half needs even degree");
    Classification<K> cls = classify(p, tol);
    if (!cls.palindromic) fail("NotPalindromic", "decompose_half needs a palindromic polynomial");

    const int s = p.degree() / 2;
    // Work on the symmetric Laurent coefficients c_j = a_{s+j}, j = 0..s; peel
    // (z + 1/z)^k top-down: it contributes binom(k, (k-j)/2) at Laurent degree j.
    std::vector<K> c(static_cast<std::size_t>(s) + 1);
    for (int j = 0; j <= s; ++j) c[static_cast<std::size_t>(j)] = p[s + j];
    std::vector<K> g(static_cast<std::size_t>(s) + 1, K{});
    for (int k = s; k >= 0; --k) {
        K gk = c[static_cast<std::size_t>(k)];
        g[static_cast<std::size_t>(k)] = gk;
        for (int j = k; j >= 0; j -= 2) {
            K weight = scalar_traits<K>::from_integer(
                binomial(static_cast<unsigned long>(k), static_cast<unsigned long>((k - j) / 2)));
            c[static_cast<std::size_t>(j)] -= gk * weight;
        }
    }
    return {s, Poly<K>(std::move(g))};
}

// z^m * g(z + 1/z); requires deg g <= m so the result is a polynomial.
template <class K>
Poly<K> compose_half(int m, const Poly<K>& g) {
    if (m < 0) fail("DegreeMismatch", "compose_half needs m >= 0");
    if (g.degree() > m) fail("DegreeMismatch", "compose_half needs deg g <= m");
    if (g.is_zero()) return Poly<K>{};
    std::vector<K> out(static_cast<std::size_t>(m + g.degree()) + 1, K{});
    for (int k = 0; k <= g.degree(); ++k) {
        for (int i = 0; i <= k; ++i) {
            K weight = scalar_traits<K>::from_integer(
                binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)));
            out[static_cast<std::size_t>(m + k - 2 * i)] += g[k] * weight;
        }
    }
    return Poly<K>(std::move(out));
}

template <class K>
struct ForcedRootResult {
    std::vector<Poly<K>> factors;  // each of x+1, x-1, x^2-1
    Poly<K> quotient;              // palindromic by the parity rules
};

// Divides out the roots forced by parity: odd palindromic -> x+1; odd
// antipalindromic -> x-1; even antipalindromic -> x^2-1. Even palindromic has
// no forced root; the quotient is p itself.
template <class K>
ForcedRootResult<K> forced_root_quotient(const Poly<K>& p, double tol = 0) {
    Classification<K> cls = classify(p, tol);
    if (!cls.palindromic && !cls.antipalindromic)
        fail("NotApplicable", "forced_root_quotient needs a palindromic or antipalindromic input");

    ForcedRootResult<K> out;
    out.quotient = p;
    auto divide_out = [&](std::vector<K> factor_coeffs) {
        Poly<K> factor(std::move(factor_coeffs));
        auto [q, r] = Poly<K>::divide(out.quotient, factor);
        if constexpr (scalar_traits<K>::exact) {
            if (!r.is_zero()) fail("NotApplicable", "forced root division left a remainder");
        }
        out.factors.push_back(factor);
        out.quotient = q;
    };

    const bool odd = p.degree() % 2 != 0;
    if (cls.palindromic) {
        if (odd) divide_out({K(1), K(1)});  // x + 1
    } else {
        if (odd)
            divide_out({K(-1), K(1)});  // x - 1
        else
            divide_out({K(-1), K(0), K(1)});  // x^2 - 1
    }
    return out;
}

template <class K>
Poly<K> product(const Poly<K>& p, const Poly<K>& q) {
    return p * q;
}

}  // namespace palinform::polycore
