#pragma once

#include <algorithm>
#include <vector>

#include "palinform/moebius.hpp"
#include "palinform/poly.hpp"

namespace palinform {

// Homogeneous binary form of fixed degree n: coefficient of x^i y^{n-i} at
// index i. Unlike Poly, end zeros are significant (roots at 0 / infinity).
template <class K>
class BinaryForm {
public:
    BinaryForm() : c_(1, K{}) {}
    explicit BinaryForm(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, K{});
    }

    static BinaryForm homogenize(const Poly<K>& p, int degree = -1) {
        int n = degree < 0 ? std::max(p.degree(), 0) : degree;
        if (p.degree() > n) fail("BadParameters", "homogenize: degree below deg p");
        std::vector<K> c(static_cast<std::size_t>(n) + 1, K{});
        for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p[i];
        return BinaryForm(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    K& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const K& v : c_)
            if (!scalar_traits<K>::is_zero(v, 0)) return false;
        return true;
    }

    Poly<K> dehomogenize() const { return Poly<K>(c_); }  // f(x, 1); trims infinity roots

    K eval(const K& x, const K& y) const {
        K acc{};
        const int n = degree();
        // sum c_i x^i y^{n-i} via two Horner passes
        std::vector<K> xpow(static_cast<std::size_t>(n) + 1, K(1));
        for (int i = 1; i <= n; ++i) xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * x;
        K ypow(1);
        for (int i = n; i >= 0; --i) {
            acc += c_[static_cast<std::size_t>(i)] * xpow[static_cast<std::size_t>(i)] * ypow;
            ypow = ypow * y;
        }
        return acc;
    }

    BinaryForm reversed() const {  // swap x <-> y
        std::vector<K> c(c_);
        std::reverse(c.begin(), c.end());
        return BinaryForm(std::move(c));
    }

    BinaryForm partial_x() const {
        if (degree() == 0) fail("BadParameters", "partial of a constant form");
        std::vector<K> c(c_.size() - 1, K{});
        for (int i = 1; i <= degree(); ++i)
            c[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * K(i);
        return BinaryForm(std::move(c));
    }

    BinaryForm partial_y() const {
        if (degree() == 0) fail("BadParameters", "partial of a constant form");
        const int n = degree();
        std::vector<K> c(c_.size() - 1, K{});
        for (int i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * K(n - i);
        return BinaryForm(std::move(c));
    }

    BinaryForm operator-() const {
        std::vector<K> c(c_);
        for (K& v : c) v = -v;
        return BinaryForm(std::move(c));
    }

    friend BinaryForm operator+(const BinaryForm& lhs, const BinaryForm& rhs) {
        if (lhs.degree() != rhs.degree()) fail("BadParameters", "adding forms of different degree");
        std::vector<K> c(lhs.c_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.c_[i];
        return BinaryForm(std::move(c));
    }

    friend BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs) {
        std::vector<K> c(lhs.c_.size() + rhs.c_.size() - 1, K{});
        for (std::size_t i = 0; i < lhs.c_.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
        return BinaryForm(std::move(c));
    }

    friend BinaryForm operator*(const K& s, BinaryForm f) {
        for (K& v : f.c_) v = s * v;
        return f;
    }

    friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) { return lhs.c_ == rhs.c_; }

    BinaryForm pow(int e) const {
        BinaryForm acc = BinaryForm(std::vector<K>{K(1)});
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

private:
    std::vector<K> c_;
};

// f(ax+by, cx+dy): the right action used throughout; roots move by the inverse
// fractional map, and act(act(f, A), B) == act(f, A*B).
template <class K>
BinaryForm<K> act(const BinaryForm<K>& f, const Moebius<K>& M) {
    if (scalar_traits<K>::is_zero(M.det(), 0)) fail("SingularMatrix", "act needs an invertible matrix");
    const int n = f.degree();
    BinaryForm<K> L1(std::vector<K>{M.b, M.a});  // a*x + b*y
    BinaryForm<K> L2(std::vector<K>{M.d, M.c});  // c*x + d*y
    std::vector<BinaryForm<K>> p1(static_cast<std::size_t>(n) + 1), p2(static_cast<std::size_t>(n) + 1);
    p1[0] = BinaryForm<K>(std::vector<K>{K(1)});
    p2[0] = BinaryForm<K>(std::vector<K>{K(1)});
    for (int i = 1; i <= n; ++i) {
        p1[static_cast<std::size_t>(i)] = p1[static_cast<std::size_t>(i - 1)] * L1;
        p2[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i - 1)] * L2;
    }
    std::vector<K> out(static_cast<std::size_t>(n) + 1, K{});
    BinaryForm<K> result(std::move(out));
    for (int i = 0; i <= n; ++i) {
        BinaryForm<K> term = f[i] * (p1[static_cast<std::size_t>(i)] * p2[static_cast<std::size_t>(n - i)]);
        result = result + term;
    }
    return result;
}

// f(U, V) for forms U, V of equal degree; the result is homogeneous of degree
// deg(f) * deg(U).
template <class K>
BinaryForm<K> compose(const BinaryForm<K>& f, const BinaryForm<K>& U, const BinaryForm<K>& V) {
    if (U.degree() != V.degree()) fail("BadParameters", "compose needs deg U == deg V");
    const int n = f.degree();
    std::vector<BinaryForm<K>> pu(static_cast<std::size_t>(n) + 1), pv(static_cast<std::size_t>(n) + 1);
    pu[0] = BinaryForm<K>(std::vector<K>{K(1)});
    pv[0] = BinaryForm<K>(std::vector<K>{K(1)});
    for (int i = 1; i <= n; ++i) {
        pu[static_cast<std::size_t>(i)] = pu[static_cast<std::size_t>(i - 1)] * U;
        pv[static_cast<std::size_t>(i)] = pv[static_cast<std::size_t>(i - 1)] * V;
    }
    BinaryForm<K> result(std::vector<K>(static_cast<std::size_t>(n * U.degree()) + 1, K{}));
    for (int i = 0; i <= n; ++i) {
        BinaryForm<K> term = f[i] * (pu[static_cast<std::size_t>(i)] * pv[static_cast<std::size_t>(n - i)]);
        result = result + term;
    }
    return result;
}

// Exact division of homogeneous forms. Shared powers of x and y are stripped
// from both ends first, so divisors with roots at 0 or infinity are fine.
template <class K>
BinaryForm<K> divide_exact(const BinaryForm<K>& num, const BinaryForm<K>& den) {
    using T = scalar_traits<K>;
    if (den.is_zero()) fail("BadNumber", "form division by zero");
    if (num.degree() < den.degree()) fail("DivisionNotExact", "numerator degree below denominator");

    auto low_zeros = [](const BinaryForm<K>& f) {
        int k = 0;
        while (k < f.degree() && T::is_zero(f[k], 0)) ++k;
        return k;
    };
    auto high_zeros = [](const BinaryForm<K>& f) {
        int k = 0;
        while (k < f.degree() && T::is_zero(f[f.degree() - k], 0)) ++k;
        return k;
    };

    int dx = low_zeros(den), dy = high_zeros(den);
    if (low_zeros(num) < dx || high_zeros(num) < dy)
        fail("DivisionNotExact", "denominator x/y factors missing from numerator");

    auto strip = [](const BinaryForm<K>& f, int lo, int hi) {
        std::vector<K> c(f.coeffs().begin() + lo, f.coeffs().end() - hi);
        return Poly<K>(std::vector<K>(c));
    };
    Poly<K> pnum(strip(num, dx, dy));
    Poly<K> pden(strip(den, dx, dy));
    auto [quot, rem] = Poly<K>::divide(pnum, pden);
    if constexpr (T::exact) {
        if (!rem.is_zero()) fail("DivisionNotExact", "nonzero remainder in form division");
    } else {
        double rscale = 0, nscale = 0;
        for (const K& v : rem.coeffs()) rscale = std::max(rscale, T::magnitude(v));
        for (const K& v : pnum.coeffs()) nscale = std::max(nscale, T::magnitude(v));
        if (rscale > 1e-8 * (1.0 + nscale)) fail("DivisionNotExact", "nonzero remainder in form division");
    }
    // Re-homogenize at the exact quotient degree (num.deg - den.deg).
    return BinaryForm<K>::homogenize(quot, num.degree() - den.degree());
}

using FormX = BinaryForm<ExactComplex>;
using FormF = BinaryForm<ComplexD>;

template <class K>
BinaryForm<ComplexD> to_float_form(const BinaryForm<K>& f) {
    std::vector<ComplexD> c;
    c.reserve(f.coeffs().size());
    for (const K& v : f.coeffs()) c.push_back(to_complexd(v));
    return BinaryForm<ComplexD>(std::move(c));
}

}  // namespace palinform
