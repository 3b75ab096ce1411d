#pragma once

#include <span>
#include <utility>
#include <vector>

#include "palinform/error.hpp"
#include "palinform/scalar.hpp"

namespace palinform {

// Dense univariate polynomial, coefficients low-to-high degree.
// Invariant: leading coefficient nonzero (the zero polynomial is empty).
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& value) { return Poly(std::vector<K>{value}); }
    static Poly identity_x() { return Poly(std::vector<K>{K(0), K(1)}); }

    static Poly from_roots(std::span<const K> roots, const K& lead = K(1)) {
        Poly result = constant(lead);
        for (const K& r : roots) result *= Poly(std::vector<K>{-r, K(1)});
        return result;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    // Coefficient of z^i; zero outside the stored range.
    const K& operator[](int i) const {
        static const K zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    K eval(const K& z) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<K> r(c_);
        for (K& v : r) v = -v;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), K{});
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), K{});
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& rhs) {
        if (is_zero() || rhs.is_zero()) {
            c_.clear();
            return *this;
        }
        std::vector<K> r(c_.size() + rhs.c_.size() - 1, K{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
        c_ = std::move(r);
        trim();
        return *this;
    }
    Poly& operator*=(const K& scale) {
        for (K& v : c_) v = v * scale;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact Euclidean division; requires an invertible leading divisor coefficient.
    static std::pair<Poly, Poly> divide(const Poly& num, const Poly& den) {
        if (den.is_zero()) fail("BadNumber", "polynomial division by zero");
        if (num.degree() < den.degree()) return {Poly{}, num};
        std::vector<K> rem = num.c_;
        std::vector<K> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, K{});
        const K& lead = den.c_.back();
        for (int k = num.degree() - den.degree(); k >= 0; --k) {
            K factor = rem[static_cast<std::size_t>(k + den.degree())] / lead;
            quot[static_cast<std::size_t>(k)] = factor;
            for (int j = 0; j <= den.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= factor * den.c_[static_cast<std::size_t>(j)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

private:
    void trim() {
        if constexpr (scalar_traits<K>::exact) {
            while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        } else {
            while (!c_.empty() && c_.back() == K{}) c_.pop_back();
        }
    }

    std::vector<K> c_;
};

using PolyX = Poly<ExactComplex>;
using PolyF = Poly<ComplexD>;

template <class K>
std::vector<ComplexD> to_complexd_coeffs(const Poly<K>& p) {
    std::vector<ComplexD> out;
    out.reserve(p.coeffs().size());
    for (const K& c : p.coeffs()) out.push_back(to_complexd(c));
    return out;
}

inline PolyF to_float_poly(const PolyX& p) {
    return PolyF(to_complexd_coeffs(p));
}

}  // namespace palinform
