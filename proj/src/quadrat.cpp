#include "palinform/quadrat.hpp"

#include <cmath>
#include <cstddef>

#include "palinform/error.hpp"

namespace palinform {

namespace {

// m = square * rest with rest squarefree (trial division; radicands here are tiny).
void split_square(long m, long& root, long& rest) {
    root = 1;
    rest = 1;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            root *= p;
        }
    }
    rest = m;
}

}  // namespace

QuadRat::QuadRat(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
    if (m_ < 0) fail("BadNumber", "negative radicand in QuadRat");
    canonicalize();
}

void QuadRat::canonicalize() {
    if (m_ == 0) {
        b_ = 0;
        return;
    }
    long root, rest;
    split_square(m_, root, rest);
    if (root != 1) {
        b_ *= root;
        m_ = rest;
    }
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
        m_ = 0;
    }
    if (b_ == 0) m_ = 0;
}

QuadRat QuadRat::sqrt_integer(long m) {
    if (m < 0) fail("BadNumber", "sqrt of a negative integer is not a QuadRat");
    return QuadRat(Rational(0), Rational(1), m);
}

QuadRat QuadRat::half_power(long q, long k) {
    if (q < 1) fail("BadNumber", "half_power requires q >= 1");
    bool invert = k < 0;
    unsigned long e = static_cast<unsigned long>(invert ? -k : k);
    QuadRat result = 1;
    QuadRat root = sqrt_integer(q);
    for (unsigned long i = 0; i < e / 2; ++i) result *= QuadRat(Rational(q));
    if (e % 2) result *= root;
    if (invert) result = QuadRat(1) / result;
    return result;
}

long QuadRat::merge_radicand(const QuadRat& lhs, const QuadRat& rhs) {
    if (lhs.m_ == 0) return rhs.m_;
    if (rhs.m_ == 0 || lhs.m_ == rhs.m_) return lhs.m_;
    fail("IncompatibleRadical", "mixing sqrt(" + std::to_string(lhs.m_) + ") with sqrt(" +
                                    std::to_string(rhs.m_) + ")");
}

QuadRat& QuadRat::operator+=(const QuadRat& rhs) {
    m_ = merge_radicand(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    canonicalize();
    return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& rhs) {
    m_ = merge_radicand(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    canonicalize();
    return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& rhs) {
    long m = merge_radicand(*this, rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(m);
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
    m_ = m;
    canonicalize();
    return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& rhs) {
    if (rhs.is_zero()) fail("BadNumber", "division by zero QuadRat");
    if (rhs.is_rational()) {
        a_ /= rhs.a_;
        b_ /= rhs.a_;
        canonicalize();
        return *this;
    }
    // 1/(a + b sqrt m) = (a - b sqrt m) / (a^2 - b^2 m)
    Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * Rational(rhs.m_);
    QuadRat conj(rhs.a_ / norm, -rhs.b_ / norm, rhs.m_);
    return *this *= conj;
}

int QuadRat::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 vs b^2 m.
    Rational diff = a_ * a_ - b_ * b_ * Rational(m_);
    int magnitude = sgn(diff);  // >0: |a| wins
    return magnitude == 0 ? 0 : (magnitude > 0 ? sa : sb);
}

double QuadRat::to_double() const {
    double value = a_.get_d();
    if (b_ != 0) value += b_.get_d() * std::sqrt(static_cast<double>(m_));
    return value;
}

std::string QuadRat::str() const {
    if (is_rational()) return format_rational(a_);
    std::string radical;
    if (b_ == 1)
        radical = "sqrt(" + std::to_string(m_) + ")";
    else if (b_ == -1)
        radical = "-sqrt(" + std::to_string(m_) + ")";
    else
        radical = format_rational(b_) + "*sqrt(" + std::to_string(m_) + ")";
    if (a_ == 0) return radical;
    if (radical[0] == '-') return format_rational(a_) + radical;
    return format_rational(a_) + "+" + radical;
}

QuadRat parse_quadrat(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail("BadNumber", "empty scalar literal");

    // Split into at most two signed terms at top level.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' && s[i - 1] != '(' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }

    auto parse_term = [](const std::string& term) -> QuadRat {
        std::size_t at = term.find("sqrt(");
        if (at == std::string::npos) return QuadRat(parse_rational(term));
        if (term.back() != ')') fail("BadNumber", "malformed radical: '" + term + "'");
        std::string inside = term.substr(at + 5, term.size() - at - 6);
        long m = std::stol(inside);
        std::string coeff = term.substr(0, at);
        if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
        Rational b = 1;
        if (coeff == "-")
            b = -1;
        else if (!coeff.empty() && coeff != "+")
            b = parse_rational(coeff);
        return QuadRat(Rational(0), b, m);
    };

    if (split == std::string::npos) return parse_term(s);
    QuadRat head = parse_term(s.substr(0, split));
    QuadRat tail = parse_term(s.substr(split + (s[split] == '+' ? 1 : 0)));
    return head + tail;
}

}  // namespace palinform
