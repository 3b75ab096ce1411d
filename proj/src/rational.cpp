#include "palinform/rational.hpp"

#include <cctype>
#include <cstddef>

#include "palinform/error.hpp"

namespace palinform {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail("BadNumber", "empty rational literal");

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) fail("BadNumber", "sign without digits: '" + text + "'");

    auto digits_only = [](const std::string& d) {
        if (d.empty()) return false;
        for (char ch : d)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    Rational value;
    std::size_t slash = body.find('/');
    std::size_t dot   = body.find('.');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den))
            fail("BadNumber", "malformed fraction: '" + text + "'");
        Integer n(num, 10), d(den, 10);
        if (d == 0) fail("BadNumber", "zero denominator: '" + text + "'");
        value = Rational(n, d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac  = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)))
            fail("BadNumber", "malformed decimal: '" + text + "'");
        Integer scaled(whole + frac, 10);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rational(scaled, den);
        value.canonicalize();
    } else {
        if (!digits_only(body)) fail("BadNumber", "malformed integer: '" + text + "'");
        value = Rational(Integer(body, 10));
    }
    if (negative) value = -value;
    return value;
}

std::string format_rational(const Rational& value) {
    Integer num = value.get_num();
    Integer den = value.get_den();
    if (den == 1) return num.get_str();

    // Strip factors of 2 and 5; a finite decimal exists iff nothing remains.
    Integer rest = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.get_str() + "/" + den.get_str();

    unsigned long places = twos > fives ? twos : fives;
    Integer scale = 1;
    for (unsigned long i = 0; i < places; ++i) scale *= 10;
    Integer scaled = num * (scale / den);  // exact: den | 10^places
    bool negative = scaled < 0;
    Integer mag = negative ? Integer(-scaled) : scaled;
    std::string digits = mag.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    if (k > n) return 0;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0 && exponent < 0) fail("BadNumber", "0 raised to a negative power");
    Rational mag;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    mag = Rational(num, den);
    mag.canonicalize();
    if (exponent < 0) mag = 1 / mag;
    return mag;
}

}  // namespace palinform
