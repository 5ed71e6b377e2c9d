#ifndef TPSHAPE_RATIONAL_HPP
#define TPSHAPE_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "tpshape/errors.hpp"

namespace tpshape {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sgn(const Rational& q) { return ::sgn(q); }

/// Canonical exact text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/*
 * Parses one exact rational literal.
 *
 * Accepted forms (surrounding blanks ignored):
 *   [+-]digits
 *   [+-]digits.digits    also "[+-].digits" and "[+-]digits."
 *   [+-]digits/digits    denominator must be nonzero
 *
 * Decimals are read as scaled integers, so "0.1" is exactly 1/10.
 * Throws input_error on anything else.
 */
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&](const std::string& why) -> Rational {
        throw input_error("cannot parse rational '" + std::string(text) + "': " + why);
    };

    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) return fail("empty");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return fail("sign without digits");

    auto all_digits = [](std::string_view d) {
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rational q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
            return fail("expected p/q with decimal digits");
        Integer d(std::string(den), 10);
        if (d == 0) return fail("zero denominator");
        q = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || !all_digits(ip) || !all_digits(fp))
            return fail("malformed decimal");
        std::string digits = std::string(ip) + std::string(fp);
        Integer num(digits.empty() ? std::string("0") : digits, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        q = Rational(num, den);
    } else {
        if (!all_digits(s)) return fail("not a number");
        q = Rational(Integer(std::string(s), 10));
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

/*
 * Rounds q to `places` decimal digits, ties to even, and renders it.
 * With trim = true trailing zeros (and a bare point) are dropped, so 19/10
 * becomes "1.9" rather than "1.9000".
 */
inline std::string render_decimal(const Rational& q, unsigned places = 4, bool trim = true)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);

    Rational mag = abs(q) * scale;
    Integer whole = mag.get_num() / mag.get_den(); // floor, mag >= 0
    Rational frac = mag - Rational(whole);
    int cmp_half = cmp(frac, Rational(1, 2));
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(whole.get_mpz_t())))
        whole += 1;

    std::string digits = whole.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string int_part = digits.substr(0, digits.size() - places);
    std::string frac_part = digits.substr(digits.size() - places);
    if (trim) {
        while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    }
    std::string out = (q < 0 && whole != 0) ? "-" : "";
    out += int_part;
    if (!frac_part.empty()) out += "." + frac_part;
    return out;
}

} // namespace tpshape

#endif
