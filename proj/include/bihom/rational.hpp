#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bihom/errors.hpp"

namespace bihom {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; every arithmetic operation is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p", "-p" or "p/q". Rejects empty input, stray characters and a
/// zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw ParseError("bad rational \"" + std::string(text) + "\": " + why);
    };
    auto scan_int = [&](std::string_view s) -> Int {
        bool negative = false;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            negative = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) fail("missing digits");
        for (const char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("not an integer");
        const Int v{std::string(s)};
        return negative ? -v : v;
    };
    if (text.empty()) fail("empty");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(scan_int(text));
    const Int num = scan_int(text.substr(0, slash));
    const Int den = scan_int(text.substr(slash + 1));
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
}

} // namespace bihom
