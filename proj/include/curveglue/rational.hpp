#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curveglue {

using Int = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator (the backend canonicalizes).
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Serialized form is "p/q" with the "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

namespace detail {
inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
}  // namespace detail

// Strict parser for "p" or "p/q"; anything else (whitespace, empty parts,
// q == 0) is rejected so malformed input surfaces as a parse error.
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    std::string_view ns = s, ds = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        ns = s.substr(0, slash);
        ds = s.substr(slash + 1);
    }
    if (!detail::is_integer_token(ns) || !detail::is_integer_token(ds)) bad();
    Int n{std::string(ns)}, d{std::string(ds)};
    if (d == 0) bad();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

}  // namespace curveglue
