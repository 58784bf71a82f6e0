#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace novikov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Structurally malformed input: unknown identifiers, bad shapes, bad syntax.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that is well formed but violates a mathematical invariant
/// (non-closed cochain, non-basic cochain, non-simplicial action, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested computation is outside the supported range (r >= 2 torsion,
/// size caps, ...).
class UnsupportedOperation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_value(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidInput("malformed integer literal '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw InvalidInput("malformed integer literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
}

/// Accepts "p", "p/q" and plain decimals "d.ddd" (converted exactly).
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        Integer den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty()) throw InvalidInput("malformed decimal '" + s + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer w = parse_integer(whole);
        Integer f = parse_integer(frac);
        if (f < 0) throw InvalidInput("malformed decimal '" + s + "'");
        Rational mag = Rational(abs_value(w)) + Rational(f, scale);
        return negative ? Rational(-mag) : mag;
    }
    return Rational(parse_integer(s));
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

}  // namespace novikov
