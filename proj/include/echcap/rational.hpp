#pragma once

// Exact arithmetic backbone: arbitrary-precision integers and normalized
// rationals, plus the handful of floor/ceil/parse helpers the rest of the
// library leans on.  Everything that certifies a verdict goes through these
// types; floating point only ever appears in explicitly approximate modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "errors.hpp"

namespace echcap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor(p/q) for q > 0 (cpp_int division truncates toward zero).
inline Int floor_div(const Int& p, const Int& q) {
    Int t = p / q;
    if (p % q != 0 && (p < 0) != (q < 0)) --t;
    return t;
}

inline Int ceil_div(const Int& p, const Int& q) {
    Int t = p / q;
    if (p % q != 0 && (p < 0) == (q < 0)) ++t;
    return t;
}

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(num(r), den(r)); }

// Largest integer s with s*s <= v.  Requires v >= 0.
inline Int isqrt(const Int& v) {
    if (v < 0) throw DomainError("isqrt: negative argument");
    return boost::multiprecision::sqrt(v);
}

inline Int pow_int(const Int& base, unsigned long exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
    return Rat(pow_int(num(base), exp), pow_int(den(base), exp));
}

inline Int lcm_int(const Int& x, const Int& y) {
    return boost::multiprecision::lcm(x, y);
}

// Canonical text form: lowest terms, "p" when the denominator is 1,
// otherwise "p/q" with q > 0.  This is the only rational syntax the
// library emits and the only one it accepts.
inline std::string format_rat(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

inline bool parse_int_text(const std::string& text, Int& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') return false;
    out = Int(text.substr(i)); // the big-int parser takes no sign prefix
    if (text[0] == '-') out = -out;
    return true;
}

// Accepts "p" or "p/q" only; no decimal forms.
inline std::optional<Rat> try_parse_rat(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        Int p;
        if (!parse_int_text(text, p)) return std::nullopt;
        return Rat(p);
    }
    Int p, q;
    if (!parse_int_text(text.substr(0, slash), p)) return std::nullopt;
    if (!parse_int_text(text.substr(slash + 1), q)) return std::nullopt;
    if (q == 0) return std::nullopt;
    if (q < 0) { // the rational constructor requires a positive denominator
        p = -p;
        q = -q;
    }
    return Rat(p, q);
}

inline Rat parse_rat(const std::string& text) {
    auto r = try_parse_rat(text);
    if (!r) throw DomainError("not a rational (expected p or p/q): '" + text + "'");
    return *r;
}

} // namespace echcap
