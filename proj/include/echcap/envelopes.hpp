#pragma once

// Two-sided quadratic envelopes for the lattice counts, used to cut the
// infinite domination check L_n(a,b) >= L_n(c,d) down to a finite prefix.
//
// Writing K = floor(n/b), summing columns of the triangle a*l + b*m <= n and
// bounding each floor term gives, for every n >= 0:
//
//   lower:  L_n(a,b)  >  n^2/(2ab) + n/(2*min(a,b))            (strict)
//   upper:  L_n(a,b) <=  (n + min(a,b) + max(a,b)/2)^2 / (2ab)
//
// The lower bound is the column sum with floor(x)+1 > x, minimized over the
// admissible real K (the minimum sits at the interval endpoints K = n/b and
// K = n/b - 1, both of value n(n+b)/(2ab)); the upper bound replaces each
// term by x+1 and takes the parabola's vertex in K.  Both are checked
// against the oracle in the tests.
//
// If lower_{a,b} - upper_{c,d} is eventually nonnegative, its horizon (the
// first index from which it stays nonnegative) bounds where a domination
// failure can still hide; the prefix below the horizon is then compared
// exactly, term by term.

#include <optional>

#include "rational.hpp"

namespace echcap {

struct QuadraticBound {
    Rat c2, c1, c0; // c2*n^2 + c1*n + c0

    Rat eval(const Int& n) const { return c2 * Rat(n) * Rat(n) + c1 * Rat(n) + c0; }

    QuadraticBound operator-(const QuadraticBound& o) const {
        return QuadraticBound{c2 - o.c2, c1 - o.c1, c0 - o.c0};
    }
};

inline QuadraticBound count_lower_envelope(const Int& a, const Int& b) {
    const Int& m = a < b ? a : b;
    return QuadraticBound{Rat(1, 2 * a * b), Rat(1, 2 * m), Rat(0)};
}

inline QuadraticBound count_upper_envelope(const Int& a, const Int& b) {
    Rat h = Rat(a < b ? a : b) + Rat(a < b ? b : a) / 2;
    return QuadraticBound{Rat(1, 2 * a * b), h / Rat(a * b), h * h / Rat(2 * a * b)};
}

// Smallest n0 >= 0 such that q(n) >= 0 (or > 0 when strict) for ALL integer
// n >= n0; nullopt when no such index exists.
inline std::optional<Int> nonnegative_horizon(const QuadraticBound& q, bool strict) {
    auto pred = [&](const Rat& v) { return strict ? v > 0 : v >= 0; };

    if (q.c2 < 0) return std::nullopt;
    if (q.c2 == 0) {
        if (q.c1 < 0) return std::nullopt;
        if (q.c1 == 0) return pred(q.c0) ? std::optional<Int>(Int(0)) : std::nullopt;
        // increasing line: first n with c1*n + c0 satisfying pred
        if (pred(q.eval(0))) return Int(0);
        Int n0 = rat_ceil(-q.c0 / q.c1);
        if (n0 < 0) n0 = 0;
        while (!pred(q.eval(n0))) ++n0; // at most one bump (strict vs exact root)
        return n0;
    }

    // c2 > 0: nondecreasing from the vertex on.
    Rat v = -q.c1 / (2 * q.c2);
    Int tl = rat_floor(v), tr = rat_ceil(v);
    if (tl < 0) tl = 0;
    if (tr < 0) tr = 0;
    if (pred(q.eval(tl)) && pred(q.eval(tr))) return Int(0); // integer minimum passes
    if (pred(q.eval(tr))) return tr;
    Int lo = tr, hi = tr > 0 ? tr * 2 : Int(1);
    while (!pred(q.eval(hi))) {
        lo = hi;
        hi *= 2;
    }
    // smallest n in (lo, hi] passing pred; pred is monotone beyond the vertex
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (pred(q.eval(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace echcap
