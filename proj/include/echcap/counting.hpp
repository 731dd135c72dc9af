#pragma once

// Ground-truth lattice counting.  count_lattice_oracle is the reference
// implementation every faster path (series recurrence, step tables,
// quasi-quadratic sections) is validated against: it does nothing but walk
// the lattice points of the triangle a*l + b*m <= n and count them one by
// one, so there is no shared machinery that could fail in a correlated way.

#include <cstdint>
#include <vector>

#include "ellipsoid.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

// Triangle number d(k) = (k+1)(k+2)/2; zero for k < 0.
inline Int triangle_number(long long k) {
    if (k < 0) return 0;
    return Int(k + 1) * Int(k + 2) / 2;
}

// #{(l,m) in Z^2, l,m >= 0, a*l + b*m <= n} by direct double enumeration.
inline Int count_lattice_oracle(long long a, long long b, long long n) {
    if (a <= 0 || b <= 0) throw DomainError("count_lattice_oracle: axes must be positive");
    if (n < 0) return 0;
    Int count = 0;
    for (long long l = 0; a * l <= n; ++l) {
        for (long long m = 0; a * l + b * m <= n; ++m) ++count;
    }
    return count;
}

// Closed form for the equal-axis (ball) case: a*l + a*m <= n iff
// l + m <= floor(n/a), and there are d(k) pairs with l + m <= k.
inline Int count_equal_axes(long long a, long long n) {
    if (a <= 0) throw DomainError("count_equal_axes: axis must be positive");
    if (n < 0) return 0;
    return triangle_number(n / a);
}

// A materialized prefix L_0..L_N of the count sequence of one ellipsoid.
struct CountSequence {
    Ellipsoid source;
    std::vector<Int> values; // values[n] = L_n(source)
};

} // namespace echcap
