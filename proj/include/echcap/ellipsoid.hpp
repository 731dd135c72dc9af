#pragma once

// An open 4-dimensional symplectic ellipsoid E(a,b) is identified by its two
// positive rational area parameters.  Instances are kept in canonical order
// a <= b; every operation in the library is symmetric in the two axes, so
// normalizing here makes caching and comparison trivial everywhere else.

#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

struct Ellipsoid {
    Rat a; // smaller axis parameter, > 0
    Rat b; // larger axis parameter, >= a

    Ellipsoid(Rat a_in, Rat b_in) : a(std::move(a_in)), b(std::move(b_in)) {
        if (a <= 0 || b <= 0) throw DomainError("ellipsoid parameters must be positive");
        if (b < a) std::swap(a, b);
    }

    bool operator==(const Ellipsoid& o) const { return a == o.a && b == o.b; }

    // E(a,a) is the open ball B(a).
    bool is_ball() const { return a == b; }

    // Volume up to a universal constant factor.
    Rat volume_proxy() const { return a * b; }
};

inline Ellipsoid ball(const Rat& mu) { return Ellipsoid(mu, mu); }

// Smallest positive integer lambda with lambda*v integral for every v.
inline Int common_denominator_scale(const std::vector<Rat>& vs) {
    Int l = 1;
    for (const Rat& v : vs) l = lcm_int(l, den(v));
    return l;
}

} // namespace echcap
