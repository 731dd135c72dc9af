#pragma once

// Ball capacity c(a) = inf{mu : int E(1,a) embeds into B(mu)} as a certified
// interval.  Monotonicity in mu (a larger ball admits everything a smaller
// one does) makes bisection sound; every endpoint move is backed by an exact
// embeds verdict, so the returned interval is a certificate, not an
// approximation:
//
//   * embeds(1, a, upper, upper) is Embeds,
//   * embeds(1, a, lower - delta, lower - delta) is Obstructed,
//
// both re-verified before returning.  The interval starts at the volume
// bound (sqrt(a), rounded down to denominator 10^6) and the inclusion bound
// (mu = a).  Probes are the simplest rationals in the middle half of the
// current interval: the width still shrinks by >= 1/4 per step, while probe
// denominators stay inversely proportional to the interval width, which
// keeps the scaled integer frame inside decide.embeds small.
//
// The optional exact value: the simplest rational in the final interval is
// probed on both sides (embeds at the candidate, obstructed a probe step
// below).  A pass certifies c(a) in (candidate - step, candidate] and that
// the infimum is attained at the candidate if it is attained at all; the
// classical small-integer table values are recovered this way.

#include <optional>
#include <vector>

#include "capacities.hpp"
#include "decide.hpp"
#include "ellipsoid.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

inline const Rat kDefaultProbeStep = Rat(1, 100);

struct CapacityResult {
    Rat input;
    Rat lower, upper;
    std::optional<Rat> exact;

    Rat width() const { return upper - lower; }
};

// Simplest rational in [x, y] (smallest denominator, then smallest
// numerator), via the Stern-Brocot / continued-fraction descent.
inline Rat simplest_rational_in(const Rat& x, const Rat& y) {
    if (x > y) throw DomainError("simplest_rational_in needs x <= y");
    if (x == y) return x;
    Rat lo = x, hi = y;
    // walk the continued fraction until an integer separates the endpoints
    std::vector<Int> quotients;
    for (;;) {
        Int c = rat_ceil(lo);
        if (c <= rat_floor(hi)) {
            // rebuild the value from the collected quotients
            Rat v(c);
            for (auto it = quotients.rbegin(); it != quotients.rend(); ++it)
                v = Rat(*it) + 1 / v;
            return v;
        }
        Int n = rat_floor(lo);
        quotients.push_back(n);
        Rat nlo = 1 / (hi - Rat(n)), nhi = 1 / (lo - Rat(n));
        lo = nlo;
        hi = nhi;
    }
}

inline bool capacity_exact_probe(const Rat& a, const Rat& candidate, const Rat& probe_step) {
    if (candidate <= 0) throw DomainError("capacity candidate must be positive");
    if (embeds(Rat(1), a, candidate, candidate).verdict != Verdict::Embeds) return false;
    Rat below = candidate - probe_step;
    if (below <= 0) return true; // nothing embeds into a degenerate ball
    return embeds(Rat(1), a, below, below).verdict == Verdict::Obstructed;
}

// Definitive equality certificate for a capacity candidate.  The candidate
// embedding gives c(a) <= candidate; the matching lower bound comes from one
// of two exact arguments:
//
//   * volume: c(a) >= sqrt(a) always, so candidate^2 == a settles it
//     (covers the perfect squares, where the filling is volume-sharp and no
//     finite obstruction index attains the bound);
//   * an attained obstruction index: for a ball target the capacity
//     sequence scales linearly in mu, so c(a) = sup_j N_j(1,a)/N_j(1,1).
//     Probing just below the candidate yields a violating count index whose
//     target count K identifies the capacity index j = K - 1 with
//     N_j(source) > N_j(target); that j forces c(a) >= N_j(1,a)/N_j(1,1)
//     exactly, and a ratio equal to the candidate closes the sandwich.
//
// A failed certificate proves nothing (the field just stays empty), so
// irrational capacities (non-square a >= 9) never get a spurious exact
// value.
inline std::optional<Rat> certify_exact_capacity(const Rat& a, const Rat& candidate) {
    if (candidate <= 0) return std::nullopt;
    if (embeds(Rat(1), a, candidate, candidate).verdict != Verdict::Embeds) return std::nullopt;
    if (candidate * candidate == a) return candidate;
    Rat below = candidate - kDefaultProbeStep;
    if (below <= 0) return std::nullopt;
    DecisionOutcome probe = embeds(Rat(1), a, below, below);
    if (probe.verdict != Verdict::Obstructed) return std::nullopt;
    Int j = probe.witness->rhs - 1;
    if (j < 1 || j > 1000000) return std::nullopt;
    long long jj = j.convert_to<long long>();
    CapacitySequence source(Ellipsoid(Rat(1), a));
    CapacitySequence ball(Ellipsoid(Rat(1), Rat(1)));
    Rat ratio = source.at(static_cast<std::size_t>(jj)) / ball.at(static_cast<std::size_t>(jj));
    if (ratio == candidate) return candidate;
    return std::nullopt;
}

inline CapacityResult capacity_interval(const Rat& a, const Rat& tolerance) {
    if (a < 1) throw DomainError("capacity function is defined for a >= 1");
    if (tolerance <= 0) throw DomainError("tolerance must be positive");

    // volume bound, rounded down to denominator 10^6: floor(10^6 sqrt(a)) / 10^6
    const Int mega = 1000000;
    Rat lower = Rat(isqrt(floor_div(num(a) * mega * mega, den(a))), mega);
    Rat upper = a;

    while (upper - lower > tolerance) {
        Rat w = upper - lower;
        Rat probe = simplest_rational_in(lower + w / 4, upper - w / 4);
        if (embeds(Rat(1), a, probe, probe).verdict == Verdict::Embeds)
            upper = probe;
        else
            lower = probe;
    }

    CapacityResult result{a, lower, upper, std::nullopt};
    Rat candidate = simplest_rational_in(lower, upper);
    if (auto ex = certify_exact_capacity(a, candidate)) {
        result.exact = *ex;
        result.upper = *ex; // embeds verdict at the candidate tightens the ceiling
    }

    // re-verify the interval invariants; failure here is a bug, not bad input
    if (embeds(Rat(1), a, result.upper, result.upper).verdict != Verdict::Embeds)
        throw InternalConsistencyError("capacity upper bound lost its embeds certificate");
    Rat below = result.lower - kDefaultProbeStep;
    if (below > 0 && embeds(Rat(1), a, below, below).verdict != Verdict::Obstructed)
        throw InternalConsistencyError("capacity lower bound lost its obstruction certificate");
    return result;
}

inline std::vector<CapacityResult> capacity_table(const std::vector<Rat>& a_values,
                                                  const Rat& tolerance) {
    if (a_values.empty()) throw DomainError("capacity table needs at least one value");
    std::vector<CapacityResult> rows;
    rows.reserve(a_values.size());
    for (const Rat& a : a_values) rows.push_back(capacity_interval(a, tolerance));
    return rows;
}

} // namespace echcap
