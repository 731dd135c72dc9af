#pragma once

// Embedding decisions.  int E(a,b) embeds into int E(c,d) exactly when the
// lattice counts dominate: L_n(a,b) >= L_n(c,d) for every n >= 0.  The
// quantifier over all n is discharged by one of two exact finite reductions:
//
//  * residue route: both counts are quasi-quadratic with period P = product
//    of the (integer, scaled) axes.  On each residue class mod
//    M = lcm(P_ab, P_cd) the difference is an honest quadratic in the block
//    index t, so its sign pattern over t >= 0 is decided by integer root
//    bracketing: no floating point, no truncation.
//  * envelope route: once the lower envelope of L(a,b) clears the upper
//    envelope of L(c,d) (the horizon from envelopes.hpp), domination holds
//    forever; only the prefix below the horizon is compared term by term
//    via streaming recurrences.  The obstructed direction (volume of (a,b)
//    exceeding volume of (c,d)) uses the mirrored horizon, below which a
//    violation is guaranteed to appear.
//
// Both routes produce the same verdict and the same minimal witness; the
// test suite checks them against each other and against the double-loop
// oracle on a dense grid.  Witness indices live in the scaled integer frame
// (all four axes multiplied by `scale`); counts are unchanged by scaling.

#include <array>
#include <optional>
#include <string>

#include "ellipsoid.hpp"
#include "envelopes.hpp"
#include "errors.hpp"
#include "quasiquadratic.hpp"
#include "rational.hpp"
#include "recurrence.hpp"

namespace echcap {

enum class Verdict { Embeds, Obstructed };

struct Witness {
    Int index; // smallest n with L_n(source) < L_n(target), scaled frame
    Int lhs;   // L_n(source)
    Int rhs;   // L_n(target)
};

struct DecisionOutcome {
    Verdict verdict = Verdict::Embeds;
    std::optional<Witness> witness; // set exactly when obstructed
    Int scale = 1;                  // denominator-clearing factor
    std::array<Int, 4> scaled{};    // scaled axes a, b, c, d (each pair sorted)
    std::string route;              // "inclusion" | "residue" | "scan"
};

inline constexpr long long kResidueRouteMax = 100000;
inline constexpr long long kResidueFallbackMax = 2000000;
inline constexpr long long kScanIndexMax = 300000000;
inline constexpr long long kMaxStreamWindow = 20000000;

namespace detail {

// Smallest integer t >= 0 with q(t) = A2*t^2 + B2*t + C2 < 0, or nullopt.
// Exact: the only tools are integer evaluation and monotone bisection on a
// branch where the parabola is one-sided.
inline std::optional<Int> first_negative_index(const Int& A2, const Int& B2, const Int& C2) {
    auto eval = [&](const Int& t) { return A2 * t * t + B2 * t + C2; };

    if (A2 == 0) {
        if (C2 < 0) return Int(0);
        if (B2 >= 0) return std::nullopt; // nondecreasing from a nonnegative start
        // strictly decreasing line: first t with B2*t < -C2, i.e. t > C2/(-B2)
        return floor_div(C2, -B2) + 1;
    }

    Rat vertex = Rat(-B2) / Rat(2 * A2);
    Int tl = rat_floor(vertex), tr = rat_ceil(vertex);
    if (tl < 0) tl = 0;
    if (tr < 0) tr = 0;

    if (A2 > 0) {
        // violations, if any, fill one bounded interval around the vertex
        bool low_neg = eval(tl) < 0, high_neg = eval(tr) < 0;
        if (!low_neg && !high_neg) return std::nullopt; // integer minimum is clean
        if (eval(0) < 0) return Int(0);
        if (!low_neg) return tr; // the interval around the vertex starts at tr
        // decreasing branch [0, tl]: eval(0) >= 0, eval(tl) < 0
        Int lo = 0, hi = tl;
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            (eval(mid) < 0 ? hi : lo) = mid;
        }
        return hi;
    }

    // A2 < 0: concave, so past the vertex the values sink for good
    if (eval(0) < 0) return Int(0);
    Int start = tr;
    Int hi = start > 0 ? start : Int(1);
    while (eval(hi) >= 0) hi *= 2;
    Int lo = start; // eval >= 0 on [0, start] (rising branch plus the check at 0)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        (eval(mid) < 0 ? hi : lo) = mid;
    }
    return hi;
}

inline long long to_window_ll(const Int& v, const char* what) {
    if (v > kMaxStreamWindow) throw ResourceLimitError(std::string(what) + " exceeds stream budget");
    return v.convert_to<long long>();
}

// First n in [0, n_max] with L_n(a,b) < L_n(c,d), streaming both counts.
template <typename I>
std::optional<Witness> scan_first_violation(long long a, long long b, long long c, long long d,
                                            long long n_max) {
    CountStream<I> src(a, b), tgt(c, d);
    for (long long n = 0; n <= n_max; ++n) {
        I lhs = src.next(), rhs = tgt.next();
        if (lhs < rhs) return Witness{Int(n), Int(lhs), Int(rhs)};
    }
    return std::nullopt;
}

inline std::optional<Witness> scan_dispatch(const Int& A, const Int& B, const Int& C, const Int& D,
                                            const Int& n_max) {
    if (n_max < 0) return std::nullopt;
    if (n_max > kScanIndexMax) throw ResourceLimitError("count scan horizon exceeds index budget");
    to_window_ll(A + B + C + D + 4, "recurrence window");
    long long a = A.convert_to<long long>(), b = B.convert_to<long long>();
    long long c = C.convert_to<long long>(), d = D.convert_to<long long>();
    long long limit = n_max.convert_to<long long>();
    // counts are bounded by the upper envelopes; stay in 64-bit when safe
    Int bound = rat_floor(count_upper_envelope(A, B).eval(n_max)) +
                rat_floor(count_upper_envelope(C, D).eval(n_max)) + 2;
    if (bound * 8 < (Int(1) << 62)) return scan_first_violation<long long>(a, b, c, d, limit);
    return scan_first_violation<Int>(a, b, c, d, limit);
}

} // namespace detail

// Decide domination between two quasi-quadratic count families, returning
// the minimal violating index when domination fails.  Exact for all n >= 0.
inline DecisionOutcome decide_domination(const QuasiQuadratic& p, const QuasiQuadratic& q) {
    DecisionOutcome out;
    out.route = "residue";
    out.scaled = {Int(p.axis_a()), Int(p.axis_b()), Int(q.axis_a()), Int(q.axis_b())};

    const long long P1 = p.period(), P2 = q.period();
    Int M_big = lcm_int(Int(P1), Int(P2));
    if (M_big > 8000000) throw ResourceLimitError("period lcm too large for residue analysis");
    const long long M = M_big.convert_to<long long>();
    const long long k1 = M / P1, k2 = M / P2;

    // leading difference coefficient, doubled: M^2/(ab) - M^2/(cd)
    const long long A2 = p.two_alpha() * k1 * k1 - q.two_alpha() * k2 * k2;

    std::optional<Int> best;
    for (long long r = 0; r < M; ++r) {
        const long long s1 = r % P1, u1 = r / P1;
        const long long s2 = r % P2, u2 = r / P2;
        const long long tb1 = p.two_alpha() * 2 * k1 * u1 + p.two_beta(s1) * k1;
        const long long tb2 = q.two_alpha() * 2 * k2 * u2 + q.two_beta(s2) * k2;
        const long long tg1 = p.two_alpha() * u1 * u1 + p.two_beta(s1) * u1 + p.two_gamma(s1);
        const long long tg2 = q.two_alpha() * u2 * u2 + q.two_beta(s2) * u2 + q.two_gamma(s2);
        auto t = detail::first_negative_index(Int(A2), Int(tb1 - tb2), Int(tg1 - tg2));
        if (t) {
            Int n = *t * M + r;
            if (!best || n < *best) best = n;
        }
    }

    if (!best) {
        out.verdict = Verdict::Embeds;
        return out;
    }
    Int lhs = p.eval(*best), rhs = q.eval(*best);
    if (!(lhs < rhs)) throw InternalConsistencyError("residue analysis produced a non-violating witness");
    out.verdict = Verdict::Obstructed;
    out.witness = Witness{*best, lhs, rhs};
    return out;
}

// Full decision procedure with denominator clearing and route selection.
inline DecisionOutcome embeds(const Ellipsoid& source, const Ellipsoid& target) {
    DecisionOutcome out;
    Int lambda = common_denominator_scale({source.a, source.b, target.a, target.b});
    auto scaled_axis = [&](const Rat& x) {
        Rat v = x * Rat(lambda);
        if (den(v) != 1) throw InternalConsistencyError("denominator clearing failed");
        return num(v);
    };
    const Int A = scaled_axis(source.a), B = scaled_axis(source.b);
    const Int C = scaled_axis(target.a), D = scaled_axis(target.b);
    out.scale = lambda;
    out.scaled = {A, B, C, D};

    if (A <= C && B <= D) {
        out.verdict = Verdict::Embeds;
        out.route = "inclusion";
        return out;
    }

    const Int volAB = A * B, volCD = C * D;
    const Int M = lcm_int(volAB, volCD);

    auto run_residue = [&]() {
        QuasiQuadratic p = build_quasi_quadratic_fast(A.convert_to<long long>(),
                                                      B.convert_to<long long>());
        QuasiQuadratic q = build_quasi_quadratic_fast(C.convert_to<long long>(),
                                                      D.convert_to<long long>());
        DecisionOutcome inner = decide_domination(p, q);
        out.verdict = inner.verdict;
        out.witness = inner.witness;
        out.route = "residue";
        return out;
    };

    if (volAB > volCD) {
        // volume obstruction: counts must eventually fall behind; the mirrored
        // horizon bounds where the first failure can hide.  The first actual
        // failure usually sits far below the worst-case bound, so scan up to
        // the budget even when the bound itself is unaffordable.
        QuadraticBound gap = count_lower_envelope(C, D) - count_upper_envelope(A, B);
        Int n1 = *nonnegative_horizon(gap, true);
        Int cap = n1 <= kScanIndexMax ? n1 : Int(kScanIndexMax);
        auto w = detail::scan_dispatch(A, B, C, D, cap);
        if (w) {
            out.verdict = Verdict::Obstructed;
            out.witness = *w;
            out.route = "scan";
            return out;
        }
        if (n1 <= kScanIndexMax)
            throw InternalConsistencyError("guaranteed violation not found below bound");
        if (M <= kResidueFallbackMax) return run_residue();
        throw ResourceLimitError("decision exceeds scan and residue budgets");
    }

    if (M <= kResidueRouteMax) return run_residue();

    QuadraticBound gap = count_lower_envelope(A, B) - count_upper_envelope(C, D);
    auto horizon = nonnegative_horizon(gap, false);
    if (horizon && *horizon <= kScanIndexMax) {
        auto w = detail::scan_dispatch(A, B, C, D, *horizon - 1);
        out.verdict = w ? Verdict::Obstructed : Verdict::Embeds;
        if (w) out.witness = *w;
        out.route = "scan";
        return out;
    }
    if (M <= kResidueFallbackMax) return run_residue();
    throw ResourceLimitError("decision exceeds scan and residue budgets");
}

inline DecisionOutcome embeds(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return embeds(Ellipsoid(a, b), Ellipsoid(c, d));
}

// int E(1, n^2) fills the ball B(n) with no volume to spare; the decision
// procedure must confirm every such filling.
inline DecisionOutcome verify_ball_filling(long long n) {
    if (n < 1) throw DomainError("ball filling index must be a positive integer");
    return embeds(Ellipsoid(Rat(1), Rat(Int(n) * n)), Ellipsoid(Rat(n), Rat(n)));
}

} // namespace echcap
