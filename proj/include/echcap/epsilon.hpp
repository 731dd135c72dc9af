#pragma once

// Step structure of the lattice counts.  For coprime axes the classical
// statement holds verbatim:
//
//     L_n = L_{n-1} + floor(n/ab) + eps(n),  eps(n) in {0,1},
//
// with eps depending only on n mod ab.  For gcd(a,b) = g > 1 that statement
// is false (counterexample: L_n(2,2) = d(floor(n/2)) forces eps(2) = 2 and
// the deviation grows), because S(a,b) = g*S(a/g, b/g) concentrates every
// increment on multiples of g.  The exact generalization used here:
//
//     L_n = L_{n-1} + [g | n] * floor(n / lcm(a,b)) + eps[n mod ab],
//
// where eps is {0,1}-valued, ab-periodic (lcm(a,b) divides ab), and zero on
// residues not divisible by g.  With g = 1 this is exactly the classical
// relation.  The table is always extracted empirically from an oracle
// prefix and re-validated on the window ab+1..4ab; any mismatch is a fatal
// internal-consistency error, never a silent fallback.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

class EpsilonTable {
public:
    EpsilonTable(long long a, long long b, std::vector<std::uint8_t> eps)
        : a_(a), b_(b), eps_(std::move(eps)) {
        g_ = std::gcd(a_, b_);
        lcm_ = a_ / g_ * b_;
    }

    long long axis_a() const { return a_; }
    long long axis_b() const { return b_; }
    long long period() const { return a_ * b_; }
    long long gcd_axes() const { return g_; }
    long long quasi_period() const { return lcm_; }
    const std::vector<std::uint8_t>& eps() const { return eps_; }

    // L_n - L_{n-1} for n >= 1.
    long long step(long long n) const {
        long long base = (n % g_ == 0) ? n / lcm_ : 0;
        return base + eps_[static_cast<std::size_t>(n % period())];
    }

private:
    long long a_, b_, g_, lcm_;
    std::vector<std::uint8_t> eps_;
};

inline EpsilonTable build_epsilon_table(long long a, long long b) {
    if (a <= 0 || b <= 0) throw DomainError("build_epsilon_table: axes must be positive");
    const long long P = a * b;
    const long long g = std::gcd(a, b);
    const long long lcm = a / g * b;

    std::vector<Int> L;
    L.reserve(static_cast<std::size_t>(4 * P) + 1);
    for (long long n = 0; n <= 4 * P; ++n) L.push_back(count_lattice_oracle(a, b, n));

    std::vector<std::uint8_t> eps(static_cast<std::size_t>(P), 0);
    for (long long n = 1; n <= P; ++n) {
        Int inc = L[static_cast<std::size_t>(n)] - L[static_cast<std::size_t>(n - 1)];
        Int base = (n % g == 0) ? Int(n / lcm) : Int(0);
        Int e = inc - base;
        if (e != 0 && e != 1)
            throw InternalConsistencyError("epsilon extraction out of {0,1} at n=" + std::to_string(n) +
                                           " for a=" + std::to_string(a) + " b=" + std::to_string(b));
        eps[static_cast<std::size_t>(n % P)] = static_cast<std::uint8_t>(e == 1 ? 1 : 0);
    }

    EpsilonTable table(a, b, std::move(eps));
    for (long long n = P + 1; n <= 4 * P; ++n) {
        Int inc = L[static_cast<std::size_t>(n)] - L[static_cast<std::size_t>(n - 1)];
        if (inc != table.step(n))
            throw InternalConsistencyError("epsilon periodicity violated at n=" + std::to_string(n) +
                                           " for a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
    return table;
}

// Reconstruct L_0..L_up_to from the step table alone.
inline CountSequence counts_via_epsilon(const EpsilonTable& table, long long up_to) {
    if (up_to < 0) throw DomainError("counts_via_epsilon: up_to must be >= 0");
    CountSequence out{Ellipsoid(Rat(table.axis_a()), Rat(table.axis_b())), {}};
    out.values.reserve(static_cast<std::size_t>(up_to) + 1);
    Int acc = 1;
    out.values.push_back(acc);
    for (long long n = 1; n <= up_to; ++n) {
        acc += table.step(n);
        out.values.push_back(acc);
    }
    return out;
}

} // namespace echcap
