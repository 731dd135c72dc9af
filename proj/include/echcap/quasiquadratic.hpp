#pragma once

// Closed form for the lattice counts on each residue class mod P = a*b:
//
//   L_{t*P + r}(a,b) = alpha * t^2 + beta_r * t + gamma_r
//
// with alpha = P^2/(2ab) = ab/2 independent of the residue.  The
// coefficients are fitted from t = 0,1,2 and then verified exactly at
// t = 3,4; any mismatch (or a non-half-integer coefficient) throws, so a
// constructed table is a proof of the closed form on the sampled window.
//
// Coefficients are stored doubled (2*alpha, 2*beta_r, 2*gamma_r) so the
// tables stay integral: counts grow like n^2/(2ab), which keeps every value
// through index 5P below ~15P, comfortably inside 64 bits.

#include <cstdint>
#include <string>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "recurrence.hpp"

namespace echcap {

struct ResidueCoefficients {
    Rat alpha, beta, gamma;
};

class QuasiQuadratic {
public:
    // prefix must hold L_0 .. L_{5P-1} for P = a*b.
    QuasiQuadratic(long long a, long long b, const std::vector<long long>& prefix)
        : a_(a < b ? a : b), b_(a < b ? b : a), period_(a * b) {
        if (a <= 0 || b <= 0) throw DomainError("quasi-quadratic axes must be positive");
        if (static_cast<long long>(prefix.size()) < 5 * period_)
            throw DomainError("quasi-quadratic fit needs five full periods of counts");
        const long long P = period_;
        two_beta_.resize(static_cast<std::size_t>(P));
        two_gamma_.resize(static_cast<std::size_t>(P));
        for (long long r = 0; r < P; ++r) {
            const long long v0 = prefix[static_cast<std::size_t>(r)];
            const long long v1 = prefix[static_cast<std::size_t>(P + r)];
            const long long v2 = prefix[static_cast<std::size_t>(2 * P + r)];
            const long long two_alpha = v2 - 2 * v1 + v0;
            if (two_alpha != P)
                throw InternalConsistencyError(
                    "quasi-quadratic leading coefficient is not P^2/(2ab) at residue " +
                    std::to_string(r));
            // beta = v1 - v0 - alpha, gamma = v0
            two_beta_[static_cast<std::size_t>(r)] = 2 * (v1 - v0) - two_alpha;
            two_gamma_[static_cast<std::size_t>(r)] = 2 * v0;
            for (long long t = 3; t <= 4; ++t) {
                const long long predicted =
                    (two_alpha * t * t + two_beta_[static_cast<std::size_t>(r)] * t +
                     two_gamma_[static_cast<std::size_t>(r)]) /
                    2;
                if (predicted != prefix[static_cast<std::size_t>(t * P + r)])
                    throw InternalConsistencyError(
                        "quasi-quadratic verification failed at t=" + std::to_string(t) +
                        ", residue " + std::to_string(r));
            }
        }
        two_alpha_ = P;
    }

    long long axis_a() const { return a_; }
    long long axis_b() const { return b_; }
    long long period() const { return period_; }
    long long two_alpha() const { return two_alpha_; }
    long long two_beta(long long r) const { return two_beta_[static_cast<std::size_t>(r)]; }
    long long two_gamma(long long r) const { return two_gamma_[static_cast<std::size_t>(r)]; }

    ResidueCoefficients coefficients(long long r) const {
        if (r < 0 || r >= period_) throw DomainError("residue out of range");
        return ResidueCoefficients{Rat(two_alpha_, 2), Rat(two_beta(r), 2), Rat(two_gamma(r), 2)};
    }

    Int eval(const Int& n) const {
        if (n < 0) throw DomainError("count index must be nonnegative");
        Int t = n / period_;
        long long r = static_cast<long long>(n % period_);
        Int doubled = Int(two_alpha_) * t * t + Int(two_beta(r)) * t + Int(two_gamma(r));
        if (doubled % 2 != 0)
            throw InternalConsistencyError("quasi-quadratic value is not an integer");
        return doubled / 2;
    }

private:
    long long a_, b_;
    long long period_;
    long long two_alpha_ = 0;
    std::vector<long long> two_beta_, two_gamma_;
};

// Reference builder: counts come straight from the double-loop oracle.
// Quadratic per count, so only sensible for small periods (tests, spot
// checks); the decision paths use the recurrence-fed builder below.
inline QuasiQuadratic build_quasi_quadratic(long long a, long long b) {
    if (a <= 0 || b <= 0) throw DomainError("quasi-quadratic axes must be positive");
    const long long P = a * b;
    std::vector<long long> prefix(static_cast<std::size_t>(5 * P));
    for (long long n = 0; n < 5 * P; ++n)
        prefix[static_cast<std::size_t>(n)] =
            count_lattice_oracle(a, b, n).convert_to<long long>();
    return QuasiQuadratic(a, b, prefix);
}

// Production builder: same fit/verify contract, counts from the linear-time
// recurrence stream.  Values through index 5P stay below ~15P (see header
// note), so 64-bit accumulation is exact.
inline QuasiQuadratic build_quasi_quadratic_fast(long long a, long long b) {
    if (a <= 0 || b <= 0) throw DomainError("quasi-quadratic axes must be positive");
    const long long P = a * b;
    CountStream<long long> stream(a, b);
    std::vector<long long> prefix(static_cast<std::size_t>(5 * P));
    for (long long n = 0; n < 5 * P; ++n) prefix[static_cast<std::size_t>(n)] = stream.next();
    return QuasiQuadratic(a, b, prefix);
}

} // namespace echcap
