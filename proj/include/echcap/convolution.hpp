#pragma once

// Ball-filling convolution inequality.  For n >= 2 define
//
//   c(k) = 1 if k = 0 (mod n),  -1 if k = 1 (mod n),  0 otherwise,
//   d(k) = (k+1)(k+2)/2,
//
// and for each N >= 0 the convolution  S(N) = sum_{k=0}^{N} c(floor(k/n)) *
// d(floor((N-k)/n)).  S(N) collapses to the closed form
//
//   S(N) = (p+1)(N+1) - (p(p+1)/2) n^2     where N = p n^2 + q n + r,
//                                                0 <= q, r < n,
//
// and the filling int E(1,n^2) -> B(n) is equivalent to S(N) >= d(floor(N/n))
// for every N.  The check evaluates both sides of the closed form
// independently (mismatch is fatal, not reported) and records the inequality
// verdict per index.  n = 1 is excluded: the residues 0 and 1 mod 1 collide,
// so c is not well defined there.

#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

struct ConvolutionCheckEntry {
    long long index;   // N
    Int lhs;           // convolution value S(N), cross-checked against the closed form
    Int rhs;           // d(floor(N/n))
    bool holds;        // lhs >= rhs
};

struct ConvolutionReport {
    long long n = 0;
    long long max_index = 0;
    bool all_hold = true;
    std::vector<ConvolutionCheckEntry> entries;
};

inline Int convolution_direct(long long n, long long N) {
    Int sum = 0;
    for (long long k = 0; k <= N; ++k) {
        long long res = (k / n) % n;
        if (res == 0)
            sum += triangle_number((N - k) / n);
        else if (res == 1)
            sum -= triangle_number((N - k) / n);
    }
    return sum;
}

inline Int convolution_closed_form(long long n, long long N) {
    long long p = N / (n * n);
    return Int(p + 1) * (N + 1) - Int(p) * (p + 1) / 2 * n * n;
}

inline ConvolutionReport convolution_identity_check(long long n, long long max_index) {
    if (n < 2) throw DomainError("convolution check requires n >= 2");
    if (max_index < 0) throw DomainError("check range must be nonnegative");
    ConvolutionReport report;
    report.n = n;
    report.max_index = max_index;
    report.entries.reserve(static_cast<std::size_t>(max_index) + 1);
    for (long long N = 0; N <= max_index; ++N) {
        Int lhs = convolution_direct(n, N);
        if (lhs != convolution_closed_form(n, N))
            throw InternalConsistencyError("convolution closed form disagrees with direct sum");
        Int rhs = triangle_number(N / n);
        bool holds = lhs >= rhs;
        report.all_hold = report.all_hold && holds;
        report.entries.push_back(ConvolutionCheckEntry{N, lhs, rhs, holds});
    }
    return report;
}

} // namespace echcap
