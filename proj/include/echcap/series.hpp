#pragma once

// Formal power series num(z)/den(z) with integer coefficients, expanded by
// the linear recurrence the denominator induces:
//
//     den_0 * c_n = num_n - sum_{k>=1} den_k * c_{n-k}
//
// The engine insists on den_0 = +-1 so every coefficient stays an exact
// integer.  Two series matter here:
//
//   g_series(a,b)            = 1 / ((1-z)(1-z^a)(1-z^b)),
//                              whose n-th coefficient is the lattice count
//                              L_n(a,b) of the triangle a*l + b*m <= n;
//   difference_series(a,b,c,d), whose n-th coefficient is
//                              L_n(a,b) - L_n(c,d).

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace echcap {

class RationalSeries {
public:
    RationalSeries(IntPolynomial numerator, IntPolynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        Int d0 = den_.coefficient(0);
        if (d0 == 0)
            throw InvalidSeriesError("denominator constant term is zero; series undefined");
        if (d0 != 1 && d0 != -1)
            throw InvalidSeriesError("denominator constant term must be +1 or -1 for integer expansion");
        d0_is_one_ = (d0 == 1);
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    // Coefficient c_n, memoized.
    const Int& coefficient(std::size_t n) {
        ensure(n + 1);
        return memo_[n];
    }

    void ensure(std::size_t count) {
        while (memo_.size() < count) {
            long long n = static_cast<long long>(memo_.size());
            Int acc = num_.coefficient(n);
            for (const auto& [k, dk] : den_.terms()) {
                if (k == 0 || k > n) continue;
                acc -= dk * memo_[static_cast<std::size_t>(n - k)];
            }
            memo_.push_back(d0_is_one_ ? acc : -acc);
        }
    }

private:
    IntPolynomial num_, den_;
    std::vector<Int> memo_;
    bool d0_is_one_;
};

inline std::vector<Int> series_coefficients(RationalSeries& s, std::size_t count) {
    std::vector<Int> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(s.coefficient(n));
    return out;
}

inline RationalSeries g_series(long long a, long long b) {
    if (a <= 0 || b <= 0) throw DomainError("g_series: axes must be positive integers");
    IntPolynomial den = IntPolynomial::one_minus_pow(1) * IntPolynomial::one_minus_pow(a) *
                        IntPolynomial::one_minus_pow(b);
    return RationalSeries(IntPolynomial::constant(1), den);
}

// ((1-z^c)(1-z^d) - (1-z^a)(1-z^b)) / ((1-z)(1-z^a)(1-z^b)(1-z^c)(1-z^d)).
inline RationalSeries difference_series(long long a, long long b, long long c, long long d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw DomainError("difference_series: axes must be positive integers");
    IntPolynomial pa = IntPolynomial::one_minus_pow(a);
    IntPolynomial pb = IntPolynomial::one_minus_pow(b);
    IntPolynomial pc = IntPolynomial::one_minus_pow(c);
    IntPolynomial pd = IntPolynomial::one_minus_pow(d);
    IntPolynomial num = pc * pd - pa * pb;
    IntPolynomial den = IntPolynomial::one_minus_pow(1) * pa * pb * pc * pd;
    return RationalSeries(std::move(num), std::move(den));
}

} // namespace echcap
