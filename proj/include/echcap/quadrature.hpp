#pragma once

// Contour-integral approximation of a lattice count:
//
//   L_n(a,b) = (1/2*pi*i) * Int_{|xi| = r}  dxi / ((1-xi)(1-xi^a)(1-xi^b) xi^{n+1})
//
// for any 0 < r < 1, discretized by the periodic trapezoid rule with m
// uniform nodes xi_j = r * exp(2*pi*i*j/m):
//
//   L_n ~ (1/m) * sum_j Re[ xi_j^{-n} / ((1-xi_j)(1-xi_j^a)(1-xi_j^b)) ].
//
// Aliasing identity: the discrete sum equals sum_{t >= 0, t == n (mod m)}
// L_t * r^{t-n}, so for m > n the error is L_{n+m} r^m + L_{n+2m} r^{2m} +
// ... which at r = 1/2, m >= 64 is below 1e-15 absolute.  The summation
// runs at 128-bit mantissa because the terms reach size r^{-n} and would
// lose ~n bits to cancellation in double.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

using Float128 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;
using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

template <typename F>
inline F to_float(const Rat& r) {
    return F(num(r)) / F(den(r));
}

inline double coefficient_by_quadrature(long long a, long long b, long long n, const Rat& radius,
                                        long long points) {
    using F = Float128;
    if (a <= 0 || b <= 0) throw DomainError("coefficient_by_quadrature: axes must be positive");
    if (n < 0) throw DomainError("coefficient_by_quadrature: n must be >= 0");
    if (points < 1) throw DomainError("coefficient_by_quadrature: need at least one node");
    if (radius <= 0 || radius >= 1) throw DomainError("coefficient_by_quadrature: radius must lie in (0,1)");

    const long long m = points;
    const F r = to_float<F>(radius);
    const F theta = 2 * boost::math::constants::pi<F>() / F(m);

    struct C {
        F re, im;
    };
    auto mul = [](const C& x, const C& y) { return C{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; };

    // omega[t] = exp(2*pi*i*t/m), built by repeated rotation.
    std::vector<C> omega(static_cast<std::size_t>(m));
    const C w{cos(theta), sin(theta)};
    omega[0] = C{F(1), F(0)};
    for (long long t = 1; t < m; ++t) omega[static_cast<std::size_t>(t)] = mul(omega[static_cast<std::size_t>(t - 1)], w);

    const F r1 = r;
    const F rpow_a = pow(r, F(a));
    const F rpow_b = pow(r, F(b));
    const F rpow_n = pow(r, F(n));

    F acc = 0;
    long long t1 = 0, ta = 0, tb = 0, tn = 0; // running residues j*k mod m
    for (long long j = 0; j < m; ++j) {
        const C& w1 = omega[static_cast<std::size_t>(t1)];
        const C& wa = omega[static_cast<std::size_t>(ta)];
        const C& wb = omega[static_cast<std::size_t>(tb)];
        const C& wn = omega[static_cast<std::size_t>(tn)];
        C f1{1 - r1 * w1.re, -(r1 * w1.im)};
        C fa{1 - rpow_a * wa.re, -(rpow_a * wa.im)};
        C fb{1 - rpow_b * wb.re, -(rpow_b * wb.im)};
        C xin{rpow_n * wn.re, rpow_n * wn.im};
        C d = mul(mul(f1, fa), mul(fb, xin));
        acc += d.re / (d.re * d.re + d.im * d.im);
        t1 += 1;
        if (t1 >= m) t1 -= m;
        ta += a % m;
        if (ta >= m) ta -= m;
        tb += b % m;
        if (tb >= m) tb -= m;
        tn += n % m;
        if (tn >= m) tn -= m;
    }
    return static_cast<double>(acc / F(m));
}

} // namespace echcap
