#pragma once

// Sampled verification layer for the generating-function inequalities.
//
// The ordering g_{a,b}(z) >= g_{c,d}(z) on [0,1) is equivalent, after
// clearing the shared 1/(1-z) pole, to
//
//   (1 - z^c)(1 - z^d)  >=  (1 - z^a)(1 - z^b),
//
// and substituting z -> z^(1/d) normalizes the largest exponent to 1
// (reduced form, exponents a/d, b/d, c/d, 1).  The checks here sample such
// inequalities on finite grids; a pass is reported as holds-on-grid, never
// as a proof.
//
// Evaluation strategy, in order:
//   1. reduced exponents all integers -> exact rationals;
//   2. raw parameters all integers   -> exact rationals, unreduced form;
//   3. otherwise 128-bit floats with an error envelope: a margin counts
//      (certified) only when it exceeds sum(|monomials|) * 2^-100, far above
//      the arithmetic error, and every reported violation is re-evaluated at
//      256-bit precision; a sign flip there is a fatal internal error.
//
// Grids: a uniform grid on [0, 1/2] plus the geometric tail 1 - 2^-k,
// k = 1..40 (violations of the converse direction live near z = 1); the
// derivative checks use a uniform grid on [0, 9/10], where the series tail
// is controllable.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "recurrence.hpp"

namespace echcap {

struct SampleRow {
    Rat z;
    Rat left, right, margin; // float-path rows store double-precision snapshots
    bool certified;          // margin exact, or beyond the error envelope
};

enum class GridVerdict { HoldsOnGrid, ViolatedAt };

struct SampledFunctionReport {
    std::string check;
    std::vector<SampleRow> rows;
    GridVerdict verdict = GridVerdict::HoldsOnGrid;
    std::optional<Rat> witness; // first certified violation point

    bool holds() const { return verdict == GridVerdict::HoldsOnGrid; }
};

inline Rat eval_g(long long a, long long b, const Rat& z) {
    if (a <= 0 || b <= 0) throw DomainError("generating function needs positive parameters");
    if (z < 0 || z >= 1) throw DomainError("generating function evaluated outside [0,1)");
    Rat fa = 1 - pow_rat(z, a), fb = 1 - pow_rat(z, b);
    return 1 / ((1 - z) * fa * fb);
}

inline std::vector<Rat> sample_grid_with_tail(int grid_size) {
    if (grid_size < 1) throw DomainError("grid size must be positive");
    std::vector<Rat> zs;
    if (grid_size == 1)
        zs.push_back(Rat(0));
    else
        for (int i = 0; i < grid_size; ++i) zs.push_back(Rat(i, 2LL * (grid_size - 1)));
    for (int k = 1; k <= 40; ++k) zs.push_back(1 - Rat(1, Int(1) << k));
    return zs;
}

inline std::vector<Rat> sample_grid_bulk(int grid_size) {
    if (grid_size < 1) throw DomainError("grid size must be positive");
    std::vector<Rat> zs;
    if (grid_size == 1)
        zs.push_back(Rat(0));
    else
        for (int i = 0; i < grid_size; ++i)
            zs.push_back(Rat(9, 10) * Rat(i, grid_size - 1));
    return zs;
}

namespace detail {

// (1 - z^p)(1 - z^q) - (1 - z^r)(1 - z^s) with exact rational powers.
inline Rat exact_product_margin(const Rat& z, const Int& p, const Int& q, const Int& r,
                                const Int& s) {
    Rat zp = pow_rat(z, p.convert_to<long long>()), zq = pow_rat(z, q.convert_to<long long>());
    Rat zr = pow_rat(z, r.convert_to<long long>()), zs = pow_rat(z, s.convert_to<long long>());
    return (1 - zp) * (1 - zq) - (1 - zr) * (1 - zs);
}

template <typename F>
struct FloatMargin {
    F left, right;
    F value;
    F envelope; // certified sign iff |value| > envelope
};

// Same margin with real exponents; envelope covers the power/product errors.
template <typename F>
FloatMargin<F> float_product_margin(const Rat& z, const Rat& p, const Rat& q, const Rat& r,
                                    const Rat& s, int guard_bits) {
    F fz = to_float<F>(z);
    F zp = pow(fz, to_float<F>(p)), zq = pow(fz, to_float<F>(q));
    F zr = pow(fz, to_float<F>(r)), zs = pow(fz, to_float<F>(s));
    F left = (1 - zp) * (1 - zq), right = (1 - zr) * (1 - zs);
    F magnitude = (1 + zp + zq + zp * zq) + (1 + zr + zs + zr * zs);
    return FloatMargin<F>{left, right, left - right, ldexp(magnitude, -guard_bits)};
}

inline Rat rat_from_double(double x) { return Rat(x); }

} // namespace detail

// Ordering check for g_{a,b} vs g_{c,d} under the normalization b <= min(c, d).
// Rational parameters allowed; see the header note for the evaluation
// strategy.  The caller interprets the verdict (the ordering is expected to
// hold exactly when ab <= cd).
inline SampledFunctionReport check_ordering_criterion(const Rat& a, const Rat& b, const Rat& c,
                                                      const Rat& d, int grid_size) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw DomainError("ordering check needs positive parameters");
    if (b > c || b > d) throw DomainError("ordering check requires b <= min(c, d)");

    SampledFunctionReport report;
    report.check = "ordering";

    Rat ea = a / d, eb = b / d, ec = c / d;
    bool reduced_exact = den(ea) == 1 && den(eb) == 1 && den(ec) == 1;
    bool raw_exact = den(a) == 1 && den(b) == 1 && den(c) == 1 && den(d) == 1;

    for (const Rat& z : sample_grid_with_tail(grid_size)) {
        SampleRow row;
        row.z = z;
        if (z == 0) {
            // every power with positive exponent vanishes; both sides are 1
            row.left = row.right = Rat(1);
            row.margin = Rat(0);
            row.certified = true;
        } else if (reduced_exact || raw_exact) {
            if (reduced_exact) {
                Rat zc = pow_rat(z, num(ec).convert_to<long long>());
                row.left = (1 - zc) * (1 - z);
                row.margin = detail::exact_product_margin(z, num(ec), Int(1), num(ea), num(eb));
            } else {
                Rat zc = pow_rat(z, num(c).convert_to<long long>());
                Rat zd = pow_rat(z, num(d).convert_to<long long>());
                row.left = (1 - zc) * (1 - zd);
                row.margin = detail::exact_product_margin(z, num(c), num(d), num(a), num(b));
            }
            row.right = row.left - row.margin;
            row.certified = true;
        } else {
            auto m = detail::float_product_margin<Float128>(z, ec, Rat(1), ea, eb, 100);
            row.left = detail::rat_from_double(static_cast<double>(m.left));
            row.right = detail::rat_from_double(static_cast<double>(m.right));
            row.margin = detail::rat_from_double(static_cast<double>(m.value));
            row.certified = abs(m.value) > m.envelope;
            if (row.certified && m.value < 0) {
                auto m2 = detail::float_product_margin<Float256>(z, ec, Rat(1), ea, eb, 220);
                if (!(m2.value < -m2.envelope))
                    throw InternalConsistencyError(
                        "reported ordering violation is not sign-stable at higher precision");
            }
        }
        bool violated = row.certified && row.margin < 0;
        if (violated && report.verdict == GridVerdict::HoldsOnGrid) {
            report.verdict = GridVerdict::ViolatedAt;
            report.witness = z;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Exponent-scaling identity: substituting z = w^lambda into the cleared
// inequality must give literally the same rational values as scaling all
// four parameters by lambda.  Exact arithmetic; any mismatch is a violation.
inline SampledFunctionReport check_scale_invariance(long long a, long long b, long long c,
                                                    long long d, long long lambda,
                                                    int grid_size) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw DomainError("scale invariance check needs positive parameters");
    if (lambda < 1) throw DomainError("scale factor must be a positive integer");

    SampledFunctionReport report;
    report.check = "scale-invariance";
    for (const Rat& w : sample_grid_with_tail(grid_size)) {
        Rat z = pow_rat(w, lambda);
        Rat substituted = detail::exact_product_margin(z, Int(c), Int(d), Int(a), Int(b));
        Rat scaled =
            detail::exact_product_margin(w, Int(lambda * c), Int(lambda * d), Int(lambda * a),
                                         Int(lambda * b));
        SampleRow row;
        row.z = w;
        row.left = substituted;
        row.right = scaled;
        row.margin = substituted - scaled;
        row.certified = true;
        if (row.margin != 0 && report.verdict == GridVerdict::HoldsOnGrid) {
            report.verdict = GridVerdict::ViolatedAt;
            report.witness = w;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Sampled check of derivative domination: for each order k <= max_order and
// grid point z, the series sum_{n>=k} k! C(n,k) (L_n(a,b) - L_n(c,d)) z^{n-k}
// is evaluated as an exact rational partial sum, truncated once a rigorous
// geometric tail bound drops below 10^-9 of the partial sum.  Rows that hit
// the iteration cap before the tail bound resolves are left uncertified.
inline SampledFunctionReport check_derivative_domination(long long a, long long b, long long c,
                                                         long long d, int max_order,
                                                         int grid_size) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw DomainError("derivative check needs positive parameters");
    if (max_order < 0) throw DomainError("derivative order must be nonnegative");

    SampledFunctionReport report;
    report.check = "derivative-domination";

    const bool identical = std::minmax(a, b) == std::minmax(c, d);
    const auto grid = sample_grid_bulk(grid_size);

    // shared count bound: L_n(either pair) <= (n + h)^2 / (2 D)
    const long long ha2 = 2 * std::min(a, b) + std::max(a, b); // 2*h_ab
    const long long hc2 = 2 * std::min(c, d) + std::max(c, d);
    const Rat h = Rat(std::max(ha2, hc2), 2);
    const Int D = std::min(Int(a) * b, Int(c) * d);

    for (int k = 0; k <= max_order; ++k) {
        for (const Rat& z : grid) {
            SampleRow row;
            row.z = z;
            if (identical) {
                row.left = row.right = row.margin = Rat(0);
                row.certified = true;
                report.rows.push_back(std::move(row));
                continue;
            }
            CountStream<long long> sa(a, b), sc(c, d);
            Rat partial = 0, zpow = 1; // zpow = z^(n-k) once n >= k
            Int ff = 1;                // falling factorial n (n-1) ... (n-k+1)
            for (long long i = 1; i < k; ++i) ff *= i + 1; // k! at n = k
            bool certified = false;
            const long long cap = k + 20000;
            for (long long n = 0; n <= cap; ++n) {
                long long va = sa.next(), vc = sc.next();
                if (n < k) continue;
                if (n > k) {
                    ff = ff * n / (n - k);
                    zpow *= z;
                }
                partial += Rat(ff * (va - vc)) * zpow;
                if (n >= k + 8 && (n - k) % 16 == 0) {
                    // ratio bound for the tail terms from n+1 on
                    Rat rho = z * Rat(n + 1, n + 1 - k) * (Rat(n + 1) + h) * (Rat(n + 1) + h) /
                              ((Rat(n) + h) * (Rat(n) + h));
                    if (rho >= 1) continue;
                    Rat term = Rat(ff * (n + 1) / (n + 1 - k)) * (Rat(n + 1) + h) *
                               (Rat(n + 1) + h) / Rat(2 * D) * zpow * z;
                    Rat tail = term / (1 - rho);
                    Rat mag = partial < 0 ? -partial : partial;
                    if (tail == 0 || tail * 1000000000 <= mag) {
                        certified = true;
                        break;
                    }
                }
            }
            row.left = partial;
            row.right = Rat(0);
            row.margin = partial;
            row.certified = certified;
            if (certified && partial < 0 && report.verdict == GridVerdict::HoldsOnGrid) {
                report.verdict = GridVerdict::ViolatedAt;
                report.witness = z;
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace echcap
