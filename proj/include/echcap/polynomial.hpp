#pragma once

// Sparse integer polynomials in one variable.  Only what the series engine
// needs: construction from monomials, ring operations, coefficient lookup.
// Invariant: the map never stores a zero coefficient and exponents are >= 0.

#include <map>

#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial constant(Int c) {
        IntPolynomial p;
        p.set(0, std::move(c));
        return p;
    }

    // 1 - z^k, the building block of every denominator in this library.
    static IntPolynomial one_minus_pow(long long k) {
        if (k <= 0) throw DomainError("one_minus_pow: exponent must be positive");
        IntPolynomial p;
        p.set(0, 1);
        p.set(k, -1);
        return p;
    }

    void set(long long exp, Int c) {
        if (exp < 0) throw DomainError("polynomial exponent must be >= 0");
        if (c == 0)
            coef_.erase(exp);
        else
            coef_[exp] = std::move(c);
    }

    Int coefficient(long long exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Int(0) : it->second;
    }

    bool is_zero() const { return coef_.empty(); }
    long long degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }
    const std::map<long long, Int>& terms() const { return coef_; }

    IntPolynomial operator*(const IntPolynomial& o) const {
        IntPolynomial r;
        for (const auto& [ea, ca] : coef_)
            for (const auto& [eb, cb] : o.coef_) {
                auto it = r.coef_.find(ea + eb);
                if (it == r.coef_.end())
                    r.coef_.emplace(ea + eb, ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second == 0) r.coef_.erase(it);
                }
            }
        return r;
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        IntPolynomial r = *this;
        for (const auto& [e, c] : o.coef_) {
            auto it = r.coef_.find(e);
            if (it == r.coef_.end())
                r.coef_.emplace(e, -c);
            else {
                it->second -= c;
                if (it->second == 0) r.coef_.erase(it);
            }
        }
        return r;
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        IntPolynomial r = *this;
        for (const auto& [e, c] : o.coef_) {
            auto it = r.coef_.find(e);
            if (it == r.coef_.end())
                r.coef_.emplace(e, c);
            else {
                it->second += c;
                if (it->second == 0) r.coef_.erase(it);
            }
        }
        return r;
    }

    bool operator==(const IntPolynomial& o) const { return coef_ == o.coef_; }

    // Exact evaluation at a rational point.
    Rat eval(const Rat& z) const {
        Rat acc = 0;
        for (const auto& [e, c] : coef_)
            acc += Rat(c) * pow_rat(z, static_cast<unsigned long>(e));
        return acc;
    }

private:
    std::map<long long, Int> coef_;
};

} // namespace echcap
