#pragma once

// The seven-term recurrence satisfied by the lattice counts L_n(a,b),
// obtained by clearing the denominator (1-z)(1-z^a)(1-z^b):
//
//   L_n = L_{n-1} + L_{n-a} + L_{n-b} + L_{n-a-b-1}
//         - L_{n-a-1} - L_{n-b-1} - L_{n-a-b},     L_0 = 1, L_{n<0} = 0.
//
// The terms are kept verbatim (not merged) so coinciding shifts, e.g. a = 1
// or a = b, contribute with the right multiplicity automatically.
// CountStream evaluates it through a ring buffer of a+b+2 entries, which is
// what lets the decision procedure walk prefixes of tens of millions of
// terms in O(a+b) memory.

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

// Streams L_0, L_1, L_2, ... one value per next() call.  I is the integer
// type: long long when the caller has proven the values fit (fast path),
// Int otherwise.
template <typename I>
class CountStream {
public:
    CountStream(long long a, long long b) : a_(a), b_(b), w_(a + b + 2) {
        if (a <= 0 || b <= 0) throw DomainError("CountStream: axes must be positive");
        buf_.assign(static_cast<std::size_t>(w_), I(0));
    }

    I next() {
        long long n = n_++;
        I v;
        if (n == 0) {
            v = I(1);
        } else {
            v = get(n - 1) + get(n - a_) + get(n - b_) + get(n - a_ - b_ - 1) -
                get(n - a_ - 1) - get(n - b_ - 1) - get(n - a_ - b_);
        }
        buf_[idx(n)] = v;
        return v;
    }

    long long position() const { return n_; } // index of the next value

private:
    I get(long long m) const { return m < 0 ? I(0) : buf_[idx(m)]; }
    std::size_t idx(long long m) const { return static_cast<std::size_t>(m % w_); }

    long long a_, b_, w_;
    long long n_ = 0;
    std::vector<I> buf_;
};

inline std::vector<Int> seven_term_recurrence(long long a, long long b, std::size_t count) {
    CountStream<Int> s(a, b);
    std::vector<Int> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
    return out;
}

} // namespace echcap
