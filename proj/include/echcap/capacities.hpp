#pragma once

// The ECH capacity sequence N(a,b): the nondecreasing enumeration, with
// multiplicity, of S(a,b) = {k*a + l*b : k,l >= 0}.  Generation merges the
// arithmetic streams (l fixed, k = 0,1,2,...) through an exact-rational
// min-heap; a stream enters the heap lazily when its first element can be
// reached, so the heap never holds more than one node per live stream.

#include <cstddef>
#include <queue>
#include <vector>

#include "counting.hpp"
#include "ellipsoid.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace echcap {

class CapacitySequence {
public:
    explicit CapacitySequence(Ellipsoid e) : src_(std::move(e)) {
        heap_.push(Node{Rat(0), 0, 0});
    }

    const Ellipsoid& source() const { return src_; }
    std::size_t materialized() const { return vals_.size(); }
    const std::vector<Rat>& prefix() const { return vals_; }

    // Entry j (0-based), extending lazily.  Single-writer: concurrent
    // extension is not synchronized; reads of already materialized entries
    // through prefix() are safe once no further extension happens.
    const Rat& at(std::size_t j) {
        ensure_count(j + 1);
        return vals_[j];
    }

    void ensure_count(std::size_t count) {
        while (vals_.size() < count) step();
    }

    // Materialize every entry <= bound (the next entry, if any, exceeds it).
    void ensure_values_through(const Rat& bound) {
        while (heap_.top().value <= bound) step();
    }

private:
    struct Node {
        Rat value;
        long long k, l; // value == k*a + l*b
        bool operator>(const Node& o) const { return value > o.value; }
    };

    void step() {
        Node n = heap_.top();
        heap_.pop();
        vals_.push_back(n.value);
        heap_.push(Node{n.value + src_.a, n.k + 1, n.l});
        if (n.k == 0) heap_.push(Node{n.value + src_.b, 0, n.l + 1});
    }

    Ellipsoid src_;
    std::vector<Rat> vals_;
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap_;
};

inline std::vector<Rat> gen_capacities(const Ellipsoid& e, std::size_t count) {
    CapacitySequence seq(e);
    seq.ensure_count(count);
    return std::vector<Rat>(seq.prefix().begin(), seq.prefix().begin() + count);
}

// L_n(e) for n = 0..up_to, counted as multiset elements of S(a,b) that are
// <= n.  Works for rational axes; for integer axes it agrees with
// count_lattice_oracle (a comparison the tests pin down).
inline CountSequence counts_from_capacities(const Ellipsoid& e, long long up_to) {
    if (up_to < 0) throw DomainError("counts_from_capacities: up_to must be >= 0");
    CapacitySequence seq(e);
    seq.ensure_values_through(Rat(up_to));
    const std::vector<Rat>& v = seq.prefix();
    CountSequence out{e, {}};
    out.values.reserve(static_cast<std::size_t>(up_to) + 1);
    std::size_t idx = 0;
    for (long long n = 0; n <= up_to; ++n) {
        while (idx < v.size() && v[idx] <= n) ++idx;
        out.values.push_back(Int(idx));
    }
    return out;
}

} // namespace echcap
