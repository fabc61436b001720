#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "linext/errors.hpp"
#include "linext/vertex_set.hpp"

namespace linext {

// A permutation of 1..n, encoding a two-dimensional poset via its two
// realizers: position order and value order.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : values_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw InvariantError("permutation is not a bijection on 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(v));
    }

    static Permutation reversal(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }
    int value(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    // Dual construction: reversing one realizer exchanges chains and
    // antichains. (A literal swap of the two coordinates would preserve
    // the domination order instead.)
    Permutation reversed() const {
        std::vector<int> v(values_.rbegin(), values_.rend());
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

// Strict, transitively closed order relation on {0..n-1}, stored as
// per-element successor/predecessor sets. Immutable after construction.
class Poset {
public:
    Poset() : n_(0) {}

    int size() const { return n_; }
    VertexSet ground_set() const { return VertexSet::universe(n_); }

    VertexSet above(int x) const { return above_[static_cast<std::size_t>(x)]; }
    VertexSet below(int x) const { return below_[static_cast<std::size_t>(x)]; }

    bool less(int x, int y) const { return above(x).contains(y); }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

    // Open neighborhood of x in the comparability graph.
    VertexSet neighborhood(int x) const { return above(x) | below(x); }

    // {x in Y : above(x) disjoint from Y}
    VertexSet maxima(VertexSet y) const {
        VertexSet out;
        y.for_each([&](int x) {
            if (!above(x).intersects(y)) out.add(x);
        });
        return out;
    }

    VertexSet minima(VertexSet y) const {
        VertexSet out;
        y.for_each([&](int x) {
            if (!below(x).intersects(y)) out.add(x);
        });
        return out;
    }

    bool is_downset(VertexSet y) const {
        bool ok = true;
        y.for_each([&](int x) {
            if (!below(x).is_subset_of(y)) ok = false;
        });
        return ok;
    }

    bool is_antichain(VertexSet y) const {
        bool ok = true;
        y.for_each([&](int x) {
            if (neighborhood(x).intersects(y)) ok = false;
        });
        return ok;
    }

    int relation_count() const {
        int c = 0;
        for (int x = 0; x < n_; ++x) c += above(x).count();
        return c;
    }

    std::vector<std::pair<int, int>> relation_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            above(x).for_each([&](int y) { out.emplace_back(x, y); });
        return out;
    }

    bool operator==(const Poset&) const = default;

    // Transitive closure of arbitrary input pairs; rejects cycles.
    static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        Poset p = make_empty(n);
        for (auto [x, y] : pairs) {
            if (x < 0 || x >= n || y < 0 || y >= n)
                throw IndexError("relation element out of range");
            p.above_[static_cast<std::size_t>(x)].add(y);
        }
        // Warshall pass over successor bitsets
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (p.above_[static_cast<std::size_t>(i)].contains(k))
                    p.above_[static_cast<std::size_t>(i)] |= p.above_[static_cast<std::size_t>(k)];
        for (int x = 0; x < n; ++x)
            if (p.above_[static_cast<std::size_t>(x)].contains(x))
                throw CycleError("relation contains a directed cycle");
        p.fill_below();
        return p;
    }

    // Point-domination order of (index, value): i < j and values[i] < values[j].
    static Poset from_permutation(const Permutation& perm) {
        int n = perm.size();
        Poset p = make_empty(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm.value(i) < perm.value(j)) p.above_[static_cast<std::size_t>(i)].add(j);
        p.fill_below();
        return p;
    }

    // Already transitively closed relation; closure is still verified.
    static Poset from_closed_relation(int n, const std::vector<VertexSet>& above) {
        Poset p;
        p.n_ = n;
        p.above_ = above;
        for (int x = 0; x < n; ++x) {
            if (p.above(x).contains(x)) throw CycleError("reflexive pair");
            bool closed = true;
            p.above(x).for_each([&](int y) {
                if (!p.above(y).is_subset_of(p.above(x))) closed = false;
            });
            if (!closed) throw InvariantError("relation is not transitively closed");
        }
        p.fill_below();
        return p;
    }

private:
    static Poset make_empty(int n) {
        if (n < 0 || n > VertexSet::capacity)
            throw SizeError("ground set exceeds bitset capacity");
        Poset p;
        p.n_ = n;
        p.above_.assign(static_cast<std::size_t>(n), VertexSet());
        p.below_.assign(static_cast<std::size_t>(n), VertexSet());
        return p;
    }

    void fill_below() {
        below_.assign(static_cast<std::size_t>(n_), VertexSet());
        for (int x = 0; x < n_; ++x)
            above(x).for_each([&](int y) { below_[static_cast<std::size_t>(y)].add(x); });
    }

    int n_;
    std::vector<VertexSet> above_;
    std::vector<VertexSet> below_;
};

} // namespace linext
