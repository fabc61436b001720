#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "linext/big_count.hpp"
#include "linext/bounds.hpp"
#include "linext/errors.hpp"
#include "linext/le_count.hpp"
#include "linext/poset.hpp"
#include "linext/transform.hpp"

namespace linext {

// Antichains of the permutation poset are exactly the decreasing
// subsequences of the value sequence; downsets are in bijection with
// antichains. O(n^2), exact.
inline BigCount count_antichains_2d(const Permutation& perm) {
    int n = perm.size();
    // starting_at[i] = number of decreasing subsequences beginning at i
    std::vector<BigCount> starting_at(static_cast<std::size_t>(n));
    BigCount total = 1;  // the empty antichain
    for (int i = n - 1; i >= 0; --i) {
        BigCount c = 1;
        for (int j = i + 1; j < n; ++j)
            if (perm.value(j) < perm.value(i)) c += starting_at[static_cast<std::size_t>(j)];
        starting_at[static_cast<std::size_t>(i)] = c;
        total += c;
    }
    return total;
}

// Exact rational coordinate; denominators stay below 4(n+1), so cross
// multiplication fits comfortably in 64 bits.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    explicit Rational(std::int64_t n) : num(n), den(1) {}

    Rational operator+(Rational o) const { return {num * o.den + o.num * den, den * o.den}; }
    bool operator<(Rational o) const { return num * o.den < o.num * den; }
    bool operator==(const Rational&) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Two-dimensional realization of a transformed poset: carried-over elements
// keep their integer (index, value) point, each class chain sits on the main
// diagonal of a 0.5 x 0.5 box around one class representative.
struct Embedding2D {
    TransformedPoset transformed;
    std::vector<std::pair<Rational, Rational>> points;  // indexed by transformed ids

    // Rank sequence of the points sorted by first coordinate; its
    // permutation poset is isomorphic to the transformed poset.
    Permutation to_permutation() const {
        int n = static_cast<int>(points.size());
        std::vector<int> by_x(static_cast<std::size_t>(n));
        std::iota(by_x.begin(), by_x.end(), 0);
        std::sort(by_x.begin(), by_x.end(), [&](int l, int r) {
            return points[static_cast<std::size_t>(l)].first < points[static_cast<std::size_t>(r)].first;
        });
        std::vector<int> by_y(static_cast<std::size_t>(n));
        std::iota(by_y.begin(), by_y.end(), 0);
        std::sort(by_y.begin(), by_y.end(), [&](int l, int r) {
            return points[static_cast<std::size_t>(l)].second < points[static_cast<std::size_t>(r)].second;
        });
        std::vector<int> rank(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(by_y[static_cast<std::size_t>(r)])] = r + 1;
        std::vector<int> values;
        values.reserve(static_cast<std::size_t>(n));
        for (int id : by_x) values.push_back(rank[static_cast<std::size_t>(id)]);
        return Permutation(std::move(values));
    }
};

inline Embedding2D embed_transformed(const Permutation& perm,
                                     const NeighborhoodPartition& partition) {
    Poset p = Poset::from_permutation(perm);
    VertexSet carried = p.ground_set() - partition.covered();
    Embedding2D emb;
    emb.transformed = build_virtual_poset(p, carried, partition);
    const TransformedPoset& t = emb.transformed;
    int n = p.size();
    emb.points.assign(static_cast<std::size_t>(n), {});
    for (int id = 0; id < n; ++id) {
        int orig = t.original_of[static_cast<std::size_t>(id)];
        if (orig >= 0)
            emb.points[static_cast<std::size_t>(id)] = {Rational(orig + 1),
                                                        Rational(perm.value(orig))};
    }
    for (std::size_t k = 0; k < t.virtual_ranges.size(); ++k) {
        auto [first, last] = t.virtual_ranges[k];
        int rep = partition.classes[k].lowest();
        std::int64_t a = last - first;
        for (int j = 0; j < a; ++j) {
            // offset in (-1/4, +1/4), strictly increasing along the diagonal
            Rational off = Rational(-1, 4) + Rational(j + 1, 2 * (a + 1));
            emb.points[static_cast<std::size_t>(first + j)] = {Rational(rep + 1) + off,
                                                               Rational(perm.value(rep)) + off};
        }
    }
    // all-pairs check: point domination must equal the transformed relation
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool dom = emb.points[static_cast<std::size_t>(i)].first <
                           emb.points[static_cast<std::size_t>(j)].first &&
                       emb.points[static_cast<std::size_t>(i)].second <
                           emb.points[static_cast<std::size_t>(j)].second;
            if (dom != t.poset.less(i, j))
                throw InvariantError("embedding does not realize the transformed order");
        }
    return emb;
}

// Bound expression matching the route a counting run took, evaluated at the
// measured fractions.
inline std::pair<BoundExpr, double> selected_bound(const PackingStats& s, Route route,
                                                   bool large_matching) {
    double n = static_cast<double>(s.n);
    double a = n > 0 ? s.m / n : 0.0;
    double b = n > 0 ? s.t / n : 0.0;
    double g = n > 0 ? s.q / n : 0.0;
    if (large_matching)
        return {BoundExpr::LargeMatching, detail::large_matching_raw(a)};
    if (route == Route::Original) return {BoundExpr::PiLe, detail::pi_le_raw(a, b, g)};
    if (s.q == 0) return {BoundExpr::GammaZero, detail::gamma_zero_raw(a, b)};
    return {BoundExpr::TauLe, detail::tau_le_raw(a, b, g)};
}

struct ResourceEstimate {
    int n = 0;
    PackingStats stats;
    Route route = Route::Original;       // what the starred algorithm would do
    bool large_matching = false;
    BigCount downsets_original;          // downsets of P
    BigCount downsets_transformed;       // downsets of the P' built from A'
    double tau = 1.0;                    // tau at the measured fractions
    double pi = 1.0;                     // pi at the measured fractions
    BoundExpr selected = BoundExpr::PiLe;
    double selected_value = 1.0;
};

// Instance-specific cost estimate: exact downset counts of P and of the P'
// that the starred algorithm would build, via the polynomial antichain count
// (the transformed poset is two-dimensional again by the box embedding).
inline ResourceEstimate estimate_resources(const Permutation& perm) {
    ResourceEstimate est;
    est.n = perm.size();
    est.downsets_original = count_antichains_2d(perm);
    if (est.n == 0) {
        est.downsets_transformed = est.downsets_original;
        return est;
    }
    Poset p = Poset::from_permutation(perm);
    LePacking pk = le_packing(p);
    est.stats = pk.stats;
    est.large_matching = 3 * pk.stats.m >= est.n;
    est.route = est.large_matching ? Route::Original : select_strategy(pk.stats);

    NeighborhoodPartition part = partition_by_neighborhood(p, pk.a_prime);
    Embedding2D emb = embed_transformed(perm, part);
    est.downsets_transformed = count_antichains_2d(emb.to_permutation());

    double n = static_cast<double>(est.n);
    double a = pk.stats.m / n, b = pk.stats.t / n, g = pk.stats.q / n;
    est.tau = detail::tau_le_raw(a, b, g);
    est.pi = detail::pi_le_raw(a, b, g);
    std::tie(est.selected, est.selected_value) =
        selected_bound(est.stats, est.route, est.large_matching);
    return est;
}

} // namespace linext
