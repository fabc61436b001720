#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linext/big_count.hpp"
#include "linext/errors.hpp"
#include "linext/matching.hpp"
#include "linext/poset.hpp"
#include "linext/transform.hpp"

namespace linext {

inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 27;

// Which poset the counting recurrence ultimately runs on.
enum class Route { Original, Transformed };

inline const char* to_string(Route r) {
    return r == Route::Original ? "original" : "transformed";
}

enum class CountAlgorithm { BruteForce, NaiveDp, Le2d, Le2dStar };

inline const char* to_string(CountAlgorithm a) {
    switch (a) {
        case CountAlgorithm::BruteForce: return "brute";
        case CountAlgorithm::NaiveDp: return "naive";
        case CountAlgorithm::Le2d: return "2d";
        case CountAlgorithm::Le2dStar: return "2d-star";
    }
    return "?";
}

struct CountResult {
    BigCount count;
    std::size_t states_visited = 0;  // distinct downsets memoized by the DP
    CountAlgorithm algorithm = CountAlgorithm::NaiveDp;
    PackingStats stats;
    Route route = Route::Original;
    bool large_matching = false;  // alpha >= 1/3 short circuit taken
};

// LE(Y) = sum over x in max(Y) of LE(Y \ {x}), LE(empty) = 1, memoized.
// Only downsets of the poset are reachable.
class DownsetCounter {
public:
    explicit DownsetCounter(const Poset& p, std::size_t max_states = kDefaultMaxStates)
        : p_(p), max_states_(max_states) {}

    BigCount count(VertexSet y) {
        auto it = memo_.find(y);
        if (it != memo_.end()) return it->second;
        BigCount total;
        if (y.empty()) {
            total = 1;
        } else {
            total = 0;
            p_.maxima(y).for_each([&](int x) { total += count(y.without(x)); });
        }
        if (memo_.size() >= max_states_)
            throw ResourceError("memoization cap exceeded; try `estimate` first");
        memo_.emplace(y, total);
        return total;
    }

    std::size_t states() const { return memo_.size(); }

private:
    const Poset& p_;
    std::size_t max_states_;
    std::unordered_map<VertexSet, BigCount> memo_;
};

inline CountResult count_le_dp(const Poset& p, std::size_t max_states = kDefaultMaxStates) {
    DownsetCounter dp(p, max_states);
    CountResult r;
    r.count = dp.count(p.ground_set());
    r.states_visited = dp.states();
    r.algorithm = CountAlgorithm::NaiveDp;
    r.stats.n = p.size();
    return r;
}

// Original route iff 2*gamma >= 1 - 2*alpha - beta - gamma, i.e.
// 2m + t + 3q >= n in exact integers; ties go to the original poset.
inline Route select_strategy(const PackingStats& s) {
    if (s.q > s.t || s.t > s.m) throw InvariantError("inconsistent packing counts");
    return 2 * s.m + s.t + 3 * s.q >= s.n ? Route::Original : Route::Transformed;
}

struct LePacking {
    Matching matching;       // canonical maximum matching
    VertexSet antichain;     // A = X \ W
    std::vector<Triplet> triplets;
    std::vector<Quartet> quartets;
    VertexSet a_prime;       // A' = A minus both rounds of anchors
    PackingStats stats;
};

// Canonical matching plus both packing rounds (LE mode).
inline LePacking le_packing(const Poset& p) {
    LePacking pk;
    pk.matching = canonicalize(p, max_matching_comparability(p));
    pk.antichain = p.ground_set() - pk.matching.matched;
    auto tp = pack_triplets(p, pk.matching, pk.antichain, TripletMode::LE);
    pk.triplets = std::move(tp.triplets);
    VertexSet a_rest = pk.antichain - tp.matched_anchors;
    auto qp = pack_quartets(p, pk.triplets, a_rest);
    pk.quartets = std::move(qp.quartets);
    pk.a_prime = a_rest - qp.matched_anchors;
    pk.stats = PackingStats{pk.matching.size(), static_cast<int>(pk.triplets.size()),
                            static_cast<int>(pk.quartets.size()), p.size()};
    return pk;
}

// Maximum matching; if it covers at least a third of the vertices, run the
// recurrence on P directly, otherwise replace the whole complement antichain
// by neighborhood-class chains and correct by the product of factorials.
inline CountResult count_le_2d(const Poset& p, std::size_t max_states = kDefaultMaxStates) {
    CountResult r;
    r.algorithm = CountAlgorithm::Le2d;
    r.stats.n = p.size();
    Matching m = max_matching_comparability(p);
    r.stats.m = m.size();
    if (3 * m.size() >= p.size()) {
        CountResult dp = count_le_dp(p, max_states);
        r.count = std::move(dp.count);
        r.states_visited = dp.states_visited;
        r.route = Route::Original;
        r.large_matching = true;
        return r;
    }
    VertexSet a = p.ground_set() - m.matched;
    NeighborhoodPartition part = partition_by_neighborhood(p, a);
    TransformedPoset t = build_virtual_poset(p, m.matched, part);
    CountResult dp = count_le_dp(t.poset, max_states);
    r.count = std::move(dp.count);
    for (int size : t.class_sizes) r.count *= factorial(size);
    r.states_visited = dp.states_visited;
    r.route = Route::Transformed;
    return r;
}

// Full pipeline of the starred algorithm: canonical matching, triplet and
// quartet rounds, then either the original poset (case of many quartets) or
// the transformation applied to the leftover antichain A'.
inline CountResult count_le_2d_star(const Poset& p, std::size_t max_states = kDefaultMaxStates) {
    CountResult r;
    r.algorithm = CountAlgorithm::Le2dStar;
    r.stats.n = p.size();
    Matching m = max_matching_comparability(p);
    r.stats.m = m.size();
    if (3 * m.size() >= p.size()) {
        CountResult dp = count_le_dp(p, max_states);
        r.count = std::move(dp.count);
        r.states_visited = dp.states_visited;
        r.route = Route::Original;
        r.large_matching = true;
        return r;
    }
    LePacking pk = le_packing(p);
    r.stats = pk.stats;
    if (select_strategy(pk.stats) == Route::Original) {
        CountResult dp = count_le_dp(p, max_states);
        r.count = std::move(dp.count);
        r.states_visited = dp.states_visited;
        r.route = Route::Original;
        return r;
    }
    NeighborhoodPartition part = partition_by_neighborhood(p, pk.a_prime);
    TransformedPoset t = build_virtual_poset(p, p.ground_set() - pk.a_prime, part);
    CountResult dp = count_le_dp(t.poset, max_states);
    r.count = std::move(dp.count);
    for (int size : t.class_sizes) r.count *= factorial(size);
    r.states_visited = dp.states_visited;
    r.route = Route::Transformed;
    return r;
}

} // namespace linext
