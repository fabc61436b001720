#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linext/brute_force.hpp"
#include "linext/errors.hpp"
#include "linext/le_count.hpp"
#include "linext/matching.hpp"
#include "linext/poset.hpp"

namespace linext {

enum class JumpAlgorithm { BruteForce, NaiveDp, Jn };

inline const char* to_string(JumpAlgorithm a) {
    switch (a) {
        case JumpAlgorithm::BruteForce: return "brute";
        case JumpAlgorithm::NaiveDp: return "naive";
        case JumpAlgorithm::Jn: return "jn";
    }
    return "?";
}

struct JumpResult {
    int jump_number = 0;
    int bump_number = 0;
    std::optional<std::vector<int>> witness;
    std::size_t states_visited = 0;
    JumpAlgorithm algorithm = JumpAlgorithm::NaiveDp;
    PackingStats stats;
};

// Memoized evaluation of the bump recurrence
//   bump(Y, x) = max over y in max(Y \ {x}) of bump(Y \ {x}, y) + [y < x]
// over the downward closures of the given root sets; bump values are
// intrinsic to Y, so roots share one table. Ties in the argmax go to the
// smaller element.
class BumpDp {
public:
    struct Entry {
        int last;
        int bump;
        int parent;  // chosen predecessor element, -1 at singletons
    };

    explicit BumpDp(const Poset& p, std::size_t max_states = kDefaultMaxStates)
        : p_(p), max_states_(max_states) {}

    void run_root(VertexSet root) {
        if (root.empty()) return;
        const std::vector<Entry>& entries = states_of(root);
        for (const Entry& e : entries) {
            if (e.bump > best_bump_) {
                best_bump_ = e.bump;
                best_root_ = root;
                best_last_ = e.last;
            }
        }
    }

    int best_bump() const { return best_bump_ < 0 ? 0 : best_bump_; }
    std::size_t states() const { return memo_.size(); }

    // Backtracks the recorded argmax choices from the best root, producing
    // an order on that root realizing best_bump().
    std::vector<int> backtrack_best() const {
        std::vector<int> rev;
        VertexSet y = best_root_;
        int x = best_last_;
        while (!y.empty()) {
            rev.push_back(x);
            const std::vector<Entry>* entries = find(y);
            if (entries == nullptr) throw InvariantError("bump table missing a state");
            const Entry* e = nullptr;
            for (const Entry& cand : *entries)
                if (cand.last == x) e = &cand;
            if (e == nullptr) throw InvariantError("bump table missing a last element");
            y = y.without(x);
            x = e->parent;
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    }

    VertexSet best_root() const { return best_root_; }

private:
    const std::vector<Entry>* find(VertexSet y) const {
        auto it = memo_.find(y);
        return it == memo_.end() ? nullptr : &it->second;
    }

    const std::vector<Entry>& states_of(VertexSet y) {
        auto it = memo_.find(y);
        if (it != memo_.end()) return it->second;
        std::vector<Entry> entries;
        p_.maxima(y).for_each([&](int x) {
            VertexSet rest = y.without(x);
            if (rest.empty()) {
                entries.push_back(Entry{x, 0, -1});
                return;
            }
            const std::vector<Entry>& sub = states_of(rest);
            int best = -1, parent = -1;
            for (const Entry& e : sub) {
                int value = e.bump + (p_.less(e.last, x) ? 1 : 0);
                if (value > best) {
                    best = value;
                    parent = e.last;
                }
            }
            entries.push_back(Entry{x, best, parent});
        });
        if (memo_.size() >= max_states_)
            throw ResourceError("memoization cap exceeded; try `estimate` first");
        return memo_.emplace(y, std::move(entries)).first->second;
    }

    const Poset& p_;
    std::size_t max_states_;
    std::unordered_map<VertexSet, std::vector<Entry>> memo_;
    int best_bump_ = -1;
    int best_last_ = -1;
    VertexSet best_root_;
};

// Extends an order on a subset to a full linear extension without breaking
// any recorded bump: each missing element goes into its valid window at a
// position that does not split a comparable pair.
inline std::vector<int> insert_remaining(const Poset& p, std::vector<int> order,
                                         VertexSet missing) {
    missing.for_each([&](int u) {
        int lo = 0, hi = static_cast<int>(order.size());
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            if (p.less(order[static_cast<std::size_t>(i)], u)) lo = i + 1;
            if (hi == static_cast<int>(order.size()) && p.less(u, order[static_cast<std::size_t>(i)]))
                hi = i;
        }
        int pos = -1;
        for (int c = lo; c <= hi; ++c) {
            bool splits_bump = c > 0 && c < static_cast<int>(order.size()) &&
                               p.less(order[static_cast<std::size_t>(c - 1)],
                                      order[static_cast<std::size_t>(c)]);
            if (!splits_bump) {
                pos = c;
                break;
            }
        }
        if (pos == -1) throw InvariantError("cannot place element without breaking a bump");
        order.insert(order.begin() + pos, u);
    });
    return order;
}

// Witness order for a completed bump computation; elements outside the best
// root are inserted greedily.
inline std::vector<int> reconstruct_extension(const Poset& p, const BumpDp& table) {
    std::vector<int> order = table.backtrack_best();
    VertexSet placed;
    for (int x : order) placed.add(x);
    order = insert_remaining(p, std::move(order), p.ground_set() - placed);
    if (!is_linear_extension(p, order))
        throw InvariantError("reconstructed order is not a linear extension");
    if (jump_count_of(p, order) != p.size() - 1 - table.best_bump())
        throw InvariantError("reconstructed order does not realize the bump value");
    return order;
}

inline JumpResult jump_number_naive(const Poset& p,
                                    std::size_t max_states = kDefaultMaxStates) {
    JumpResult r;
    r.algorithm = JumpAlgorithm::NaiveDp;
    r.stats.n = p.size();
    if (p.size() == 0) {
        r.witness = std::vector<int>{};
        return r;
    }
    BumpDp dp(p, max_states);
    dp.run_root(p.ground_set());
    r.bump_number = dp.best_bump();
    r.jump_number = p.size() - 1 - r.bump_number;
    r.states_visited = dp.states();
    r.witness = reconstruct_extension(p, dp);
    return r;
}

struct JnPacking {
    Matching matching;
    VertexSet antichain;       // A
    std::vector<Triplet> triplets;
    VertexSet anchors;         // triplet anchors, A \ A'
    VertexSet a_prime;         // A'
    PackingStats stats;        // q stays 0: no quartet round here
};

inline JnPacking jn_packing(const Poset& p) {
    JnPacking pk;
    pk.matching = canonicalize(p, max_matching_comparability(p));
    pk.antichain = p.ground_set() - pk.matching.matched;
    auto tp = pack_triplets(p, pk.matching, pk.antichain, TripletMode::JN);
    pk.triplets = std::move(tp.triplets);
    pk.anchors = tp.matched_anchors;
    pk.a_prime = pk.antichain - pk.anchors;
    pk.stats = PackingStats{pk.matching.size(), static_cast<int>(pk.triplets.size()), 0, p.size()};
    return pk;
}

// Restricted bump search: an optimal chain decomposition uses at most |T|
// vertices of A', so it suffices to search the downward closures of
// W + anchors + every |T|-subset of A'. One shared table serves all roots.
inline JumpResult jump_number_jn(const Poset& p, std::size_t max_states = kDefaultMaxStates) {
    JumpResult r;
    r.algorithm = JumpAlgorithm::Jn;
    r.stats.n = p.size();
    if (p.size() == 0) {
        r.witness = std::vector<int>{};
        return r;
    }
    JnPacking pk = jn_packing(p);
    r.stats = pk.stats;
    VertexSet base = pk.matching.matched | pk.anchors;
    std::vector<int> candidates = pk.a_prime.elements();
    int k = std::min(static_cast<int>(pk.triplets.size()), static_cast<int>(candidates.size()));

    BumpDp dp(p, max_states);
    // all k-subsets of A', lexicographic
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet root = base;
        for (int i : idx) root.add(candidates[static_cast<std::size_t>(i)]);
        dp.run_root(root);
        int pos = k - 1;
        while (pos >= 0 &&
               idx[static_cast<std::size_t>(pos)] == static_cast<int>(candidates.size()) - k + pos)
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }

    r.bump_number = dp.best_bump();
    r.jump_number = p.size() - 1 - r.bump_number;
    r.states_visited = dp.states();
    r.witness = reconstruct_extension(p, dp);
    return r;
}

} // namespace linext
