#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "linext/errors.hpp"
#include "linext/poset.hpp"

namespace linext {

// Vertex-disjoint comparability edges, each oriented so the smaller element
// of the order comes first.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // (x_i, y_i) with x_i < y_i in the poset
    VertexSet matched;                       // W, the union of all endpoints

    int size() const { return static_cast<int>(edges.size()); }
};

// Anchor from the unmatched antichain extending a matching edge to a
// connected 3-vertex group.
struct Triplet {
    int anchor;
    std::pair<int, int> edge;

    VertexSet vertices() const {
        return VertexSet::singleton(anchor).with(edge.first).with(edge.second);
    }
};

// Second anchor extending a triplet to a connected 4-vertex group.
struct Quartet {
    int anchor;
    Triplet triplet;

    VertexSet vertices() const { return triplet.vertices().with(anchor); }
};

// Packing counts; alpha = m/n, beta = t/n, gamma = q/n.
struct PackingStats {
    int m = 0;
    int t = 0;
    int q = 0;
    int n = 0;
};

// Maximum cardinality matching in a general graph (Edmonds' blossom
// algorithm, O(n^3)). adjacency is symmetric, irreflexive.
class GeneralMatcher {
public:
    GeneralMatcher(int n, std::function<bool(int, int)> adjacent)
        : n_(n), adj_(static_cast<std::size_t>(n)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && adjacent(u, v)) adj_[static_cast<std::size_t>(u)].push_back(v);
    }

    // mate[v] = matched partner or -1
    std::vector<int> solve() {
        match_.assign(static_cast<std::size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            int u = find_augmenting_path(v);
            if (u != -1) augment(u);
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        int cur = a;
        while (true) {
            cur = base_[static_cast<std::size_t>(cur)];
            seen[static_cast<std::size_t>(cur)] = true;
            if (match_[static_cast<std::size_t>(cur)] == -1) break;
            cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
        }
        cur = b;
        while (true) {
            cur = base_[static_cast<std::size_t>(cur)];
            if (seen[static_cast<std::size_t>(cur)]) return cur;
            cur = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(cur)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(static_cast<std::size_t>(n_), false);
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        std::iota(base_.begin(), base_.end(), 0);
        used_[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    in_blossom_.assign(static_cast<std::size_t>(n_), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    int mt = match_[static_cast<std::size_t>(to)];
                    if (mt == -1) return to;
                    used_[static_cast<std::size_t>(mt)] = true;
                    q.push(mt);
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        int v = u;
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int ppv = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

inline Matching matching_from_mates(const Poset& p, const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < p.size(); ++v) {
        int u = mate[static_cast<std::size_t>(v)];
        if (u > v) {
            m.edges.emplace_back(p.less(v, u) ? std::pair{v, u} : std::pair{u, v});
            m.matched.add(u);
            m.matched.add(v);
        }
    }
    return m;
}

// Maximum matching of the comparability graph C(P).
inline Matching max_matching_comparability(const Poset& p) {
    GeneralMatcher gm(p.size(), [&](int u, int v) { return p.comparable(u, v); });
    return matching_from_mates(p, gm.solve());
}

// Removes separated edges: an edge (x_i, y_i) with some unmatched x
// satisfying x_i < x < y_i is replaced by (x, y_i). Each swap raises the
// rank-sum potential, so at most O(n^2) swaps occur.
inline Matching canonicalize(const Poset& p, Matching m) {
    VertexSet a = p.ground_set() - m.matched;
    if (!p.is_antichain(a))
        throw InvariantError("matching complement is not an antichain; matching not maximum");
    int swap_budget = p.size() * p.size() + p.size() + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [lo, hi] : m.edges) {
            int witness = -1;
            a.for_each([&](int x) {
                if (witness == -1 && p.less(lo, x) && p.less(x, hi)) witness = x;
            });
            if (witness == -1) continue;
            m.matched.remove(lo);
            m.matched.add(witness);
            a.add(lo);
            a.remove(witness);
            lo = witness;
            changed = true;
            if (!p.is_antichain(a))
                throw InvariantError("canonicalization broke the complement antichain");
            if (--swap_budget < 0) throw InvariantError("canonicalization did not terminate");
        }
    }
    return m;
}

inline bool is_separated_edge(const Poset& p, std::pair<int, int> edge, VertexSet a) {
    bool sep = false;
    a.for_each([&](int x) {
        if (p.less(edge.first, x) && p.less(x, edge.second)) sep = true;
    });
    return sep;
}

// Maximum bipartite matching by augmenting paths, lowest-index-first.
// Returns pairs (left, right).
inline std::vector<std::pair<int, int>> bipartite_max_matching(
    int left_size, int right_size, const std::function<bool(int, int)>& adjacent) {
    std::vector<int> match_right(static_cast<std::size_t>(right_size), -1);
    std::vector<bool> visited;
    auto try_augment = [&](auto&& self, int l) -> bool {
        for (int r = 0; r < right_size; ++r) {
            if (visited[static_cast<std::size_t>(r)] || !adjacent(l, r)) continue;
            visited[static_cast<std::size_t>(r)] = true;
            if (match_right[static_cast<std::size_t>(r)] == -1 ||
                self(self, match_right[static_cast<std::size_t>(r)])) {
                match_right[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left_size; ++l) {
        visited.assign(static_cast<std::size_t>(right_size), false);
        try_augment(try_augment, l);
    }
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < right_size; ++r)
        if (match_right[static_cast<std::size_t>(r)] != -1)
            out.emplace_back(match_right[static_cast<std::size_t>(r)], r);
    std::sort(out.begin(), out.end());
    return out;
}

enum class TripletMode {
    LE,  // anchor comparable to either endpoint of the edge
    JN,  // anchor x with x < y_i or x_i < x
};

struct TripletPacking {
    std::vector<Triplet> triplets;
    VertexSet matched_anchors;
};

// Matches antichain vertices to matching edges in the auxiliary bipartite
// graph; matched pairs become triplets.
inline TripletPacking pack_triplets(const Poset& p, const Matching& m, VertexSet a,
                                    TripletMode mode) {
    std::vector<int> left = a.elements();
    auto adjacent = [&](int li, int ri) {
        int x = left[static_cast<std::size_t>(li)];
        auto [xi, yi] = m.edges[static_cast<std::size_t>(ri)];
        if (mode == TripletMode::JN) return p.less(x, yi) || p.less(xi, x);
        return p.comparable(x, xi) || p.comparable(x, yi);
    };
    auto pairs = bipartite_max_matching(static_cast<int>(left.size()), m.size(), adjacent);
    TripletPacking out;
    for (auto [li, ri] : pairs) {
        int x = left[static_cast<std::size_t>(li)];
        out.triplets.push_back(Triplet{x, m.edges[static_cast<std::size_t>(ri)]});
        out.matched_anchors.add(x);
    }
    return out;
}

struct QuartetPacking {
    std::vector<Quartet> quartets;
    VertexSet matched_anchors;
};

// Second matching round: unmatched antichain vertices against triplets.
inline QuartetPacking pack_quartets(const Poset& p, const std::vector<Triplet>& triplets,
                                    VertexSet a_unmatched) {
    std::vector<int> left = a_unmatched.elements();
    auto adjacent = [&](int li, int ri) {
        int x = left[static_cast<std::size_t>(li)];
        bool comp = false;
        triplets[static_cast<std::size_t>(ri)].vertices().for_each([&](int v) {
            if (p.comparable(x, v)) comp = true;
        });
        return comp;
    };
    auto pairs =
        bipartite_max_matching(static_cast<int>(left.size()), static_cast<int>(triplets.size()), adjacent);
    QuartetPacking out;
    for (auto [li, ri] : pairs) {
        int x = left[static_cast<std::size_t>(li)];
        out.quartets.push_back(Quartet{x, triplets[static_cast<std::size_t>(ri)]});
        out.matched_anchors.add(x);
    }
    return out;
}

} // namespace linext
