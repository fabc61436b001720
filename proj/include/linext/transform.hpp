#pragma once

#include <map>
#include <utility>
#include <vector>

#include "linext/errors.hpp"
#include "linext/poset.hpp"

namespace linext {

// Partition of an antichain by exact comparability-neighborhood equality.
// Class order is deterministic: ascending by smallest member.
struct NeighborhoodPartition {
    std::vector<VertexSet> classes;

    std::vector<int> class_sizes() const {
        std::vector<int> out;
        out.reserve(classes.size());
        for (VertexSet c : classes) out.push_back(c.count());
        return out;
    }

    VertexSet covered() const {
        VertexSet u;
        for (VertexSet c : classes) u |= c;
        return u;
    }
};

inline NeighborhoodPartition partition_by_neighborhood(const Poset& p, VertexSet a) {
    if (!p.is_antichain(a)) throw InvariantError("partition target is not an antichain");
    std::map<std::uint64_t, VertexSet> by_nbhd;
    a.for_each([&](int x) { by_nbhd[p.neighborhood(x).bits()].add(x); });
    NeighborhoodPartition part;
    for (auto& [key, members] : by_nbhd) part.classes.push_back(members);
    std::sort(part.classes.begin(), part.classes.end(),
              [](VertexSet l, VertexSet r) { return l.lowest() < r.lowest(); });
    return part;
}

// P' on the same-size ground set: carried-over elements keep their mutual
// relations, each partition class becomes a chain of virtual placeholders,
// and a virtual element relates to a carried element exactly as any class
// representative does.
struct TransformedPoset {
    Poset poset;
    std::vector<int> class_sizes;
    // contiguous id range [first, last) of each class's chain, bottom to top
    std::vector<std::pair<int, int>> virtual_ranges;
    // original element of each carried-over id; -1 for virtual elements
    std::vector<int> original_of;
    // new id of each carried-over original element; -1 for replaced elements
    std::vector<int> carried_id;

    int carried_count() const {
        int c = 0;
        for (int o : original_of)
            if (o >= 0) ++c;
        return c;
    }
};

inline TransformedPoset build_virtual_poset(const Poset& p, VertexSet carried,
                                            const NeighborhoodPartition& partition) {
    int n = p.size();
    VertexSet covered = partition.covered();
    if (covered.intersects(carried) || (covered | carried) != p.ground_set())
        throw InvariantError("partition and carried set must split the ground set");
    for (VertexSet cls : partition.classes) {
        if (cls.empty()) throw InvariantError("empty partition class");
        int rep = cls.lowest();
        bool uniform = true;
        cls.for_each([&](int x) {
            if (p.neighborhood(x) != p.neighborhood(rep)) uniform = false;
        });
        if (!uniform) throw InvariantError("class members have differing neighborhoods");
    }

    TransformedPoset t;
    t.original_of.assign(static_cast<std::size_t>(n), -1);
    t.carried_id.assign(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    carried.for_each([&](int x) {
        t.original_of[static_cast<std::size_t>(next_id)] = x;
        t.carried_id[static_cast<std::size_t>(x)] = next_id;
        ++next_id;
    });
    std::vector<int> reps;
    for (VertexSet cls : partition.classes) {
        int size = cls.count();
        t.class_sizes.push_back(size);
        t.virtual_ranges.emplace_back(next_id, next_id + size);
        reps.push_back(cls.lowest());
        next_id += size;
    }

    std::vector<VertexSet> above(static_cast<std::size_t>(n));
    // carried-over pairs keep the original relation
    carried.for_each([&](int x) {
        (p.above(x) & carried).for_each([&](int y) {
            above[static_cast<std::size_t>(t.carried_id[static_cast<std::size_t>(x)])].add(
                t.carried_id[static_cast<std::size_t>(y)]);
        });
    });
    for (std::size_t k = 0; k < t.virtual_ranges.size(); ++k) {
        auto [first, last] = t.virtual_ranges[k];
        int rep = reps[k];
        // class chain
        for (int i = first; i < last; ++i)
            for (int j = i + 1; j < last; ++j) above[static_cast<std::size_t>(i)].add(j);
        // relations to carried elements mirror the representative
        carried.for_each([&](int y) {
            int yid = t.carried_id[static_cast<std::size_t>(y)];
            if (p.less(rep, y))
                for (int i = first; i < last; ++i) above[static_cast<std::size_t>(i)].add(yid);
            if (p.less(y, rep))
                for (int i = first; i < last; ++i) above[static_cast<std::size_t>(yid)].add(i);
        });
    }
    t.poset = Poset::from_closed_relation(n, above);
    return t;
}

} // namespace linext
