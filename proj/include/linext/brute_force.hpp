#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "linext/big_count.hpp"
#include "linext/errors.hpp"
#include "linext/poset.hpp"

namespace linext {

inline constexpr int kBruteForceLimit = 10;

inline bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
    VertexSet seen;
    for (int x : order) {
        if (!p.below(x).is_subset_of(seen)) return false;
        seen.add(x);
    }
    return true;
}

inline int jump_count_of(const Poset& p, const std::vector<int>& order) {
    int jumps = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!p.less(order[i], order[i + 1])) ++jumps;
    return jumps;
}

// Enumerates all n! orders and counts the valid ones. Reference oracle,
// independent of the dynamic-programming path.
inline BigCount brute_force_le(const Poset& p) {
    int n = p.size();
    if (n > kBruteForceLimit) throw SizeError("brute force limited to n <= 10");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    BigCount count = 0;
    do {
        if (is_linear_extension(p, order)) ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

// Minimum number of adjacent incomparable pairs over all linear extensions.
inline int brute_force_jump(const Poset& p) {
    int n = p.size();
    if (n > kBruteForceLimit) throw SizeError("brute force limited to n <= 10");
    if (n == 0) return 0;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n;  // any extension has at most n-1 jumps
    do {
        if (!is_linear_extension(p, order)) continue;
        best = std::min(best, jump_count_of(p, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Visits every linear extension of a small poset.
template <typename F>
void for_each_linear_extension(const Poset& p, F&& f) {
    int n = p.size();
    if (n > kBruteForceLimit) throw SizeError("brute force limited to n <= 10");
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    auto recurse = [&](auto&& self, VertexSet remaining) -> void {
        if (remaining.empty()) {
            f(const_cast<const std::vector<int>&>(prefix));
            return;
        }
        p.minima(remaining).for_each([&](int x) {
            prefix.push_back(x);
            self(self, remaining.without(x));
            prefix.pop_back();
        });
    };
    recurse(recurse, p.ground_set());
}

} // namespace linext
