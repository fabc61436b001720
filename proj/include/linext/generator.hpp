#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linext/errors.hpp"
#include "linext/poset.hpp"

namespace linext {

// SplitMix64. Fixed constants so instances reproduce byte-for-byte across
// platforms and reimplementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Fisher-Yates over 1..n.
inline Permutation generate_permutation(int n, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("n must be at least 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        auto j = rng.next_below(static_cast<std::uint64_t>(i) + 1);
        std::swap(v[static_cast<std::size_t>(i)], v[j]);
    }
    return Permutation(std::move(v));
}

// Forward edges i -> j (i < j) kept with probability density, then closed.
inline std::vector<std::pair<int, int>> generate_dag_pairs(int n, double density,
                                                           std::uint64_t seed) {
    if (n < 1) throw ArgumentError("n must be at least 1");
    if (density < 0.0 || density > 1.0) throw ArgumentError("density must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < density) pairs.emplace_back(i, j);
    return pairs;
}

inline Poset generate_dag_poset(int n, double density, std::uint64_t seed) {
    return Poset::from_pairs(n, generate_dag_pairs(n, density, seed));
}

} // namespace linext
