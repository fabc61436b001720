#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace linext {

// Subset of a ground set {0..n-1}, n <= 64. The universal currency for
// downsets, antichains and matched vertex sets; all operations are O(1)
// word ops.
class VertexSet {
public:
    static constexpr int capacity = 64;

    constexpr VertexSet() : bits_(0) {}

    static constexpr VertexSet empty_set() { return VertexSet(); }
    static constexpr VertexSet singleton(int e) { return VertexSet(word(e)); }
    static constexpr VertexSet universe(int n) {
        return VertexSet(n >= capacity ? ~0ULL : (1ULL << n) - 1);
    }

    constexpr bool contains(int e) const { return bits_ & word(e); }
    constexpr bool operator[](int e) const { return contains(e); }

    constexpr void add(int e) { bits_ |= word(e); }
    constexpr void remove(int e) { bits_ &= ~word(e); }

    constexpr VertexSet with(int e) const { return VertexSet(bits_ | word(e)); }
    constexpr VertexSet without(int e) const { return VertexSet(bits_ & ~word(e)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Lowest element, or -1 if empty.
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t b = bits_;
        while (b) {
            int e = std::countr_zero(b);
            b &= b - 1;
            f(e);
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    static constexpr VertexSet from_bits(std::uint64_t b) { return VertexSet(b); }

private:
    explicit constexpr VertexSet(std::uint64_t b) : bits_(b) {}
    static constexpr std::uint64_t word(int e) { return 1ULL << e; }

    std::uint64_t bits_;
};

} // namespace linext

template <>
struct std::hash<linext::VertexSet> {
    std::size_t operator()(const linext::VertexSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
