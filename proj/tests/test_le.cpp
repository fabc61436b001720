#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "linext/analysis.hpp"
#include "linext/brute_force.hpp"
#include "linext/generator.hpp"
#include "linext/le_count.hpp"
#include "linext/transform.hpp"

using namespace linext;

namespace {

Poset chain(int n) { return Poset::from_permutation(Permutation::identity(n)); }
Poset antichain(int n) { return Poset::from_permutation(Permutation::reversal(n)); }
Poset two_plus_two() { return Poset::from_permutation(Permutation({2, 1, 4, 3})); }

BigCount downset_count_by_scan(const Poset& p) {
    BigCount c = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << p.size()); ++mask)
        if (p.is_downset(VertexSet::from_bits(mask))) ++c;
    return c;
}

} // namespace

TEST_CASE("downset dp on fixed posets") {
    CHECK(count_le_dp(chain(20)).count == 1);
    CHECK(count_le_dp(antichain(10)).count == 3628800);
    CountResult r = count_le_dp(two_plus_two());
    CHECK(r.count == 4);
    CHECK(r.states_visited == 7);
}

TEST_CASE("downset dp agrees with the enumeration oracle") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Poset p = (seed % 2 == 0) ? Poset::from_permutation(generate_permutation(n, seed))
                                  : generate_dag_poset(n, 0.35, seed);
        REQUIRE(count_le_dp(p).count == brute_force_le(p));
    }
}

TEST_CASE("dp memoizes exactly the downsets") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 11);
        Poset p = (seed % 2 == 0) ? Poset::from_permutation(generate_permutation(n, seed))
                                  : generate_dag_poset(n, 0.3, seed);
        REQUIRE(BigCount(count_le_dp(p).states_visited) == downset_count_by_scan(p));
    }
}

TEST_CASE("dp state cap raises ResourceError") {
    CHECK_THROWS_AS(count_le_dp(antichain(12), 100), ResourceError);
}

TEST_CASE("no reachable downset contains an upper endpoint alone") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        Poset p = Poset::from_permutation(generate_permutation(n, seed * 3 + 1));
        Matching m = max_matching_comparability(p);
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            VertexSet y = VertexSet::from_bits(mask);
            if (!p.is_downset(y)) continue;
            for (auto [x, yv] : m.edges)
                REQUIRE_FALSE((y.contains(yv) && !y.contains(x)));
        }
    }
}

TEST_CASE("neighborhood partition on fixed posets") {
    Poset anti = antichain(5);
    NeighborhoodPartition part = partition_by_neighborhood(anti, anti.ground_set());
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0] == anti.ground_set());

    Poset p = two_plus_two();
    VertexSet a = VertexSet::singleton(2).with(3);
    part = partition_by_neighborhood(p, a);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0] == a);

    CHECK_THROWS_AS(partition_by_neighborhood(chain(3), VertexSet::universe(3)),
                    InvariantError);
}

TEST_CASE("class count obeys the two-dimensional bounds") {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        int n = 2 + static_cast<int>(seed % 17);
        Poset p = Poset::from_permutation(generate_permutation(n, seed * 11 + 3));
        Matching m = max_matching_comparability(p);
        VertexSet a = p.ground_set() - m.matched;
        auto part = partition_by_neighborhood(p, a);
        Matching c = canonicalize(p, m);
        auto part_canon = partition_by_neighborhood(p, p.ground_set() - c.matched);
        if (m.size() == 0) {
            REQUIRE(part.classes.size() == 1);  // single antichain, trivial case
        } else {
            REQUIRE(static_cast<int>(part.classes.size()) <= 2 * m.matched.count());
            REQUIRE(static_cast<int>(part_canon.classes.size()) <= c.matched.count());
        }
    }
}

TEST_CASE("virtual poset with singleton classes is the original") {
    Poset p = two_plus_two();
    NeighborhoodPartition part;
    part.classes = {VertexSet::singleton(2), VertexSet::singleton(3)};
    TransformedPoset t = build_virtual_poset(p, VertexSet::singleton(0).with(1), part);
    CHECK(t.poset.relation_count() == p.relation_count());
    CHECK(count_le_dp(t.poset).count == count_le_dp(p).count);
}

TEST_CASE("virtual poset turns one-class antichain into a chain") {
    Poset p = antichain(6);
    auto part = partition_by_neighborhood(p, p.ground_set());
    TransformedPoset t = build_virtual_poset(p, VertexSet::empty_set(), part);
    CHECK(t.poset.relation_count() == 15);
    CHECK(count_le_dp(t.poset).count == 1);
    BigCount product = 1;
    for (int s : t.class_sizes) product *= factorial(s);
    CHECK(product == 720);
}

TEST_CASE("virtual poset on the 2+2 example") {
    Poset p = two_plus_two();
    VertexSet a = VertexSet::singleton(2).with(3);
    auto part = partition_by_neighborhood(p, a);
    TransformedPoset t = build_virtual_poset(p, p.ground_set() - a, part);
    CHECK(count_le_dp(t.poset).count == 2);
    CHECK(t.class_sizes == std::vector<int>{2});
    // 2 * 2! = 4 = LE(P)
    CHECK(count_le_dp(t.poset).count * factorial(2) == brute_force_le(p));
}

TEST_CASE("virtual poset rejects mixed-neighborhood classes") {
    Poset p = Poset::from_permutation(Permutation({2, 4, 1, 3}));
    VertexSet a = VertexSet::singleton(1).with(3);
    REQUIRE(p.is_antichain(a));
    NeighborhoodPartition bad;
    bad.classes = {a};
    CHECK_THROWS_AS(build_virtual_poset(p, p.ground_set() - a, bad), InvariantError);
}

TEST_CASE("factorial identity over the matching complement") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 4 + static_cast<int>(seed % 11);
        Poset p = Poset::from_permutation(generate_permutation(n, seed * 17 + 5));
        Matching m = max_matching_comparability(p);
        VertexSet a = p.ground_set() - m.matched;
        auto part = partition_by_neighborhood(p, a);
        TransformedPoset t = build_virtual_poset(p, m.matched, part);
        BigCount rhs = count_le_dp(t.poset).count;
        for (int s : t.class_sizes) rhs *= factorial(s);
        REQUIRE(count_le_dp(p).count == rhs);
    }
}

TEST_CASE("strategy selection") {
    CHECK(select_strategy(PackingStats{1, 1, 1, 6}) == Route::Original);   // exact tie
    CHECK(select_strategy(PackingStats{2, 2, 0, 10}) == Route::Transformed);
    CHECK(select_strategy(PackingStats{5, 0, 0, 10}) == Route::Original);  // perfect matching
    CHECK_THROWS_AS(select_strategy(PackingStats{1, 2, 0, 8}), InvariantError);
}

TEST_CASE("both accelerated counters match the dp") {
    CHECK(count_le_2d(chain(12)).count == 1);
    CHECK(count_le_2d_star(chain(12)).count == 1);
    CHECK(count_le_2d(two_plus_two()).count == 4);
    CHECK(count_le_2d_star(two_plus_two()).count == 4);
    CHECK(count_le_2d(antichain(9)).count == factorial(9));
    CHECK(count_le_2d_star(antichain(9)).count == factorial(9));
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 16);
        Permutation perm = generate_permutation(n, seed * 7 + 11);
        Poset p = Poset::from_permutation(perm);
        BigCount expect = count_le_dp(p).count;
        REQUIRE(count_le_2d(p).count == expect);
        REQUIRE(count_le_2d_star(p).count == expect);
    }
}

TEST_CASE("degenerate sizes") {
    Poset empty;
    CHECK(count_le_dp(empty).count == 1);
    CHECK(count_le_2d(empty).count == 1);
    CHECK(count_le_2d_star(empty).count == 1);
    Poset one = chain(1);
    CHECK(count_le_2d_star(one).count == 1);
}

TEST_CASE("small connected posets have few downsets") {
    // all transitive irreflexive relations on 3 and 4 labeled elements
    auto max_downsets = [](int n) {
        int pair_count = n * (n - 1);
        std::vector<std::pair<int, int>> all_pairs;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) all_pairs.emplace_back(x, y);
        BigCount best = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << pair_count); ++mask) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < pair_count; ++i)
                if (mask >> i & 1) pairs.push_back(all_pairs[static_cast<std::size_t>(i)]);
            Poset p;
            try {
                p = Poset::from_pairs(n, pairs);
            } catch (const CycleError&) {
                continue;
            }
            if (p.relation_count() != static_cast<int>(pairs.size())) continue;  // not closed
            // connected comparability graph?
            VertexSet seen = VertexSet::singleton(0);
            for (int round = 0; round < n; ++round)
                seen.for_each([&](int v) { seen |= p.neighborhood(v); });
            if (seen != p.ground_set()) continue;
            BigCount d = 0;
            for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub)
                if (p.is_downset(VertexSet::from_bits(sub))) ++d;
            if (d > best) best = d;
        }
        return best;
    };
    CHECK(max_downsets(3) == 5);
    CHECK(max_downsets(4) == 9);
}

TEST_CASE("state counts stay under the selected bound") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 6 + static_cast<int>(seed % 11);
        Permutation perm = generate_permutation(n, seed * 19 + 3);
        CountResult r = count_le_2d_star(Poset::from_permutation(perm));
        auto [expr, base] = selected_bound(r.stats, r.route, r.large_matching);
        double cap = static_cast<double>(n) * std::pow(base, n) * (1.0 + 1e-9) + 1.0;
        REQUIRE(static_cast<double>(r.states_visited) <= cap);
    }
}
