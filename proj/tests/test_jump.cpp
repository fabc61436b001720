#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "linext/analysis.hpp"
#include "linext/brute_force.hpp"
#include "linext/generator.hpp"
#include "linext/jump.hpp"

using namespace linext;

namespace {

Poset chain(int n) { return Poset::from_permutation(Permutation::identity(n)); }
Poset antichain(int n) { return Poset::from_permutation(Permutation::reversal(n)); }
Poset two_plus_two() { return Poset::from_permutation(Permutation({2, 1, 4, 3})); }

Poset random_poset(std::uint64_t seed, int n) {
    if (seed % 2 == 0) return Poset::from_permutation(generate_permutation(n, seed));
    double density = 0.15 + 0.25 * static_cast<double>(seed % 4);
    return generate_dag_poset(n, density, seed);
}

} // namespace

TEST_CASE("bump dp on fixed posets") {
    {
        Poset p = chain(6);
        BumpDp dp(p);
        dp.run_root(VertexSet::universe(6));
        CHECK(dp.best_bump() == 5);
    }
    {
        Poset p = antichain(5);
        BumpDp dp(p);
        dp.run_root(VertexSet::universe(5));
        CHECK(dp.best_bump() == 0);
    }
    {
        Poset p = two_plus_two();
        BumpDp dp(p);
        dp.run_root(VertexSet::universe(4));
        CHECK(dp.best_bump() == 1);
    }
}

TEST_CASE("naive jump numbers on fixed posets") {
    CHECK(jump_number_naive(chain(9)).jump_number == 0);
    CHECK(jump_number_naive(antichain(5)).jump_number == 4);
    JumpResult r = jump_number_naive(two_plus_two());
    CHECK(r.jump_number == 2);
    CHECK(r.bump_number == 1);
}

TEST_CASE("naive matches the brute-force oracle") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 9);
        Poset p = random_poset(seed, n);
        JumpResult r = jump_number_naive(p);
        REQUIRE(r.jump_number == brute_force_jump(p));
        REQUIRE(r.jump_number + r.bump_number == n - 1);
        REQUIRE(r.witness.has_value());
        REQUIRE(is_linear_extension(p, *r.witness));
        REQUIRE(jump_count_of(p, *r.witness) == r.jump_number);
    }
}

TEST_CASE("jn equals naive and realizes its witness") {
    CHECK(jump_number_jn(chain(9)).jump_number == 0);
    CHECK(jump_number_jn(antichain(7)).jump_number == 6);
    CHECK(jump_number_jn(two_plus_two()).jump_number == 2);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 16);
        Poset p = random_poset(seed * 5 + 2, n);
        JumpResult jn = jump_number_jn(p);
        JumpResult naive = jump_number_naive(p);
        REQUIRE(jn.jump_number == naive.jump_number);
        REQUIRE(jn.jump_number + jn.bump_number == n - 1);
        REQUIRE(jn.witness.has_value());
        REQUIRE(is_linear_extension(p, *jn.witness));
        REQUIRE(jump_count_of(p, *jn.witness) == jn.jump_number);
    }
}

TEST_CASE("chains bump fully, any relation bumps at least once") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        Poset p = random_poset(seed * 3 + 1, n);
        JumpResult r = jump_number_jn(p);
        REQUIRE(r.jump_number >= 0);
        REQUIRE(r.jump_number <= n - 1);
        if (p.relation_count() > 0) REQUIRE(r.bump_number >= 1);
    }
}

TEST_CASE("restricted search stays within the jump bound") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 8 + static_cast<int>(seed % 9);
        Poset p = random_poset(seed * 7 + 3, n);
        JumpResult r = jump_number_jn(p);
        double alpha = static_cast<double>(r.stats.m) / n;
        double beta = static_cast<double>(r.stats.t) / n;
        double base;
        if (3 * r.stats.m >= n)
            base = detail::large_matching_raw(alpha);
        else if (2 * alpha + 3 * beta <= 1.0)
            base = detail::tau_jn_entropy_raw(alpha, beta);
        else
            base = detail::tau_jn_simple_raw(alpha, beta);
        double cap = std::pow(static_cast<double>(n), 3) * std::pow(base, n) * (1 + 1e-9) + 1.0;
        REQUIRE(static_cast<double>(r.states_visited) <= cap);
    }
}

TEST_CASE("degenerate jump inputs") {
    Poset empty;
    JumpResult r = jump_number_jn(empty);
    CHECK(r.jump_number == 0);
    CHECK(r.witness->empty());
    JumpResult one = jump_number_naive(chain(1));
    CHECK(one.jump_number == 0);
    CHECK(one.bump_number == 0);
    CHECK(*one.witness == std::vector<int>{0});
}
