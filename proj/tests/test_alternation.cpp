#include "oracles.hpp"

#include <kneser/alternation.hpp>
#include <kneser/coloring.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>

#include <doctest.h>

#include <random>

using namespace kneser;

namespace
{
    auto identity(int n)
    {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1);
        return sigma;
    }

    auto random_hypergraph(std::mt19937 & rng, int n, int max_edges) -> Hypergraph
    {
        std::set<Mask> edges;
        int count = std::min<int>(1 + static_cast<int>(rng() % max_edges), (1 << n) - 1);
        while (static_cast<int>(edges.size()) < count) {
            Mask e = rng() % (Mask{1} << n);
            if (e != 0)
                edges.insert(e);
        }
        return Hypergraph(n, std::vector<Mask>(edges.begin(), edges.end()));
    }
}

TEST_CASE("alt_sigma and salt_sigma examples")
{
    for (int n = 1; n <= 6; ++n) {
        Hypergraph edgeless(n, {});
        CHECK(alt_sigma(edgeless, identity(n)) == n);
        CHECK(salt_sigma(edgeless, identity(n)) == n);
    }
    auto complete = complete_uniform_hypergraph(4, 2);
    std::vector<int> sigma{1, 2, 3, 4};
    do {
        CHECK(alt_sigma(complete, sigma) == 2);
        CHECK(salt_sigma(complete, sigma) == 3);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    auto stable = stable_hypergraph(6, 2, 2);
    CHECK(alt_sigma(stable, identity(6)) == 3);
    CHECK(alt_sigma(stable, identity(6)) == oracle::alt_sigma(stable, identity(6), false));
    CHECK(salt_sigma(stable, identity(6)) == 3);
}

TEST_CASE("alternation under a bijection matches brute force and its witness")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto h = random_hypergraph(rng, n, 6);
        auto sigma = identity(n);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        for (auto mode : {AlternationMode::alt, AlternationMode::salt}) {
            auto w = alternation_under(h, sigma, mode);
            CHECK(w.value == oracle::alt_sigma(h, sigma, mode == AlternationMode::salt));
            CHECK(alt_of(w.vector) == w.value);
            Mask plus = 0, minus = 0;
            for (int i = 1; i <= n; ++i) {
                if (w.vector.at(i) == Sign::plus)
                    plus |= bit_of(sigma[i - 1]);
                if (w.vector.at(i) == Sign::minus)
                    minus |= bit_of(sigma[i - 1]);
            }
            bool free_plus = ! oracle::induces_edge(h, plus), free_minus = ! oracle::induces_edge(h, minus);
            if (mode == AlternationMode::alt)
                CHECK((free_plus && free_minus));
            else
                CHECK((free_plus || free_minus));
        }
        CHECK(alt_sigma(h, sigma) <= salt_sigma(h, sigma));
    }
}

TEST_CASE("alt_full examples")
{
    auto complete = complete_uniform_hypergraph(4, 2);
    auto r = alt_full(complete, AlternationMode::alt, AlternationStrategy::exhaustive);
    CHECK(r.value == 2);
    CHECK(r.proven_minimum);
    CHECK(alt_of(r.witness_vector) == r.value);
    CHECK(is_bijection(r.witness_sigma, 4));

    for (auto mode : {AlternationMode::alt, AlternationMode::salt})
        CHECK(alt_full(Hypergraph(5, {}), mode, AlternationStrategy::exhaustive).value == 5);

    auto stable = stable_hypergraph(6, 2, 2);
    CHECK(alt_full(stable, AlternationMode::salt, AlternationStrategy::exhaustive).value
        == oracle::alt_min(stable, true));
    CHECK(alt_full(stable, AlternationMode::salt, AlternationStrategy::exhaustive).value == 3);

    CHECK_THROWS_AS(alt_full(complete_uniform_hypergraph(10, 2), AlternationMode::alt, AlternationStrategy::exhaustive),
        PreconditionError);
    auto heuristic = alt_full(complete_uniform_hypergraph(10, 2), AlternationMode::alt, AlternationStrategy::heuristic);
    CHECK_FALSE(heuristic.proven_minimum);
    CHECK(heuristic.value >= 2);
}

TEST_CASE("exhaustive alt_full equals the minimum over all bijections")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto h = random_hypergraph(rng, n, 5);
        for (auto mode : {AlternationMode::alt, AlternationMode::salt}) {
            auto r = alt_full(h, mode, AlternationStrategy::exhaustive);
            CHECK(r.value == oracle::alt_min(h, mode == AlternationMode::salt));
            auto identity_only = alt_full(h, mode, AlternationStrategy::identity_only);
            CHECK(identity_only.value >= r.value);
        }
    }
    for (auto h : {stable_hypergraph(6, 2, 2), complete_uniform_hypergraph(5, 2), stable_hypergraph(7, 2, 2)})
        for (auto mode : {AlternationMode::alt, AlternationMode::salt})
            CHECK(alt_full(h, mode, AlternationStrategy::exhaustive).value
                == oracle::alt_min(h, mode == AlternationMode::salt));
}

TEST_CASE("theorem A bound examples")
{
    CHECK(theorem_a_bound(complete_uniform_hypergraph(5, 2), AlternationStrategy::exhaustive).value == 3);
    CHECK(theorem_a_bound(Hypergraph(4, {}), AlternationStrategy::exhaustive).value == 1);
    auto stable = theorem_a_bound(stable_hypergraph(6, 2, 2), AlternationStrategy::exhaustive);
    CHECK(stable.value == 4);
    CHECK(stable.proven);
    CHECK_FALSE(theorem_a_bound(stable_hypergraph(6, 2, 2), AlternationStrategy::identity_only).proven);
}

TEST_CASE("theorem A bound and colorability defect never exceed the chromatic number")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto h = random_hypergraph(rng, n, 12);
        auto g = general_kneser_graph(h);
        auto chi = oracle::chromatic_number(g);
        CHECK(chromatic_number(g).value == chi);
        CHECK(theorem_a_bound(h, AlternationStrategy::exhaustive).value <= chi);
        CHECK(colorability_defect(h).value <= chi);
    }
}

TEST_CASE("colorability defect")
{
    CHECK(colorability_defect(Hypergraph(5, {})).value == 0);
    CHECK(colorability_defect(complete_uniform_hypergraph(5, 2)).value == 3);
    CHECK(colorability_defect(Hypergraph(4, {mask_of({1, 2})})).value == 0);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto h = random_hypergraph(rng, n, 8);
        auto cd = colorability_defect(h);
        CHECK(cd.value == oracle::colorability_defect(h));
        CHECK(cardinality(cd.removed) == cd.value);
        Mask rest = full_mask(n) & ~cd.removed;
        Mask other = rest & ~cd.colour_class;
        CHECK(is_subset(cd.colour_class, rest));
        for (Mask e : h.edges())
            if (is_subset(e, rest)) {
                CHECK_FALSE(is_subset(e, cd.colour_class));
                CHECK_FALSE(is_subset(e, other));
            }
    }
}
