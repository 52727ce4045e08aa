#include "oracles.hpp"

#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/graph_io.hpp>
#include <kneser/homomorphism.hpp>
#include <kneser/independent_sets.hpp>
#include <kneser/sign_vector.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace kneser;

TEST_CASE("subset helpers")
{
    CHECK(mask_of({1, 3, 4}) == 0b1101);
    CHECK(elements_of(0b1101) == std::vector<int>{1, 3, 4});
    CHECK(format_subset(mask_of({2, 5})) == "2,5");
    CHECK(parse_subset("2,5") == mask_of({2, 5}));
    CHECK(rotate(mask_of({1, 6}), 6, 1) == mask_of({1, 2}));
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto subsets = k_subsets(n, k);
            auto expected = oracle::subsets_of_size(n, k);
            REQUIRE(subsets.size() == expected.size());
            for (std::size_t i = 0; i < subsets.size(); ++i)
                CHECK(subsets[i] == oracle::to_mask(expected[i]));
        }
}

TEST_CASE("kneser graph examples")
{
    auto petersen = kneser_graph(5, 2);
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(petersen.degree(v) == 3);
    CHECK(petersen == petersen_graph());

    auto k2 = kneser_graph(2, 1);
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);

    auto matching = kneser_graph(4, 2);
    CHECK(matching.order() == 6);
    CHECK(matching.edge_count() == 3);
    for (int v = 0; v < 6; ++v)
        CHECK(matching.degree(v) == 1);

    CHECK_THROWS_AS(kneser_graph(3, 2), PreconditionError);
    auto degenerate = kneser_graph(3, 2, {.allow_degenerate = true});
    CHECK(degenerate.order() == 3);
    CHECK(degenerate.edge_count() == 0);
}

TEST_CASE("kneser graph is regular of degree C(n-k,k) and adjacency is disjointness")
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto g = kneser_graph(n, k);
            auto subsets = oracle::subsets_of_size(n, k);
            REQUIRE(g.order() == static_cast<int>(subsets.size()));
            for (int v = 0; v < g.order(); ++v) {
                CHECK(g.label(v) == oracle::to_mask(subsets[v]));
                CHECK(g.degree(v) == binomial(n - k, k));
            }
            if (n <= 7)
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v)
                        CHECK(g.adjacent(u, v) == (u != v && oracle::disjoint(subsets[u], subsets[v])));
        }
}

TEST_CASE("stable kneser graph examples")
{
    CHECK(stable_kneser_graph(6, 2, 2).order() == 9);
    CHECK(stable_kneser_graph(10, 2, 4).order() == 15);
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            CHECK(stable_kneser_graph(n, k, 1) == kneser_graph(n, k));
    CHECK_THROWS_AS(stable_kneser_graph(5, 2, 3), PreconditionError);
}

TEST_CASE("stable kneser vertices are the s-stable filter of the kneser vertices")
{
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= 4 && 2 * k <= n; ++k)
            for (int s = 1; s * k <= n && s <= 4; ++s) {
                auto g = stable_kneser_graph(n, k, s);
                std::vector<Mask> expected;
                for (const auto & subset : oracle::subsets_of_size(n, k))
                    if (oracle::stable(subset, n, s)) {
                        expected.push_back(oracle::to_mask(subset));
                        CHECK(oracle::circular_stable(subset, n, s));
                    }
                    else
                        CHECK_FALSE(oracle::circular_stable(subset, n, s));
                CHECK(g.labels() == expected);
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v)
                        CHECK(g.adjacent(u, v) == ((g.label(u) & g.label(v)) == 0 && u != v));
            }
}

TEST_CASE("general kneser graph")
{
    CHECK(general_kneser_graph(complete_uniform_hypergraph(6, 2)).labels() == kneser_graph(6, 2).labels());
    CHECK(general_kneser_graph(complete_uniform_hypergraph(6, 2)) == kneser_graph(6, 2));
    CHECK(general_kneser_graph(stable_hypergraph(8, 2, 2)) == stable_kneser_graph(8, 2, 2));

    Hypergraph h(3, {mask_of({1}), mask_of({2}), mask_of({1, 2})});
    auto g = general_kneser_graph(h);
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.labels() == std::vector<Mask>{mask_of({1}), mask_of({1, 2}), mask_of({2})});
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("circular complete graph")
{
    auto c5 = circular_complete_graph(5, 2);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(oracle::homomorphism_exists(c5, cycle_graph(5)));
    CHECK(oracle::homomorphism_exists(cycle_graph(5), c5));

    auto k62 = circular_complete_graph(6, 2);
    CHECK(k62.edge_count() == 9);
    for (int v = 0; v < 6; ++v) {
        CHECK_FALSE(k62.adjacent(v, (v + 1) % 6));
        CHECK(k62.degree(v) == 3);
    }

    for (int p = 1; p <= 9; ++p) {
        auto g = circular_complete_graph(p, 1);
        for (int v = 0; v < p; ++v)
            CHECK(g.degree(v) == p - 1);
    }
}

TEST_CASE("homomorphism search examples")
{
    auto c5 = cycle_graph(5);
    auto k52 = circular_complete_graph(5, 2);
    auto found = find_homomorphism(c5, k52);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(is_homomorphism(c5, k52, found.homomorphism->map()));

    CHECK(find_homomorphism(complete_graph(3), c5).status == SearchStatus::exhausted);
    CHECK(find_homomorphism(petersen_graph(), circular_complete_graph(8, 3)).status == SearchStatus::exhausted);

    std::vector<int> identity(10);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(is_homomorphism(petersen_graph(), petersen_graph(), identity));
    CHECK_FALSE(is_homomorphism(petersen_graph(), petersen_graph(), std::vector<int>(10, 0)));
    CHECK_THROWS(Homomorphism(petersen_graph(), complete_graph(3), std::vector<int>(10, 0)));

    auto budgeted = find_homomorphism(petersen_graph(), circular_complete_graph(8, 3), 5);
    CHECK(budgeted.status == SearchStatus::budget_exceeded);
}

TEST_CASE("homomorphism search agrees with brute force on random pairs")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        int m = 2 + static_cast<int>(rng() % 4);
        std::vector<Edge> ge, te;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    ge.emplace_back(u, v);
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (rng() % 3)
                    te.emplace_back(u, v);
        SimpleGraph g(n, ge), t(m, te);
        auto result = find_homomorphism(g, t);
        CHECK(result.status != SearchStatus::budget_exceeded);
        CHECK((result.status == SearchStatus::found) == oracle::homomorphism_exists(g, t));
        if (result.homomorphism)
            CHECK(is_homomorphism(g, t, result.homomorphism->map()));
    }
}

TEST_CASE("symmetry-restricted homomorphism search keeps the answer on circular targets")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Edge> ge;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    ge.emplace_back(u, v);
        SimpleGraph g(n, ge);
        int q = 1 + static_cast<int>(rng() % 3);
        int p = 2 * q + static_cast<int>(rng() % 4);
        auto t = circular_complete_graph(p, q);
        HomomorphismSearchOptions options;
        options.pin_component_roots = true;
        for (int x = 0; x < p; ++x)
            options.target_involution.push_back((p - x) % p);
        auto result = find_homomorphism(g, t, unlimited_budget, options);
        CHECK((result.status == SearchStatus::found) == oracle::homomorphism_exists(g, t));
    }
}

TEST_CASE("graph interchange format round trip")
{
    auto g = stable_kneser_graph(8, 2, 2);
    std::stringstream text;
    write_graph(text, g);
    CHECK(text.str().rfind("p 20 ", 0) == 0);
    auto back = read_graph(text);
    CHECK(back == g);

    std::stringstream bad("p 3 1\ne 0 7\n");
    CHECK_THROWS_AS(read_graph(bad), FormatError);
    std::stringstream short_count("p 3 2\ne 0 1\n");
    CHECK_THROWS_AS(read_graph(short_count), FormatError);

    auto h = stable_hypergraph(6, 2, 2);
    std::stringstream htext;
    write_hypergraph(htext, h);
    CHECK(read_hypergraph(htext) == h);
}

TEST_CASE("components and basic graphs")
{
    SimpleGraph g(5, std::vector<Edge>{{0, 1}, {3, 4}});
    auto components = connected_components(g);
    CHECK(components == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(cycle_graph(6)));
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(empty_graph(4).edge_count() == 0);
}

TEST_CASE("maximum independent set agrees with brute force")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        VertexSet all(n);
        all.set();
        auto mis = maximum_independent_set(g, all);
        int best = 0;
        for (std::uint32_t set = 0; set < (1U << n); ++set)
            if (oracle::independent(g, set))
                best = std::max(best, std::popcount(set));
        CHECK(static_cast<int>(mis.set.count()) == best);
        CHECK(is_independent(g, mis.set));

        std::uint64_t maximal = 0;
        for_each_maximal_independent_set(g, [&](const VertexSet & s) {
            CHECK(is_independent(g, s));
            ++maximal;
            return true;
        });
        std::uint64_t expected = 0;
        for (std::uint32_t set = 0; set < (1U << n); ++set) {
            if (! oracle::independent(g, set))
                continue;
            bool extendable = false;
            for (int v = 0; v < n && ! extendable; ++v)
                if (! (set >> v & 1U) && oracle::independent(g, set | (1U << v)))
                    extendable = true;
            if (! extendable)
                ++expected;
        }
        CHECK(maximal == expected);
    }
}

TEST_CASE("sign vectors")
{
    auto x = SignVector::parse("+-+0-");
    CHECK(x.size() == 5);
    CHECK(x.at(4) == Sign::zero);
    CHECK(alt_of(x) == 4);
    CHECK(alt_of(SignVector::parse("000")) == 0);
    CHECK(alt_of(SignVector::parse("+++")) == 1);
    CHECK(x.negated().negated() == x);
    CHECK(x.negated().to_string() == "-+-0+");
    CHECK((x.plus() & x.minus()) == 0);
    CHECK(x.first_nonzero() == Sign::plus);
    CHECK(SignVector::from_key(x.key(), 5) == x);
    CHECK(SignVector::parse("+000-").is_contained_in(x));
    CHECK(sign_vector_count(4) == 81);

    for (std::uint64_t key = 0; key < sign_vector_count(7); ++key) {
        auto y = SignVector::from_key(key, 7);
        std::vector<int> plain(7);
        for (int i = 1; i <= 7; ++i)
            plain[i - 1] = static_cast<int>(y.at(i));
        CHECK(alt_of(y) == oracle::alternation(plain));
        CHECK(alt_of(y.negated()) == alt_of(y));
        CHECK(static_cast<int>(alternating_positions(y).size()) == alt_of(y));
    }
}
