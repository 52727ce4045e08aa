#include "oracles.hpp"

#include <kneser/coloring.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/stability.hpp>
#include <kneser/topology.hpp>

#include <doctest.h>

#include <numeric>
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

    /// The label of X computed straight from the definition.
    auto expected_label(const Hypergraph & h, const std::vector<int> & sigma, const Coloring & c, AlternationMode mode,
        const SignVector & x) -> int
    {
        int n = h.ground_size();
        int threshold = mode == AlternationMode::alt ? alt_sigma(h, sigma) : salt_sigma(h, sigma);
        auto sign_of = [](const std::vector<int> & v) {
            for (int e : v)
                if (e != 0)
                    return e;
            return 0;
        };
        std::vector<int> entries(n);
        for (int i = 1; i <= n; ++i)
            entries[i - 1] = static_cast<int>(x.at(i));
        int a = oracle::alternation(entries);
        if (a <= threshold)
            return sign_of(entries) * a;
        Mask plus = 0, minus = 0;
        for (int i = 1; i <= n; ++i) {
            if (entries[i - 1] > 0)
                plus |= bit_of(sigma[i - 1]);
            if (entries[i - 1] < 0)
                minus |= bit_of(sigma[i - 1]);
        }
        std::vector<int> colours(c.palette(), 0);
        for (std::size_t v = 0; v < h.edges().size(); ++v) {
            if (is_subset(h.edges()[v], plus))
                colours[c[static_cast<int>(v)] - 1] = 1;
            if (is_subset(h.edges()[v], minus))
                colours[c[static_cast<int>(v)] - 1] = -1;
        }
        int value = threshold + oracle::alternation(colours) - (mode == AlternationMode::salt ? 1 : 0);
        return sign_of(colours) * value;
    }

    auto evaluate_polynomial(const std::vector<std::int64_t> & a, int x) -> std::int64_t
    {
        std::int64_t value = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            value = value * x + *it;
        return value;
    }
}

TEST_CASE("the label map matches its definition and is antipodal")
{
    std::mt19937 rng(71);
    for (auto [n, k, s] : std::vector<std::tuple<int, int, int>>{{6, 2, 2}, {7, 2, 2}, {8, 3, 2}}) {
        auto h = stable_hypergraph(n, k, s);
        auto c = min_element_coloring(n, k, s);
        for (int trial = 0; trial < 4; ++trial) {
            auto sigma = identity(n);
            if (trial > 0)
                std::shuffle(sigma.begin(), sigma.end(), rng);
            for (auto mode : {AlternationMode::alt, AlternationMode::salt}) {
                LabelMap map(h, sigma, c, mode);
                CHECK(map.threshold()
                    == (mode == AlternationMode::alt ? oracle::alt_sigma(h, sigma, false) : oracle::alt_sigma(h, sigma, true)));
                for (int sample = 0; sample < 400; ++sample) {
                    auto key = 1 + rng() % (sign_vector_count(n) - 1);
                    auto x = SignVector::from_key(key, n);
                    int label = map.evaluate(x);
                    CHECK(label == expected_label(h, sigma, c, mode, x));
                    CHECK(map.evaluate(x.negated()) == -label);
                    CHECK(label != 0);
                }
            }
        }
    }
    LabelMap map(stable_hypergraph(6, 2, 2), identity(6), min_element_coloring(6, 2, 2), AlternationMode::alt);
    CHECK_THROWS_AS(map.evaluate(SignVector::from_key(0, 6)), PreconditionError);
    CHECK_THROWS_AS(map.evaluate(SignVector::from_key(1, 5)), PreconditionError);
}

TEST_CASE("tucker conditions on small stable kneser graphs")
{
    for (auto [n, k, s] : std::vector<std::tuple<int, int, int>>{{6, 2, 2}, {8, 2, 2}, {7, 3, 2}})
        for (auto mode : {AlternationMode::alt, AlternationMode::salt}) {
            auto h = stable_hypergraph(n, k, s);
            auto g = general_kneser_graph(h);
            auto c = min_element_coloring(n, k, s);
            LabelMap map(h, identity(n), c, mode);
            auto report = verify_tucker_conditions(map);
            CHECK(report.pass());
            CHECK(report.antipodal);
            CHECK_FALSE(report.complementary_edge);
            CHECK(report.max_label >= n);
            CHECK(report.sign_vectors == sign_vector_count(n) - 1);
            REQUIRE(report.witness);
            CHECK(std::abs(map.evaluate(*report.witness)) >= n);

            auto b = extract_colorful_from_witness(map, *report.witness);
            CHECK(colorful_bipartite_violation(g, c, b).empty());
            CHECK(static_cast<int>(b.left.size() + b.right.size()) == map.target_size());
            CHECK(find_colorful_bipartite(g, c, map.target_size()).status == SearchStatus::found);
        }
}

TEST_CASE("tucker sweep on an optimal colouring")
{
    auto h = stable_hypergraph(6, 2, 2);
    auto g = general_kneser_graph(h);
    auto chi = chromatic_number(g);
    REQUIRE(chi.colouring);
    LabelMap map(h, identity(6), *chi.colouring, AlternationMode::salt);
    auto report = verify_tucker_conditions(map);
    CHECK(report.pass());
    CHECK(map.target_size() == 4);
    auto b = extract_colorful_from_witness(map, *report.witness);
    CHECK(colorful_bipartite_violation(g, *chi.colouring, b).empty());
}

TEST_CASE("tucker sweep on an edgeless hypergraph is vacuous")
{
    Hypergraph h(4, {});
    auto g = general_kneser_graph(h);
    LabelMap map(h, identity(4), Coloring(g, {}), AlternationMode::alt);
    auto report = verify_tucker_conditions(map);
    CHECK(report.vacuous);
    CHECK(map.threshold() == 4);
    CHECK_THROWS_AS(verify_tucker_conditions(map, 3), PreconditionError);
}

TEST_CASE("gale configuration")
{
    auto a = gale_configuration(6, 2, 2);
    CHECK(a.p == 2);
    CHECK(a.d == 2);
    CHECK(a.within_hypothesis);
    auto b = gale_configuration(8, 3, 2);
    CHECK(b.p == 3);
    CHECK(b.d == 2);
    CHECK_FALSE(b.within_hypothesis);
    auto c = gale_configuration(10, 2, 4);
    CHECK(c.p == 3);
    CHECK(c.d == 4);
    CHECK(c.within_hypothesis);
    for (auto cfg : {a, b, c})
        CHECK(cfg.d == cfg.n - 2 * cfg.p);
}

TEST_CASE("membership signs follow the moment curve")
{
    auto cfg = gale_configuration(10, 2, 4);
    std::mt19937 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> a(cfg.d + 1);
        for (auto & x : a)
            x = static_cast<std::int64_t>(rng() % 21) - 10;
        for (int i = 1; i <= cfg.n; ++i) {
            std::int64_t inner = 0, power = 1;
            for (int j = 0; j <= cfg.d; ++j) {
                inner += a[j] * power;
                power *= i;
            }
            if (i % 2 == 1)
                inner = -inner;
            auto expected = inner > 0 ? Sign::plus : inner < 0 ? Sign::minus : Sign::zero;
            CHECK(membership_sign(cfg, a, i) == expected);
        }
    }
}

TEST_CASE("realizability is sound and complete on sampled directions")
{
    std::mt19937 rng(79);
    for (auto [n, k, s] : std::vector<std::tuple<int, int, int>>{{6, 2, 2}, {8, 3, 2}, {10, 2, 4}}) {
        auto cfg = gale_configuration(n, k, s);
        std::uint64_t realizable = 0;
        for (std::uint64_t key = 1; key < sign_vector_count(n); ++key) {
            auto pattern = SignVector::from_key(key, n);
            if (! is_realizable(cfg, pattern))
                continue;
            ++realizable;
            auto a = realize_pattern(cfg, pattern);
            REQUIRE(a);
            CHECK(membership_pattern(cfg, *a) == pattern);
            CHECK(is_loosely_realizable(cfg, pattern));
        }
        CHECK(realizable > 0);

        for (int trial = 0; trial < 600; ++trial) {
            int roots = static_cast<int>(rng() % (cfg.d + 1));
            std::vector<std::int64_t> poly{1};
            for (int r = 0; r < roots; ++r) {
                std::int64_t z = 1 + static_cast<std::int64_t>(rng() % n);
                std::vector<std::int64_t> next(poly.size() + 1, 0);
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    next[j + 1] += poly[j];
                    next[j] -= z * poly[j];
                }
                poly = next;
            }
            std::vector<std::int64_t> factor(cfg.d - roots + 1);
            for (auto & x : factor)
                x = static_cast<std::int64_t>(rng() % 41) - 20;
            if (std::all_of(factor.begin(), factor.end(), [](auto x) { return x == 0; }))
                factor[0] = 1;
            std::vector<std::int64_t> a(cfg.d + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j)
                    a[i + j] += poly[i] * factor[j];
            auto pattern = membership_pattern(cfg, a);
            if (pattern.is_zero())
                continue;
            CHECK(is_realizable(cfg, pattern));
            for (int i = 1; i <= n; ++i) {
                auto value = evaluate_polynomial(a, i) * (i % 2 == 1 ? -1 : 1);
                CHECK(pattern.at(i) == (value > 0 ? Sign::plus : value < 0 ? Sign::minus : Sign::zero));
            }
        }
    }
}

TEST_CASE("open hemispheres contain s-stable k-subsets")
{
    for (auto [n, k, s] : std::vector<std::tuple<int, int, int>>{{6, 2, 2}, {8, 2, 2}, {8, 3, 2}, {10, 2, 4}}) {
        auto cfg = gale_configuration(n, k, s);
        auto r = hemisphere_check(cfg);
        CHECK(r.pass());
        CHECK(r.failures == 0);
        CHECK(r.constructions_ok);
        CHECK(r.patterns == sign_vector_count(n) - 1);
        CHECK(r.realizable <= r.loosely_realizable);

        std::uint64_t failures = 0;
        for (std::uint64_t key = 1; key < sign_vector_count(n); ++key) {
            auto pattern = SignVector::from_key(key, n);
            if (! is_realizable(cfg, pattern) || pattern.plus() == 0)
                continue;
            bool found = false;
            for (const auto & subset : oracle::subsets_of_size(n, k))
                if (is_subset(oracle::to_mask(subset), pattern.plus()) && oracle::stable(subset, n, s)) {
                    found = true;
                    break;
                }
            failures += found ? 0 : 1;
        }
        CHECK(failures == 0);
    }
    CHECK_FALSE(hemisphere_check(gale_configuration(10, 2, 4), 5).pass());
}

TEST_CASE("bipartite subgraphs read off hemispheres")
{
    auto g = stable_kneser_graph(6, 2, 2);
    auto c = min_element_coloring(6, 2, 2);
    auto cfg = gale_configuration(6, 2, 2);
    int palette = c.palette();
    int found = 0;
    for (int mask = 1; mask < (1 << palette) - 1; ++mask) {
        std::vector<int> a, b;
        for (int colour = 1; colour <= palette; ++colour)
            (mask >> (colour - 1) & 1 ? a : b).push_back(colour);
        auto from_hemisphere = klm_from_hemispheres(cfg, g, c, a, b);
        auto direct = find_klm_for_partition(g, c, a, b);
        if (! from_hemisphere)
            continue;
        ++found;
        CHECK(direct.status == SearchStatus::found);
        const auto & sub = from_hemisphere->subgraph;
        CHECK(sub.left_colours == a);
        CHECK(sub.right_colours == b);
        for (int u : sub.left) {
            CHECK(is_subset(g.label(u), from_hemisphere->pattern.plus()));
            for (int v : sub.right)
                CHECK(g.adjacent(u, v));
        }
        for (int v : sub.right)
            CHECK(is_subset(g.label(v), from_hemisphere->pattern.minus()));
    }
    CHECK(found > 0);
    CHECK_THROWS_AS(klm_from_hemispheres(cfg, general_kneser_graph(Hypergraph(3, {})), c, {1}, {2}), PreconditionError);
}
