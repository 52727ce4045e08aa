#include "oracles.hpp"

#include <kneser/coloring.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>

#include <doctest.h>

#include <random>

using namespace kneser;

namespace
{
    // Independent revalidation of a colorful bipartite subgraph.
    void check_colorful(const SimpleGraph & g, const Coloring & c, const ColorfulBipartite & b, int t)
    {
        CHECK(static_cast<int>(b.left.size()) == (t + 1) / 2);
        CHECK(static_cast<int>(b.right.size()) == t / 2);
        std::vector<int> colours;
        for (int u : b.left)
            for (int v : b.right)
                CHECK(g.adjacent(u, v));
        for (int v : b.left)
            colours.push_back(c[v]);
        for (int v : b.right)
            colours.push_back(c[v]);
        auto sorted = colours;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        for (std::size_t rank = 0; rank < sorted.size(); ++rank) {
            bool on_left = std::any_of(b.left.begin(), b.left.end(), [&](int v) { return c[v] == sorted[rank]; });
            CHECK(on_left == (rank % 2 == 0));
        }
    }
}

TEST_CASE("colouring validation")
{
    auto c5 = cycle_graph(5);
    CHECK_NOTHROW(Coloring(c5, {1, 2, 1, 2, 3}));
    CHECK_THROWS(Coloring(c5, {1, 2, 1, 2, 1}));
    CHECK_THROWS(Coloring(c5, {1, 2, 1, 2}));
    CHECK(Coloring(c5, {1, 2, 1, 2, 3}).palette() == 3);
    CHECK(Coloring(c5, {1, 2, 1, 2, 3}, 5).palette() == 5);
    CHECK(is_proper_colouring(c5, {1, 2, 1, 2, 3}));
}

TEST_CASE("chromatic number examples")
{
    auto petersen = chromatic_number(petersen_graph());
    CHECK(petersen.value == 3);
    CHECK(petersen.status == SearchStatus::found);
    REQUIRE(petersen.colouring);
    CHECK(petersen.colouring->palette() == 3);
    CHECK(chromatic_number(stable_kneser_graph(6, 2, 2)).value == 4);
    CHECK(chromatic_number(empty_graph(4)).value == 1);
    CHECK(chromatic_number(empty_graph(0)).value == 0);
    auto limited = chromatic_number(kneser_graph(7, 2), 3);
    CHECK(limited.status == SearchStatus::budget_exceeded);
    CHECK(limited.lower_bound <= 5);
    CHECK(limited.upper_bound >= 5);
}

TEST_CASE("chromatic number agrees with brute force")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        int density = 1 + static_cast<int>(rng() % 4);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<int>(rng() % 5) < density)
                    edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        auto r = chromatic_number(g);
        CHECK(r.value == oracle::chromatic_number(g));
        REQUIRE(r.colouring);
        CHECK(is_proper_colouring(g, r.colouring->colours()));
        for (auto [k, nodes] : r.refutations)
            CHECK(k < r.value);
        auto below = k_colouring(g, r.value - 1);
        if (r.value > 1)
            CHECK(below.status == SearchStatus::exhausted);
    }
}

TEST_CASE("kneser chromatic numbers")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}})
        CHECK(chromatic_number(kneser_graph(n, k)).value == n - 2 * k + 2);
}

TEST_CASE("min-element colouring")
{
    auto g = stable_kneser_graph(6, 2, 2);
    auto c = min_element_coloring(6, 2, 2);
    for (int v = 0; v < g.order(); ++v)
        if (g.label(v) == mask_of({2, 5}))
            CHECK(c[v] == 2);
    CHECK(c.palette() == 4);
    CHECK(min_element_coloring(10, 2, 4).palette() == 6);

    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int s = 1; s <= 4; ++s) {
                if (n < s * k || n < 2 * k)
                    continue;
                auto h = stable_kneser_graph(n, k, s);
                auto colouring = min_element_coloring(n, k, s);
                int used = 0;
                for (int v = 0; v < h.order(); ++v) {
                    used = std::max(used, colouring[v]);
                    CHECK(colouring[v] == min_element(h.label(v)));
                }
                for (auto [u, v] : h.edges())
                    CHECK(colouring[u] != colouring[v]);
                CHECK(used == n - s * (k - 1));
                CHECK(colouring.palette() == n - s * (k - 1));
            }
}

TEST_CASE("colorful bipartite subgraph examples")
{
    auto k2 = complete_graph(2);
    Coloring c2(k2, {1, 2});
    auto edge = find_colorful_bipartite(k2, c2, 2);
    REQUIRE(edge.subgraph);
    check_colorful(k2, c2, *edge.subgraph, 2);

    auto g = stable_kneser_graph(6, 2, 2);
    auto c = min_element_coloring(6, 2, 2);
    auto r = find_colorful_bipartite(g, c, 4);
    REQUIRE(r.subgraph);
    check_colorful(g, c, *r.subgraph, 4);
    auto left = r.subgraph->left_colours, right = r.subgraph->right_colours;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    CHECK(left == std::vector<int>{1, 3});
    CHECK(right == std::vector<int>{2, 4});

    auto g10 = stable_kneser_graph(10, 2, 4);
    auto c10 = min_element_coloring(10, 2, 4);
    auto r10 = find_colorful_bipartite(g10, c10, 6);
    REQUIRE(r10.subgraph);
    check_colorful(g10, c10, *r10.subgraph, 6);
    CHECK(colorful_bipartite_violation(g10, c10, *r10.subgraph).empty());

    CHECK(find_colorful_bipartite(g, c, 5).status == SearchStatus::exhausted);
}

TEST_CASE("colorful bipartite search agrees with exhaustive vertex choice")
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3)
                    edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        auto colouring = chromatic_number(g).colouring;
        REQUIRE(colouring);
        for (int t = 1; t <= colouring->palette(); ++t) {
            bool expected = false;
            // every ordered choice of t distinct vertices with distinct colours
            std::vector<int> pick;
            auto rec = [&](auto & self) -> void {
                if (expected)
                    return;
                if (static_cast<int>(pick.size()) == t) {
                    std::vector<int> order(pick);
                    std::sort(order.begin(), order.end(), [&](int a, int b) { return (*colouring)[a] < (*colouring)[b]; });
                    for (std::size_t i = 0; i < order.size(); ++i)
                        for (std::size_t j = i + 1; j < order.size(); ++j)
                            if ((*colouring)[order[i]] == (*colouring)[order[j]])
                                return;
                    for (std::size_t i = 0; i < order.size(); ++i)
                        for (std::size_t j = i + 1; j < order.size(); ++j)
                            if ((i + j) % 2 == 1 && ! g.adjacent(order[i], order[j]))
                                return;
                    expected = true;
                    return;
                }
                for (int v = pick.empty() ? 0 : pick.back() + 1; v < n; ++v) {
                    pick.push_back(v);
                    self(self);
                    pick.pop_back();
                }
            };
            rec(rec);
            auto found = find_colorful_bipartite(g, *colouring, t);
            CHECK((found.status == SearchStatus::found) == expected);
            if (found.subgraph)
                check_colorful(g, *colouring, *found.subgraph, t);
        }
    }
}

TEST_CASE("K_{l,m} for palette bipartitions")
{
    auto g = stable_kneser_graph(6, 2, 2);
    auto c = min_element_coloring(6, 2, 2);
    auto star = find_klm_for_partition(g, c, {1}, {2, 3, 4});
    REQUIRE(star.subgraph);
    CHECK(star.subgraph->left.size() == 1);
    CHECK(star.subgraph->right.size() == 3);
    auto square = find_klm_for_partition(g, c, {1, 2}, {3, 4});
    REQUIRE(square.subgraph);
    for (int u : square.subgraph->left)
        for (int v : square.subgraph->right)
            CHECK(g.adjacent(u, v));
    CHECK_THROWS_AS(find_klm_for_partition(g, c, {1}, {2, 3}), PreconditionError);
    CHECK_THROWS_AS(find_klm_for_partition(g, c, {}, {1, 2, 3, 4}), PreconditionError);

    for (Mask a = 1; a < 15; ++a) {
        std::vector<int> left, right;
        for (int colour = 1; colour <= 4; ++colour)
            (contains(a, colour) ? left : right).push_back(colour);
        auto r = find_klm_for_partition(g, c, left, right);
        REQUIRE(r.subgraph);
        auto lc = r.subgraph->left_colours, rc = r.subgraph->right_colours;
        std::sort(lc.begin(), lc.end());
        std::sort(rc.begin(), rc.end());
        CHECK(lc == left);
        CHECK(rc == right);
        for (int u : r.subgraph->left)
            for (int v : r.subgraph->right)
                CHECK(g.adjacent(u, v));
    }
}

TEST_CASE("optimal colourings of stable kneser graphs carry colorful subgraphs")
{
    for (auto [n, k, s] : std::vector<std::tuple<int, int, int>>{{6, 2, 2}, {8, 2, 2}, {8, 3, 2}, {10, 2, 4}, {12, 2, 4}}) {
        auto g = stable_kneser_graph(n, k, s);
        auto chi = chromatic_number(g);
        int t = n - s * (k - 1);
        CHECK(chi.value == t);
        REQUIRE(chi.colouring);
        auto r = find_colorful_bipartite(g, *chi.colouring, t);
        REQUIRE(r.subgraph);
        check_colorful(g, *chi.colouring, *r.subgraph, t);
    }
}

TEST_CASE("tight cycles")
{
    auto c3 = complete_graph(3);
    Coloring triangle(c3, {1, 2, 3});
    auto found = find_tight_cycle(c3, triangle, 3);
    REQUIRE(found.cycle);
    CHECK(found.cycle->size() == 3);
    CHECK(is_tight_cycle(c3, triangle, 3, *found.cycle));

    SimpleGraph k22(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Coloring sides(k22, {1, 1, 2, 2});
    auto square = find_tight_cycle(k22, sides, 2);
    REQUIRE(square.cycle);
    CHECK(square.cycle->size() == 4);
    CHECK(is_tight_cycle(k22, sides, 2, *square.cycle));

    auto c5 = cycle_graph(5);
    int colourings = 0, without = 0;
    std::vector<int> c(5);
    for (int code = 0; code < 243; ++code) {
        for (int v = 0, x = code; v < 5; ++v, x /= 3)
            c[v] = x % 3 + 1;
        if (! is_proper_colouring(c5, c))
            continue;
        ++colourings;
        if (! find_tight_cycle(c5, Coloring(c5, c, 3), 3).cycle)
            ++without;
    }
    CHECK(colourings == 30);
    CHECK(without > 0);
}

TEST_CASE("alternating complete bipartite graphs contain tight cycles exactly for even r")
{
    for (int r = 3; r <= 10; ++r) {
        int half = (r + 1) / 2;
        std::vector<Edge> edges;
        for (int u = 0; u < half; ++u)
            for (int v = half; v < 2 * half; ++v)
                edges.emplace_back(u, v);
        SimpleGraph g(2 * half, edges);
        // odd colours on the left, even colours on the right; for odd r the last right vertex repeats r - 1
        std::vector<int> colours(2 * half);
        for (int i = 0; i < half; ++i) {
            colours[i] = 2 * i + 1;
            colours[half + i] = std::min(2 * i + 2, r % 2 == 0 ? r : r - 1);
        }
        Coloring c(g, colours, r);
        auto cycle = find_tight_cycle(g, c, r);
        if (r % 2 == 0) {
            REQUIRE(cycle.cycle);
            CHECK(is_tight_cycle(g, c, r, *cycle.cycle));
        }
        else
            CHECK_FALSE(cycle.cycle);
    }
}

TEST_CASE("tight cycle search agrees with brute force on small graphs")
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        auto colouring = chromatic_number(g).colouring;
        int r = colouring->palette();
        if (r < 2)
            continue;
        Coloring c(g, colouring->colours(), r);
        // a tight cycle exists iff some vertex reaches itself along colour-stepping arcs with length >= 3
        bool expected = false;
        std::vector<int> path;
        auto rec = [&](auto & self, int v) -> void {
            if (expected)
                return;
            for (int w = 0; w < n; ++w) {
                if (! g.adjacent(v, w) || c[w] != c[v] % r + 1)
                    continue;
                if (w == path.front() && path.size() >= 3) {
                    expected = true;
                    return;
                }
                if (std::find(path.begin(), path.end(), w) != path.end())
                    continue;
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        };
        for (int start = 0; start < n && ! expected; ++start) {
            path = {start};
            rec(rec, start);
        }
        auto found = find_tight_cycle(g, c, r);
        CHECK(found.cycle.has_value() == expected);
        if (found.cycle)
            CHECK(is_tight_cycle(g, c, r, *found.cycle));
    }
}
