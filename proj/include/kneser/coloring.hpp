#pragma once

#include <kneser/graph.hpp>
#include <kneser/search.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kneser
{
    /// Proper vertex colouring with colours 1..palette. Construction rejects
    /// improper maps; palette defaults to the largest colour used.
    class Coloring
    {
    public:
        Coloring() = default;
        Coloring(const SimpleGraph & g, std::vector<int> colours, int palette = 0);

        auto colours() const -> const std::vector<int> & { return _colours; }
        auto operator[](int v) const -> int { return _colours[v]; }
        auto palette() const -> int { return _palette; }
        auto size() const -> int { return static_cast<int>(_colours.size()); }

        /// Vertices of each colour: classes()[c - 1] for colour c.
        auto classes() const -> std::vector<std::vector<int>>;

        friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

    private:
        std::vector<int> _colours;
        int _palette = 0;
    };

    auto is_proper_colouring(const SimpleGraph & g, const std::vector<int> & colours) -> bool;

    struct ChromaticResult
    {
        /// found: `value` is exact; budget_exceeded: value lies in [lower_bound, upper_bound].
        SearchStatus status = SearchStatus::found;
        int value = 0;
        int lower_bound = 0;
        int upper_bound = 0;
        std::optional<Coloring> colouring;
        /// Size of the clique used to seed the lower bound and pre-colour the search.
        std::vector<int> clique;
        /// Nodes spent refuting each k < value that exceeds the clique bound.
        std::vector<std::pair<int, std::uint64_t>> refutations;
        std::uint64_t nodes = 0;
    };

    /// Exact chromatic number by DSATUR backtracking for k = clique size, k+1, ...
    /// The first feasible k is returned with its colouring; each smaller k is
    /// refuted by a completed search or by the clique.
    auto chromatic_number(const SimpleGraph & g, std::uint64_t budget = unlimited_budget) -> ChromaticResult;

    /// A proper k-colouring if one exists.
    struct ColourabilityResult
    {
        SearchStatus status = SearchStatus::exhausted;
        std::optional<Coloring> colouring;
        std::uint64_t nodes = 0;
    };
    auto k_colouring(const SimpleGraph & g, int k, std::uint64_t budget = unlimited_budget) -> ColourabilityResult;

    /// Greedy clique: best of the cliques grown from each vertex in degree order.
    auto greedy_clique(const SimpleGraph & g) -> std::vector<int>;

    /// Colours each s-stable k-subset by its smallest element; a proper
    /// colouring of KG_s(n,k) with n - s(k-1) colours.
    auto min_element_coloring(int n, int k, int s) -> Coloring;

    /// Complete bipartite subgraph with one vertex per colour. Sorting the
    /// union of colours increasingly, ranks alternate between `left` and `right`.
    struct ColorfulBipartite
    {
        std::vector<int> left, right;
        std::vector<int> left_colours, right_colours;
    };

    /// Empty string when the invariants hold, otherwise a description of the first violation.
    auto colorful_bipartite_violation(const SimpleGraph & g, const Coloring & c, const ColorfulBipartite & b)
        -> std::string;

    struct BipartiteSearchResult
    {
        SearchStatus status = SearchStatus::exhausted;
        std::optional<ColorfulBipartite> subgraph;
        std::uint64_t nodes = 0;
        /// Number of colour sets examined (for verified absence).
        std::uint64_t colour_sets = 0;
    };

    /// A K_{floor(t/2), ceil(t/2)} with t distinct colours alternating in natural
    /// order across the sides; odd-ranked colours form `left`.
    auto find_colorful_bipartite(const SimpleGraph & g, const Coloring & c, int t,
        std::uint64_t budget = unlimited_budget) -> BipartiteSearchResult;

    /// A K_{|A|,|B|} whose left side is coloured bijectively by A and right side by B.
    /// A and B must partition the palette and be nonempty.
    auto find_klm_for_partition(const SimpleGraph & g, const Coloring & c, const std::vector<int> & a,
        const std::vector<int> & b, std::uint64_t budget = unlimited_budget) -> BipartiteSearchResult;

    struct TightCycleResult
    {
        std::optional<std::vector<int>> cycle;
        std::uint64_t arcs_examined = 0;
    };

    /// A cycle v1 ... vm v1 (m >= 3) with c(v_{i+1}) = c(v_i) + 1 mod r along every
    /// edge, or verified absence.
    auto find_tight_cycle(const SimpleGraph & g, const Coloring & c, int r) -> TightCycleResult;

    auto is_tight_cycle(const SimpleGraph & g, const Coloring & c, int r, const std::vector<int> & cycle) -> bool;
}
