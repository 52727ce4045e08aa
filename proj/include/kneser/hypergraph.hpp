#pragma once

#include <kneser/subset.hpp>

#include <vector>

namespace kneser
{
    /// Finite hypergraph on the ground set [n]. Edges are nonempty, pairwise
    /// distinct, and kept in lexicographic order of their sorted element lists,
    /// so an edge's index is a stable vertex id for the general Kneser graph.
    class Hypergraph
    {
    public:
        Hypergraph() = default;
        Hypergraph(int ground_size, std::vector<Mask> edges);

        auto ground_size() const -> int { return _ground_size; }
        auto edges() const -> const std::vector<Mask> & { return _edges; }
        auto edge_count() const -> std::size_t { return _edges.size(); }

        /// True iff some edge is contained in `part`.
        auto induces_edge(Mask part) const -> bool;

        /// Image of the hypergraph under the bijection position -> sigma[position - 1],
        /// pulled back: the returned hypergraph has edge sigma^{-1}(e) for every e.
        auto pull_back(const std::vector<int> & sigma) const -> Hypergraph;

        friend auto operator==(const Hypergraph &, const Hypergraph &) -> bool = default;

    private:
        int _ground_size = 0;
        std::vector<Mask> _edges;
    };

    /// ([n], all k-subsets).
    auto complete_uniform_hypergraph(int n, int k) -> Hypergraph;

    /// ([n], all s-stable k-subsets).
    auto stable_hypergraph(int n, int k, int s) -> Hypergraph;

    /// Checks that sigma is a permutation of 1..n.
    auto is_bijection(const std::vector<int> & sigma, int n) -> bool;
}
