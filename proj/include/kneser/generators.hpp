#pragma once

#include <kneser/graph.hpp>
#include <kneser/hypergraph.hpp>

namespace kneser
{
    struct KneserOptions
    {
        /// Permit n < 2k (the graph is then edgeless).
        bool allow_degenerate = false;
    };

    /// KG(n,k): k-subsets of [n] in lexicographic order, adjacent iff disjoint.
    auto kneser_graph(int n, int k, KneserOptions options = {}) -> SimpleGraph;

    /// KG_s(n,k): the subgraph of KG(n,k) induced by the s-stable k-subsets.
    auto stable_kneser_graph(int n, int k, int s) -> SimpleGraph;

    /// KG(H): one vertex per edge of H (in canonical edge order), adjacent iff disjoint.
    auto general_kneser_graph(const Hypergraph & h) -> SimpleGraph;

    /// K_{p/q}: vertices 1..p (ids 0..p-1), i ~ j iff q <= |i - j| <= p - q.
    auto circular_complete_graph(int p, int q) -> SimpleGraph;

    auto petersen_graph() -> SimpleGraph;
}
