#pragma once

#include <kneser/subset.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kneser
{
    using VertexSet = boost::dynamic_bitset<std::uint64_t>;

    using Edge = std::pair<int, int>;

    /// Finite simple graph on vertices 0..order-1 with bitset adjacency rows.
    /// Optionally each vertex carries a label: the subset of the ground set it
    /// was generated from (a k-subset, a hyperedge, or a singleton {i}).
    class SimpleGraph
    {
    public:
        SimpleGraph() = default;
        SimpleGraph(int order, std::span<const Edge> edges, std::vector<Mask> labels = {});

        auto order() const -> int { return static_cast<int>(_rows.size()); }
        auto adjacent(int u, int v) const -> bool { return _rows[u][v]; }
        auto neighbourhood(int v) const -> const VertexSet & { return _rows[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_rows[v].count()); }
        auto edge_count() const -> std::size_t { return _edge_count; }

        /// Edges (u, v) with u < v, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto has_labels() const -> bool { return ! _labels.empty(); }
        auto labels() const -> const std::vector<Mask> & { return _labels; }
        auto label(int v) const -> Mask { return _labels[v]; }

        auto empty_set() const -> VertexSet { return VertexSet(_rows.size()); }

        /// Subgraph induced on `vertices` (in the given order); labels carry over.
        auto induced_subgraph(std::span<const int> vertices) const -> SimpleGraph;

        friend auto operator==(const SimpleGraph &, const SimpleGraph &) -> bool = default;

    private:
        std::vector<VertexSet> _rows;
        std::size_t _edge_count = 0;
        std::vector<Mask> _labels;
    };

    auto complete_graph(int n) -> SimpleGraph;
    auto cycle_graph(int n) -> SimpleGraph;
    auto empty_graph(int n) -> SimpleGraph;

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    auto connected_components(const SimpleGraph & g) -> std::vector<std::vector<int>>;

    auto is_connected(const SimpleGraph & g) -> bool;

    /// Vertices of `set` in increasing order.
    auto members(const VertexSet & set) -> std::vector<int>;
}
