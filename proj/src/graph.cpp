#include <kneser/errors.hpp>
#include <kneser/graph.hpp>

#include <algorithm>
#include <string>

namespace kneser
{
    SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges, std::vector<Mask> labels) :
        _rows(order < 0 ? 0 : order, VertexSet(order < 0 ? 0 : order)),
        _labels(std::move(labels))
    {
        if (order < 0)
            throw PreconditionError("graph order must be nonnegative");
        if (! _labels.empty() && static_cast<int>(_labels.size()) != order)
            throw PreconditionError("label count does not match graph order");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw PreconditionError("edge endpoint out of range");
            if (u == v)
                throw PreconditionError("self-loop at vertex " + std::to_string(u));
            _rows[u].set(v);
            _rows[v].set(u);
        }
        std::size_t degree_sum = 0;
        for (auto & row : _rows)
            degree_sum += row.count();
        _edge_count = degree_sum / 2;
    }

    auto SimpleGraph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (int u = 0; u < order(); ++u)
            for (auto v = _rows[u].find_next(u); v != VertexSet::npos; v = _rows[u].find_next(v))
                result.emplace_back(u, static_cast<int>(v));
        return result;
    }

    auto SimpleGraph::induced_subgraph(std::span<const int> vertices) const -> SimpleGraph
    {
        std::vector<Edge> kept;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j]))
                    kept.emplace_back(static_cast<int>(i), static_cast<int>(j));
        std::vector<Mask> labels;
        if (has_labels())
            for (int v : vertices)
                labels.push_back(_labels[v]);
        return SimpleGraph(static_cast<int>(vertices.size()), kept, std::move(labels));
    }

    auto complete_graph(int n) -> SimpleGraph
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return SimpleGraph(n, edges);
    }

    auto cycle_graph(int n) -> SimpleGraph
    {
        if (n < 3)
            throw PreconditionError("a cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
        return SimpleGraph(n, edges);
    }

    auto empty_graph(int n) -> SimpleGraph
    {
        return SimpleGraph(n, std::span<const Edge>{});
    }

    auto connected_components(const SimpleGraph & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<bool> seen(g.order(), false);
        for (int root = 0; root < g.order(); ++root) {
            if (seen[root])
                continue;
            std::vector<int> component{root}, stack{root};
            seen[root] = true;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                const auto & row = g.neighbourhood(u);
                for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v))
                    if (! seen[v]) {
                        seen[v] = true;
                        component.push_back(static_cast<int>(v));
                        stack.push_back(static_cast<int>(v));
                    }
            }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const SimpleGraph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto members(const VertexSet & set) -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(set.count());
        for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
            result.push_back(static_cast<int>(v));
        return result;
    }
}
