#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/stability.hpp>

#include <cstdlib>
#include <string>

namespace kneser
{
    auto kneser_graph(int n, int k, KneserOptions options) -> SimpleGraph
    {
        if (n < 1 || k < 1)
            throw PreconditionError("kneser graph needs positive n and k");
        if (n > max_ground_size)
            throw PreconditionError("ground set larger than 64");
        if (n < 2 * k && ! options.allow_degenerate)
            throw PreconditionError(
                "KG(" + std::to_string(n) + "," + std::to_string(k) + ") requires n >= 2k (use allow_degenerate)");
        return general_kneser_graph(complete_uniform_hypergraph(n, k));
    }

    auto stable_kneser_graph(int n, int k, int s) -> SimpleGraph
    {
        if (n < 1 || k < 1 || s < 1)
            throw PreconditionError("stable kneser graph needs positive n, k, s");
        if (n < s * k)
            throw PreconditionError("KG_s(n,k) requires n >= sk");
        return general_kneser_graph(stable_hypergraph(n, k, s));
    }

    auto general_kneser_graph(const Hypergraph & h) -> SimpleGraph
    {
        const auto & edges = h.edges();
        std::vector<Edge> adjacency;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if ((edges[i] & edges[j]) == 0)
                    adjacency.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return SimpleGraph(static_cast<int>(edges.size()), adjacency, edges);
    }

    auto circular_complete_graph(int p, int q) -> SimpleGraph
    {
        if (p < 1 || q < 1)
            throw PreconditionError("circular complete graph needs positive p and q");
        if (p > max_ground_size)
            throw PreconditionError("circular complete graph limited to 64 vertices");
        std::vector<Edge> edges;
        std::vector<Mask> labels;
        for (int i = 1; i <= p; ++i) {
            labels.push_back(bit_of(i));
            for (int j = i + 1; j <= p; ++j)
                if (q <= j - i && j - i <= p - q)
                    edges.emplace_back(i - 1, j - 1);
        }
        return SimpleGraph(p, edges, std::move(labels));
    }

    auto petersen_graph() -> SimpleGraph
    {
        return kneser_graph(5, 2);
    }
}
