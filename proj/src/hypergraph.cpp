#include <kneser/errors.hpp>
#include <kneser/hypergraph.hpp>
#include <kneser/stability.hpp>

#include <algorithm>

namespace kneser
{
    Hypergraph::Hypergraph(int ground_size, std::vector<Mask> edges) :
        _ground_size(ground_size),
        _edges(std::move(edges))
    {
        if (ground_size < 0 || ground_size > max_ground_size)
            throw PreconditionError("hypergraph ground set size must lie in 0..64");
        for (Mask e : _edges) {
            if (e == 0)
                throw PreconditionError("hypergraph edges must be nonempty");
            if (! is_subset(e, full_mask(ground_size)))
                throw PreconditionError("hypergraph edge {" + format_subset(e) + "} leaves the ground set");
        }
        std::sort(_edges.begin(), _edges.end(), lex_less);
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw PreconditionError("hypergraph edges must be pairwise distinct");
    }

    auto Hypergraph::induces_edge(Mask part) const -> bool
    {
        return std::any_of(_edges.begin(), _edges.end(), [&](Mask e) { return is_subset(e, part); });
    }

    auto Hypergraph::pull_back(const std::vector<int> & sigma) const -> Hypergraph
    {
        if (! is_bijection(sigma, _ground_size))
            throw PreconditionError("sigma is not a bijection of the ground set");
        std::vector<int> position(_ground_size + 1);
        for (int i = 0; i < _ground_size; ++i)
            position[sigma[i]] = i + 1;
        std::vector<Mask> pulled;
        pulled.reserve(_edges.size());
        for (Mask e : _edges) {
            Mask image = 0;
            for (int v : elements_of(e))
                image |= bit_of(position[v]);
            pulled.push_back(image);
        }
        return Hypergraph(_ground_size, std::move(pulled));
    }

    auto complete_uniform_hypergraph(int n, int k) -> Hypergraph
    {
        return Hypergraph(n, k_subsets(n, k));
    }

    auto stable_hypergraph(int n, int k, int s) -> Hypergraph
    {
        return Hypergraph(n, StableFamily(n, k, s).members());
    }

    auto is_bijection(const std::vector<int> & sigma, int n) -> bool
    {
        if (static_cast<int>(sigma.size()) != n)
            return false;
        std::vector<bool> seen(n + 1, false);
        for (int v : sigma) {
            if (v < 1 || v > n || seen[v])
                return false;
            seen[v] = true;
        }
        return true;
    }
}
