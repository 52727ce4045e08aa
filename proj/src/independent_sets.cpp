#include <kneser/independent_sets.hpp>

#include <algorithm>

namespace kneser
{
    auto is_independent(const SimpleGraph & g, const VertexSet & set) -> bool
    {
        for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
            if (g.neighbourhood(static_cast<int>(v)).intersects(set))
                return false;
        return true;
    }

    namespace
    {
        class MaxIndependentSet
        {
        public:
            MaxIndependentSet(const SimpleGraph & g, std::uint64_t budget) :
                _g(g), _counter(budget), _current(g.order()), _best(g.order())
            {
            }

            void run(const VertexSet & candidates) { expand(candidates); }

            auto best() const -> const VertexSet & { return _best; }
            auto counter() const -> const NodeCounter & { return _counter; }

        private:
            // Greedy partition of `p` into cliques; an independent set meets each at most once.
            auto clique_cover_bound(const VertexSet & p) const -> std::size_t
            {
                VertexSet remaining = p;
                std::size_t cliques = 0;
                while (remaining.any()) {
                    VertexSet clique_candidates = remaining;
                    while (clique_candidates.any()) {
                        auto v = clique_candidates.find_first();
                        remaining.reset(v);
                        clique_candidates.reset(v);
                        clique_candidates &= _g.neighbourhood(static_cast<int>(v));
                    }
                    ++cliques;
                }
                return cliques;
            }

            void expand(VertexSet candidates)
            {
                if (! _counter.tick())
                    return;
                while (candidates.any()) {
                    if (_current.count() + clique_cover_bound(candidates) <= _best.count())
                        return;
                    auto v = candidates.find_first();
                    candidates.reset(v);
                    _current.set(v);
                    expand(candidates - _g.neighbourhood(static_cast<int>(v)));
                    _current.reset(v);
                    if (_counter.exceeded())
                        return;
                }
                if (_current.count() > _best.count())
                    _best = _current;
            }

            const SimpleGraph & _g;
            NodeCounter _counter;
            VertexSet _current, _best;
        };
    }

    auto maximum_independent_set(const SimpleGraph & g, const VertexSet & within, std::uint64_t budget)
        -> IndependentSetResult
    {
        MaxIndependentSet search(g, budget);
        search.run(within);
        IndependentSetResult result;
        result.status = search.counter().exceeded() ? SearchStatus::budget_exceeded : SearchStatus::found;
        result.set = search.best();
        result.nodes = search.counter().nodes();
        return result;
    }

    namespace
    {
        class MaximalIndependentSets
        {
        public:
            MaximalIndependentSets(const SimpleGraph & g, const std::function<bool(const VertexSet &)> & visit,
                std::uint64_t budget) :
                _g(g), _visit(visit), _counter(budget)
            {
            }

            // Bron-Kerbosch on the complement: R independent, P candidates, X excluded.
            auto expand(VertexSet & r, VertexSet p, VertexSet x) -> bool
            {
                if (! _counter.tick())
                    return false;
                if (p.none() && x.none())
                    return _visit(r);
                // pivot u in P ∪ X with the most complement-neighbours in P
                VertexSet pux = p | x;
                std::size_t pivot = pux.find_first();
                std::size_t best_cover = 0;
                for (auto u = pux.find_first(); u != VertexSet::npos; u = pux.find_next(u)) {
                    VertexSet cover = p - _g.neighbourhood(static_cast<int>(u));
                    cover.reset(u);
                    if (cover.count() > best_cover || u == pivot) {
                        best_cover = std::max(best_cover, cover.count());
                        pivot = u;
                    }
                }
                // branch on vertices of P adjacent (in g) to the pivot, plus the pivot itself
                VertexSet branch = p & _g.neighbourhood(static_cast<int>(pivot));
                if (p[pivot])
                    branch.set(pivot);
                for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
                    const auto & nv = _g.neighbourhood(static_cast<int>(v));
                    r.set(v);
                    VertexSet np = p - nv, nx = x - nv;
                    np.reset(v);
                    nx.reset(v);
                    bool go_on = expand(r, np, nx);
                    r.reset(v);
                    if (! go_on)
                        return false;
                    p.reset(v);
                    x.set(v);
                }
                return true;
            }

            auto counter() const -> const NodeCounter & { return _counter; }

        private:
            const SimpleGraph & _g;
            const std::function<bool(const VertexSet &)> & _visit;
            NodeCounter _counter;
        };
    }

    auto for_each_maximal_independent_set(const SimpleGraph & g,
        const std::function<bool(const VertexSet &)> & visit, std::uint64_t budget) -> SearchStatus
    {
        MaximalIndependentSets enumeration(g, visit, budget);
        VertexSet r(g.order()), p(g.order()), x(g.order());
        p.set();
        bool completed = enumeration.expand(r, p, x);
        if (enumeration.counter().exceeded())
            return SearchStatus::budget_exceeded;
        return completed ? SearchStatus::exhausted : SearchStatus::found;
    }
}
