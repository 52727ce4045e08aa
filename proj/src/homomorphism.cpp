#include <kneser/errors.hpp>
#include <kneser/homomorphism.hpp>

#include <algorithm>
#include <numeric>

namespace kneser
{
    Homomorphism::Homomorphism(const SimpleGraph & source, const SimpleGraph & target, std::vector<int> map) :
        _map(std::move(map))
    {
        if (! is_homomorphism(source, target, _map))
            throw PreconditionError("map is not a homomorphism");
    }

    auto is_homomorphism(const SimpleGraph & source, const SimpleGraph & target, const std::vector<int> & map) -> bool
    {
        if (static_cast<int>(map.size()) != source.order())
            return false;
        for (int image : map)
            if (image < 0 || image >= target.order())
                return false;
        for (auto [u, v] : source.edges())
            if (! target.adjacent(map[u], map[v]))
                return false;
        return true;
    }

    namespace
    {
        // Picks the unassigned vertex with the smallest domain next (ties: more
        // assigned neighbours, then smaller id) and keeps the remaining domains arc consistent.
        class HomomorphismSearch
        {
        public:
            HomomorphismSearch(const SimpleGraph & source, const SimpleGraph & target, std::uint64_t budget) :
                _source(source),
                _target(target),
                _counter(budget),
                _assignment(source.order(), -1),
                _assigned_neighbours(source.order(), 0)
            {
                _frames.assign(source.order() + 1, std::vector<VertexSet>(source.order(), VertexSet(target.order())));
                for (auto & d : _frames[0])
                    d.set();
            }

            void break_symmetry(std::vector<int> involution)
            {
                if (static_cast<int>(involution.size()) != _target.order())
                    throw PreconditionError("involution size does not match target order");
                _involution = std::move(involution);
            }

            void pin_component_roots()
            {
                for (const auto & component : connected_components(_source)) {
                    int root = component.front();
                    _frames[0][root].reset();
                    if (_target.order() > 0)
                        _frames[0][root].set(0);
                }
            }

            auto run() -> SearchStatus
            {
                if (_source.order() == 0)
                    return SearchStatus::found;
                for (const auto & d : _frames[0])
                    if (d.none())
                        return SearchStatus::exhausted;
                if (expand(0))
                    return SearchStatus::found;
                return _counter.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
            }

            auto assignment() const -> const std::vector<int> & { return _assignment; }
            auto nodes() const -> std::uint64_t { return _counter.nodes(); }

        private:
            auto select(int depth) const -> int
            {
                int best = -1;
                std::size_t best_size = 0;
                for (int v = 0; v < _source.order(); ++v) {
                    if (_assignment[v] >= 0)
                        continue;
                    auto size = _frames[depth][v].count();
                    if (best == -1 || size < best_size
                        || (size == best_size && _assigned_neighbours[v] > _assigned_neighbours[best])) {
                        best = v;
                        best_size = size;
                    }
                }
                return best;
            }

            // Arc consistency over unassigned vertices, starting from the
            // neighbours of `changed`: every remaining value keeps a support in
            // each neighbouring domain. Returns false on a wipe-out.
            auto propagate(std::vector<VertexSet> & domains, int changed) -> bool
            {
                std::vector<int> queue{changed};
                std::vector<char> queued(_source.order(), 0);
                queued[changed] = 1;
                VertexSet support(_target.order());
                while (! queue.empty()) {
                    int u = queue.back();
                    queue.pop_back();
                    queued[u] = 0;
                    support.reset();
                    const auto & du = domains[u];
                    for (auto y = du.find_first(); y != VertexSet::npos; y = du.find_next(y))
                        support |= _target.neighbourhood(static_cast<int>(y));
                    const auto & row = _source.neighbourhood(u);
                    for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
                        if (_assignment[w] >= 0)
                            continue;
                        auto & dw = domains[w];
                        if (dw.is_subset_of(support))
                            continue;
                        dw &= support;
                        if (dw.none())
                            return false;
                        if (! queued[w]) {
                            queued[w] = 1;
                            queue.push_back(static_cast<int>(w));
                        }
                    }
                }
                return true;
            }

            auto expand(int depth) -> bool
            {
                if (depth == _source.order())
                    return true;
                int v = select(depth);
                const auto & domain = _frames[depth][v];
                const auto & row = _source.neighbourhood(v);
                for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
                    ++_assigned_neighbours[w];
                bool success = false;
                bool symmetric = ! _involution.empty() && _broken_at < 0;
                for (auto x = domain.find_first(); x != VertexSet::npos && ! success; x = domain.find_next(x)) {
                    int image = static_cast<int>(x);
                    if (symmetric && image > _involution[image])
                        continue;
                    if (! _counter.tick())
                        break;
                    if (symmetric && image != _involution[image])
                        _broken_at = depth;
                    auto & next = _frames[depth + 1];
                    for (int u = 0; u < _source.order(); ++u)
                        if (_assignment[u] < 0 && u != v)
                            next[u] = _frames[depth][u];
                    next[v].reset();
                    next[v].set(x);
                    bool wiped = ! propagate(next, v);
                    if (wiped) {
                        if (_broken_at == depth)
                            _broken_at = -1;
                        continue;
                    }
                    _assignment[v] = static_cast<int>(x);
                    success = expand(depth + 1);
                    if (! success)
                        _assignment[v] = -1;
                    if (_broken_at == depth)
                        _broken_at = -1;
                    if (_counter.exceeded())
                        break;
                }
                for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
                    --_assigned_neighbours[w];
                return success;
            }

            const SimpleGraph & _source;
            const SimpleGraph & _target;
            NodeCounter _counter;
            std::vector<int> _assignment;
            std::vector<int> _assigned_neighbours;
            std::vector<std::vector<VertexSet>> _frames;
            std::vector<int> _involution;
            int _broken_at = -1;
        };
    }

    auto find_homomorphism(
        const SimpleGraph & source,
        const SimpleGraph & target,
        std::uint64_t budget,
        HomomorphismSearchOptions options) -> HomomorphismSearchResult
    {
        HomomorphismSearch search(source, target, budget);
        if (options.pin_component_roots)
            search.pin_component_roots();
        if (! options.target_involution.empty())
            search.break_symmetry(options.target_involution);
        HomomorphismSearchResult result;
        result.status = search.run();
        result.nodes = search.nodes();
        if (result.status == SearchStatus::found)
            result.homomorphism.emplace(source, target, search.assignment());
        return result;
    }
}
