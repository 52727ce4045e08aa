#include <kneser/coloring.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace kneser
{
    Coloring::Coloring(const SimpleGraph & g, std::vector<int> colours, int palette) :
        _colours(std::move(colours))
    {
        if (static_cast<int>(_colours.size()) != g.order())
            throw PreconditionError("colouring size does not match graph order");
        int used = 0;
        for (int c : _colours) {
            if (c < 1)
                throw PreconditionError("colours must be positive");
            used = std::max(used, c);
        }
        if (palette != 0 && palette < used)
            throw PreconditionError("palette smaller than the largest colour used");
        _palette = palette == 0 ? used : palette;
        if (! is_proper_colouring(g, _colours))
            throw PreconditionError("colouring is not proper");
    }

    auto Coloring::classes() const -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result(_palette);
        for (int v = 0; v < size(); ++v)
            result[_colours[v] - 1].push_back(v);
        return result;
    }

    auto is_proper_colouring(const SimpleGraph & g, const std::vector<int> & colours) -> bool
    {
        if (static_cast<int>(colours.size()) != g.order())
            return false;
        for (auto [u, v] : g.edges())
            if (colours[u] == colours[v])
                return false;
        return true;
    }

    auto greedy_clique(const SimpleGraph & g) -> std::vector<int>
    {
        std::vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> best;
        for (int start : order) {
            std::vector<int> clique{start};
            VertexSet candidates = g.neighbourhood(start);
            while (candidates.any()) {
                // most connected candidate, ties by id
                int pick = -1;
                std::size_t pick_degree = 0;
                for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
                    auto d = (candidates & g.neighbourhood(static_cast<int>(v))).count();
                    if (pick == -1 || d > pick_degree) {
                        pick = static_cast<int>(v);
                        pick_degree = d;
                    }
                }
                clique.push_back(pick);
                candidates &= g.neighbourhood(pick);
            }
            if (clique.size() > best.size())
                best = clique;
        }
        std::sort(best.begin(), best.end());
        return best;
    }

    namespace
    {
        class Dsatur
        {
        public:
            Dsatur(const SimpleGraph & g, int k, NodeCounter & counter) :
                _g(g), _k(k), _counter(counter),
                _colour(g.order(), 0),
                _forbidden(g.order(), std::vector<int>(k + 1, 0)),
                _saturation(g.order(), 0)
            {
            }

            auto run(const std::vector<int> & clique) -> bool
            {
                if (static_cast<int>(clique.size()) > _k)
                    return false;
                for (std::size_t i = 0; i < clique.size(); ++i)
                    assign(clique[i], static_cast<int>(i) + 1);
                _max_used = static_cast<int>(clique.size());
                _remaining = _g.order() - static_cast<int>(clique.size());
                return expand();
            }

            auto colours() const -> const std::vector<int> & { return _colour; }

        private:
            void assign(int v, int c)
            {
                _colour[v] = c;
                const auto & row = _g.neighbourhood(v);
                for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
                    if (_forbidden[w][c]++ == 0)
                        ++_saturation[w];
            }

            void unassign(int v)
            {
                int c = _colour[v];
                _colour[v] = 0;
                const auto & row = _g.neighbourhood(v);
                for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
                    if (--_forbidden[w][c] == 0)
                        --_saturation[w];
            }

            auto select() const -> int
            {
                int best = -1;
                for (int v = 0; v < _g.order(); ++v) {
                    if (_colour[v] != 0)
                        continue;
                    if (best == -1 || _saturation[v] > _saturation[best]
                        || (_saturation[v] == _saturation[best] && _g.degree(v) > _g.degree(best)))
                        best = v;
                }
                return best;
            }

            auto expand() -> bool
            {
                if (_remaining == 0)
                    return true;
                int v = select();
                if (_saturation[v] >= _k)
                    return false;
                int limit = std::min(_k, _max_used + 1);
                for (int c = 1; c <= limit; ++c) {
                    if (_forbidden[v][c] != 0)
                        continue;
                    if (! _counter.tick())
                        return false;
                    int saved_max = _max_used;
                    _max_used = std::max(_max_used, c);
                    assign(v, c);
                    --_remaining;
                    if (expand())
                        return true;
                    ++_remaining;
                    unassign(v);
                    _max_used = saved_max;
                    if (_counter.exceeded())
                        return false;
                }
                return false;
            }

            const SimpleGraph & _g;
            int _k;
            NodeCounter & _counter;
            std::vector<int> _colour;
            std::vector<std::vector<int>> _forbidden;
            std::vector<int> _saturation;
            int _max_used = 0;
            int _remaining = 0;
        };

        auto greedy_dsatur(const SimpleGraph & g) -> std::vector<int>
        {
            std::vector<int> colour(g.order(), 0);
            std::vector<std::set<int>> seen(g.order());
            for (int step = 0; step < g.order(); ++step) {
                int best = -1;
                for (int v = 0; v < g.order(); ++v)
                    if (colour[v] == 0
                        && (best == -1 || seen[v].size() > seen[best].size()
                            || (seen[v].size() == seen[best].size() && g.degree(v) > g.degree(best))))
                        best = v;
                int c = 1;
                while (seen[best].count(c))
                    ++c;
                colour[best] = c;
                const auto & row = g.neighbourhood(best);
                for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
                    seen[w].insert(c);
            }
            return colour;
        }
    }

    auto k_colouring(const SimpleGraph & g, int k, std::uint64_t budget) -> ColourabilityResult
    {
        ColourabilityResult result;
        NodeCounter counter(budget);
        if (g.order() == 0) {
            result.status = SearchStatus::found;
            result.colouring.emplace(g, std::vector<int>{}, std::max(k, 0));
            return result;
        }
        if (k < 1)
            return result;
        Dsatur search(g, k, counter);
        if (search.run(greedy_clique(g))) {
            result.status = SearchStatus::found;
            result.colouring.emplace(g, search.colours(), k);
        }
        else
            result.status = counter.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
        result.nodes = counter.nodes();
        return result;
    }

    auto chromatic_number(const SimpleGraph & g, std::uint64_t budget) -> ChromaticResult
    {
        ChromaticResult result;
        if (g.order() == 0)
            return result;
        result.clique = greedy_clique(g);
        result.lower_bound = static_cast<int>(result.clique.size());
        auto greedy = greedy_dsatur(g);
        result.upper_bound = *std::max_element(greedy.begin(), greedy.end());

        NodeCounter counter(budget);
        for (int k = result.lower_bound; k <= result.upper_bound; ++k) {
            if (k == result.upper_bound) {
                result.status = SearchStatus::found;
                result.value = k;
                result.colouring.emplace(g, greedy, k);
                break;
            }
            Dsatur search(g, k, counter);
            std::uint64_t before = counter.nodes();
            if (search.run(result.clique)) {
                result.status = SearchStatus::found;
                result.value = k;
                result.colouring.emplace(g, search.colours(), k);
                break;
            }
            if (counter.exceeded()) {
                result.status = SearchStatus::budget_exceeded;
                result.lower_bound = k;
                break;
            }
            result.refutations.emplace_back(k, counter.nodes() - before);
            result.lower_bound = k + 1;
        }
        if (result.status == SearchStatus::found)
            result.lower_bound = result.upper_bound = result.value;
        result.nodes = counter.nodes();
        return result;
    }

    auto min_element_coloring(int n, int k, int s) -> Coloring
    {
        auto g = stable_kneser_graph(n, k, s);
        std::vector<int> colours(g.order());
        for (int v = 0; v < g.order(); ++v)
            colours[v] = min_element(g.label(v));
        return Coloring(g, std::move(colours), n - s * (k - 1));
    }

    auto colorful_bipartite_violation(const SimpleGraph & g, const Coloring & c, const ColorfulBipartite & b)
        -> std::string
    {
        if (b.left.size() != b.left_colours.size() || b.right.size() != b.right_colours.size())
            return "colour lists do not match vertex lists";
        std::vector<std::pair<int, int>> ranked; // (colour, side)
        std::set<int> vertices;
        for (int side = 0; side < 2; ++side) {
            const auto & vs = side == 0 ? b.left : b.right;
            const auto & cs = side == 0 ? b.left_colours : b.right_colours;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (vs[i] < 0 || vs[i] >= g.order())
                    return "vertex out of range";
                if (c[vs[i]] != cs[i])
                    return "recorded colour differs from the colouring at vertex " + std::to_string(vs[i]);
                vertices.insert(vs[i]);
                ranked.emplace_back(cs[i], side);
            }
        }
        if (vertices.size() != b.left.size() + b.right.size())
            return "sides are not disjoint";
        for (int u : b.left)
            for (int v : b.right)
                if (! g.adjacent(u, v))
                    return "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent";
        std::sort(ranked.begin(), ranked.end());
        for (std::size_t i = 0; i + 1 < ranked.size(); ++i) {
            if (ranked[i].first == ranked[i + 1].first)
                return "colour " + std::to_string(ranked[i].first) + " repeats";
            if (ranked[i].second == ranked[i + 1].second)
                return "colours do not alternate between the sides";
        }
        return {};
    }

    namespace
    {
        class SideSearch
        {
        public:
            SideSearch(const SimpleGraph & g, const Coloring & c, NodeCounter & counter) :
                _g(g), _counter(counter)
            {
                _classes.assign(c.palette() + 1, g.empty_set());
                for (int v = 0; v < g.order(); ++v)
                    _classes[c[v]].set(v);
            }

            // one vertex per colour; every left vertex adjacent to every right vertex
            auto run(const std::vector<int> & left, const std::vector<int> & right) -> std::optional<ColorfulBipartite>
            {
                _tasks.clear();
                for (int colour : left)
                    _tasks.emplace_back(colour, 0);
                for (int colour : right)
                    _tasks.emplace_back(colour, 1);
                // small colour classes first
                std::stable_sort(_tasks.begin(), _tasks.end(), [&](auto & a, auto & b) {
                    return _classes[a.first].count() < _classes[b.first].count();
                });
                _chosen.assign(_tasks.size(), -1);
                VertexSet all = _g.empty_set();
                all.set();
                if (! expand(0, all, all))
                    return std::nullopt;
                ColorfulBipartite result;
                for (std::size_t i = 0; i < _tasks.size(); ++i) {
                    auto & side = _tasks[i].second == 0 ? result.left : result.right;
                    auto & colours = _tasks[i].second == 0 ? result.left_colours : result.right_colours;
                    side.push_back(_chosen[i]);
                    colours.push_back(_tasks[i].first);
                }
                // report each side in increasing colour order
                auto reorder = [](std::vector<int> & vs, std::vector<int> & cs) {
                    std::vector<std::size_t> idx(vs.size());
                    std::iota(idx.begin(), idx.end(), 0);
                    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return cs[a] < cs[b]; });
                    std::vector<int> v2, c2;
                    for (auto i : idx) {
                        v2.push_back(vs[i]);
                        c2.push_back(cs[i]);
                    }
                    vs = v2;
                    cs = c2;
                };
                reorder(result.left, result.left_colours);
                reorder(result.right, result.right_colours);
                return result;
            }

        private:
            // allowed[side]: common neighbours of everything chosen on the other side
            auto expand(std::size_t index, const VertexSet & allowed_left, const VertexSet & allowed_right) -> bool
            {
                if (index == _tasks.size())
                    return true;
                auto [colour, side] = _tasks[index];
                VertexSet candidates = _classes[colour] & (side == 0 ? allowed_left : allowed_right);
                for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
                    if (! _counter.tick())
                        return false;
                    _chosen[index] = static_cast<int>(v);
                    const auto & nv = _g.neighbourhood(static_cast<int>(v));
                    bool ok = side == 0 ? expand(index + 1, allowed_left, allowed_right & nv)
                                        : expand(index + 1, allowed_left & nv, allowed_right);
                    if (ok)
                        return true;
                    if (_counter.exceeded())
                        return false;
                }
                return false;
            }

            const SimpleGraph & _g;
            NodeCounter & _counter;
            std::vector<VertexSet> _classes;
            std::vector<std::pair<int, int>> _tasks;
            std::vector<int> _chosen;
        };

        void for_each_combination(int n, int k, int next, std::vector<int> & current,
            const std::function<bool(const std::vector<int> &)> & visit, bool & stop)
        {
            if (stop)
                return;
            if (static_cast<int>(current.size()) == k) {
                stop = visit(current);
                return;
            }
            for (int e = next; e <= n - (k - static_cast<int>(current.size())) + 1 && ! stop; ++e) {
                current.push_back(e);
                for_each_combination(n, k, e + 1, current, visit, stop);
                current.pop_back();
            }
        }
    }

    auto find_colorful_bipartite(const SimpleGraph & g, const Coloring & c, int t, std::uint64_t budget)
        -> BipartiteSearchResult
    {
        if (c.size() != g.order() || ! is_proper_colouring(g, c.colours()))
            throw PreconditionError("colourful bipartite search needs a proper colouring of the graph");
        BipartiteSearchResult result;
        if (t < 1 || t > c.palette())
            return result;
        NodeCounter counter(budget);
        SideSearch search(g, c, counter);
        std::vector<int> current;
        bool stop = false;
        for_each_combination(c.palette(), t, 1, current, [&](const std::vector<int> & colours) {
            ++result.colour_sets;
            std::vector<int> odd, even;
            for (std::size_t i = 0; i < colours.size(); ++i)
                (i % 2 == 0 ? odd : even).push_back(colours[i]);
            if (auto found = search.run(odd, even)) {
                result.subgraph = std::move(found);
                return true;
            }
            return counter.exceeded();
        }, stop);
        result.nodes = counter.nodes();
        if (result.subgraph)
            result.status = SearchStatus::found;
        else
            result.status = counter.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
        return result;
    }

    auto find_klm_for_partition(const SimpleGraph & g, const Coloring & c, const std::vector<int> & a,
        const std::vector<int> & b, std::uint64_t budget) -> BipartiteSearchResult
    {
        if (c.size() != g.order() || ! is_proper_colouring(g, c.colours()))
            throw PreconditionError("K_{l,m} search needs a proper colouring of the graph");
        if (a.empty() || b.empty())
            throw PreconditionError("both colour sets must be nonempty");
        std::vector<int> all = a;
        all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        std::vector<int> palette(c.palette());
        std::iota(palette.begin(), palette.end(), 1);
        if (all != palette)
            throw PreconditionError("A and B must partition the palette 1.." + std::to_string(c.palette()));

        BipartiteSearchResult result;
        result.colour_sets = 1;
        NodeCounter counter(budget);
        SideSearch search(g, c, counter);
        std::vector<int> sorted_a = a, sorted_b = b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        result.subgraph = search.run(sorted_a, sorted_b);
        result.nodes = counter.nodes();
        if (result.subgraph)
            result.status = SearchStatus::found;
        else
            result.status = counter.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
        return result;
    }

    auto is_tight_cycle(const SimpleGraph & g, const Coloring & c, int r, const std::vector<int> & cycle) -> bool
    {
        if (cycle.size() < 3 || r < 1)
            return false;
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size())
            return false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
                return false;
            if (c[v] != c[u] % r + 1)
                return false;
        }
        return true;
    }

    auto find_tight_cycle(const SimpleGraph & g, const Coloring & c, int r) -> TightCycleResult
    {
        if (c.size() != g.order() || ! is_proper_colouring(g, c.colours()))
            throw PreconditionError("tight cycle search needs a proper colouring of the graph");
        if (r < 1 || c.palette() > r)
            throw PreconditionError("colours must lie in 1..r");
        TightCycleResult result;
        if (r == 1)
            return result;

        // iterative DFS over the arcs u -> v with c(v) = c(u) + 1 mod r; for r = 2 every
        // edge is an arc both ways and the parent arc is skipped
        enum : char { white, grey, black };
        std::vector<char> state(g.order(), white);
        std::vector<int> parent(g.order(), -1);
        for (int root = 0; root < g.order() && ! result.cycle; ++root) {
            if (state[root] != white)
                continue;
            std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
            std::vector<std::vector<int>> successors(g.order());
            auto successors_of = [&](int u) -> const std::vector<int> & {
                if (successors[u].empty())
                    for (int v : members(g.neighbourhood(u)))
                        if (c[v] == c[u] % r + 1)
                            successors[u].push_back(v);
                return successors[u];
            };
            state[root] = grey;
            while (! stack.empty() && ! result.cycle) {
                auto & [u, next] = stack.back();
                const auto & out = successors_of(u);
                if (next == out.size()) {
                    state[u] = black;
                    stack.pop_back();
                    continue;
                }
                int v = out[next++];
                ++result.arcs_examined;
                if (r == 2 && v == parent[u])
                    continue;
                if (state[v] == grey) {
                    std::vector<int> cycle;
                    auto it = std::find_if(stack.begin(), stack.end(), [&](auto & e) { return e.first == v; });
                    for (; it != stack.end(); ++it)
                        cycle.push_back(it->first);
                    result.cycle = cycle;
                }
                else if (state[v] == white) {
                    state[v] = grey;
                    parent[v] = u;
                    stack.emplace_back(v, 0);
                }
            }
        }
        return result;
    }
}
