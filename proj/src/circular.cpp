#include <kneser/circular.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/independent_sets.hpp>
#include <kneser/stability.hpp>
#include <kneser/subset.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kneser
{
    CircularNumber::CircularNumber(std::int64_t p, std::int64_t q)
    {
        if (q <= 0 || p < 0)
            throw PreconditionError("circular number needs p >= 0 and q > 0");
        auto g = std::gcd(p, q);
        if (g == 0)
            g = 1;
        _p = p / g;
        _q = q / g;
        if (_p == 0)
            _q = 1;
    }

    auto CircularNumber::to_string() const -> std::string
    {
        return std::to_string(_p) + "/" + std::to_string(_q);
    }

    auto CircularNumber::parse(std::string_view text) -> CircularNumber
    {
        auto number = [&](std::string_view part) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (ec != std::errc{} || ptr != part.data() + part.size())
                throw FormatError("bad fraction '" + std::string(text) + "'");
            return value;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return CircularNumber(number(text), 1);
        return CircularNumber(number(text.substr(0, slash)), number(text.substr(slash + 1)));
    }

    auto candidate_fractions(int chi, int order) -> std::vector<CircularNumber>
    {
        std::vector<CircularNumber> result;
        if (chi <= 0)
            return result;
        if (chi == 1)
            return {CircularNumber(1, 1)};
        for (std::int64_t q = 1; 2 * q <= order; ++q)
            for (std::int64_t p = (chi - 1) * q + 1; p <= chi * q && p <= order; ++p)
                if (p >= 2 * q && std::gcd(p, q) == 1)
                    result.emplace_back(p, q);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto circular_chromatic_number(const SimpleGraph & g, std::uint64_t budget) -> CircularResult
    {
        CircularResult result;
        if (g.order() == 0) {
            result.value = CircularNumber(0, 1);
            return result;
        }

        auto chi = chromatic_number(g, budget);
        result.nodes = chi.nodes;
        if (chi.status != SearchStatus::found) {
            result.status = SearchStatus::budget_exceeded;
            result.value = CircularNumber(chi.upper_bound, 1);
            if (chi.lower_bound >= 2)
                result.largest_refuted = CircularNumber(chi.lower_bound - 1, 1);
            return result;
        }
        result.chromatic = chi.value;

        auto candidates = candidate_fractions(chi.value, g.order());
        for (const auto & fraction : candidates) {
            if (fraction == CircularNumber(chi.value, 1))
                break;
            auto remaining = budget == unlimited_budget ? budget : budget - std::min(budget, result.nodes);
            auto target = circular_complete_graph(static_cast<int>(fraction.p()), static_cast<int>(fraction.q()));
            // rotations make K_{p/q} vertex-transitive; x -> -x mod p fixes 0
            std::vector<int> reflection(fraction.p());
            for (int x = 0; x < fraction.p(); ++x)
                reflection[x] = static_cast<int>((fraction.p() - x) % fraction.p());
            auto search = find_homomorphism(g, target, remaining,
                {.pin_component_roots = true, .target_involution = std::move(reflection)});
            result.nodes += search.nodes;
            if (search.status == SearchStatus::found) {
                result.value = fraction;
                result.homomorphism = std::move(search.homomorphism);
                return result;
            }
            if (search.status == SearchStatus::budget_exceeded) {
                result.status = SearchStatus::budget_exceeded;
                break;
            }
            result.refutations.push_back({fraction, search.status, search.nodes});
            result.largest_refuted = fraction;
        }

        // chi itself: the colouring shifted to 0..chi-1 maps into K_{chi/1}
        result.value = CircularNumber(chi.value, 1);
        std::vector<int> map(g.order());
        for (int v = 0; v < g.order(); ++v)
            map[v] = (*chi.colouring)[v] - 1;
        result.homomorphism.emplace(g, circular_complete_graph(chi.value, 1), std::move(map));
        if (! result.largest_refuted && chi.value >= 2)
            result.largest_refuted = CircularNumber(chi.value - 1, 1);
        return result;
    }

    auto is_free_independent(const SimpleGraph & g, const VertexSet & f) -> std::optional<Edge>
    {
        if (f.size() != static_cast<std::size_t>(g.order()))
            throw PreconditionError("vertex set size does not match graph order");
        if (! is_independent(g, f))
            throw PreconditionError("set is not independent");
        for (auto [u, v] : g.edges())
            if (! (g.neighbourhood(u) | g.neighbourhood(v)).intersects(f))
                return Edge{u, v};
        return std::nullopt;
    }

    namespace
    {
        void check_guard(const SimpleGraph & g, int max_order)
        {
            if (g.order() > max_order)
                throw PreconditionError("graph has " + std::to_string(g.order())
                    + " vertices; exact free independent set search is limited to " + std::to_string(max_order));
        }

        auto region_of(const SimpleGraph & g, Edge e) -> VertexSet
        {
            return ~(g.neighbourhood(e.first) | g.neighbourhood(e.second));
        }
    }

    auto max_free_independent_size(const SimpleGraph & g, std::uint64_t budget, int max_order)
        -> FreeIndependentResult
    {
        check_guard(g, max_order);
        FreeIndependentResult result;
        result.set = g.empty_set();
        for (auto e : g.edges()) {
            auto region = region_of(g, e);
            if (static_cast<int>(region.count()) <= result.value && result.witness)
                continue;
            auto remaining = budget == unlimited_budget ? budget : budget - std::min(budget, result.nodes);
            auto best = maximum_independent_set(g, region, remaining);
            result.nodes += best.nodes;
            if (best.status == SearchStatus::budget_exceeded) {
                result.status = SearchStatus::budget_exceeded;
                return result;
            }
            if (! result.witness || static_cast<int>(best.set.count()) > result.value) {
                result.value = static_cast<int>(best.set.count());
                result.set = best.set;
                result.witness = e;
            }
        }
        if (result.value == 0) {
            result.set = g.empty_set();
            result.witness.reset();
        }
        return result;
    }

    namespace
    {
        class FreePartitionSearch
        {
        public:
            FreePartitionSearch(const SimpleGraph & g, const std::vector<Edge> & edges,
                const std::vector<boost::dynamic_bitset<>> & compatible, int alpha_bar, NodeCounter & counter) :
                _g(g), _edges(edges), _compatible(compatible), _alpha_bar(alpha_bar), _counter(counter)
            {
                _order.resize(g.order());
                std::iota(_order.begin(), _order.end(), 0);
                std::stable_sort(_order.begin(), _order.end(),
                    [&](int a, int b) { return compatible[a].count() < compatible[b].count(); });
            }

            auto run(int k) -> std::optional<std::vector<FreeClass>>
            {
                _k = k;
                _members.assign(k, _g.empty_set());
                _sizes.assign(k, 0);
                _compat.assign(k, boost::dynamic_bitset<>(_edges.size()));
                _used = 0;
                if (! expand(0))
                    return std::nullopt;
                std::vector<FreeClass> classes;
                for (int j = 0; j < _used; ++j)
                    classes.push_back({members(_members[j]), _edges[_compat[j].find_first()]});
                return classes;
            }

        private:
            auto expand(int index) -> bool
            {
                int remaining = _g.order() - index;
                if (remaining == 0)
                    return true;
                long capacity = static_cast<long>(_k - _used) * _alpha_bar;
                for (int j = 0; j < _used; ++j)
                    capacity += _alpha_bar - _sizes[j];
                if (capacity < remaining)
                    return false;

                int v = _order[index];
                for (int j = 0; j < _used; ++j) {
                    if (_members[j].intersects(_g.neighbourhood(v)) || ! _compat[j].intersects(_compatible[v]))
                        continue;
                    if (! _counter.tick())
                        return false;
                    auto saved = _compat[j];
                    _compat[j] &= _compatible[v];
                    _members[j].set(v);
                    ++_sizes[j];
                    if (expand(index + 1))
                        return true;
                    --_sizes[j];
                    _members[j].reset(v);
                    _compat[j] = std::move(saved);
                    if (_counter.exceeded())
                        return false;
                }
                if (_used < _k) {
                    if (! _counter.tick())
                        return false;
                    int j = _used++;
                    _compat[j] = _compatible[v];
                    _members[j].set(v);
                    _sizes[j] = 1;
                    if (expand(index + 1))
                        return true;
                    _members[j].reset(v);
                    _sizes[j] = 0;
                    --_used;
                }
                return false;
            }

            const SimpleGraph & _g;
            const std::vector<Edge> & _edges;
            const std::vector<boost::dynamic_bitset<>> & _compatible;
            int _alpha_bar;
            NodeCounter & _counter;
            std::vector<int> _order;
            int _k = 0;
            int _used = 0;
            std::vector<VertexSet> _members;
            std::vector<int> _sizes;
            std::vector<boost::dynamic_bitset<>> _compat;
        };
    }

    auto free_chromatic_number(const SimpleGraph & g, std::uint64_t budget, int max_order) -> FreeChromaticResult
    {
        FreeChromaticResult result;
        if (g.order() == 0)
            return result;

        auto edges = g.edges();
        // compatible[v]: edges whose region avoids N(u) ∪ N(w) at v
        std::vector<boost::dynamic_bitset<>> compatible(g.order(), boost::dynamic_bitset<>(edges.size()));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto region = region_of(g, edges[i]);
            for (auto v = region.find_first(); v != VertexSet::npos; v = region.find_next(v))
                compatible[v].set(i);
        }
        for (int v = 0; v < g.order(); ++v)
            if (compatible[v].none()) {
                result.infinite = true;
                result.blocking_vertex = v;
                return result;
            }

        check_guard(g, max_order);
        auto alpha = max_free_independent_size(g, budget, max_order);
        result.nodes = alpha.nodes;
        if (alpha.status == SearchStatus::budget_exceeded) {
            result.status = SearchStatus::budget_exceeded;
            return result;
        }
        result.alpha_bar = alpha.value;
        int lower = (g.order() + alpha.value - 1) / alpha.value;
        lower = std::max(lower, static_cast<int>(greedy_clique(g).size()));
        result.lower_bound = lower;

        NodeCounter counter(budget == unlimited_budget ? budget : budget - std::min(budget, result.nodes));
        FreePartitionSearch search(g, edges, compatible, alpha.value, counter);
        for (int k = lower; k <= g.order(); ++k) {
            auto classes = search.run(k);
            if (classes) {
                result.value = k;
                result.lower_bound = k;
                result.classes = std::move(*classes);
                break;
            }
            if (counter.exceeded()) {
                result.status = SearchStatus::budget_exceeded;
                result.lower_bound = k;
                break;
            }
        }
        result.nodes += counter.nodes();
        return result;
    }

    auto chi_eq_chic_sufficient(const SimpleGraph & g, std::uint64_t budget, int max_order) -> EqualityReport
    {
        EqualityReport report;
        report.chromatic = chromatic_number(g, budget);
        report.free = free_chromatic_number(g, budget, max_order);
        if (report.chromatic.status == SearchStatus::found) {
            if (report.free.infinite
                || (report.free.status == SearchStatus::found && report.free.value >= 2 * report.chromatic.value))
                report.verdict = EqualityVerdict::proven_equal;
        }
        return report;
    }

    auto hilton_milner_check(int n, int k, std::uint64_t budget) -> HiltonMilnerReport
    {
        if (k < 1 || n <= 2 * k)
            throw PreconditionError("Hilton-Milner check needs n > 2k >= 2");
        if (binomial(n, k) > max_hilton_milner_vertices)
            throw PreconditionError("C(n,k) exceeds " + std::to_string(max_hilton_milner_vertices));

        HiltonMilnerReport report;
        report.n = n;
        report.k = k;
        report.free_bound = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1);
        report.bound = report.free_bound + 2;
        report.relaxed_bound = k * binomial(n - 2, k - 2);
        report.relaxed_ok = report.free_bound <= report.relaxed_bound;

        auto g = kneser_graph(n, k);
        auto status = for_each_maximal_independent_set(g, [&](const VertexSet & set) {
            ++report.maximal_sets;
            if (static_cast<std::int64_t>(set.count()) < report.bound)
                return true;
            ++report.large_sets;
            Mask common = full_mask(n);
            for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
                common &= g.label(static_cast<int>(v));
            if (common == 0 && report.common_element_ok) {
                report.common_element_ok = false;
                std::vector<Mask> family;
                for (int v : members(set))
                    family.push_back(g.label(v));
                report.counterexample = family;
            }
            return true;
        }, budget);
        if (status == SearchStatus::budget_exceeded) {
            report.budget_exceeded = true;
            return report;
        }

        auto alpha = max_free_independent_size(g, budget, g.order());
        if (alpha.status == SearchStatus::budget_exceeded) {
            report.budget_exceeded = true;
            return report;
        }
        report.alpha_bar = alpha.value;
        report.alpha_bar_ok = alpha.value <= report.free_bound;
        return report;
    }

    auto threshold_report(int n, int k, int s, bool run_exact, std::uint64_t budget) -> ThresholdReport
    {
        if (n < 1 || k < 1 || s < 1)
            throw PreconditionError("threshold report needs positive n, k, s");
        ThresholdReport r;
        r.n = n;
        r.k = k;
        r.s = s;
        std::int64_t kk = k;
        r.kneser_threshold = 2 * kk * kk * (kk - 1);
        r.stable_threshold = r.kneser_threshold + (s - 1) * kk * (kk - 1) + 1;
        r.stable_hypothesis = n >= r.stable_threshold;
        r.vertex_count = n >= s * k ? count_formula(n, k, s).total : 0;
        r.induced_vertex_bound = Rational(r.kneser_threshold) * binomial(n, k) / n;
        r.induced_hypothesis = n >= r.kneser_threshold && Rational(r.vertex_count) >= r.induced_vertex_bound;
        r.free_bound = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1);
        r.relaxed_free_bound = kk * binomial(n - 2, k - 2);

        if (k >= 2) {
            std::int64_t slack = n - 1 - (s - 1) * kk * (kk - 1);
            auto c = binomial(n - 2, k - 2);
            r.vertex_lower_bound = Rational(n, kk * (kk - 1)) * slack * c;
            r.phi_lower_bound = Rational(n, kk * kk * (kk - 1)) * slack;
            r.induced_phi_bound = r.induced_vertex_bound / (kk * c);

            bool ok = Rational(r.vertex_count) >= *r.vertex_lower_bound || n < s * k;
            ok = ok && *r.phi_lower_bound == *r.vertex_lower_bound / (kk * c);
            ok = ok && (*r.phi_lower_bound >= Rational(2 * n)) == r.stable_hypothesis;
            ok = ok && *r.induced_phi_bound == Rational(2 * (n - 1));
            if (n > 2 * k)
                ok = ok && r.free_bound <= r.relaxed_free_bound;
            r.chain_consistent = ok;
        }

        if (run_exact && r.vertex_count > 0 && r.vertex_count <= desk_scale_vertices) {
            r.exact_attempted = true;
            auto g = stable_kneser_graph(n, k, s);
            r.free = free_chromatic_number(g, budget, g.order());
            const auto & phi = *r.free;
            bool phi_exact = phi.infinite || phi.status == SearchStatus::found;
            bool ok = true;
            if (phi_exact && ! phi.infinite && phi.alpha_bar > 0)
                ok = ok && static_cast<std::int64_t>(phi.value) * phi.alpha_bar >= r.vertex_count;
            if (r.stable_hypothesis && phi_exact)
                ok = ok && (phi.infinite || phi.value >= 2 * n);
            if (r.induced_hypothesis && phi_exact)
                ok = ok && (phi.infinite || phi.value >= 2 * n - 2);
            if (r.stable_hypothesis || r.induced_hypothesis) {
                r.circular = circular_chromatic_number(g, budget);
                const auto & chic = *r.circular;
                if (chic.status == SearchStatus::found) {
                    ok = ok && chic.value == CircularNumber(chic.chromatic, 1);
                    if (phi_exact && ! phi.infinite)
                        ok = ok && phi.value >= 2 * chic.chromatic;
                }
            }
            r.exact_consistent = ok;
        }
        return r;
    }
}
