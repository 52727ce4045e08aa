#include <kneser/alternation.hpp>
#include <kneser/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace kneser
{
    namespace
    {
        // Builds alternating sequences of positions; odd-ranked positions go to
        // X+, even-ranked to X-. Only the chosen positions matter: zeroing other
        // entries keeps alt(X) and only shrinks X+ and X-.
        class AlternationSearch
        {
        public:
            AlternationSearch(const Hypergraph & positional, AlternationMode mode) :
                _h(positional), _mode(mode), _n(positional.ground_size())
            {
            }

            auto run() -> AlternationWitness
            {
                expand(1, true, 0, 0, 0);
                return {_best, SignVector(_n, _best_plus, _best_minus)};
            }

        private:
            void expand(int next, bool to_plus, Mask plus, Mask minus, int length)
            {
                if (length > _best) {
                    _best = length;
                    _best_plus = plus;
                    _best_minus = minus;
                }
                for (int position = next; position <= _n; ++position) {
                    if (length + (_n - position + 1) <= _best)
                        return;
                    Mask p = plus, m = minus;
                    (to_plus ? p : m) |= bit_of(position);
                    if (! admissible(p, m, to_plus))
                        continue;
                    expand(position + 1, ! to_plus, p, m, length + 1);
                }
            }

            auto admissible(Mask plus, Mask minus, bool changed_plus) const -> bool
            {
                if (_mode == AlternationMode::alt)
                    return ! _h.induces_edge(changed_plus ? plus : minus);
                return ! _h.induces_edge(plus) || ! _h.induces_edge(minus);
            }

            const Hypergraph & _h;
            AlternationMode _mode;
            int _n;
            int _best = 0;
            Mask _best_plus = 0, _best_minus = 0;
        };

        auto identity(int n) -> std::vector<int>
        {
            std::vector<int> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 1);
            return sigma;
        }

        auto rotate_vertices(const Hypergraph & h, int shift) -> Hypergraph
        {
            std::vector<Mask> edges;
            for (Mask e : h.edges())
                edges.push_back(rotate(e, h.ground_size(), shift));
            return Hypergraph(h.ground_size(), std::move(edges));
        }

        auto reflect_vertices(const Hypergraph & h) -> Hypergraph
        {
            int n = h.ground_size();
            std::vector<Mask> edges;
            for (Mask e : h.edges()) {
                Mask image = 0;
                for (int v : elements_of(e))
                    image |= bit_of(n + 1 - v);
                edges.push_back(image);
            }
            return Hypergraph(n, std::move(edges));
        }

        // Orbit representatives of sigma under (vertex automorphisms from the
        // dihedral group) x (position reversal). alt_sigma is constant on orbits.
        class SigmaSymmetry
        {
        public:
            explicit SigmaSymmetry(const Hypergraph & h) : _n(h.ground_size())
            {
                if (_n >= 2) {
                    _rotations = rotate_vertices(h, 1) == h;
                    _reflection = reflect_vertices(h) == h;
                }
            }

            auto rotation_invariant() const -> bool { return _rotations; }

            auto is_canonical(const std::vector<int> & sigma) const -> bool
            {
                std::vector<int> image(_n);
                for (int reflect = 0; reflect <= (_reflection ? 1 : 0); ++reflect)
                    for (int reverse = 0; reverse <= 1; ++reverse) {
                        for (int i = 0; i < _n; ++i) {
                            int v = sigma[reverse ? _n - 1 - i : i];
                            image[i] = reflect ? _n + 1 - v : v;
                        }
                        if (_rotations) {
                            for (int shift = 0; shift < _n; ++shift) {
                                auto rotated = image;
                                for (auto & v : rotated)
                                    v = ((v - 1 + shift) % _n) + 1;
                                if (rotated < sigma)
                                    return false;
                            }
                        }
                        else if (image < sigma)
                            return false;
                    }
                return true;
            }

        private:
            int _n;
            bool _rotations = false;
            bool _reflection = false;
        };
    }

    auto alternation_under(const Hypergraph & h, const std::vector<int> & sigma, AlternationMode mode)
        -> AlternationWitness
    {
        Hypergraph positional = h.pull_back(sigma);
        return AlternationSearch(positional, mode).run();
    }

    auto alt_sigma(const Hypergraph & h, const std::vector<int> & sigma) -> int
    {
        return alternation_under(h, sigma, AlternationMode::alt).value;
    }

    auto salt_sigma(const Hypergraph & h, const std::vector<int> & sigma) -> int
    {
        return alternation_under(h, sigma, AlternationMode::salt).value;
    }

    auto alt_full(const Hypergraph & h, AlternationMode mode, AlternationStrategy strategy,
        AlternationOptions options) -> AlternationReport
    {
        const int n = h.ground_size();
        AlternationReport report;
        report.mode = mode;
        report.value = n + 1;

        auto consider = [&](const std::vector<int> & sigma) {
            auto witness = alternation_under(h, sigma, mode);
            ++report.bijections_examined;
            if (witness.value < report.value) {
                report.value = witness.value;
                report.witness_sigma = sigma;
                report.witness_vector = witness.vector;
            }
        };

        switch (strategy) {
            case AlternationStrategy::exhaustive: {
                if (n > max_exhaustive_ground_size)
                    throw PreconditionError("exhaustive alternation search is limited to n <= "
                        + std::to_string(max_exhaustive_ground_size) + " (got n = " + std::to_string(n) + ")");
                SigmaSymmetry symmetry(h);
                auto sigma = identity(n);
                do {
                    if (symmetry.rotation_invariant() && n > 0 && sigma[0] != 1)
                        break;
                    if (symmetry.is_canonical(sigma))
                        consider(sigma);
                } while (std::next_permutation(sigma.begin(), sigma.end()));
                report.proven_minimum = true;
                break;
            }
            case AlternationStrategy::identity_only:
                consider(identity(n));
                report.proven_minimum = n <= 1;
                break;
            case AlternationStrategy::heuristic: {
                auto sigma = identity(n);
                consider(sigma);
                std::mt19937_64 rng(options.seed);
                for (int r = 0; r < options.restarts; ++r) {
                    std::shuffle(sigma.begin(), sigma.end(), rng);
                    consider(sigma);
                }
                report.proven_minimum = n <= 1;
                break;
            }
        }
        if (report.witness_sigma.empty() && n == 0) {
            report.value = 0;
            report.witness_vector = SignVector(0, 0, 0);
        }
        return report;
    }

    auto theorem_a_bound(const Hypergraph & h, AlternationStrategy strategy, AlternationOptions options)
        -> TheoremABound
    {
        TheoremABound bound;
        bound.alt = alt_full(h, AlternationMode::alt, strategy, options);
        bound.salt = alt_full(h, AlternationMode::salt, strategy, options);
        const int n = h.ground_size();
        bound.value = std::max(n - bound.alt.value, n - bound.salt.value + 1);
        bound.proven = bound.alt.proven_minimum && bound.salt.proven_minimum;
        return bound;
    }

    namespace
    {
        class TwoColouring
        {
        public:
            TwoColouring(const Hypergraph & h, Mask vertices) : _order(elements_of(vertices))
            {
                // each relevant edge is checked once its largest vertex is coloured
                _closing.resize(max_ground_size + 1);
                for (Mask e : h.edges())
                    if (is_subset(e, vertices))
                        _closing[max_element(e)].push_back(e);
            }

            auto run() -> std::optional<Mask>
            {
                if (expand(0, 0, 0))
                    return _first_class;
                return std::nullopt;
            }

        private:
            auto expand(std::size_t index, Mask coloured, Mask first) -> bool
            {
                if (index == _order.size()) {
                    _first_class = first;
                    return true;
                }
                int v = _order[index];
                Mask done = coloured | bit_of(v);
                // the first vertex goes to the first class without loss of generality
                for (int side = 0; side < (index == 0 ? 1 : 2); ++side) {
                    Mask with = side == 0 ? first | bit_of(v) : first;
                    Mask second = done & ~with;
                    bool ok = std::none_of(_closing[v].begin(), _closing[v].end(),
                        [&](Mask e) { return is_subset(e, with) || is_subset(e, second); });
                    if (ok && expand(index + 1, done, with))
                        return true;
                }
                return false;
            }

            std::vector<int> _order;
            std::vector<std::vector<Mask>> _closing;
            Mask _first_class = 0;
        };

        void for_each_subset_of_size(int n, int size, int next, Mask current, const std::function<bool(Mask)> & visit,
            bool & stop)
        {
            if (stop)
                return;
            if (size == 0) {
                stop = visit(current);
                return;
            }
            for (int e = next; e <= n - size + 1 && ! stop; ++e)
                for_each_subset_of_size(n, size - 1, e + 1, current | bit_of(e), visit, stop);
        }
    }

    auto two_colouring(const Hypergraph & h, Mask vertices) -> std::optional<Mask>
    {
        return TwoColouring(h, vertices).run();
    }

    auto colorability_defect(const Hypergraph & h) -> ColorabilityDefect
    {
        const int n = h.ground_size();
        if (n > max_defect_ground_size)
            throw PreconditionError("colorability defect is limited to n <= " + std::to_string(max_defect_ground_size));
        ColorabilityDefect result;
        for (int r = 0; r <= n; ++r) {
            bool stop = false;
            for_each_subset_of_size(n, r, 1, 0, [&](Mask removed) {
                auto colouring = two_colouring(h, full_mask(n) & ~removed);
                if (! colouring)
                    return false;
                result = {r, removed, *colouring};
                return true;
            }, stop);
            if (stop)
                return result;
        }
        throw std::logic_error("removing every vertex always leaves a 2-colourable hypergraph");
    }
}
