#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/stability.hpp>
#include <kneser/topology.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace kneser
{
    LabelMap::LabelMap(const Hypergraph & h, std::vector<int> sigma, Coloring c, AlternationMode mode) :
        _h(h), _sigma(std::move(sigma)), _c(std::move(c)), _mode(mode), _graph(general_kneser_graph(h))
    {
        if (! is_bijection(_sigma, _h.ground_size()))
            throw PreconditionError("sigma is not a bijection onto the vertex set");
        if (_c.size() != _graph.order() || ! is_proper_colouring(_graph, _c.colours()))
            throw PreconditionError("label map needs a proper colouring of KG(H)");
        if (_c.palette() > max_ground_size)
            throw PreconditionError("palette too large for a colour sign vector");
        for (Mask e : _h.edges()) {
            Mask positions = 0;
            for (int j = 1; j <= n(); ++j)
                if (contains(e, _sigma[j - 1]))
                    positions |= bit_of(j);
            _positional.push_back(positions);
        }
        _threshold = alternation_under(_h, _sigma, _mode).value;
    }

    auto LabelMap::colour_vector(const SignVector & x) const -> SignVector
    {
        Mask plus = 0, minus = 0;
        for (std::size_t v = 0; v < _positional.size(); ++v) {
            if (is_subset(_positional[v], x.plus()))
                plus |= bit_of(_c[static_cast<int>(v)]);
            else if (is_subset(_positional[v], x.minus()))
                minus |= bit_of(_c[static_cast<int>(v)]);
        }
        if ((plus & minus) != 0)
            throw std::logic_error("colour occurs on both sides of c(X); the colouring is not proper");
        return SignVector(_c.palette(), plus, minus);
    }

    auto LabelMap::evaluate(const SignVector & x) const -> int
    {
        if (x.size() != n())
            throw PreconditionError("sign vector has the wrong length");
        if (x.is_zero())
            throw PreconditionError("the label map is undefined at the zero vector");
        int a = alt_of(x);
        if (a <= _threshold)
            return x.first_nonzero() == Sign::plus ? a : -a;
        auto cx = colour_vector(x);
        if (cx.is_zero())
            throw std::logic_error("X exceeds the alternation threshold but contains no edge");
        int value = _threshold + alt_of(cx) - (_mode == AlternationMode::salt ? 1 : 0);
        return cx.first_nonzero() == Sign::plus ? value : -value;
    }

    auto LabelMap::target_size() const -> int
    {
        return n() - _threshold + (_mode == AlternationMode::salt ? 1 : 0);
    }

    auto verify_tucker_conditions(const LabelMap & map, int max_n) -> TuckerReport
    {
        const int n = map.n();
        if (n > max_n)
            throw PreconditionError("exhaustive sign-vector sweep is limited to n <= " + std::to_string(max_n));
        TuckerReport report;
        report.n = n;
        report.threshold = map.threshold();
        report.vacuous = map.graph().order() == 0;

        const auto total = sign_vector_count(n);
        std::vector<std::uint64_t> weight(std::size_t{1} << n, 0);
        for (Mask m = 1; m < weight.size(); ++m) {
            int low = std::countr_zero(m);
            std::uint64_t w = 1;
            for (int i = 0; i < low; ++i)
                w *= 3;
            weight[m] = weight[m & (m - 1)] + w;
        }
        auto key_of = [&](Mask plus, Mask minus) { return weight[plus] + 2 * weight[minus]; };

        std::vector<int> label(total, 0);
        for (std::uint64_t key = 1; key < total; ++key) {
            auto x = SignVector::from_key(key, n);
            label[key] = map.evaluate(x);
            ++report.sign_vectors;
            report.max_label = std::max(report.max_label, std::abs(label[key]));
            if (! report.witness && label[key] >= n)
                report.witness = x;
        }

        for (std::uint64_t key = 1; key < total; ++key) {
            auto y = SignVector::from_key(key, n);
            if (report.antipodal && label[key_of(y.minus(), y.plus())] != -label[key]) {
                report.antipodal = false;
                report.antipodality_violation = y;
            }
            if (report.complementary_edge)
                continue;
            Mask support = y.support();
            for (Mask t = support; t != 0; t = (t - 1) & support) {
                ++report.pairs_checked;
                auto sub = key_of(y.plus() & t, y.minus() & t);
                if (label[sub] == -label[key]) {
                    report.complementary_edge.emplace(SignVector(n, y.plus() & t, y.minus() & t), y);
                    break;
                }
            }
        }
        return report;
    }

    auto extract_colorful_from_witness(const LabelMap & map, const SignVector & witness) -> ColorfulBipartite
    {
        const int n = map.n();
        int value = map.evaluate(witness);
        if (std::abs(value) < n)
            throw PreconditionError("witness label " + std::to_string(value) + " has magnitude below n = "
                + std::to_string(n));
        auto x = value > 0 ? witness : witness.negated();
        int t = map.target_size();
        ColorfulBipartite result;
        if (t <= 0)
            return result;

        auto fail = [&](const std::string & why) -> ColorfulBipartite {
            throw CounterexampleError("colorful extraction failed: " + why,
                "{\"witness\":\"" + x.to_string() + "\",\"reason\":\"" + why + "\"}");
        };

        if (alt_of(x) <= map.threshold())
            return fail("witness does not exceed the alternation threshold");
        auto cx = map.colour_vector(x);
        auto positions = alternating_positions(cx);
        if (static_cast<int>(positions.size()) < t)
            return fail("alt(c(X)) is smaller than " + std::to_string(t));
        positions.resize(t);
        if (cx.at(positions.front()) != Sign::plus)
            return fail("c(X) does not start with a positive entry");

        for (int j = 0; j < t; ++j) {
            int colour = positions[j];
            bool plus_side = j % 2 == 0;
            Mask part = plus_side ? x.plus() : x.minus();
            int representative = -1;
            for (int v = 0; v < map.graph().order(); ++v)
                if (map.colouring()[v] == colour && is_subset(map.positional_edge(v), part)) {
                    representative = v;
                    break;
                }
            if (representative < 0)
                return fail("no edge of colour " + std::to_string(colour) + " inside X");
            (plus_side ? result.left : result.right).push_back(representative);
            (plus_side ? result.left_colours : result.right_colours).push_back(colour);
        }
        auto violation = colorful_bipartite_violation(map.graph(), map.colouring(), result);
        if (! violation.empty())
            return fail(violation);
        return result;
    }

    auto gale_configuration(int n, int k, int s) -> GaleConfiguration
    {
        if (k < 1 || s < 2 || s % 2 != 0)
            throw PreconditionError("Gale configuration needs k >= 1 and an even s >= 2");
        if (n < s * k)
            throw PreconditionError("Gale configuration needs n >= sk");
        GaleConfiguration cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.s = s;
        cfg.p = (s / 2) * (k - 1) + 1;
        cfg.d = n - 2 * cfg.p;
        cfg.within_hypothesis = n >= (s + 2) * k - 2;
        return cfg;
    }

    namespace
    {
        auto sign_of(__int128 value) -> int { return (value > 0) - (value < 0); }

        // (-1)^i pattern_i: the sign the polynomial itself must take at i
        auto polynomial_sign(const SignVector & pattern, int i) -> int
        {
            int entry = static_cast<int>(pattern.at(i));
            return i % 2 == 0 ? entry : -entry;
        }

        auto multiply(const std::vector<std::int64_t> & a, const std::vector<std::int64_t> & b)
            -> std::vector<std::int64_t>
        {
            std::vector<__int128> product(a.size() + b.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    product[i + j] += static_cast<__int128>(a[i]) * b[j];
            std::vector<std::int64_t> result;
            for (auto c : product) {
                if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
                    throw std::overflow_error("polynomial coefficient overflows 64 bits");
                result.push_back(static_cast<std::int64_t>(c));
            }
            return result;
        }

        auto evaluate_polynomial(const std::vector<std::int64_t> & a, int t) -> __int128
        {
            __int128 value = 0;
            for (auto it = a.rbegin(); it != a.rend(); ++it)
                value = value * t + *it;
            return value;
        }

        struct Adjusted
        {
            int zeros = 0;
            int changes = 0;
            std::vector<std::pair<int, int>> change_pairs;
        };

        // signs at nonzero positions after dividing by prod (i - z) over the zeros
        auto adjusted_changes(const SignVector & pattern, bool divide_by_zeros) -> Adjusted
        {
            Adjusted result;
            std::vector<int> zeros;
            for (int i = 1; i <= pattern.size(); ++i)
                if (pattern.at(i) == Sign::zero)
                    zeros.push_back(i);
            result.zeros = static_cast<int>(zeros.size());
            int previous_position = 0, previous_sign = 0;
            for (int i = 1; i <= pattern.size(); ++i) {
                if (pattern.at(i) == Sign::zero)
                    continue;
                int sign = polynomial_sign(pattern, i);
                if (divide_by_zeros)
                    for (int z : zeros)
                        if (i < z)
                            sign = -sign;
                if (previous_sign != 0 && sign != previous_sign) {
                    ++result.changes;
                    result.change_pairs.emplace_back(previous_position, i);
                }
                previous_position = i;
                previous_sign = sign;
            }
            return result;
        }
    }

    auto membership_sign(const GaleConfiguration & cfg, const std::vector<std::int64_t> & a, int i) -> Sign
    {
        if (i < 1 || i > cfg.n)
            throw PreconditionError("point index out of range");
        if (static_cast<int>(a.size()) > cfg.d + 1)
            throw PreconditionError("direction has more than d + 1 coordinates");
        int sign = sign_of(evaluate_polynomial(a, i));
        return static_cast<Sign>(i % 2 == 0 ? sign : -sign);
    }

    auto membership_pattern(const GaleConfiguration & cfg, const std::vector<std::int64_t> & a) -> SignVector
    {
        Mask plus = 0, minus = 0;
        for (int i = 1; i <= cfg.n; ++i) {
            auto sign = membership_sign(cfg, a, i);
            if (sign == Sign::plus)
                plus |= bit_of(i);
            else if (sign == Sign::minus)
                minus |= bit_of(i);
        }
        return SignVector(cfg.n, plus, minus);
    }

    auto is_realizable(const GaleConfiguration & cfg, const SignVector & pattern) -> bool
    {
        if (pattern.size() != cfg.n || pattern.is_zero())
            return false;
        auto adjusted = adjusted_changes(pattern, true);
        return adjusted.zeros <= cfg.d && adjusted.changes <= cfg.d - adjusted.zeros;
    }

    auto is_loosely_realizable(const GaleConfiguration & cfg, const SignVector & pattern) -> bool
    {
        if (pattern.size() != cfg.n || pattern.is_zero())
            return false;
        auto plain = adjusted_changes(pattern, false);
        return plain.zeros <= cfg.d && plain.changes <= cfg.d;
    }

    auto realize_pattern(const GaleConfiguration & cfg, const SignVector & pattern)
        -> std::optional<std::vector<std::int64_t>>
    {
        if (! is_realizable(cfg, pattern))
            return std::nullopt;
        std::vector<std::int64_t> poly{1};
        for (int i = 1; i <= cfg.n; ++i)
            if (pattern.at(i) == Sign::zero)
                poly = multiply(poly, {-i, 1});
        for (auto [a, b] : adjusted_changes(pattern, true).change_pairs)
            poly = multiply(poly, {-(a + b), 2});
        int first = min_element(pattern.support());
        if (sign_of(evaluate_polynomial(poly, first)) != polynomial_sign(pattern, first))
            for (auto & c : poly)
                c = -c;
        poly.resize(cfg.d + 1, 0);
        return poly;
    }

    auto hemisphere_check(const GaleConfiguration & cfg, std::uint64_t budget) -> HemisphereReport
    {
        if (cfg.n > max_hemisphere_points)
            throw PreconditionError("hemisphere enumeration is limited to n <= " + std::to_string(max_hemisphere_points));
        HemisphereReport report;
        report.n = cfg.n;
        report.k = cfg.k;
        report.s = cfg.s;
        report.d = cfg.d;

        // per positive set: 1 contains an s-stable k-subset, 0 does not, -1 unknown
        std::vector<signed char> stable_inside(std::size_t{1} << cfg.n, -1);
        auto has_stable = [&](Mask set) {
            auto & cached = stable_inside[set];
            if (cached < 0)
                cached = extract_s_stable_brute(set, cfg.n, cfg.k, cfg.s).has_value() ? 1 : 0;
            return cached == 1;
        };

        const auto total = sign_vector_count(cfg.n);
        for (std::uint64_t key = 1; key < total; ++key) {
            if (report.patterns >= budget) {
                report.budget_exceeded = true;
                break;
            }
            ++report.patterns;
            auto pattern = SignVector::from_key(key, cfg.n);
            bool loose = is_loosely_realizable(cfg, pattern);
            bool exact = is_realizable(cfg, pattern);
            if (! loose && ! exact)
                continue;
            bool ok = has_stable(pattern.plus());
            if (loose) {
                ++report.loosely_realizable;
                if (! ok)
                    ++report.loose_failures;
            }
            if (exact) {
                ++report.realizable;
                auto poly = realize_pattern(cfg, pattern);
                if (! poly || membership_pattern(cfg, *poly) != pattern)
                    report.constructions_ok = false;
                if (! ok) {
                    ++report.failures;
                    if (! report.counterexample)
                        report.counterexample = pattern;
                }
            }
        }
        return report;
    }

    auto klm_from_hemispheres(const GaleConfiguration & cfg, const SimpleGraph & g, const Coloring & c,
        const std::vector<int> & a, const std::vector<int> & b) -> std::optional<HemisphereBipartite>
    {
        if (! g.has_labels() || c.size() != g.order())
            throw PreconditionError("hemisphere K_{l,m} search needs a labelled graph and a colouring of it");
        if (cfg.n > max_hemisphere_points)
            throw PreconditionError("hemisphere enumeration is limited to n <= " + std::to_string(max_hemisphere_points));
        std::vector<int> left_colours = a, right_colours = b;
        std::sort(left_colours.begin(), left_colours.end());
        std::sort(right_colours.begin(), right_colours.end());

        // first vertex of each colour inside `part`
        auto representatives = [&](Mask part) {
            std::vector<int> rep(c.palette() + 1, -1);
            for (int v = 0; v < g.order(); ++v)
                if (rep[c[v]] < 0 && is_subset(g.label(v), part))
                    rep[c[v]] = v;
            return rep;
        };

        const auto total = sign_vector_count(cfg.n);
        for (std::uint64_t key = 1; key < total; ++key) {
            auto pattern = SignVector::from_key(key, cfg.n);
            if (! is_realizable(cfg, pattern))
                continue;
            auto plus = representatives(pattern.plus());
            auto minus = representatives(pattern.minus());
            auto covered = [](const std::vector<int> & rep, const std::vector<int> & colours) {
                return std::all_of(colours.begin(), colours.end(),
                    [&](int colour) { return colour >= 1 && colour < static_cast<int>(rep.size()) && rep[colour] >= 0; });
            };
            if (! covered(plus, left_colours) || ! covered(minus, right_colours))
                continue;
            HemisphereBipartite result{pattern, {}};
            for (int colour : left_colours) {
                result.subgraph.left.push_back(plus[colour]);
                result.subgraph.left_colours.push_back(colour);
            }
            for (int colour : right_colours) {
                result.subgraph.right.push_back(minus[colour]);
                result.subgraph.right_colours.push_back(colour);
            }
            for (int u : result.subgraph.left)
                for (int v : result.subgraph.right)
                    if (! g.adjacent(u, v))
                        throw CounterexampleError("hemisphere pattern produced a non-adjacent pair",
                            "{\"pattern\":\"" + pattern.to_string() + "\"}");
            return result;
        }
        return std::nullopt;
    }
}
