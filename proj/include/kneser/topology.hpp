#pragma once

#include <kneser/alternation.hpp>
#include <kneser/coloring.hpp>
#include <kneser/graph.hpp>
#include <kneser/hypergraph.hpp>
#include <kneser/sign_vector.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kneser
{
    /// The labelling of {-,0,+}^n built from a proper colouring c of KG(H) and a
    /// bijection sigma: [n] -> V(H). Positions are identified with vertices of H
    /// through sigma. Below the threshold (alt_sigma(H), or salt_sigma(H) in salt
    /// mode) the label is ±alt(X); above it, it is ±(threshold + alt(c(X))),
    /// minus one in salt mode, signed by the first nonzero entry of c(X).
    class LabelMap
    {
    public:
        LabelMap(const Hypergraph & h, std::vector<int> sigma, Coloring c, AlternationMode mode);

        auto n() const -> int { return _h.ground_size(); }
        auto mode() const -> AlternationMode { return _mode; }
        auto threshold() const -> int { return _threshold; }
        auto hypergraph() const -> const Hypergraph & { return _h; }
        auto sigma() const -> const std::vector<int> & { return _sigma; }
        auto graph() const -> const SimpleGraph & { return _graph; }
        auto colouring() const -> const Coloring & { return _c; }
        /// Vertex v of KG(H) as a set of positions.
        auto positional_edge(int v) const -> Mask { return _positional[v]; }

        /// c(X) = (c(X+), c(X-)): colours of the edges inside X+ and inside X-.
        auto colour_vector(const SignVector & x) const -> SignVector;
        /// Label of a nonzero X.
        auto evaluate(const SignVector & x) const -> int;
        /// Size of the colorful bipartite subgraph the construction guarantees:
        /// n - threshold (alt mode) or n - threshold + 1 (salt mode).
        auto target_size() const -> int;

    private:
        Hypergraph _h;
        std::vector<int> _sigma;
        Coloring _c;
        AlternationMode _mode;
        SimpleGraph _graph;
        std::vector<Mask> _positional;
        int _threshold = 0;
    };

    inline constexpr int max_tucker_dimension = 10;

    struct TuckerReport
    {
        int n = 0;
        int threshold = 0;
        bool vacuous = false;
        std::uint64_t sign_vectors = 0;
        std::uint64_t pairs_checked = 0;
        bool antipodal = true;
        std::optional<SignVector> antipodality_violation;
        /// X ⊆ Y with λ(X) = -λ(Y).
        std::optional<std::pair<SignVector, SignVector>> complementary_edge;
        int max_label = 0;
        /// Smallest-key X with λ(X) >= n.
        std::optional<SignVector> witness;

        auto pass() const -> bool
        {
            return antipodal && ! complementary_edge && max_label >= n && witness.has_value();
        }
    };

    /// Exhaustive sweep of {-,0,+}^n: antipodality, complementary edges over all
    /// comparable pairs, and the largest label reached.
    auto verify_tucker_conditions(const LabelMap & map, int max_n = max_tucker_dimension) -> TuckerReport;

    /// Follows the construction: alternating colours of c(X), one representative
    /// edge inside X+ or X- for each, revalidated before returning. Throws
    /// CounterexampleError when the representatives do not exist.
    auto extract_colorful_from_witness(const LabelMap & map, const SignVector & x) -> ColorfulBipartite;

    /// Points w_i = (-1)^i (1, t_i, ..., t_i^d) with t_i = i on S^d,
    /// d = n - s(k-1) - 2 = n - 2p with p = (s/2)(k-1) + 1.
    struct GaleConfiguration
    {
        int n = 0, k = 0, s = 0;
        int p = 0;
        int d = 0;
        /// n >= (s+2)k - 2, the range in which every open hemisphere is claimed
        /// to contain an s-stable k-subset. Smaller n (down to sk) are still built
        /// so the claim can be probed there.
        bool within_hypothesis = false;
    };

    auto gale_configuration(int n, int k, int s) -> GaleConfiguration;

    /// Sign of <a, w_i> = (-1)^i P_a(i), where P_a has coefficients a (constant term first).
    auto membership_sign(const GaleConfiguration & cfg, const std::vector<std::int64_t> & a, int i) -> Sign;
    auto membership_pattern(const GaleConfiguration & cfg, const std::vector<std::int64_t> & a) -> SignVector;

    /// Some direction a != 0 has membership pattern exactly `pattern`: with Z the zero
    /// positions, |Z| <= d and the signs (-1)^i pattern_i / prod_{z in Z} (i - z)
    /// have at most d - |Z| sign changes.
    auto is_realizable(const GaleConfiguration & cfg, const SignVector & pattern) -> bool;
    /// The looser counting rule: at most d zeros and at most d sign changes of
    /// (-1)^i pattern_i over the nonzero positions.
    auto is_loosely_realizable(const GaleConfiguration & cfg, const SignVector & pattern) -> bool;
    /// Coefficients of a polynomial realizing a realizable pattern.
    auto realize_pattern(const GaleConfiguration & cfg, const SignVector & pattern)
        -> std::optional<std::vector<std::int64_t>>;

    struct HemisphereReport
    {
        int n = 0, k = 0, s = 0, d = 0;
        std::uint64_t patterns = 0;
        std::uint64_t realizable = 0;
        std::uint64_t loosely_realizable = 0;
        std::uint64_t failures = 0;
        std::optional<SignVector> counterexample;
        /// Every realizable pattern was reproduced by its constructed polynomial.
        bool constructions_ok = true;
        /// Patterns admitted by the looser rule whose positive set has no s-stable k-subset.
        std::uint64_t loose_failures = 0;
        bool budget_exceeded = false;

        auto pass() const -> bool { return ! budget_exceeded && failures == 0 && constructions_ok; }
    };

    inline constexpr int max_hemisphere_points = 16;

    /// Every realizable open-hemisphere pattern's positive set contains an s-stable k-subset.
    auto hemisphere_check(const GaleConfiguration & cfg, std::uint64_t budget = unlimited_budget) -> HemisphereReport;

    struct HemisphereBipartite
    {
        SignVector pattern;
        ColorfulBipartite subgraph;
    };

    /// K_{|A|,|B|} read off a realizable pattern whose positive set carries every
    /// colour of A and whose negative set carries every colour of B. The graph must
    /// be KG_s(n,k) with its subset labels.
    auto klm_from_hemispheres(const GaleConfiguration & cfg, const SimpleGraph & g, const Coloring & c,
        const std::vector<int> & a, const std::vector<int> & b) -> std::optional<HemisphereBipartite>;
}
