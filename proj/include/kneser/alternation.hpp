#pragma once

#include <kneser/hypergraph.hpp>
#include <kneser/sign_vector.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace kneser
{
    /// alt: both X+ and X- must induce no edge; salt: at least one of them.
    enum class AlternationMode
    {
        alt,
        salt
    };

    enum class AlternationStrategy
    {
        exhaustive,
        identity_only,
        heuristic
    };

    struct AlternationWitness
    {
        int value = 0;
        SignVector vector;
    };

    /// max alt(X) over sign vectors X whose sigma-images satisfy the mode's
    /// edge-freeness condition. sigma[i - 1] is the vertex placed at position i.
    auto alternation_under(const Hypergraph & h, const std::vector<int> & sigma, AlternationMode mode)
        -> AlternationWitness;

    auto alt_sigma(const Hypergraph & h, const std::vector<int> & sigma) -> int;
    auto salt_sigma(const Hypergraph & h, const std::vector<int> & sigma) -> int;

    struct AlternationReport
    {
        int value = 0;
        std::vector<int> witness_sigma;
        SignVector witness_vector;
        AlternationMode mode = AlternationMode::alt;
        /// True when `value` is the minimum over all bijections; otherwise it is
        /// an upper bound on alt(H) / salt(H).
        bool proven_minimum = false;
        std::uint64_t bijections_examined = 0;
    };

    struct AlternationOptions
    {
        std::uint64_t seed = 0x6b6e65736572ULL;
        int restarts = 256;
    };

    inline constexpr int max_exhaustive_ground_size = 9;

    /// Minimum of alt_sigma / salt_sigma over the selected bijections. The
    /// exhaustive strategy quotients the bijections by position reversal and by
    /// the rotations/reflections of [n] that preserve H; ties go to the
    /// lexicographically first examined sigma.
    auto alt_full(const Hypergraph & h, AlternationMode mode, AlternationStrategy strategy,
        AlternationOptions options = {}) -> AlternationReport;

    struct TheoremABound
    {
        int value = 0;
        bool proven = false;
        AlternationReport alt;
        AlternationReport salt;
    };

    /// max(n - alt(H), n - salt(H) + 1), a lower bound on chi(KG(H)).
    auto theorem_a_bound(const Hypergraph & h, AlternationStrategy strategy, AlternationOptions options = {})
        -> TheoremABound;

    struct ColorabilityDefect
    {
        int value = 0;
        Mask removed = 0;
        /// One colour class of a proper 2-colouring of H[V \ removed].
        Mask colour_class = 0;
    };

    inline constexpr int max_defect_ground_size = 20;

    /// Fewest vertices whose removal leaves a hypergraph with a 2-colouring that
    /// has no monochromatic edge.
    auto colorability_defect(const Hypergraph & h) -> ColorabilityDefect;

    /// Proper 2-colouring of the edges of H lying inside `vertices`, if one exists.
    auto two_colouring(const Hypergraph & h, Mask vertices) -> std::optional<Mask>;
}
