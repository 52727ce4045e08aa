#pragma once

#include <kneser/graph.hpp>
#include <kneser/search.hpp>

#include <optional>
#include <vector>

namespace kneser
{
    /// A vertex map from a source graph to a target graph that sends every
    /// edge to an edge. Construction revalidates the map.
    class Homomorphism
    {
    public:
        Homomorphism(const SimpleGraph & source, const SimpleGraph & target, std::vector<int> map);

        auto map() const -> const std::vector<int> & { return _map; }
        auto operator[](int v) const -> int { return _map[v]; }

    private:
        std::vector<int> _map;
    };

    auto is_homomorphism(const SimpleGraph & source, const SimpleGraph & target, const std::vector<int> & map) -> bool;

    struct HomomorphismSearchOptions
    {
        /// Fix the smallest vertex of every connected component to target
        /// vertex 0. Only sound when the target is vertex-transitive.
        bool pin_component_roots = false;
        /// An involutive automorphism of the target fixing vertex 0 (empty for
        /// none). While every assigned image is a fixed point, the next image x
        /// is restricted to x <= involution[x].
        std::vector<int> target_involution;
    };

    struct HomomorphismSearchResult
    {
        SearchStatus status = SearchStatus::exhausted;
        std::optional<Homomorphism> homomorphism;
        std::uint64_t nodes = 0;
    };

    /// Backtracking that picks the unassigned source vertex with the smallest domain
    /// next (ties by assigned neighbours, then id), maintaining arc consistency.
    auto find_homomorphism(
        const SimpleGraph & source,
        const SimpleGraph & target,
        std::uint64_t budget = unlimited_budget,
        HomomorphismSearchOptions options = {}) -> HomomorphismSearchResult;
}
