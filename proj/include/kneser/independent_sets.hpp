#pragma once

#include <kneser/graph.hpp>
#include <kneser/search.hpp>

#include <functional>

namespace kneser
{
    auto is_independent(const SimpleGraph & g, const VertexSet & set) -> bool;

    struct IndependentSetResult
    {
        SearchStatus status = SearchStatus::found;
        VertexSet set;
        std::uint64_t nodes = 0;
    };

    /// Maximum independent set of the subgraph induced on `within`, by
    /// branch and bound with a greedy clique-cover bound.
    auto maximum_independent_set(const SimpleGraph & g, const VertexSet & within,
        std::uint64_t budget = unlimited_budget) -> IndependentSetResult;

    /// Calls `visit` on every maximal independent set of g (Bron-Kerbosch with
    /// pivoting on the complement). `visit` returns false to stop early, which
    /// yields `found`; a completed enumeration yields `exhausted`.
    auto for_each_maximal_independent_set(const SimpleGraph & g,
        const std::function<bool(const VertexSet &)> & visit,
        std::uint64_t budget = unlimited_budget) -> SearchStatus;
}
