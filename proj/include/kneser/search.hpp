#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace kneser
{
    /// Outcome of an exact search. `exhausted` means the whole space was
    /// explored without finding a solution; `budget_exceeded` is inconclusive.
    enum class SearchStatus
    {
        found,
        exhausted,
        budget_exceeded
    };

    inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

    constexpr auto to_string(SearchStatus status) -> std::string_view
    {
        switch (status) {
            case SearchStatus::found: return "found";
            case SearchStatus::exhausted: return "exhausted";
            case SearchStatus::budget_exceeded: return "budget_exceeded";
        }
        return "unknown";
    }

    /// Node counter shared by the backtracking searches. Budgets are counted in
    /// search nodes so results do not depend on machine speed.
    class NodeCounter
    {
    public:
        explicit NodeCounter(std::uint64_t budget = unlimited_budget) : _budget(budget) {}

        /// Records one node; returns false once the budget is spent.
        auto tick() -> bool
        {
            if (_nodes >= _budget) {
                _exceeded = true;
                return false;
            }
            ++_nodes;
            return true;
        }

        auto nodes() const -> std::uint64_t { return _nodes; }
        auto exceeded() const -> bool { return _exceeded; }
        auto budget() const -> std::uint64_t { return _budget; }

    private:
        std::uint64_t _budget;
        std::uint64_t _nodes = 0;
        bool _exceeded = false;
    };
}
