#pragma once

#include <kneser/search.hpp>
#include <kneser/subset.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kneser
{
    /// Every two distinct elements i, j of `set` satisfy s <= |i - j| <= n - s.
    auto is_s_stable(Mask set, int n, int s) -> bool;

    struct StableCount
    {
        /// (n / k) * C(n - k(s-1) - 1, k - 1)
        std::int64_t total = 0;
        /// Number of s-stable k-subsets containing a fixed element: C(n - k(s-1) - 1, k - 1).
        std::int64_t per_element = 0;
    };

    /// Closed-form count of s-stable k-subsets of [n]; requires n >= sk.
    auto count_formula(int n, int k, int s) -> StableCount;

    /// All s-stable k-subsets of [n] in lexicographic order. Construction
    /// cross-checks the member count against count_formula.
    class StableFamily
    {
    public:
        StableFamily(int n, int k, int s);

        auto n() const -> int { return _n; }
        auto k() const -> int { return _k; }
        auto s() const -> int { return _s; }
        auto members() const -> const std::vector<Mask> & { return _members; }

    private:
        int _n, _k, _s;
        std::vector<Mask> _members;
    };

    /// For n = 2s + 2, s even, and a 2-stable S with |S| = s/2 + 1: returns
    /// (a, a') in S with (a - a') mod n in {s, s+1, s+2}, located with the
    /// blocks {2i-1, 2i, 2i+s, 2i+s+1} after rotating S so that 1 is in S.
    auto find_pair_case2(Mask set, int n, int s) -> std::pair<int, int>;

    /// For even s, n >= (s+2)k - 2 and a 2-stable S with |S| = (s/2)(k-1) + 1:
    /// an s-stable k-subset of S, built by the greedy chain when every element
    /// has a successor at distance s, s+1 or s+2, and otherwise by removing the
    /// window of s + 2 elements after an element without successor and
    /// recursing on k - 1. Throws CounterexampleError if no subset is produced.
    auto extract_s_stable(Mask set, int n, int k, int s) -> Mask;

    /// Independent check: first s-stable k-subset of S in lexicographic order.
    auto extract_s_stable_brute(Mask set, int n, int k, int s) -> std::optional<Mask>;

    /// All 2-stable subsets of [n] of the given size, lexicographic order.
    auto two_stable_subsets(int n, int size) -> std::vector<Mask>;

    struct StsableReport
    {
        int k = 0, s = 0, n = 0;
        std::uint64_t subsets_checked = 0;
        /// Proof path and brute force both produced a valid s-stable k-subset for every S.
        bool extraction_ok = true;
        int salt_identity = 0;
        int salt_expected = 0;
        bool budget_exceeded = false;
        std::optional<Mask> counterexample;

        auto pass() const -> bool
        {
            return ! budget_exceeded && extraction_ok && salt_identity == salt_expected;
        }
    };

    /// One (k, s, n) instance: every qualifying S, plus salt under the identity bijection.
    /// The budget bounds the number of subsets examined.
    auto verify_stsable(int k, int s, int n, std::uint64_t budget = unlimited_budget) -> StsableReport;

    /// All (k, s, n) with 1 <= k <= k_max, s from `s_values` (even), and (s+2)k - 2 <= n <= n_max,
    /// in order of k, then s, then n.
    auto verify_stsable_range(int k_max, const std::vector<int> & s_values, int n_max,
        std::uint64_t budget = unlimited_budget) -> std::vector<StsableReport>;
}
