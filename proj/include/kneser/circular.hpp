#pragma once

#include <kneser/coloring.hpp>
#include <kneser/graph.hpp>
#include <kneser/homomorphism.hpp>
#include <kneser/search.hpp>

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kneser
{
    /// Exact fraction p/q in lowest terms. Zero (0/1) is used only for the empty graph.
    class CircularNumber
    {
    public:
        CircularNumber() = default;
        CircularNumber(std::int64_t p, std::int64_t q);

        auto p() const -> std::int64_t { return _p; }
        auto q() const -> std::int64_t { return _q; }
        auto is_integer() const -> bool { return _q == 1; }
        auto to_string() const -> std::string;
        /// Parses "p/q" or "p".
        static auto parse(std::string_view text) -> CircularNumber;

        friend auto operator==(const CircularNumber &, const CircularNumber &) -> bool = default;
        friend auto operator<=>(const CircularNumber & a, const CircularNumber & b) -> std::strong_ordering
        {
            return a._p * b._q <=> b._p * a._q;
        }

    private:
        std::int64_t _p = 0;
        std::int64_t _q = 1;
    };

    /// Reduced fractions p/q with chi - 1 < p/q <= chi, p <= order and p >= 2q
    /// (or 1/1 when chi = 1), in increasing order.
    auto candidate_fractions(int chi, int order) -> std::vector<CircularNumber>;

    struct FractionRefutation
    {
        CircularNumber fraction;
        SearchStatus status = SearchStatus::exhausted;
        std::uint64_t nodes = 0;
    };

    struct CircularResult
    {
        /// found: `value` is exact. budget_exceeded: the answer lies in
        /// (largest refuted fraction, value].
        SearchStatus status = SearchStatus::found;
        CircularNumber value;
        int chromatic = 0;
        std::optional<CircularNumber> largest_refuted;
        /// Homomorphism into K_{value}.
        std::optional<Homomorphism> homomorphism;
        /// Every candidate below `value`, in increasing order.
        std::vector<FractionRefutation> refutations;
        std::uint64_t nodes = 0;
    };

    /// Exact circular chromatic number: computes chi, then refutes each
    /// candidate fraction in increasing order until a homomorphism is found.
    auto circular_chromatic_number(const SimpleGraph & g, std::uint64_t budget = unlimited_budget) -> CircularResult;

    /// An edge uv with (N(u) ∪ N(v)) ∩ F empty, if any. Throws when F is not independent.
    auto is_free_independent(const SimpleGraph & g, const VertexSet & f) -> std::optional<Edge>;

    inline constexpr int default_free_order_guard = 30;

    struct FreeIndependentResult
    {
        SearchStatus status = SearchStatus::found;
        int value = 0;
        VertexSet set;
        std::optional<Edge> witness;
        std::uint64_t nodes = 0;
    };

    /// Largest free independent set: the maximum over edges uv of the independence
    /// number of G - (N(u) ∪ N(v)).
    auto max_free_independent_size(const SimpleGraph & g, std::uint64_t budget = unlimited_budget,
        int max_order = default_free_order_guard) -> FreeIndependentResult;

    struct FreeClass
    {
        std::vector<int> vertices;
        Edge witness;
    };

    struct FreeChromaticResult
    {
        SearchStatus status = SearchStatus::found;
        bool infinite = false;
        /// A vertex lying in no free independent set, when infinite.
        std::optional<int> blocking_vertex;
        int value = 0;
        int lower_bound = 0;
        int alpha_bar = 0;
        std::vector<FreeClass> classes;
        std::uint64_t nodes = 0;
    };

    /// Minimum number of free independent sets partitioning V(G), or infinity.
    auto free_chromatic_number(const SimpleGraph & g, std::uint64_t budget = unlimited_budget,
        int max_order = default_free_order_guard) -> FreeChromaticResult;

    enum class EqualityVerdict
    {
        proven_equal,
        inconclusive
    };

    struct EqualityReport
    {
        EqualityVerdict verdict = EqualityVerdict::inconclusive;
        ChromaticResult chromatic;
        FreeChromaticResult free;
    };

    /// proven_equal when phi(G) >= 2 chi(G), which forces chi_c(G) = chi(G).
    auto chi_eq_chic_sufficient(const SimpleGraph & g, std::uint64_t budget = unlimited_budget,
        int max_order = default_free_order_guard) -> EqualityReport;

    inline constexpr std::int64_t max_hilton_milner_vertices = 5000;

    struct HiltonMilnerReport
    {
        int n = 0, k = 0;
        /// C(n-1,k-1) - C(n-k-1,k-1) + 2.
        std::int64_t bound = 0;
        /// C(n-1,k-1) - C(n-k-1,k-1), the bound on free independent sets.
        std::int64_t free_bound = 0;
        /// k C(n-2,k-2).
        std::int64_t relaxed_bound = 0;
        std::uint64_t maximal_sets = 0;
        std::uint64_t large_sets = 0;
        bool common_element_ok = true;
        std::optional<std::vector<Mask>> counterexample;
        int alpha_bar = 0;
        bool alpha_bar_ok = true;
        bool relaxed_ok = true;
        bool budget_exceeded = false;

        auto pass() const -> bool { return ! budget_exceeded && common_element_ok && alpha_bar_ok && relaxed_ok; }
    };

    auto hilton_milner_check(int n, int k, std::uint64_t budget = unlimited_budget) -> HiltonMilnerReport;

    using Rational = boost::rational<std::int64_t>;

    struct ThresholdReport
    {
        int n = 0, k = 0, s = 0;
        /// 2k^2(k-1) + (s-1)k(k-1) + 1 and whether n reaches it.
        std::int64_t stable_threshold = 0;
        bool stable_hypothesis = false;
        /// 2k^2(k-1).
        std::int64_t kneser_threshold = 0;
        /// (2k^2(k-1)/n) C(n,k).
        Rational induced_vertex_bound;
        std::int64_t vertex_count = 0;
        /// The induced-subgraph theorem applied to KG_s(n,k) itself.
        bool induced_hypothesis = false;
        /// Proof chain for k >= 2:
        /// |V| >= n/(k(k-1)) (n - 1 - (s-1)k(k-1)) C(n-2,k-2),
        /// phi >= |V| / (k C(n-2,k-2)) >= n/(k^2(k-1)) (n - 1 - (s-1)k(k-1)).
        std::optional<Rational> vertex_lower_bound;
        std::int64_t free_bound = 0;
        std::int64_t relaxed_free_bound = 0;
        std::optional<Rational> phi_lower_bound;
        /// The bound the induced-subgraph proof reaches: (induced_vertex_bound) / (k C(n-2,k-2)).
        std::optional<Rational> induced_phi_bound;
        bool chain_consistent = true;

        /// Exact confirmation at desk scale: phi and alpha_bar always, chi_c where
        /// one of the two hypotheses holds.
        bool exact_attempted = false;
        std::optional<CircularResult> circular;
        std::optional<FreeChromaticResult> free;
        bool exact_consistent = true;
    };

    inline constexpr int desk_scale_vertices = 30;

    auto threshold_report(int n, int k, int s, bool run_exact = true, std::uint64_t budget = unlimited_budget)
        -> ThresholdReport;
}
