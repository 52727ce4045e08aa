#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kneser
{
    /// Subset of a ground set [n] with n <= 64. Element i occupies bit i-1.
    using Mask = std::uint64_t;

    inline constexpr int max_ground_size = 64;

    constexpr auto bit_of(int element) -> Mask { return Mask{1} << (element - 1); }

    constexpr auto contains(Mask set, int element) -> bool { return ((set >> (element - 1)) & 1U) != 0; }

    constexpr auto is_subset(Mask inner, Mask outer) -> bool { return (inner & ~outer) == 0; }

    constexpr auto cardinality(Mask set) -> int { return std::popcount(set); }

    /// Smallest element; `set` must be nonempty.
    constexpr auto min_element(Mask set) -> int { return std::countr_zero(set) + 1; }

    /// Largest element; `set` must be nonempty.
    constexpr auto max_element(Mask set) -> int { return 64 - std::countl_zero(set); }

    constexpr auto full_mask(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    auto mask_of(std::span<const int> elements) -> Mask;
    auto mask_of(std::initializer_list<int> elements) -> Mask;

    auto elements_of(Mask set) -> std::vector<int>;

    /// "1,3,5"; the empty set formats as "".
    auto format_subset(Mask set) -> std::string;
    auto parse_subset(std::string_view text) -> Mask;

    /// Lexicographic comparison of the increasing element lists of two sets.
    auto lex_less(Mask a, Mask b) -> bool;

    /// All k-subsets of [n] in lexicographic order.
    auto k_subsets(int n, int k) -> std::vector<Mask>;

    /// Cyclic shift of every element: i -> ((i - 1 + shift) mod n) + 1.
    auto rotate(Mask set, int n, int shift) -> Mask;

    /// Exact binomial coefficient; 0 when k < 0 or k > n. Throws on overflow.
    auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t;
}
