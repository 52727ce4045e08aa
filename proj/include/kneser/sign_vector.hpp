#pragma once

#include <kneser/subset.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kneser
{
    enum class Sign : std::int8_t
    {
        minus = -1,
        zero = 0,
        plus = 1
    };

    constexpr auto negate(Sign s) -> Sign { return static_cast<Sign>(-static_cast<int>(s)); }

    /// Element of {-,0,+}^n, stored as the two supports X+ and X- over positions 1..n.
    class SignVector
    {
    public:
        SignVector() = default;
        SignVector(int size, Mask plus, Mask minus);

        /// Parses "+-0+" style text.
        static auto parse(std::string_view text) -> SignVector;

        /// Inverse of key(): digit i (least significant first) is 0, 1 (+) or 2 (-).
        static auto from_key(std::uint64_t key, int size) -> SignVector;

        auto size() const -> int { return _size; }
        auto plus() const -> Mask { return _plus; }
        auto minus() const -> Mask { return _minus; }
        auto support() const -> Mask { return _plus | _minus; }

        /// Entry at position 1..size.
        auto at(int position) const -> Sign;

        auto is_zero() const -> bool { return support() == 0; }
        auto negated() const -> SignVector { return SignVector(_size, _minus, _plus); }

        /// Sign of the first nonzero entry; zero for the zero vector.
        auto first_nonzero() const -> Sign;

        /// X ⊆ Y: X+ ⊆ Y+ and X- ⊆ Y-.
        auto is_contained_in(const SignVector & other) const -> bool;

        /// Base-3 encoding, unique per vector of a fixed size (size <= 40).
        auto key() const -> std::uint64_t;

        auto to_string() const -> std::string;

        friend auto operator==(const SignVector &, const SignVector &) -> bool = default;

    private:
        int _size = 0;
        Mask _plus = 0;
        Mask _minus = 0;
    };

    /// Length of the longest alternating subsequence of nonzero entries; 0 for the zero vector.
    auto alt_of(const SignVector & x) -> int;

    /// Positions of a longest alternating subsequence: the first entry of every
    /// maximal run of equal nonzero signs.
    auto alternating_positions(const SignVector & x) -> std::vector<int>;

    /// 3^size.
    auto sign_vector_count(int size) -> std::uint64_t;
}
