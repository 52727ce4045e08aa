#include <kneser/errors.hpp>
#include <kneser/subset.hpp>

#include <charconv>
#include <limits>

namespace kneser
{
    auto mask_of(std::span<const int> elements) -> Mask
    {
        Mask result = 0;
        for (int e : elements) {
            if (e < 1 || e > max_ground_size)
                throw PreconditionError("subset element " + std::to_string(e) + " outside 1..64");
            result |= bit_of(e);
        }
        return result;
    }

    auto mask_of(std::initializer_list<int> elements) -> Mask
    {
        return mask_of(std::span<const int>(elements.begin(), elements.size()));
    }

    auto elements_of(Mask set) -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(cardinality(set));
        while (set) {
            result.push_back(min_element(set));
            set &= set - 1;
        }
        return result;
    }

    auto format_subset(Mask set) -> std::string
    {
        std::string result;
        for (int e : elements_of(set)) {
            if (! result.empty())
                result += ',';
            result += std::to_string(e);
        }
        return result;
    }

    auto parse_subset(std::string_view text) -> Mask
    {
        Mask result = 0;
        while (! text.empty()) {
            auto comma = text.find(',');
            auto token = text.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1 || value > max_ground_size)
                throw FormatError("bad subset element '" + std::string(token) + "'");
            if (contains(result, value))
                throw FormatError("repeated subset element " + std::to_string(value));
            result |= bit_of(value);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return result;
    }

    auto lex_less(Mask a, Mask b) -> bool
    {
        while (a && b) {
            int x = min_element(a), y = min_element(b);
            if (x != y)
                return x < y;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    }

    namespace
    {
        void collect_subsets(int n, int k, int next, Mask current, std::vector<Mask> & out)
        {
            if (k == 0) {
                out.push_back(current);
                return;
            }
            for (int e = next; e <= n - k + 1; ++e)
                collect_subsets(n, k - 1, e + 1, current | bit_of(e), out);
        }
    }

    auto k_subsets(int n, int k) -> std::vector<Mask>
    {
        if (n > max_ground_size)
            throw PreconditionError("ground set larger than 64");
        std::vector<Mask> result;
        if (k < 0 || k > n)
            return result;
        collect_subsets(n, k, 1, 0, result);
        return result;
    }

    auto rotate(Mask set, int n, int shift) -> Mask
    {
        shift %= n;
        if (shift < 0)
            shift += n;
        Mask result = 0;
        for (int e : elements_of(set))
            result |= bit_of(((e - 1 + shift) % n) + 1);
        return result;
    }

    auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        __int128 result = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            result = result * (n - k + i) / i;
            if (result > std::numeric_limits<std::int64_t>::max())
                throw std::overflow_error("binomial coefficient overflows 64 bits");
        }
        return static_cast<std::int64_t>(result);
    }
}
