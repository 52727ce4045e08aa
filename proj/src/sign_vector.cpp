#include <kneser/errors.hpp>
#include <kneser/sign_vector.hpp>

namespace kneser
{
    SignVector::SignVector(int size, Mask plus, Mask minus) :
        _size(size), _plus(plus), _minus(minus)
    {
        if (size < 0 || size > max_ground_size)
            throw PreconditionError("sign vector length must lie in 0..64");
        if ((plus & minus) != 0)
            throw PreconditionError("X+ and X- must be disjoint");
        if (! is_subset(plus | minus, full_mask(size)))
            throw PreconditionError("sign vector support exceeds its length");
    }

    auto SignVector::parse(std::string_view text) -> SignVector
    {
        Mask plus = 0, minus = 0;
        int position = 0;
        for (char ch : text) {
            ++position;
            if (position > max_ground_size)
                throw FormatError("sign vector longer than 64");
            switch (ch) {
                case '+': plus |= bit_of(position); break;
                case '-': minus |= bit_of(position); break;
                case '0': break;
                default: throw FormatError(std::string("bad sign character '") + ch + "'");
            }
        }
        return SignVector(position, plus, minus);
    }

    auto SignVector::from_key(std::uint64_t key, int size) -> SignVector
    {
        Mask plus = 0, minus = 0;
        for (int position = 1; position <= size; ++position) {
            switch (key % 3) {
                case 1: plus |= bit_of(position); break;
                case 2: minus |= bit_of(position); break;
                default: break;
            }
            key /= 3;
        }
        return SignVector(size, plus, minus);
    }

    auto SignVector::at(int position) const -> Sign
    {
        if (contains(_plus, position))
            return Sign::plus;
        if (contains(_minus, position))
            return Sign::minus;
        return Sign::zero;
    }

    auto SignVector::first_nonzero() const -> Sign
    {
        if (is_zero())
            return Sign::zero;
        return at(min_element(support()));
    }

    auto SignVector::is_contained_in(const SignVector & other) const -> bool
    {
        return is_subset(_plus, other._plus) && is_subset(_minus, other._minus);
    }

    auto SignVector::key() const -> std::uint64_t
    {
        if (_size > 40)
            throw PreconditionError("base-3 key limited to 40 positions");
        std::uint64_t result = 0;
        for (int position = _size; position >= 1; --position) {
            result *= 3;
            if (contains(_plus, position))
                result += 1;
            else if (contains(_minus, position))
                result += 2;
        }
        return result;
    }

    auto SignVector::to_string() const -> std::string
    {
        std::string result;
        for (int position = 1; position <= _size; ++position)
            result += contains(_plus, position) ? '+' : contains(_minus, position) ? '-' : '0';
        return result;
    }

    auto alt_of(const SignVector & x) -> int
    {
        return static_cast<int>(alternating_positions(x).size());
    }

    auto alternating_positions(const SignVector & x) -> std::vector<int>
    {
        std::vector<int> result;
        Sign last = Sign::zero;
        for (int position : elements_of(x.support())) {
            Sign s = x.at(position);
            if (s != last) {
                result.push_back(position);
                last = s;
            }
        }
        return result;
    }

    auto sign_vector_count(int size) -> std::uint64_t
    {
        std::uint64_t result = 1;
        for (int i = 0; i < size; ++i)
            result *= 3;
        return result;
    }
}
