#pragma once

#include <stdexcept>
#include <string>

namespace kneser
{
    /// Thrown when an operation is called outside its documented domain.
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed interchange file.
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A verified search produced an instance contradicting a proven statement.
    /// `certificate()` holds a JSON document describing the offending instance.
    class CounterexampleError : public std::runtime_error
    {
    public:
        CounterexampleError(const std::string & what, std::string certificate) :
            std::runtime_error(what),
            _certificate(std::move(certificate))
        {
        }

        auto certificate() const -> const std::string & { return _certificate; }

    private:
        std::string _certificate;
    };
}
