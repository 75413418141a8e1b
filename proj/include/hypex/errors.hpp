#pragma once

#include <stdexcept>

namespace hypex
{
    /// A request beyond a fixed capacity (vertex width, canonical-form cap).
    class CapabilityError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Operands with incompatible vertex counts.
    class DimensionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Malformed input files or arguments.
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidParameter : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };
}
