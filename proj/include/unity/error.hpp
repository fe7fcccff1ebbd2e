#pragma once

#include <stdexcept>
#include <string>

namespace unity {

/// n outside the supported range (zero, above the cap, or above an oracle bound).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed input value (bad permutation, weight mismatch, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Never caused by valid input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr unsigned kDefaultMaxN = 80;

}  // namespace unity
