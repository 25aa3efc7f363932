#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kindep {

using Degree = std::int64_t;
using Count = std::int64_t;

inline constexpr Degree kMaxDegree = 2147483647;

/// Malformed or out-of-contract input (negative degrees, non-graphical
/// sequences, violated step preconditions, bad files).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string & what) : std::invalid_argument(what) {}
};

/// An exhaustive routine was asked to go beyond its configured size guard.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string & what) : std::runtime_error(what) {}
};

void require_positive_k(Degree k);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

}
