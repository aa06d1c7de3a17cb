#pragma once

#include <stdexcept>
#include <string>

namespace absorder {

/// Two permutations (or a permutation and a poset) disagree on the degree n.
class DegreeMismatch : public std::invalid_argument {
public:
    DegreeMismatch(int lhs, int rhs)
        : std::invalid_argument("degree mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs)) {}
};

/// Malformed textual input (permutations, sets, facet files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configurable size guard refused to run (factorial growth, search budgets).
class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace absorder
