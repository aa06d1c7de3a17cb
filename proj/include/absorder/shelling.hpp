#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "absorder/simplicial_complex.hpp"

namespace absorder {

/// Facet order given as indices into K.facets().
using ShellingOrder = std::vector<std::size_t>;

struct ShellingCheck {
    bool valid = true;
    /// Zero-based position in the order of the first facet whose intersection
    /// with the union of its predecessors is not pure of codimension one.
    std::optional<std::size_t> first_violation;
};

/// Throws PreconditionViolation if K is impure or `order` is not a
/// permutation of the facets.
ShellingCheck verify_shelling(const SimplicialComplex& k, const ShellingOrder& order);

struct ShellingSearchLimits {
    std::size_t max_facets = 200;
    std::size_t max_steps = 2'000'000;
};

/// Backtracking search, trying at each step the admissible facets that share
/// the most ridges with what is already placed.  Returns nullopt once the
/// search space is exhausted.  Throws ResourceCapExceeded past the facet cap
/// or step budget, PreconditionViolation if K is impure.  A returned order
/// has been re-checked with verify_shelling.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& k,
                                           const ShellingSearchLimits& limits = {});

}  // namespace absorder
