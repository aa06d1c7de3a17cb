#pragma once

#include <array>
#include <optional>
#include <vector>

#include "absorder/permutation.hpp"
#include "absorder/poset.hpp"

namespace absorder {

/// True iff some rotation of `a` is a subsequence of some rotation of `c`.
bool is_deletion_subcycle(const Cycle& a, const Cycle& c);

/// A crossing witness (i j k l): a 4-cycle obtained from c by deleting
/// elements, with i, k in a and j, l in b.
using CrossingWitness = std::array<int, 4>;

/// Returns a witness when a and b cross with respect to c, nullopt when they
/// are noncrossing.  Throws PreconditionViolation unless a and b are disjoint
/// deletion-subcycles of c.
std::optional<CrossingWitness> find_crossing(const Cycle& a, const Cycle& b, const Cycle& c);

bool are_noncrossing(const Cycle& a, const Cycle& b, const Cycle& c);

/// Elements of [e, c] built directly from noncrossing partitions of the
/// cyclic sequence of c's nontrivial cycle.  Throws PreconditionViolation
/// unless c has at most one cycle of length > 1.
std::vector<Permutation> noncrossing_elements(const Permutation& c);

/// [e, c] as an induced subposet of P_n, obtained by filtering S_n.
Poset nc_interval_by_filter(const Permutation& c);
/// [e, c] from noncrossing_elements().
Poset nc_interval_by_enumeration(const Permutation& c);
/// Filters S_n for n <= 7, enumerates otherwise.
Poset nc_interval(const Permutation& c);

}  // namespace absorder
