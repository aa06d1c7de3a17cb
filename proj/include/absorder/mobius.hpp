#pragma once

// Möbius function of the absolute order with a top element adjoined, and the
// reduced Euler characteristic of its proper part by several independent
// routes: the recursive definition on the poset, the cycle-product formula
// summed over S_n, the exponential formula, and the closed generating
// function 1 - C(t) exp(-2t C(t)).

#include <cstddef>
#include <vector>

#include "absorder/bigint.hpp"
#include "absorder/permutation.hpp"
#include "absorder/poset.hpp"
#include "absorder/series.hpp"

namespace absorder {

/// C_m = binom(2m, m) / (m + 1).
Integer catalan(unsigned m);

/// Σ_{m=0}^{order} C_m t^m.
Series catalan_series(std::size_t order);

/// μ(e, x) = Π over cycles y of x of (-1)^{|y|-1} C_{|y|-1}.
Integer mobius_product(const Permutation& x);

/// μ(0̂, x) from μ(0̂, 0̂) = 1 and μ(0̂, x) = -Σ_{0̂ <= y < x} μ(0̂, y), using
/// only p.leq().  Throws PreconditionViolation if p has no minimum.
Integer mobius_direct(const Poset& p, std::size_t x);

/// μ(0̂, x) for every element, memoized in rank order.
std::vector<Integer> mobius_from_minimum(const Poset& p);

/// μ(0̂, 1̂) after adjoining a new maximum 1̂: -Σ_{x in P} μ(0̂, x).
Integer mobius_adjoined_top(const Poset& p);

/// Integer partitions of n, parts non-increasing, in reverse lexicographic order.
std::vector<std::vector<int>> integer_partitions(int n);

/// |{w in S_n : cycle type λ}| = n! / Π_i (i^{m_i} m_i!).
Integer conjugacy_class_size(const std::vector<int>& partition);

enum class EulerRoute { Partitions, AllPermutations };

/// χ̃(Δ(P̄_n)) = -Σ_{x in S_n} μ(e, x).  The partition route sums over cycle
/// types weighted by class sizes; the other literally visits all n!
/// permutations (refused above n = 10).
Integer euler_char_via_mobius(int n, EulerRoute route = EulerRoute::Partitions);

/// a_n = n! [t^n] (1 - C(t) exp(-2t C(t))) for n = 1..max_n; entry n-1 holds
/// a_n = (-1)^n χ̃(Δ(P̄_n)).  Throws std::domain_error on a non-integral
/// coefficient.
std::vector<Integer> gf_expand(std::size_t max_n);

/// χ̃(Δ(P̄_n)) for n = 1..max_n from exp Σ_{n>=1} (-1)^{n-1} C_{n-1} t^n / n
/// = 1 - Σ_{n>=1} χ̃(Δ(P̄_n)) t^n / n!.
std::vector<Integer> euler_chars_via_exponential_formula(std::size_t max_n);

/// (-1)^n χ̃ from the partition route, n = 1..max_n.
std::vector<Integer> signed_euler_chars_via_mobius(std::size_t max_n);

}  // namespace absorder
