#pragma once

// Permutations of [n] = {1, ..., n}, their cycle decompositions and
// reflection length.
//
// Composition is right-to-left: compose(u, v)(x) = u(v(x)).  The absolute
// order only ever looks at the reflection length of u^{-1} v; since u^{-1} v
// and v u^{-1} are conjugate the choice of convention does not affect it.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace absorder {

/// A cycle stored in canonical rotation (smallest element first).  Two cycles
/// compare equal iff one is a rotation of the other.
class Cycle {
public:
    Cycle() = default;
    /// Elements must be distinct and positive; any rotation is accepted.
    explicit Cycle(std::vector<int> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    int operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int x) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<int> elements_;
};

class Permutation {
public:
    /// Identity of degree n (n >= 1).
    explicit Permutation(int n = 1);

    static Permutation identity(int n) { return Permutation(n); }
    /// One-line form, images[i-1] = w(i).  Throws ParseError unless a bijection.
    static Permutation from_one_line(std::vector<int> images);
    /// Product of disjoint cycles; elements not mentioned are fixed.
    static Permutation from_cycles(int n, std::span<const Cycle> cycles);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    static Permutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    std::span<const int> one_line() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on the one-line form.
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct CycleDecomposition {
    int degree = 0;
    /// Canonical: each cycle rotated to its minimum, sorted by minimum, fixed
    /// points included as 1-cycles.
    std::vector<Cycle> cycles;

    std::size_t count() const { return cycles.size(); }
    Permutation recompose() const { return Permutation::from_cycles(degree, cycles); }
};

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& u);
CycleDecomposition cycle_decomposition(const Permutation& u);

/// Number of cycles, fixed points included.
int cycle_count(const Permutation& u);
int cycle_count(std::span<const int> one_line);

/// n minus the number of cycles; the minimal number of transpositions whose
/// product is u.
int reflection_length(const Permutation& u);

/// Cycle lengths in non-increasing order (an integer partition of n).
std::vector<int> cycle_type(const Permutation& u);

/// Canonical cycle notation.  Fixed points are omitted unless requested; the
/// identity without fixed points prints as "()".
std::string to_cycle_string(const Permutation& u, bool include_fixed_points = false);
std::string to_one_line_string(const Permutation& u);
std::string to_string(const Cycle& c);

/// Degree a textual permutation implies on its own: the largest element for
/// cycle notation, the length for one-line notation.
int natural_degree(std::string_view text);

/// Accepts cycle notation "(1 2)(3 4)" (fixed points optional, commas or
/// spaces as separators, "()" for the identity) and one-line notation
/// "2 1 4 3".  Without an explicit degree the natural degree is used.
Permutation parse_permutation(std::string_view text, std::optional<int> degree = std::nullopt);

/// All n! permutations of degree n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

std::vector<Permutation> all_transpositions(int n);

}  // namespace absorder
