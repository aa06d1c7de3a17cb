#pragma once

// The absolute order on S_n: u <= v iff l(u) + l(u^{-1} v) = l(v), where l is
// reflection length.  Also the ideals I_n(R) generated by the sets S_n(R).

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "absorder/bigint.hpp"
#include "absorder/permutation.hpp"
#include "absorder/poset.hpp"

namespace absorder {

/// Reflection lengths add along u, u^{-1} v, v.
bool leq_length(const Permutation& u, const Permutation& v);

/// Every cycle of u is a deletion-subcycle of a cycle of v, and cycles of u
/// inside the same cycle c of v are pairwise noncrossing with respect to c.
bool leq_noncrossing(const Permutation& u, const Permutation& v);

inline constexpr int kDefaultPosetCap = 9;

/// P_n = (S_n, absolute order).  Throws ResourceCapExceeded when n > cap;
/// the element count is n!.
Poset build_Pn(int n, int cap = kDefaultPosetCap);

/// P_n with its minimum removed (the proper part, since P_n has no maximum).
Poset build_proper_part(int n, int cap = kDefaultPosetCap);

/// Coefficients of sum_{w in S_n} q^{l(w)}, by counting all n! permutations.
std::vector<Integer> rank_generating_polynomial(int n);

/// Coefficients of prod_{i=1}^{n-1} (1 + i q).
std::vector<Integer> rank_generating_product(int n);

/// R = (sigma, tau_0, ..., tau_k).  Sets are stored sorted and tau_1..tau_k
/// are ordered by their smallest element, so equal specifications compare
/// equal regardless of how they were written down.
class RSpec {
public:
    /// `tau` lists tau_0, ..., tau_k; an empty list means tau_0 = {} and k = 0.
    RSpec(int n, std::vector<int> sigma, std::vector<std::vector<int>> tau = {});

    int degree() const { return n_; }
    const std::vector<int>& sigma() const { return sigma_; }
    const std::vector<std::vector<int>>& tau() const { return tau_; }
    int k() const { return static_cast<int>(tau_.size()) - 1; }

    /// Elements of [n] absent from sigma and every tau_i.
    std::vector<int> free_elements() const;
    int m() const { return static_cast<int>(free_elements().size()); }

    RSpec with_added_to_tau(int element, std::size_t block) const;
    RSpec with_sigma_extended(int element) const;
    RSpec with_new_block(std::vector<int> block) const;

    std::string to_string() const;

    friend bool operator==(const RSpec&, const RSpec&) = default;
    friend auto operator<=>(const RSpec&, const RSpec&) = default;

private:
    int n_;
    std::vector<int> sigma_;
    std::vector<std::vector<int>> tau_;
};

/// S_n(R): permutations with exactly k+1 cycles c_0..c_k (fixed points count
/// as cycles) where sigma runs consecutively through c_0 and tau_i lies in
/// c_i.  Returned in lexicographic order.
std::vector<Permutation> enumerate_SnR(const RSpec& r);

/// A downward-closed subset of a parent poset.
class Ideal {
public:
    Ideal(std::shared_ptr<const Poset> parent, boost::dynamic_bitset<> members);

    const Poset& parent() const { return *parent_; }
    const std::shared_ptr<const Poset>& parent_ptr() const { return parent_; }
    const boost::dynamic_bitset<>& members() const { return members_; }

    std::size_t size() const { return members_.count(); }
    bool empty() const { return members_.none(); }
    bool contains(std::size_t i) const { return members_.test(i); }
    std::vector<std::size_t> indices() const;
    std::vector<Permutation> elements() const;
    /// Largest member rank, -1 when empty.
    int rank() const;
    std::vector<std::size_t> maximal_elements() const;
    bool is_downward_closed() const;
    /// Every maximal member has rank rank().
    bool is_pure() const;
    Poset to_poset() const;

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
    friend Ideal operator&(const Ideal& a, const Ideal& b);
    friend Ideal operator|(const Ideal& a, const Ideal& b);
    bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }
    bool is_proper_subset_of(const Ideal& other) const {
        return members_.is_proper_subset_of(other.members_);
    }

private:
    std::shared_ptr<const Poset> parent_;
    boost::dynamic_bitset<> members_;
};

Ideal ideal_generated(std::shared_ptr<const Poset> parent, std::span<const std::size_t> generators);
/// Generators must be elements of the parent; throws PreconditionViolation otherwise.
Ideal ideal_generated(std::shared_ptr<const Poset> parent,
                      std::span<const Permutation> generators);

/// I_n(R) inside `pn`, which must be P_n for n = r.degree().
Ideal generated_ideal(std::shared_ptr<const Poset> pn, const RSpec& r);

/// {"n", "elements", "ranks", "covers"}, compact, deterministic.
std::string poset_to_json(const Poset& p);
/// Hasse diagram; one node per element labelled in cycle notation ("e" for
/// the identity), rank layers grouped with rank=same, edges lower -> upper.
std::string poset_to_dot(const Poset& p);

}  // namespace absorder
