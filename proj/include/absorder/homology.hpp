#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absorder/bigint.hpp"
#include "absorder/integer_matrix.hpp"
#include "absorder/poset.hpp"
#include "absorder/simplicial_complex.hpp"

namespace absorder {

/// Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_s with t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced boundary map C_d -> C_{d-1}; rows index faces(d-1), columns
/// faces(d).  For d = 0 this is the augmentation onto the empty face.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// H̃_i(K; Z) for i = -1, ..., dim K (entry i+1 of the result).  Every run
/// checks that consecutive boundary maps compose to zero.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k);

/// Σ_i (-1)^i f_i over all faces, the empty face counted in dimension -1.
Integer euler_characteristic_reduced(const SimplicialComplex& k);

/// {"dims": [{"i", "rank", "torsion"}]} with torsion as decimal strings.
std::string homology_to_json(const std::vector<HomologyGroup>& groups);
std::string homology_to_text(const std::vector<HomologyGroup>& groups);

struct CohenMacaulayReport {
    bool cohen_macaulay = true;
    /// First failure in order of increasing face dimension.
    std::optional<Face> witness_face;
    int witness_degree = 0;
    std::size_t faces_checked = 0;
    std::size_t links_computed = 0;
};

/// H̃_i(link F) = 0 for every face F (the empty face included) and every
/// i < dim link F.  Links are computed directly, one per face.
CohenMacaulayReport is_cohen_macaulay_Z(const SimplicialComplex& k, unsigned jobs = 1);

/// Faces with equal signatures must have isomorphic links; the homology of
/// each signature class is computed once.
using LinkSignature = std::function<std::string(const Face&)>;
CohenMacaulayReport is_cohen_macaulay_Z(const SimplicialComplex& k, const LinkSignature& signature,
                                        unsigned jobs = 1);

/// Signature for Δ(P̄) where `proper_part` is P_n minus its minimum: a chain
/// x_1 < ... < x_k cuts P̂_n into open intervals (e, x_1), (x_i, x_{i+1}) and
/// (x_k, 1̂).  [u, v] ≅ [e, u^{-1}v] and conjugation is an automorphism, so
/// the multiset of cycle types of x_1, x_i^{-1}x_{i+1} and (for the top
/// piece) x_k determines the link up to isomorphism.
LinkSignature absolute_order_link_signature(const Poset& proper_part);

}  // namespace absorder
