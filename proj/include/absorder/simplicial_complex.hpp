#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "absorder/poset.hpp"

namespace absorder {

/// A face is a sorted list of vertex indices.
using Face = std::vector<int>;

/// A finite abstract simplicial complex, stored by its facets and (eagerly)
/// by all of its faces grouped by dimension.  Every complex contains the
/// empty face; a complex given no facets is {∅}, of dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Non-maximal input faces are dropped, so facets() is an antichain.
    static SimplicialComplex from_facets(std::vector<Face> facets);

    /// Caller guarantees `faces` is closed under taking subsets.
    static SimplicialComplex from_face_list(std::vector<Face> faces);

    const std::vector<Face>& facets() const { return facets_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 2; }
    bool is_pure() const;

    /// faces(d) lists the d-dimensional faces in lexicographic order; d >= -1.
    const std::vector<Face>& faces(int d) const;
    std::size_t face_count() const;
    /// Position of `f` in faces(|f|-1), or -1 when absent.
    long index_of(const Face& f) const;
    bool contains(const Face& f) const { return index_of(f) >= 0; }

    /// Vertices in increasing order.
    std::vector<int> vertices() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.faces_ == b.faces_;
    }

private:
    void finalize_facets_from_faces();

    std::vector<Face> facets_;
    std::vector<std::vector<Face>> faces_;  // faces_[d + 1]
};

/// Δ(P): vertices are element indices of P, faces are the chains.  Faces are
/// generated by extending chains upward along the order relation, facets are
/// the maximal chains.
SimplicialComplex order_complex(const Poset& p);

/// link_K(F) = { G \ F : G in K, F ⊆ G }.  Throws PreconditionViolation if F
/// is not a face of K.
SimplicialComplex link(const SimplicialComplex& k, const Face& f);

/// One facet per line, vertex indices separated by spaces; the empty facet
/// of {∅} is an empty line.
void write_facets(std::ostream& os, const SimplicialComplex& k);
/// Inverse of write_facets; blank input yields {∅}.  Throws ParseError.
SimplicialComplex read_facets(std::istream& is);

}  // namespace absorder
