#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "absorder/permutation.hpp"

namespace absorder {

struct Cover {
    std::size_t lower;
    std::size_t upper;
    friend bool operator==(const Cover&, const Cover&) = default;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Comparability matrices are stored up to this many elements (|S_7|);
/// larger posets answer leq() through the reflection-length test.
inline constexpr std::size_t kMaterializeLimit = 5040;

/// A finite subposet of the absolute order on S_n.  Elements are kept
/// deduplicated in lexicographic one-line order, which makes the element
/// index of a permutation a binary search away.  The rank of an element is
/// its reflection length in S_n (not its height inside the subposet).
class Poset {
public:
    /// The induced subposet of (S_n, absolute order) on `elements`.
    static Poset induced(int n, std::vector<Permutation> elements);
    /// All of S_n; covers come from right multiplication by transpositions.
    static Poset whole_group(int n);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::optional<std::size_t> index_of(const Permutation& p) const;

    int rank(std::size_t i) const { return ranks_[i]; }
    const std::vector<int>& ranks() const { return ranks_; }
    /// Largest element rank, -1 for the empty poset.
    int rank() const;
    /// Number of elements of each rank 0..rank().
    std::vector<std::size_t> rank_sizes() const;

    bool leq(std::size_t i, std::size_t j) const;
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    /// Sorted by (lower, upper).
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;
    /// Unique minimum and unique maximum.
    bool is_bounded() const;

    bool has_materialized_order() const { return !above_.empty() || elements_.empty(); }

private:
    Poset() = default;
    void prepare(int n, std::vector<Permutation> elements);
    void materialize_order();
    void set_covers(std::vector<Cover> covers);
    bool leq_by_length(std::size_t i, std::size_t j) const;

    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<int> ranks_;
    std::vector<int> inverse_images_;  // flat, degree_ entries per element
    std::vector<Cover> covers_;
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<boost::dynamic_bitset<>> above_;  // above_[i][j] iff i <= j
};

}  // namespace absorder
