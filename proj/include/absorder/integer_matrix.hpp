#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "absorder/bigint.hpp"

namespace absorder {

/// Sparse integer matrix, row-major, arbitrary-precision entries.
class IntegerMatrix {
public:
    using Entry = std::pair<std::size_t, Integer>;  // (column, value), value != 0

    IntegerMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    /// Setting zero removes the entry.
    void set(std::size_t r, std::size_t c, Integer value);
    Integer get(std::size_t r, std::size_t c) const;
    /// Sorted by column.
    const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool is_zero() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> data_;
};

/// The nonzero diagonal of the Smith normal form: positive invariant factors
/// d_1 | d_2 | ... | d_rank.
struct SmithForm {
    std::size_t rank = 0;
    std::vector<Integer> invariant_factors;
};

/// Sparse elimination on +-1 pivots (fewest-fill first), then a dense
/// Euclidean reduction of whatever is left.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace absorder
