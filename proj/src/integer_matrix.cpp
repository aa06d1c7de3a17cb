#include "absorder/integer_matrix.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "absorder/errors.hpp"

namespace absorder {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : data_) {
        total += r.size();
    }
    return total;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, Integer value) {
    if (r >= rows_ || c >= cols_) {
        throw PreconditionViolation("matrix index out of range");
    }
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (value == 0) {
            row.erase(it);
        } else {
            it->second = std::move(value);
        }
    } else if (value != 0) {
        row.insert(it, Entry{c, std::move(value)});
    }
}

Integer IntegerMatrix::get(std::size_t r, std::size_t c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Integer(0);
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw PreconditionViolation("matrix dimensions do not compose");
    }
    IntegerMatrix out(rows_, rhs.cols_);
    std::vector<Integer> acc(rhs.cols_);
    std::vector<bool> touched(rhs.cols_, false);
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < rows_; ++r) {
        cols.clear();
        for (const auto& [k, a] : data_[r]) {
            for (const auto& [c, b] : rhs.data_[k]) {
                if (!touched[c]) {
                    touched[c] = true;
                    acc[c] = 0;
                    cols.push_back(c);
                }
                acc[c] += a * b;
            }
        }
        std::sort(cols.begin(), cols.end());
        for (std::size_t c : cols) {
            touched[c] = false;
            if (acc[c] != 0) {
                out.data_[r].emplace_back(c, acc[c]);
            }
        }
    }
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

namespace {

bool is_unit(const Integer& v) { return v == 1 || v == -1; }

// Euclidean reduction of a dense matrix to diagonal form; returns the nonzero
// diagonal entries (absolute values, not yet a divisibility chain).
std::vector<Integer> dense_diagonalize(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) {
            std::swap(row[x], row[y]);
        }
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) {
            break;
        }
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);
        while (true) {
            bool clear = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) {
                    continue;
                }
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) {
                    a[i][j] -= q * a[t][j];
                }
                clear = clear && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) {
                    continue;
                }
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) {
                    a[i][j] -= q * a[i][t];
                }
                clear = clear && a[t][j] == 0;
            }
            if (clear) {
                break;
            }
            // A nonzero remainder is smaller than the pivot; move it in.
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
                    bi = i;
                    bj = t;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
                    bi = t;
                    bj = j;
                }
            }
            std::swap(a[t], a[bi]);
            swap_cols(t, bj);
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    using Entry = IntegerMatrix::Entry;
    std::vector<std::vector<Entry>> rows(m.rows());
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r] = m.row(r);
        for (const auto& e : rows[r]) {
            col_rows[e.first].insert(r);
        }
    }

    std::size_t units = 0;
    std::vector<Entry> merged;
    while (true) {
        // Markowitz choice among +-1 entries.
        std::size_t best_row = m.rows(), best_col = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r) {
            for (const auto& [c, v] : rows[r]) {
                if (!is_unit(v)) {
                    continue;
                }
                const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                    if (cost == 0) {
                        break;
                    }
                }
            }
        }
        if (best_row == m.rows()) {
            break;
        }
        const std::size_t p = best_row;
        const std::vector<Entry> pivot_row = rows[p];
        Integer pivot_value;
        for (const auto& [c, v] : pivot_row) {
            if (c == best_col) {
                pivot_value = v;
            }
        }
        const std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
        for (std::size_t r : targets) {
            if (r == p) {
                continue;
            }
            // row_r -= f * row_p with f = a_rc / pivot (pivot is a unit).
            Integer f;
            for (const auto& [c, v] : rows[r]) {
                if (c == best_col) {
                    f = v * pivot_value;
                    break;
                }
            }
            merged.clear();
            auto a = rows[r].begin();
            auto b = pivot_row.begin();
            while (a != rows[r].end() || b != pivot_row.end()) {
                if (b == pivot_row.end() || (a != rows[r].end() && a->first < b->first)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == rows[r].end() || b->first < a->first) {
                    merged.emplace_back(b->first, -f * b->second);
                    col_rows[b->first].insert(r);
                    ++b;
                } else {
                    Integer v = a->second - f * b->second;
                    if (v == 0) {
                        col_rows[a->first].erase(r);
                    } else {
                        merged.emplace_back(a->first, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            rows[r].swap(merged);
        }
        // The pivot column is now zero outside the pivot row, so column
        // operations clear the rest of the pivot row without side effects.
        for (const auto& e : pivot_row) {
            col_rows[e.first].erase(p);
        }
        rows[p].clear();
        ++units;
    }

    // Whatever survives has no unit entries; finish densely.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].empty()) {
            live_rows.push_back(r);
        }
    }
    for (std::size_t c = 0; c < col_rows.size(); ++c) {
        if (!col_rows[c].empty()) {
            live_cols.push_back(c);
        }
    }
    std::vector<Integer> diag(units, Integer(1));
    if (!live_rows.empty()) {
        std::vector<std::size_t> col_index(m.cols(), 0);
        for (std::size_t i = 0; i < live_cols.size(); ++i) {
            col_index[live_cols[i]] = i;
        }
        std::vector<std::vector<Integer>> dense(live_rows.size(),
                                                std::vector<Integer>(live_cols.size()));
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            for (const auto& [c, v] : rows[live_rows[i]]) {
                dense[i][col_index[c]] = v;
            }
        }
        for (Integer& d : dense_diagonalize(std::move(dense))) {
            diag.push_back(std::move(d));
        }
    }

    // diag(a, b) ~ diag(gcd, lcm): normalize into a divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0) {
                continue;
            }
            const Integer g = gcd(diag[i], diag[j]);
            const Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    std::sort(diag.begin(), diag.end());
    SmithForm out;
    out.rank = diag.size();
    out.invariant_factors = std::move(diag);
    return out;
}

}  // namespace absorder
