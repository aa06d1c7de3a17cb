#include "absorder/poset.hpp"

#include <algorithm>

#include "absorder/errors.hpp"

namespace absorder {

void Poset::prepare(int n, std::vector<Permutation> elements) {
    degree_ = n;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const Permutation& p : elements) {
        if (p.degree() != n) {
            throw DegreeMismatch(p.degree(), n);
        }
    }
    elements_ = std::move(elements);
    ranks_.resize(elements_.size());
    inverse_images_.resize(elements_.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        ranks_[i] = reflection_length(elements_[i]);
        int* inv = inverse_images_.data() + i * static_cast<std::size_t>(n);
        for (int x = 1; x <= n; ++x) {
            inv[elements_[i](x) - 1] = x;
        }
    }
}

bool Poset::leq_by_length(std::size_t i, std::size_t j) const {
    if (ranks_[i] > ranks_[j]) {
        return false;
    }
    const auto n = static_cast<std::size_t>(degree_);
    const int* inv = inverse_images_.data() + i * n;
    const auto v = elements_[j].one_line();
    // u^{-1} v in one-line form, on the stack for the degrees we enumerate.
    int buffer[64];
    std::vector<int> heap;
    int* w = buffer;
    if (n > 64) {
        heap.resize(n);
        w = heap.data();
    }
    for (std::size_t x = 0; x < n; ++x) {
        w[x] = inv[v[x] - 1];
    }
    const int length = degree_ - cycle_count(std::span<const int>(w, n));
    return ranks_[i] + length == ranks_[j];
}

void Poset::materialize_order() {
    const std::size_t size = elements_.size();
    above_.assign(size, boost::dynamic_bitset<>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (leq_by_length(i, j)) {
                above_[i].set(j);
            }
        }
    }
}

void Poset::set_covers(std::vector<Cover> covers) {
    std::sort(covers.begin(), covers.end());
    covers_ = std::move(covers);
    lower_.assign(elements_.size(), {});
    upper_.assign(elements_.size(), {});
    for (const Cover& c : covers_) {
        upper_[c.lower].push_back(c.upper);
        lower_[c.upper].push_back(c.lower);
    }
    for (auto& l : lower_) {
        std::sort(l.begin(), l.end());
    }
}

Poset Poset::induced(int n, std::vector<Permutation> elements) {
    Poset p;
    p.prepare(n, std::move(elements));
    const std::size_t size = p.size();
    std::vector<Cover> covers;
    if (size <= kMaterializeLimit) {
        p.materialize_order();
        // Transitive reduction, scanning each element's strict lower set by
        // decreasing rank: an element is a cover unless it already lies
        // below a cover found earlier.
        std::vector<boost::dynamic_bitset<>> below(size, boost::dynamic_bitset<>(size));
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = p.above_[i].find_first(); j != boost::dynamic_bitset<>::npos;
                 j = p.above_[i].find_next(j)) {
                if (j != i) {
                    below[j].set(i);
                }
            }
        }
        for (std::size_t j = 0; j < size; ++j) {
            std::vector<std::size_t> lower;
            for (std::size_t i = below[j].find_first(); i != boost::dynamic_bitset<>::npos;
                 i = below[j].find_next(i)) {
                lower.push_back(i);
            }
            std::stable_sort(lower.begin(), lower.end(), [&](std::size_t a, std::size_t b) {
                return p.ranks_[a] > p.ranks_[b];
            });
            boost::dynamic_bitset<> shadowed(size);
            for (std::size_t i : lower) {
                if (shadowed.test(i)) {
                    continue;
                }
                covers.push_back({i, j});
                shadowed |= below[i];
            }
        }
    } else {
        // Without a matrix, covers are taken as comparable pairs one rank
        // apart.  Exact for subsets that contain every interval between their
        // comparable elements (ideals, intervals, P_n minus its minimum).
        std::vector<std::vector<std::size_t>> by_rank;
        for (std::size_t i = 0; i < size; ++i) {
            const auto r = static_cast<std::size_t>(p.ranks_[i]);
            if (by_rank.size() <= r) {
                by_rank.resize(r + 1);
            }
            by_rank[r].push_back(i);
        }
        for (std::size_t r = 0; r + 1 < by_rank.size(); ++r) {
            for (std::size_t i : by_rank[r]) {
                for (std::size_t j : by_rank[r + 1]) {
                    if (p.leq_by_length(i, j)) {
                        covers.push_back({i, j});
                    }
                }
            }
        }
    }
    p.set_covers(std::move(covers));
    return p;
}

Poset Poset::whole_group(int n) {
    Poset p;
    p.prepare(n, all_permutations(n));
    const auto transpositions = all_transpositions(n);
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (const Permutation& t : transpositions) {
            const Permutation wt = compose(p.elements_[i], t);
            const std::size_t j = *p.index_of(wt);
            if (p.ranks_[j] == p.ranks_[i] + 1) {
                covers.push_back({i, j});
            }
        }
    }
    p.set_covers(std::move(covers));
    if (p.size() <= kMaterializeLimit) {
        p.materialize_order();
    }
    return p;
}

std::optional<std::size_t> Poset::index_of(const Permutation& q) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), q);
    if (it == elements_.end() || *it != q) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

int Poset::rank() const {
    int r = -1;
    for (int x : ranks_) {
        r = std::max(r, x);
    }
    return r;
}

std::vector<std::size_t> Poset::rank_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(rank() + 1), 0);
    for (int x : ranks_) {
        ++sizes[static_cast<std::size_t>(x)];
    }
    return sizes;
}

bool Poset::leq(std::size_t i, std::size_t j) const {
    if (!above_.empty()) {
        return above_[i].test(j);
    }
    return leq_by_length(i, j);
}

std::vector<std::size_t> Poset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (lower_[i].empty()) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (upper_[i].empty()) {
            out.push_back(i);
        }
    }
    return out;
}

bool Poset::is_bounded() const {
    return minimal_elements().size() == 1 && maximal_elements().size() == 1;
}

}  // namespace absorder
