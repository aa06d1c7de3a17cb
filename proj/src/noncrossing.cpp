#include "absorder/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "absorder/absolute_order.hpp"
#include "absorder/errors.hpp"

namespace absorder {

namespace {

std::unordered_map<int, std::size_t> positions_in(const Cycle& c) {
    std::unordered_map<int, std::size_t> pos;
    for (std::size_t i = 0; i < c.size(); ++i) {
        pos.emplace(c[i], i);
    }
    return pos;
}

bool is_subcycle_given(const Cycle& a, const std::unordered_map<int, std::size_t>& pos) {
    std::vector<std::size_t> p;
    p.reserve(a.size());
    for (int x : a) {
        auto it = pos.find(x);
        if (it == pos.end()) {
            return false;
        }
        p.push_back(it->second);
    }
    // Read cyclically, the positions may descend at most once.
    std::size_t descents = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[(i + 1) % p.size()] < p[i]) {
            ++descents;
        }
    }
    return descents <= 1;
}

// The only nontrivial cycle of c, or nullopt for the identity.
std::optional<Cycle> single_cycle_of(const Permutation& c) {
    std::optional<Cycle> found;
    for (const Cycle& y : cycle_decomposition(c).cycles) {
        if (y.size() < 2) {
            continue;
        }
        if (found) {
            throw PreconditionViolation("not a cycle: " + to_cycle_string(c));
        }
        found = y;
    }
    return found;
}

}  // namespace

bool is_deletion_subcycle(const Cycle& a, const Cycle& c) {
    return is_subcycle_given(a, positions_in(c));
}

std::optional<CrossingWitness> find_crossing(const Cycle& a, const Cycle& b, const Cycle& c) {
    for (int x : a) {
        if (b.contains(x)) {
            throw PreconditionViolation("cycles are not disjoint");
        }
    }
    const auto pos = positions_in(c);
    if (!is_subcycle_given(a, pos) || !is_subcycle_given(b, pos)) {
        throw PreconditionViolation("not a deletion-subcycle of " + to_string(c));
    }
    // Label the positions of c occupied by a or b; a and b cross iff the
    // labels, read along c, form at least four maximal runs.
    std::vector<std::pair<std::size_t, bool>> labelled;  // (position, in a)
    for (int x : a) {
        labelled.emplace_back(pos.at(x), true);
    }
    for (int x : b) {
        labelled.emplace_back(pos.at(x), false);
    }
    std::sort(labelled.begin(), labelled.end());
    std::vector<std::pair<std::size_t, bool>> run_heads;
    for (const auto& entry : labelled) {
        if (run_heads.empty() || run_heads.back().second != entry.second) {
            run_heads.push_back(entry);
        }
        if (run_heads.size() == 4) {
            break;
        }
    }
    if (run_heads.size() < 4) {
        return std::nullopt;
    }
    CrossingWitness w{};
    const std::size_t shift = run_heads[0].second ? 0 : 1;
    for (std::size_t i = 0; i < 4; ++i) {
        w[i] = c[run_heads[(i + shift) % 4].first];
    }
    return w;
}

bool are_noncrossing(const Cycle& a, const Cycle& b, const Cycle& c) {
    return !find_crossing(a, b, c).has_value();
}

std::vector<Permutation> noncrossing_elements(const Permutation& c) {
    const int n = c.degree();
    const std::optional<Cycle> cycle = single_cycle_of(c);
    if (!cycle) {
        return {Permutation::identity(n)};
    }
    const std::vector<int>& seq = cycle->elements();
    const std::size_t k = seq.size();

    // Noncrossing partitions of positions [lo, hi): the block of lo is
    // lo = p_0 < p_1 < ... < p_s, and the gaps between consecutive block
    // elements (and after p_s) are partitioned independently.
    std::vector<Permutation> out;
    std::vector<std::vector<std::size_t>> blocks;
    std::function<void(std::vector<std::pair<std::size_t, std::size_t>>)> fill;
    fill = [&](std::vector<std::pair<std::size_t, std::size_t>> pending) {
        while (!pending.empty() && pending.back().first >= pending.back().second) {
            pending.pop_back();
        }
        if (pending.empty()) {
            std::vector<Cycle> cycles;
            for (const auto& block : blocks) {
                std::vector<int> elems;
                for (std::size_t p : block) {
                    elems.push_back(seq[p]);
                }
                cycles.emplace_back(std::move(elems));
            }
            out.push_back(Permutation::from_cycles(n, std::span<const Cycle>(cycles)));
            return;
        }
        const auto [lo, hi] = pending.back();
        pending.pop_back();
        // Choose the block of lo as a subset of (lo, hi), in increasing order.
        std::vector<std::size_t> block{lo};
        std::function<void(std::size_t)> extend = [&](std::size_t next) {
            // Close the block here: gaps between members, and after the last.
            auto work = pending;
            for (std::size_t i = 0; i + 1 < block.size(); ++i) {
                work.emplace_back(block[i] + 1, block[i + 1]);
            }
            work.emplace_back(block.back() + 1, hi);
            blocks.push_back(block);
            fill(work);
            blocks.pop_back();
            for (std::size_t p = next; p < hi; ++p) {
                block.push_back(p);
                extend(p + 1);
                block.pop_back();
            }
        };
        extend(lo + 1);
    };
    fill({{0, k}});
    std::sort(out.begin(), out.end());
    return out;
}

Poset nc_interval_by_filter(const Permutation& c) {
    single_cycle_of(c);
    std::vector<Permutation> below;
    for (const Permutation& w : all_permutations(c.degree())) {
        if (leq_length(w, c)) {
            below.push_back(w);
        }
    }
    return Poset::induced(c.degree(), std::move(below));
}

Poset nc_interval_by_enumeration(const Permutation& c) {
    return Poset::induced(c.degree(), noncrossing_elements(c));
}

Poset nc_interval(const Permutation& c) {
    return c.degree() <= 7 ? nc_interval_by_filter(c) : nc_interval_by_enumeration(c);
}

}  // namespace absorder
