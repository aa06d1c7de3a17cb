#include "absorder/shelling.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "absorder/errors.hpp"

namespace absorder {

namespace {

class ShellingState {
public:
    explicit ShellingState(const SimplicialComplex& k) : k_(k) {}

    // Number of ridges of `g` already present when g meets the placed
    // facets in a pure codimension-one complex, nullopt otherwise.
    std::optional<std::size_t> admissible(std::size_t g) const {
        const Face& facet = k_.facets()[g];
        if (placed_.empty()) {
            return 0;
        }
        // shared[v]: facet minus its v-th vertex is a ridge of some placed facet.
        std::vector<bool> shared(facet.size(), false);
        std::size_t count = 0;
        for (std::size_t v = 0; v < facet.size(); ++v) {
            if (ridges_.count(without(facet, v))) {
                shared[v] = true;
                ++count;
            }
        }
        // Each intersection with a placed facet h must lie inside one of the
        // shared ridges, i.e. h must miss some shared vertex position.
        for (std::size_t h : placed_) {
            const Face& other = k_.facets()[h];
            bool inside_shared_ridge = false;
            for (std::size_t v = 0; v < facet.size() && !inside_shared_ridge; ++v) {
                if (shared[v] && !std::binary_search(other.begin(), other.end(), facet[v])) {
                    inside_shared_ridge = true;
                }
            }
            if (!inside_shared_ridge) {
                return std::nullopt;
            }
        }
        return count;
    }

    void place(std::size_t g) {
        const Face& facet = k_.facets()[g];
        for (std::size_t v = 0; v < facet.size(); ++v) {
            ++ridges_[without(facet, v)];
        }
        placed_.push_back(g);
    }

    void unplace() {
        const Face& facet = k_.facets()[placed_.back()];
        for (std::size_t v = 0; v < facet.size(); ++v) {
            auto it = ridges_.find(without(facet, v));
            if (--it->second == 0) {
                ridges_.erase(it);
            }
        }
        placed_.pop_back();
    }

    const std::vector<std::size_t>& placed() const { return placed_; }

private:
    static Face without(const Face& f, std::size_t v) {
        Face out;
        out.reserve(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i != v) {
                out.push_back(f[i]);
            }
        }
        return out;
    }

    const SimplicialComplex& k_;
    std::vector<std::size_t> placed_;
    std::map<Face, std::size_t> ridges_;
};

void require_pure(const SimplicialComplex& k) {
    if (!k.is_pure()) {
        throw PreconditionViolation("shellings are defined here for pure complexes only");
    }
}

}  // namespace

ShellingCheck verify_shelling(const SimplicialComplex& k, const ShellingOrder& order) {
    require_pure(k);
    std::vector<bool> used(k.facets().size(), false);
    for (std::size_t g : order) {
        if (g >= used.size() || used[g]) {
            throw PreconditionViolation("order is not a permutation of the facets");
        }
        used[g] = true;
    }
    if (order.size() != used.size()) {
        throw PreconditionViolation("order is not a permutation of the facets");
    }
    ShellingState state(k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!state.admissible(order[i])) {
            return {false, i};
        }
        state.place(order[i]);
    }
    return {true, std::nullopt};
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& k,
                                           const ShellingSearchLimits& limits) {
    require_pure(k);
    const std::size_t m = k.facets().size();
    if (m > limits.max_facets) {
        throw ResourceCapExceeded("shelling search refused: " + std::to_string(m) +
                                  " facets exceed the cap of " +
                                  std::to_string(limits.max_facets));
    }
    ShellingState state(k);
    std::vector<bool> used(m, false);
    std::size_t steps = 0;

    std::function<bool()> search = [&]() -> bool {
        if (state.placed().size() == m) {
            return true;
        }
        if (++steps > limits.max_steps) {
            throw ResourceCapExceeded("shelling search exceeded its step budget");
        }
        std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (shared ridges, facet)
        for (std::size_t g = 0; g < m; ++g) {
            if (!used[g]) {
                if (auto shared = state.admissible(g)) {
                    candidates.emplace_back(*shared, g);
                }
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [shared, g] : candidates) {
            used[g] = true;
            state.place(g);
            if (search()) {
                return true;
            }
            state.unplace();
            used[g] = false;
        }
        return false;
    };

    if (!search()) {
        return std::nullopt;
    }
    ShellingOrder order = state.placed();
    if (!verify_shelling(k, order).valid) {
        throw std::logic_error("shelling search produced an invalid order");
    }
    return order;
}

}  // namespace absorder
