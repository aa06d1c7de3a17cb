#include "absorder/absolute_order.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "absorder/errors.hpp"
#include "absorder/noncrossing.hpp"

namespace absorder {

bool leq_length(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) {
        throw DegreeMismatch(u.degree(), v.degree());
    }
    return reflection_length(u) + reflection_length(compose(inverse(u), v)) ==
           reflection_length(v);
}

bool leq_noncrossing(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) {
        throw DegreeMismatch(u.degree(), v.degree());
    }
    const CycleDecomposition du = cycle_decomposition(u);
    const CycleDecomposition dv = cycle_decomposition(v);
    std::vector<std::size_t> owner(static_cast<std::size_t>(v.degree()) + 1);
    for (std::size_t i = 0; i < dv.cycles.size(); ++i) {
        for (int x : dv.cycles[i]) {
            owner[static_cast<std::size_t>(x)] = i;
        }
    }
    // The v-cycle hosting a u-cycle is forced: the one containing its first element.
    std::vector<std::vector<const Cycle*>> hosted(dv.cycles.size());
    for (const Cycle& a : du.cycles) {
        if (a.size() == 1) {
            continue;
        }
        const std::size_t host = owner[static_cast<std::size_t>(a[0])];
        if (!is_deletion_subcycle(a, dv.cycles[host])) {
            return false;
        }
        hosted[host].push_back(&a);
    }
    for (std::size_t h = 0; h < hosted.size(); ++h) {
        const auto& group = hosted[h];
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                if (!are_noncrossing(*group[i], *group[j], dv.cycles[h])) {
                    return false;
                }
            }
        }
    }
    return true;
}

Poset build_Pn(int n, int cap) {
    if (n < 1) {
        throw PreconditionViolation("n must be positive");
    }
    if (n > cap) {
        throw ResourceCapExceeded("P_" + std::to_string(n) + " exceeds the poset cap n <= " +
                                  std::to_string(cap));
    }
    return Poset::whole_group(n);
}

Poset build_proper_part(int n, int cap) {
    if (n < 1) {
        throw PreconditionViolation("n must be positive");
    }
    if (n > cap) {
        throw ResourceCapExceeded("P_" + std::to_string(n) + " exceeds the poset cap n <= " +
                                  std::to_string(cap));
    }
    std::vector<Permutation> elems = all_permutations(n);
    elems.erase(elems.begin());  // lexicographically first is the identity
    return Poset::induced(n, std::move(elems));
}

std::vector<Integer> rank_generating_polynomial(int n) {
    if (n < 1) {
        throw PreconditionViolation("n must be positive");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        ++counts[static_cast<std::size_t>(n - cycle_count(images))];
    } while (std::next_permutation(images.begin(), images.end()));
    return {counts.begin(), counts.end()};
}

std::vector<Integer> rank_generating_product(int n) {
    if (n < 1) {
        throw PreconditionViolation("n must be positive");
    }
    std::vector<Integer> poly{1};
    for (int i = 1; i < n; ++i) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d];
            next[d + 1] += poly[d] * i;
        }
        poly = std::move(next);
    }
    return poly;
}

// --- RSpec ------------------------------------------------------------------

RSpec::RSpec(int n, std::vector<int> sigma, std::vector<std::vector<int>> tau)
    : n_(n), sigma_(std::move(sigma)), tau_(std::move(tau)) {
    if (n_ < 1) {
        throw PreconditionViolation("n must be positive");
    }
    if (sigma_.empty()) {
        throw PreconditionViolation("sigma must be nonempty");
    }
    if (tau_.empty()) {
        tau_.emplace_back();
    }
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    auto claim = [&](int x) {
        if (x < 1 || x > n_) {
            throw PreconditionViolation("element " + std::to_string(x) + " outside [n]");
        }
        if (used[static_cast<std::size_t>(x)]) {
            throw PreconditionViolation("element " + std::to_string(x) + " used twice in R");
        }
        used[static_cast<std::size_t>(x)] = true;
    };
    for (int x : sigma_) {
        claim(x);
    }
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        if (i > 0 && tau_[i].empty()) {
            throw PreconditionViolation("tau_1..tau_k must be nonempty");
        }
        std::sort(tau_[i].begin(), tau_[i].end());
        for (int x : tau_[i]) {
            claim(x);
        }
    }
    std::sort(tau_.begin() + 1, tau_.end());
}

std::vector<int> RSpec::free_elements() const {
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    for (int x : sigma_) {
        used[static_cast<std::size_t>(x)] = true;
    }
    for (const auto& t : tau_) {
        for (int x : t) {
            used[static_cast<std::size_t>(x)] = true;
        }
    }
    std::vector<int> out;
    for (int x = 1; x <= n_; ++x) {
        if (!used[static_cast<std::size_t>(x)]) {
            out.push_back(x);
        }
    }
    return out;
}

RSpec RSpec::with_added_to_tau(int element, std::size_t block) const {
    auto tau = tau_;
    tau.at(block).push_back(element);
    return RSpec(n_, sigma_, std::move(tau));
}

RSpec RSpec::with_sigma_extended(int element) const {
    auto sigma = sigma_;
    sigma.push_back(element);
    return RSpec(n_, std::move(sigma), tau_);
}

RSpec RSpec::with_new_block(std::vector<int> block) const {
    auto tau = tau_;
    tau.push_back(std::move(block));
    return RSpec(n_, sigma_, std::move(tau));
}

std::string RSpec::to_string() const {
    std::ostringstream os;
    os << "n=" << n_ << " sigma=(";
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
        os << (i ? "," : "") << sigma_[i];
    }
    os << ")";
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        os << " tau" << i << "={";
        for (std::size_t j = 0; j < tau_[i].size(); ++j) {
            os << (j ? "," : "") << tau_[i][j];
        }
        os << "}";
    }
    return os.str();
}

std::vector<Permutation> enumerate_SnR(const RSpec& r) {
    const int n = r.degree();
    const std::size_t blocks = r.tau().size();
    const std::vector<int> free = r.free_elements();

    std::vector<Permutation> out;
    std::vector<std::vector<int>> members(blocks);
    std::vector<int> images(static_cast<std::size_t>(n));

    // Once free elements are placed, every block is arranged into one cycle:
    // c_0 is sigma followed by an arbitrary order of its other members, and
    // c_i (i >= 1) starts at its minimum followed by an arbitrary order.
    std::function<void(std::size_t)> arrange = [&](std::size_t b) {
        if (b == blocks) {
            out.push_back(Permutation::from_one_line(images));
            return;
        }
        std::vector<int> head;
        std::vector<int> rest = members[b];
        std::sort(rest.begin(), rest.end());
        if (b == 0) {
            head = r.sigma();
        } else {
            head.push_back(rest.front());
            rest.erase(rest.begin());
        }
        do {
            std::vector<int> cycle = head;
            cycle.insert(cycle.end(), rest.begin(), rest.end());
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
            }
            arrange(b + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };

    std::function<void(std::size_t)> place = [&](std::size_t f) {
        if (f == free.size()) {
            arrange(0);
            return;
        }
        for (std::size_t b = 0; b < blocks; ++b) {
            members[b].push_back(free[f]);
            place(f + 1);
            members[b].pop_back();
        }
    };

    members[0] = r.tau()[0];
    for (std::size_t b = 1; b < blocks; ++b) {
        members[b] = r.tau()[b];
    }
    place(0);
    std::sort(out.begin(), out.end());
    return out;
}

// --- Ideal ------------------------------------------------------------------

Ideal::Ideal(std::shared_ptr<const Poset> parent, boost::dynamic_bitset<> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    if (members_.size() != parent_->size()) {
        throw PreconditionViolation("ideal membership does not match the parent poset");
    }
}

std::vector<std::size_t> Ideal::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = members_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = members_.find_next(i)) {
        out.push_back(i);
    }
    return out;
}

std::vector<Permutation> Ideal::elements() const {
    std::vector<Permutation> out;
    for (std::size_t i : indices()) {
        out.push_back(parent_->element(i));
    }
    return out;
}

int Ideal::rank() const {
    int r = -1;
    for (std::size_t i : indices()) {
        r = std::max(r, parent_->rank(i));
    }
    return r;
}

std::vector<std::size_t> Ideal::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i : indices()) {
        const auto& up = parent_->upper_covers(i);
        if (std::none_of(up.begin(), up.end(), [&](std::size_t j) { return members_.test(j); })) {
            out.push_back(i);
        }
    }
    return out;
}

bool Ideal::is_downward_closed() const {
    for (std::size_t i : indices()) {
        for (std::size_t j : parent_->lower_covers(i)) {
            if (!members_.test(j)) {
                return false;
            }
        }
    }
    return true;
}

bool Ideal::is_pure() const {
    const int r = rank();
    for (std::size_t i : maximal_elements()) {
        if (parent_->rank(i) != r) {
            return false;
        }
    }
    return true;
}

Poset Ideal::to_poset() const { return Poset::induced(parent_->degree(), elements()); }

Ideal operator&(const Ideal& a, const Ideal& b) { return Ideal(a.parent_, a.members_ & b.members_); }

Ideal operator|(const Ideal& a, const Ideal& b) { return Ideal(a.parent_, a.members_ | b.members_); }

Ideal ideal_generated(std::shared_ptr<const Poset> parent, std::span<const std::size_t> generators) {
    boost::dynamic_bitset<> members(parent->size());
    std::vector<std::size_t> stack(generators.begin(), generators.end());
    for (std::size_t g : generators) {
        if (g >= parent->size()) {
            throw PreconditionViolation("generator index out of range");
        }
        members.set(g);
    }
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : parent->lower_covers(x)) {
            if (!members.test(y)) {
                members.set(y);
                stack.push_back(y);
            }
        }
    }
    return Ideal(std::move(parent), std::move(members));
}

Ideal ideal_generated(std::shared_ptr<const Poset> parent, std::span<const Permutation> generators) {
    std::vector<std::size_t> idx;
    idx.reserve(generators.size());
    for (const Permutation& g : generators) {
        auto i = parent->index_of(g);
        if (!i) {
            throw PreconditionViolation("generator " + to_cycle_string(g) + " not in the poset");
        }
        idx.push_back(*i);
    }
    return ideal_generated(std::move(parent), std::span<const std::size_t>(idx));
}

Ideal generated_ideal(std::shared_ptr<const Poset> pn, const RSpec& r) {
    if (pn->degree() != r.degree() || pn->size() == 0) {
        throw DegreeMismatch(pn->degree(), r.degree());
    }
    const auto gens = enumerate_SnR(r);
    return ideal_generated(std::move(pn), std::span<const Permutation>(gens));
}

// --- export -----------------------------------------------------------------

std::string poset_to_json(const Poset& p) {
    nlohmann::ordered_json j;
    j["n"] = p.degree();
    auto elements = nlohmann::ordered_json::array();
    for (const Permutation& w : p.elements()) {
        elements.push_back(std::vector<int>(w.one_line().begin(), w.one_line().end()));
    }
    j["elements"] = std::move(elements);
    j["ranks"] = p.ranks();
    auto covers = nlohmann::ordered_json::array();
    for (const Cover& c : p.covers()) {
        covers.push_back({c.lower, c.upper});
    }
    j["covers"] = std::move(covers);
    return j.dump();
}

std::string poset_to_dot(const Poset& p) {
    std::ostringstream os;
    os << "digraph absolute_order {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    std::map<int, std::vector<std::size_t>> layers;
    for (std::size_t i = 0; i < p.size(); ++i) {
        layers[p.rank(i)].push_back(i);
    }
    for (const auto& [rank, members] : layers) {
        os << "  { rank=same;";
        for (std::size_t i : members) {
            const Permutation& w = p.element(i);
            os << " n" << i << " [label=\"" << (w.is_identity() ? "e" : to_cycle_string(w))
               << "\"];";
        }
        os << " }\n";
    }
    for (const Cover& c : p.covers()) {
        os << "  n" << c.lower << " -> n" << c.upper << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace absorder
