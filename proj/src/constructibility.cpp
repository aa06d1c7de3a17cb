#include "absorder/constructibility.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "absorder/errors.hpp"
#include "absorder/shelling.hpp"
#include "absorder/simplicial_complex.hpp"

namespace absorder {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "LEAF";
        case NodeKind::Product: return "PRODUCT";
        case NodeKind::Union: return "UNION";
    }
    return "?";
}

const char* to_string(NodeStatus status) {
    switch (status) {
        case NodeStatus::Verified: return "VERIFIED";
        case NodeStatus::Assumed: return "ASSUMED";
        case NodeStatus::Failed: return "FAILED";
    }
    return "?";
}

std::string IdealDescription::to_string() const {
    std::string out;
    switch (op) {
        case Op::Generated: out = "I("; break;
        case Op::Intersection: out = "meet("; break;
        case Op::Union: out = "join("; break;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += (i ? "; " : "") + terms[i].to_string();
    }
    return out + ")";
}

// --- construction -------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size_at_least_two(std::size_t count) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (std::size_t{1} << i)) {
                members.push_back(i);
            }
        }
        if (members.size() >= 2) {
            out.push_back(std::move(members));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> without(std::vector<int> v, int x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
    return v;
}

class Builder {
public:
    CertificatePtr generated(const RSpec& r) {
        IdealDescription key{IdealDescription::Op::Generated, {r}};
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        auto node = std::make_shared<Certificate>();
        node->ideal = key;
        const int n = r.degree();
        node->rank = n - r.k() - 1;
        if (r.k() == 0) {
            build_single_cycle(*node, r);
        } else if (r.m() == 0) {
            build_product(*node, r);
        } else {
            build_block_union(*node, r);
        }
        memo_.emplace(key, node);
        return node;
    }

private:
    // k = 0: tau_0 only constrains elements that lie in c_0 anyway.
    void build_single_cycle(Certificate& node, const RSpec& r) {
        const int n = r.degree();
        std::vector<int> outside;
        for (int x = 1; x <= n; ++x) {
            if (std::find(r.sigma().begin(), r.sigma().end(), x) == r.sigma().end()) {
                outside.push_back(x);
            }
        }
        if (outside.size() <= 1) {
            // A single generating n-cycle: the ideal is the interval [e, c].
            node.kind = NodeKind::Leaf;
            return;
        }
        node.kind = NodeKind::Union;
        const RSpec base(n, r.sigma());
        for (int j : outside) {
            node.children.push_back(generated(base.with_sigma_extended(j)));
        }
        for (auto& members : subsets_of_size_at_least_two(outside.size())) {
            std::vector<int> j_set;
            for (std::size_t i : members) {
                j_set.push_back(outside[i]);
            }
            node.intersections.push_back({members, extension_intersection(base, j_set)});
        }
    }

    // ⋂_{j in J} I(sigma_j), certified as I(S_0) ∪ ⋃_{j in J} I(S_j) built
    // one j at a time.
    CertificatePtr extension_intersection(const RSpec& base, const std::vector<int>& j_set) {
        IdealDescription key{IdealDescription::Op::Intersection, {}};
        for (int j : j_set) {
            key.terms.push_back(base.with_sigma_extended(j));
        }
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        auto node = peel(base, j_set, j_set);
        auto top = std::make_shared<Certificate>(*node);
        top->ideal = key;
        memo_.emplace(key, top);
        return top;
    }

    // I(S_0) ∪ ⋃_{j in T} I(S_j) for T ⊆ J.
    CertificatePtr peel(const RSpec& base, const std::vector<int>& j_set, std::vector<int> t_set) {
        const int n = base.degree();
        const RSpec s0(n, base.sigma(), {{}, j_set});
        if (t_set.empty()) {
            return generated(s0);
        }
        IdealDescription key{IdealDescription::Op::Union, {s0}};
        for (int j : t_set) {
            key.terms.push_back(RSpec(n, base.with_sigma_extended(j).sigma(), {{}, without(j_set, j)}));
        }
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        const int q = t_set.back();
        t_set.pop_back();
        auto node = std::make_shared<Certificate>();
        node->kind = NodeKind::Union;
        node->ideal = key;
        node->rank = n - 2;
        node->children.push_back(
            generated(RSpec(n, base.with_sigma_extended(q).sigma(), {{}, without(j_set, q)})));
        node->children.push_back(peel(base, j_set, t_set));
        node->intersections.push_back(
            {{0, 1}, generated(RSpec(n, base.sigma(), {{}, without(j_set, q), {q}}))});
        memo_.emplace(key, node);
        return node;
    }

    // k >= 1 and m = 0: I_n(R) ≅ I_r(sigma, tau_0) × P_{|tau_1|} × ... × P_{|tau_k|}.
    void build_product(Certificate& node, const RSpec& r) {
        node.kind = NodeKind::Product;
        std::vector<int> head = r.sigma();
        head.insert(head.end(), r.tau()[0].begin(), r.tau()[0].end());
        std::sort(head.begin(), head.end());
        auto relabel = [&](int x) {
            return static_cast<int>(std::lower_bound(head.begin(), head.end(), x) - head.begin()) + 1;
        };
        std::vector<int> sigma;
        for (int x : r.sigma()) {
            sigma.push_back(relabel(x));
        }
        std::vector<int> tau0;
        for (int x : r.tau()[0]) {
            tau0.push_back(relabel(x));
        }
        const int size = static_cast<int>(head.size());
        node.blocks.push_back(head);
        node.children.push_back(generated(RSpec(size, sigma, {tau0})));
        for (std::size_t i = 1; i < r.tau().size(); ++i) {
            node.blocks.push_back(r.tau()[i]);
            node.children.push_back(generated(RSpec(static_cast<int>(r.tau()[i].size()), {1})));
        }
    }

    // k >= 1 and some free j: I_n(R) = ⋃_i I_n(R with j added to tau_i), any
    // two or more of which meet in I_n(R with the new block {j}).
    void build_block_union(Certificate& node, const RSpec& r) {
        node.kind = NodeKind::Union;
        const int j = r.free_elements().front();
        for (std::size_t i = 0; i < r.tau().size(); ++i) {
            node.children.push_back(generated(r.with_added_to_tau(j, i)));
        }
        const CertificatePtr meet = generated(r.with_new_block({j}));
        for (auto& members : subsets_of_size_at_least_two(r.tau().size())) {
            node.intersections.push_back({members, meet});
        }
    }

    std::map<IdealDescription, CertificatePtr> memo_;
};

}  // namespace

CertificatePtr build_certificate(const RSpec& r) {
    Builder b;
    return b.generated(r);
}

// --- verification -------------------------------------------------------------

namespace {

class Verifier {
public:
    explicit Verifier(const CertificateLimits& limits) : limits_(limits) {}

    VerificationReport run(const CertificatePtr& root) {
        visit(root);
        report_.ok = report_.failed == 0;
        return std::move(report_);
    }

private:
    std::shared_ptr<const Poset> pn(int n) {
        auto& slot = posets_[n];
        if (!slot) {
            slot = std::make_shared<const Poset>(build_Pn(n, limits_.materialize_cap));
        }
        return slot;
    }

    const Ideal& generated(const RSpec& r) {
        auto it = generated_.find(r);
        if (it == generated_.end()) {
            it = generated_.emplace(r, generated_ideal(pn(r.degree()), r)).first;
        }
        return it->second;
    }

    Ideal materialize(const IdealDescription& d) {
        Ideal acc = generated(d.terms.front());
        for (std::size_t i = 1; i < d.terms.size(); ++i) {
            acc = d.op == IdealDescription::Op::Intersection ? (acc & generated(d.terms[i]))
                                                             : (acc | generated(d.terms[i]));
        }
        return acc;
    }

    const Ideal& ideal_of(const Certificate* node) {
        auto it = ideals_.find(node);
        if (it == ideals_.end()) {
            it = ideals_.emplace(node, materialize(node->ideal)).first;
        }
        return it->second;
    }

    void visit(const CertificatePtr& node) {
        if (report_.status.count(node.get())) {
            return;
        }
        report_.status[node.get()] = NodeStatus::Verified;  // guards re-entry
        std::vector<std::string> problems;
        NodeStatus status = NodeStatus::Verified;
        const Ideal& ideal = ideal_of(node.get());
        const std::string where = std::string(to_string(node->kind)) + " " + node->ideal.to_string();

        if (ideal.empty()) {
            problems.push_back("empty ideal");
        }
        if (!ideal.is_downward_closed()) {
            problems.push_back("not downward closed");
        }
        if (ideal.rank() != node->rank) {
            problems.push_back("rank " + std::to_string(ideal.rank()) + " but claimed " +
                               std::to_string(node->rank));
        }
        if (!ideal.is_pure()) {
            problems.push_back("not graded: a maximal element lies below the top rank");
        }
        if (node->ideal.op == IdealDescription::Op::Generated) {
            const RSpec& r = node->ideal.terms.front();
            if (node->rank != r.degree() - r.k() - 1) {
                problems.push_back("rank differs from n - k - 1");
            }
        }

        if (problems.empty()) {
            switch (node->kind) {
                case NodeKind::Leaf: status = check_leaf(ideal, problems); break;
                case NodeKind::Union: check_union(*node, ideal, problems); break;
                case NodeKind::Product: check_product(*node, ideal, problems); break;
            }
        }
        if (!problems.empty()) {
            status = NodeStatus::Failed;
            for (const auto& p : problems) {
                report_.failures.push_back(where + ": " + p);
            }
        }
        report_.status[node.get()] = status;
        switch (status) {
            case NodeStatus::Verified: ++report_.verified; break;
            case NodeStatus::Assumed: ++report_.assumed; break;
            case NodeStatus::Failed: ++report_.failed; break;
        }

        for (const auto& child : node->children) {
            visit(child);
        }
        for (const auto& meet : node->intersections) {
            visit(meet.certificate);
        }
    }

    NodeStatus check_leaf(const Ideal& ideal, std::vector<std::string>& problems) {
        const auto top = ideal.maximal_elements();
        if (top.size() != 1) {
            problems.push_back("leaf is not bounded (" + std::to_string(top.size()) +
                               " maximal elements)");
            return NodeStatus::Failed;
        }
        // Shellability of the whole bounded poset, minimum and maximum included.
        const SimplicialComplex complex = order_complex(ideal.to_poset());
        const Permutation& c = ideal.parent().element(top.front());
        std::size_t nontrivial = 0;
        for (int len : cycle_type(c)) {
            nontrivial += len > 1 ? 1 : 0;
        }
        if (complex.facets().size() > limits_.shelling_facet_cap) {
            if (nontrivial <= 1) {
                return NodeStatus::Assumed;
            }
            problems.push_back("leaf too large to search and not a noncrossing partition lattice");
            return NodeStatus::Failed;
        }
        try {
            ShellingSearchLimits search;
            search.max_facets = limits_.shelling_facet_cap;
            if (!find_shelling(complex, search)) {
                problems.push_back("order complex of the leaf has no shelling");
                return NodeStatus::Failed;
            }
        } catch (const ResourceCapExceeded&) {
            if (nontrivial <= 1) {
                return NodeStatus::Assumed;
            }
            problems.push_back("shelling search budget exhausted");
            return NodeStatus::Failed;
        }
        return NodeStatus::Verified;
    }

    void check_union(const Certificate& node, const Ideal& ideal, std::vector<std::string>& problems) {
        if (node.children.empty()) {
            problems.push_back("union without children");
            return;
        }
        boost::dynamic_bitset<> covered(ideal.members().size());
        std::vector<const Ideal*> parts;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            const Ideal& child = ideal_of(node.children[i].get());
            parts.push_back(&child);
            covered |= child.members();
            if (!child.is_proper_subset_of(ideal)) {
                problems.push_back("child " + std::to_string(i) + " is not a proper sub-ideal");
            }
            if (child.rank() != node.rank) {
                problems.push_back("child " + std::to_string(i) + " has rank " +
                                   std::to_string(child.rank()));
            }
        }
        if (covered != ideal.members()) {
            problems.push_back("children do not cover the ideal (" + std::to_string(covered.count()) +
                               " of " + std::to_string(ideal.size()) + " elements)");
        }
        std::set<std::vector<std::size_t>> required;
        for (auto& members : subsets_of_size_at_least_two(node.children.size())) {
            required.insert(members);
        }
        for (const auto& meet : node.intersections) {
            if (std::any_of(meet.members.begin(), meet.members.end(),
                            [&](std::size_t i) { return i >= parts.size(); })) {
                problems.push_back("intersection refers to a missing child");
                continue;
            }
            if (!required.erase(meet.members)) {
                problems.push_back("unexpected or duplicate intersection certificate");
                continue;
            }
            boost::dynamic_bitset<> actual = ideal.members();
            for (std::size_t i : meet.members) {
                actual &= parts.at(i)->members();
            }
            const Ideal& claimed = ideal_of(meet.certificate.get());
            if (claimed.members() != actual) {
                problems.push_back("intersection of children " + member_list(meet.members) +
                                   " differs from " + meet.certificate->ideal.to_string());
            }
            const int r = claimed.rank();
            if (r == node.rank) {
                problems.push_back("intersection of full rank: unsupported branch");
            } else if (r != node.rank - 1) {
                problems.push_back("intersection " + member_list(meet.members) + " has rank " +
                                   std::to_string(r));
            }
        }
        if (!required.empty()) {
            problems.push_back("missing certificate for intersection of children " +
                               member_list(*required.begin()));
        }
    }

    void check_product(const Certificate& node, const Ideal& ideal, std::vector<std::string>& problems) {
        const Poset& parent = ideal.parent();
        const int n = parent.degree();
        if (node.blocks.size() != node.children.size()) {
            problems.push_back("block count differs from factor count");
            return;
        }
        std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
        int rank_sum = 0;
        for (std::size_t b = 0; b < node.blocks.size(); ++b) {
            for (int x : node.blocks[b]) {
                if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]++) {
                    problems.push_back("blocks do not partition [n]");
                    return;
                }
            }
            if (node.children[b]->ideal.degree() != static_cast<int>(node.blocks[b].size())) {
                problems.push_back("factor degree differs from its block size");
                return;
            }
            rank_sum += node.children[b]->rank;
        }
        if (std::count(seen.begin() + 1, seen.end(), 1) != n) {
            problems.push_back("blocks do not partition [n]");
            return;
        }
        if (rank_sum != node.rank) {
            problems.push_back("product rank differs from the sum of factor ranks");
        }

        // Restriction map w -> (w|B_0, w|B_1, ...), blocks relabelled in order.
        std::vector<const Ideal*> factors;
        for (const auto& child : node.children) {
            factors.push_back(&ideal_of(child.get()));
        }
        const auto members = ideal.indices();
        std::vector<std::vector<std::size_t>> images(members.size());
        std::set<std::vector<std::size_t>> distinct;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            const Permutation& w = parent.element(members[idx]);
            for (std::size_t b = 0; b < node.blocks.size(); ++b) {
                const auto& block = node.blocks[b];
                std::vector<int> restricted;
                for (int x : block) {
                    auto pos = std::lower_bound(block.begin(), block.end(), w(x));
                    if (pos == block.end() || *pos != w(x)) {
                        problems.push_back(to_cycle_string(w) + " does not preserve block " +
                                           std::to_string(b));
                        return;
                    }
                    restricted.push_back(static_cast<int>(pos - block.begin()) + 1);
                }
                const Poset& fp = factors[b]->parent();
                const auto fi = fp.index_of(Permutation::from_one_line(restricted));
                if (!fi || !factors[b]->contains(*fi)) {
                    problems.push_back(to_cycle_string(w) + " restricts outside factor " +
                                       std::to_string(b));
                    return;
                }
                images[idx].push_back(*fi);
            }
            distinct.insert(images[idx]);
        }
        std::size_t product_size = 1;
        for (const Ideal* f : factors) {
            product_size *= f->size();
        }
        if (distinct.size() != members.size() || members.size() != product_size) {
            problems.push_back("restriction map is not a bijection onto the product (" +
                               std::to_string(members.size()) + " elements, product has " +
                               std::to_string(product_size) + ")");
            return;
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
                bool componentwise = true;
                for (std::size_t f = 0; f < factors.size() && componentwise; ++f) {
                    componentwise = factors[f]->parent().leq(images[a][f], images[b][f]);
                }
                if (componentwise != parent.leq(members[a], members[b])) {
                    problems.push_back("restriction map is not an order isomorphism");
                    return;
                }
            }
        }
    }

    static std::string member_list(const std::vector<std::size_t>& members) {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            s += (i ? "," : "") + std::to_string(members[i]);
        }
        return s + "}";
    }

    CertificateLimits limits_;
    VerificationReport report_;
    std::map<int, std::shared_ptr<const Poset>> posets_;
    std::map<RSpec, Ideal> generated_;
    std::map<const Certificate*, Ideal> ideals_;
};

}  // namespace

VerificationReport verify_certificate(const CertificatePtr& root, const CertificateLimits& limits) {
    const int n = root->ideal.degree();
    if (n > limits.materialize_cap) {
        throw ResourceCapExceeded("verification refused: n = " + std::to_string(n) +
                                  " exceeds the materialization cap " +
                                  std::to_string(limits.materialize_cap));
    }
    Verifier v(limits);
    return v.run(root);
}

// --- the two set identities -----------------------------------------------------

namespace {

void check_identity_preconditions(int n, int r, const std::vector<int>& j_set) {
    if (r < 1 || r > n - 2) {
        throw PreconditionViolation("need 1 <= r <= n - 2");
    }
    if (j_set.size() < 2) {
        throw PreconditionViolation("J needs at least two elements");
    }
    std::set<int> distinct(j_set.begin(), j_set.end());
    if (distinct.size() != j_set.size()) {
        throw PreconditionViolation("J has repeated elements");
    }
    for (int j : j_set) {
        if (j <= r || j > n) {
            throw PreconditionViolation("J must lie in {r+1, ..., n}");
        }
    }
}

std::vector<int> prefix(int r) {
    std::vector<int> s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        s[static_cast<std::size_t>(i)] = i + 1;
    }
    return s;
}

std::vector<int> extended(std::vector<int> s, int j) {
    s.push_back(j);
    return s;
}

}  // namespace

bool verify_inter1(int n, int r, const std::vector<int>& j_set) {
    check_identity_preconditions(n, r, j_set);
    const auto pn = std::make_shared<const Poset>(build_Pn(n));
    const std::vector<int> sigma = prefix(r);
    std::optional<Ideal> lhs;
    for (int j : j_set) {
        Ideal term = generated_ideal(pn, RSpec(n, extended(sigma, j)));
        lhs = lhs ? (*lhs & term) : term;
    }
    Ideal rhs = generated_ideal(pn, RSpec(n, sigma, {{}, j_set}));
    for (int j : j_set) {
        rhs = rhs | generated_ideal(pn, RSpec(n, extended(sigma, j), {{}, without(j_set, j)}));
    }
    return *lhs == rhs;
}

bool verify_second_intersection(int n, int r, const std::vector<int>& j_set, int q) {
    check_identity_preconditions(n, r, j_set);
    if (std::find(j_set.begin(), j_set.end(), q) == j_set.end()) {
        throw PreconditionViolation("q must belong to J");
    }
    const auto pn = std::make_shared<const Poset>(build_Pn(n));
    const std::vector<int> sigma = prefix(r);
    const Ideal s_q = generated_ideal(pn, RSpec(n, extended(sigma, q), {{}, without(j_set, q)}));
    Ideal others = generated_ideal(pn, RSpec(n, sigma, {{}, j_set}));
    for (int j : j_set) {
        if (j != q) {
            others = others | generated_ideal(pn, RSpec(n, extended(sigma, j), {{}, without(j_set, j)}));
        }
    }
    const Ideal expected = generated_ideal(pn, RSpec(n, sigma, {{}, without(j_set, q), {q}}));
    return (s_q & others) == expected;
}

// --- export --------------------------------------------------------------------

namespace {

nlohmann::ordered_json rspec_json(const RSpec& r) {
    nlohmann::ordered_json j;
    j["n"] = r.degree();
    j["sigma"] = r.sigma();
    j["tau"] = r.tau();
    return j;
}

nlohmann::ordered_json node_json(const Certificate& node, const VerificationReport* report) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(node.kind);
    if (node.ideal.op == IdealDescription::Op::Generated) {
        j["rspec"] = rspec_json(node.ideal.terms.front());
    } else {
        j["rspec"] = nullptr;
        nlohmann::ordered_json ideal;
        ideal["op"] = node.ideal.op == IdealDescription::Op::Intersection ? "intersection" : "union";
        auto terms = nlohmann::ordered_json::array();
        for (const RSpec& t : node.ideal.terms) {
            terms.push_back(rspec_json(t));
        }
        ideal["terms"] = std::move(terms);
        j["ideal"] = std::move(ideal);
    }
    j["rank"] = node.rank;
    if (!node.blocks.empty()) {
        j["blocks"] = node.blocks;
    }
    auto children = nlohmann::ordered_json::array();
    for (const auto& c : node.children) {
        children.push_back(node_json(*c, report));
    }
    j["children"] = std::move(children);
    auto meets = nlohmann::ordered_json::array();
    for (const auto& m : node.intersections) {
        nlohmann::ordered_json entry;
        entry["members"] = m.members;
        entry["certificate"] = node_json(*m.certificate, report);
        meets.push_back(std::move(entry));
    }
    j["intersections"] = std::move(meets);
    if (report) {
        auto it = report->status.find(&node);
        j["status"] = it == report->status.end() ? "UNCHECKED" : to_string(it->second);
    } else {
        j["status"] = "UNCHECKED";
    }
    return j;
}

}  // namespace

std::string certificate_to_json(const CertificatePtr& root, const VerificationReport* report) {
    return node_json(*root, report).dump();
}

std::size_t certificate_node_count(const CertificatePtr& root) {
    std::set<const Certificate*> seen;
    std::function<void(const Certificate*)> walk = [&](const Certificate* node) {
        if (!seen.insert(node).second) {
            return;
        }
        for (const auto& c : node->children) {
            walk(c.get());
        }
        for (const auto& m : node->intersections) {
            walk(m.certificate.get());
        }
    };
    walk(root.get());
    return seen.size();
}

}  // namespace absorder
