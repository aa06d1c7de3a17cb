#pragma once

// Strong-constructibility certificates for the ideals I_n(R) of the absolute
// order.  A strongly constructible poset of rank d with a minimum is either
// bounded and shellable, or a union of strongly constructible proper ideals
// of rank d whose intersections (of any two or more) are strongly
// constructible of rank d - 1.  build_certificate() follows the inductive
// decomposition of I_n(R):
//
//   k = 0, at most one element outside sigma  -> LEAF (an interval [e, c])
//   k = 0, otherwise                          -> UNION over sigma extended by j,
//        whose intersections over J are unions of I_n(sigma, {}, J) and
//        I_n(sigma + j, {}, J \ {j}), peeled one j at a time
//   k >= 1, no free element                   -> PRODUCT over the blocks
//        sigma ∪ tau_0, tau_1, ..., tau_k
//   k >= 1, some free element j               -> UNION over adding j to tau_i
//
// verify_certificate() re-derives every claim by explicit set computation on
// the materialized posets.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "absorder/absolute_order.hpp"

namespace absorder {

enum class NodeKind { Leaf, Product, Union };
enum class NodeStatus { Verified, Assumed, Failed };

const char* to_string(NodeKind kind);
const char* to_string(NodeStatus status);

/// Which ideal of P_n a node stands for.
struct IdealDescription {
    enum class Op { Generated, Intersection, Union };
    Op op = Op::Generated;
    /// Generated: exactly one term, the ideal I_n(R).  Intersection / Union:
    /// the I_n(R) of every term combined.
    std::vector<RSpec> terms;

    int degree() const { return terms.front().degree(); }
    std::string to_string() const;
    friend bool operator==(const IdealDescription&, const IdealDescription&) = default;
    friend auto operator<=>(const IdealDescription&, const IdealDescription&) = default;
};

struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct IntersectionCertificate {
    /// Indices into the parent's children, at least two, increasing.
    std::vector<std::size_t> members;
    CertificatePtr certificate;
};

struct Certificate {
    NodeKind kind = NodeKind::Leaf;
    IdealDescription ideal;
    int rank = 0;
    std::vector<CertificatePtr> children;
    /// Union nodes: one entry per sub-collection of two or more children.
    std::vector<IntersectionCertificate> intersections;
    /// Product nodes: the support in [n] of each child, in child order.
    /// Child i lives in P_{|blocks[i]|}, relabelled order-preservingly.
    std::vector<std::vector<int>> blocks;
};

/// Identical sub-ideals share one node, so the result is a DAG.
CertificatePtr build_certificate(const RSpec& r);

struct CertificateLimits {
    /// Largest degree whose posets are materialized for verification.
    int materialize_cap = 7;
    /// Leaves whose order complex has more facets are not searched; interval
    /// leaves [e, c] then count as ASSUMED (noncrossing partition lattices
    /// are known to be shellable).
    std::size_t shelling_facet_cap = 200;
};

struct VerificationReport {
    bool ok = true;
    std::size_t verified = 0;
    std::size_t assumed = 0;
    std::size_t failed = 0;
    /// In discovery order; the first entry is the first failure.
    std::vector<std::string> failures;
    /// Status of every distinct node, judged on its own checks.
    std::map<const Certificate*, NodeStatus> status;
};

/// Throws ResourceCapExceeded when the root degree exceeds materialize_cap.
VerificationReport verify_certificate(const CertificatePtr& root, const CertificateLimits& limits = {});

/// ⋂_{j in J} I_n(sigma_j) = I_n(sigma, {}, J) ∪ ⋃_{j in J} I_n(sigma_j, {}, J \ {j}),
/// sigma = (1..r), sigma_j = (1..r, j).  Throws PreconditionViolation unless
/// 1 <= r <= n-2, |J| >= 2, J ⊆ {r+1..n}.
bool verify_inter1(int n, int r, const std::vector<int>& j_set);

/// I_n(S_q) ∩ ⋃_{j in (J \ {q}) ∪ {0}} I_n(S_j) = I_n(sigma, {}, J \ {q}, {q}),
/// with S_0 = (sigma, {}, J) and S_j = (sigma_j, {}, J \ {j}).  Same
/// preconditions as verify_inter1, plus q in J.
bool verify_second_intersection(int n, int r, const std::vector<int>& j_set, int q);

std::string certificate_to_json(const CertificatePtr& root, const VerificationReport* report = nullptr);

/// Number of distinct nodes reachable from root.
std::size_t certificate_node_count(const CertificatePtr& root);

}  // namespace absorder
