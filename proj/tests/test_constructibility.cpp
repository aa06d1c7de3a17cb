#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <memory>
#include <random>

#include "absorder/constructibility.hpp"
#include "absorder/errors.hpp"
#include "absorder/homology.hpp"
#include "absorder/simplicial_complex.hpp"
#include "shapes.hpp"

using namespace absorder;

namespace {

bool any_failure_mentions(const VerificationReport& r, const std::string& needle) {
    for (const auto& f : r.failures) {
        if (f.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("certificate shapes follow the case split", "[cert]") {
    const auto whole = build_certificate(RSpec(3, {1}));
    CHECK(whole->kind == NodeKind::Union);
    CHECK(whole->rank == 2);
    CHECK(whole->children.size() == 2);
    CHECK(whole->intersections.size() == 1);

    const auto leaf = build_certificate(RSpec(4, {1, 2, 3, 4}));
    CHECK(leaf->kind == NodeKind::Leaf);
    CHECK(leaf->rank == 3);

    const auto one_left = build_certificate(RSpec(4, {1, 2, 3}));
    CHECK(one_left->kind == NodeKind::Leaf);

    const auto product = build_certificate(RSpec(4, {1, 2}, {{}, {3, 4}}));
    CHECK(product->kind == NodeKind::Product);
    REQUIRE(product->children.size() == 2);
    CHECK(product->blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(product->rank == 2);
    CHECK(product->children[0]->rank == 1);
    CHECK(product->children[1]->rank == 1);

    const auto block_union = build_certificate(RSpec(5, {1, 2}, {{}, {3, 4}}));
    CHECK(block_union->kind == NodeKind::Union);
    CHECK(block_union->children.size() == 2);  // 5 goes to tau_0 or tau_1
    CHECK(block_union->intersections.size() == 1);
}

TEST_CASE("ideal of the whole group", "[cert]") {
    auto p3 = std::make_shared<const Poset>(build_Pn(3));
    CHECK(generated_ideal(p3, RSpec(3, {1})).size() == 6);
    auto p4 = std::make_shared<const Poset>(build_Pn(4));
    CHECK(generated_ideal(p4, RSpec(4, {1, 2, 3, 4})).size() == 14);
}

TEST_CASE("certificates verify for the whole group", "[cert]") {
    for (int n = 1; n <= 5; ++n) {
        const auto cert = build_certificate(RSpec(n, {1}));
        const auto report = verify_certificate(cert);
        INFO("n = " << n << (report.failures.empty() ? "" : ": " + report.failures.front()));
        CHECK(report.ok);
        CHECK(report.failed == 0);
        CHECK(report.verified + report.assumed == certificate_node_count(cert));
    }
}

TEST_CASE("certificates verify for every shape with n <= 4", "[cert]") {
    for (int n = 1; n <= 4; ++n) {
        for (const RSpec& r : shapes::prefix_shapes(n)) {
            const auto report = verify_certificate(build_certificate(r));
            INFO(r.to_string() << (report.failures.empty() ? "" : ": " + report.failures.front()));
            CHECK(report.ok);
        }
    }
}

TEST_CASE("certificates verify for sampled shapes with n = 5", "[cert]") {
    const auto all = shapes::prefix_shapes(5);
    for (std::size_t i = 0; i < all.size(); i += 3) {
        const auto report = verify_certificate(build_certificate(all[i]));
        INFO(all[i].to_string());
        CHECK(report.ok);
    }
}

TEST_CASE("shared sub-ideals are shared nodes", "[cert]") {
    const auto cert = build_certificate(RSpec(5, {1}));
    CHECK(certificate_node_count(cert) < 2000);
    CHECK(cert->children[0] != cert->children[1]);
}

TEST_CASE("tampered certificates are rejected", "[cert]") {
    const auto good = build_certificate(RSpec(4, {1}));

    auto dropped = std::make_shared<Certificate>(*good);
    dropped->children.pop_back();
    const auto r1 = verify_certificate(dropped);
    CHECK_FALSE(r1.ok);
    CHECK(any_failure_mentions(r1, "do not cover"));
    CHECK(r1.status.at(dropped.get()) == NodeStatus::Failed);

    auto wrong_rank = std::make_shared<Certificate>(*good);
    wrong_rank->rank = 2;
    CHECK_FALSE(verify_certificate(wrong_rank).ok);

    auto no_meets = std::make_shared<Certificate>(*good);
    no_meets->intersections.clear();
    const auto r3 = verify_certificate(no_meets);
    CHECK_FALSE(r3.ok);
    CHECK(any_failure_mentions(r3, "missing certificate"));

    // swap an intersection's certificate for a child: wrong set
    auto swapped = std::make_shared<Certificate>(*good);
    swapped->intersections[0].certificate = swapped->children[0];
    CHECK_FALSE(verify_certificate(swapped).ok);

    // a leaf standing for an unbounded ideal
    auto fake_leaf = std::make_shared<Certificate>(*good);
    fake_leaf->kind = NodeKind::Leaf;
    fake_leaf->children.clear();
    fake_leaf->intersections.clear();
    const auto r5 = verify_certificate(fake_leaf);
    CHECK_FALSE(r5.ok);
    CHECK(any_failure_mentions(r5, "not bounded"));

    // a product whose blocks are wrong
    auto product = std::make_shared<Certificate>(*build_certificate(RSpec(4, {1, 2}, {{}, {3, 4}})));
    product->blocks = {{1, 3}, {2, 4}};
    CHECK_FALSE(verify_certificate(product).ok);
}

TEST_CASE("verification refuses beyond the materialization cap", "[cert]") {
    const auto big = build_certificate(RSpec(8, {1}));
    CHECK(big->kind == NodeKind::Union);
    CHECK_THROWS_AS(verify_certificate(big), ResourceCapExceeded);
    CertificateLimits low;
    low.materialize_cap = 3;
    CHECK_THROWS_AS(verify_certificate(build_certificate(RSpec(4, {1})), low), ResourceCapExceeded);
}

TEST_CASE("large leaves are reported as assumed", "[cert]") {
    CertificateLimits limits;
    limits.shelling_facet_cap = 10;
    const auto report = verify_certificate(build_certificate(RSpec(5, {1, 2, 3, 4})), limits);
    CHECK(report.ok);
    CHECK(report.assumed == 1);
    CHECK(report.verified == 0);
}

TEST_CASE("the two set identities", "[cert]") {
    CHECK(verify_inter1(4, 1, {3, 4}));
    CHECK(verify_inter1(5, 2, {3, 4, 5}));
    CHECK(verify_inter1(4, 2, {3, 4}));
    CHECK(verify_second_intersection(5, 1, {2, 3}, 2));
    CHECK(verify_second_intersection(5, 2, {3, 4, 5}, 4));
    CHECK(verify_second_intersection(6, 1, {2, 3, 4}, 3));
    CHECK_THROWS_AS(verify_inter1(4, 3, {4, 5}), PreconditionViolation);
    CHECK_THROWS_AS(verify_inter1(4, 1, {3}), PreconditionViolation);
    CHECK_THROWS_AS(verify_inter1(4, 2, {2, 3}), PreconditionViolation);
    CHECK_THROWS_AS(verify_second_intersection(5, 1, {2, 3}, 4), PreconditionViolation);
}

TEST_CASE("certified ideals have Cohen-Macaulay order complexes", "[cert]") {
    for (int n = 1; n <= 4; ++n) {
        auto pn = std::make_shared<const Poset>(build_Pn(n));
        for (const RSpec& r : shapes::prefix_shapes(n)) {
            if (!verify_certificate(build_certificate(r)).ok) continue;
            const auto complex = order_complex(generated_ideal(pn, r).to_poset());
            INFO(r.to_string());
            CHECK(is_cohen_macaulay_Z(complex).cohen_macaulay);
        }
    }
}

TEST_CASE("certificate JSON", "[cert]") {
    const auto cert = build_certificate(RSpec(4, {1}));
    const auto report = verify_certificate(cert);
    const auto j = nlohmann::json::parse(certificate_to_json(cert, &report));
    CHECK(j["kind"] == "UNION");
    CHECK(j["rank"] == 3);
    CHECK(j["status"] == "VERIFIED");
    CHECK(j["rspec"]["sigma"] == std::vector<int>{1});
    CHECK(j["children"].size() == 3);
    CHECK(j["intersections"].size() == 4);
    CHECK(certificate_to_json(cert) == certificate_to_json(build_certificate(RSpec(4, {1}))));
    const auto unchecked = nlohmann::json::parse(certificate_to_json(cert));
    CHECK(unchecked["status"] == "UNCHECKED");
}
