#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "absorder/absolute_order.hpp"
#include "absorder/errors.hpp"
#include "absorder/homology.hpp"
#include "absorder/integer_matrix.hpp"
#include "absorder/noncrossing.hpp"
#include "absorder/shelling.hpp"
#include "absorder/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace absorder;

namespace {

using Dense = std::vector<std::vector<long long>>;

IntegerMatrix from_dense(const Dense& d) {
    IntegerMatrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d[r].size(); ++c) m.set(r, c, d[r][c]);
    return m;
}

Integer det(std::vector<std::vector<Integer>> a) {
    // Laplace expansion; only used on tiny minors.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            sub.push_back(row);
        }
        const Integer term = a[0][c] * det(sub);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
std::vector<Integer> invariant_factors_by_minors(const Dense& d) {
    const std::size_t rows = d.size(), cols = d[0].size();
    std::vector<Integer> divisors{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        for (const auto& rs : combinations(rows, k))
            for (const auto& cs : combinations(cols, k)) {
                std::vector<std::vector<Integer>> minor;
                for (std::size_t r : rs) {
                    std::vector<Integer> row;
                    for (std::size_t c : cs) row.push_back(d[r][c]);
                    minor.push_back(row);
                }
                g = boost::multiprecision::gcd(g, abs(det(minor)));
            }
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex torus() {
    std::vector<Face> f;
    // 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    for (int i = 0; i < 7; ++i) {
        Face a{i, (i + 1) % 7, (i + 3) % 7};
        Face b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        f.push_back(a);
        f.push_back(b);
    }
    return SimplicialComplex::from_facets(f);
}

std::vector<std::vector<bool>> strict_matrix(const Poset& p) {
    std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size(), false));
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
            const oracle::Line la(p.element(a).one_line().begin(), p.element(a).one_line().end());
            const oracle::Line lb(p.element(b).one_line().begin(), p.element(b).one_line().end());
            m[a][b] = a != b && oracle::leq(la, lb);
        }
    return m;
}

HomologyGroup free_group(std::size_t r) { return HomologyGroup{r, {}}; }

}  // namespace

TEST_CASE("Smith normal form of small matrices", "[snf]") {
    const auto s = smith_normal_form(from_dense({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntegerMatrix(3, 4)).rank == 0);
    CHECK(smith_normal_form(from_dense({{0, 0}, {0, 7}})).invariant_factors == std::vector<Integer>{7});
    CHECK(smith_normal_form(from_dense({{2, 0}, {0, 3}})).invariant_factors == std::vector<Integer>{1, 6});
}

TEST_CASE("Smith normal form matches determinantal divisors", "[snf]") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        Dense d(rows, std::vector<long long>(cols));
        for (auto& row : d)
            for (auto& x : row) x = (rng() % 3 == 0) ? 0 : static_cast<long long>(rng() % 13) - 6;
        const auto s = smith_normal_form(from_dense(d));
        const auto expected = invariant_factors_by_minors(d);
        INFO("trial " << trial);
        CHECK(s.invariant_factors == expected);
        CHECK(s.rank == expected.size());
    }
}

TEST_CASE("big entries survive elimination", "[snf]") {
    IntegerMatrix m(2, 2);
    Integer big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    m.set(0, 0, big);
    m.set(1, 1, big * 3);
    const auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == std::vector<Integer>{big, big * 3});
}

TEST_CASE("complex construction", "[complex]") {
    const SimplicialComplex empty;
    CHECK(empty.dimension() == -1);
    CHECK(empty.face_count() == 1);
    const auto k = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1}, {2, 3}});
    CHECK(k.facets().size() == 2);
    CHECK(k.dimension() == 2);
    CHECK_FALSE(k.is_pure());
    CHECK(k.faces(0).size() == 4);
    CHECK(k.faces(1).size() == 4);
    CHECK(k.contains({1, 2}));
    CHECK_FALSE(k.contains({1, 3}));
    const auto lk = link(k, {2});
    CHECK(lk.facets() == std::vector<Face>{{0, 1}, {3}});
    CHECK_THROWS_AS(link(k, {1, 3}), PreconditionViolation);
}

TEST_CASE("facet list round trip", "[complex]") {
    const auto k = torus();
    std::stringstream ss;
    write_facets(ss, k);
    CHECK(read_facets(ss) == k);
    std::stringstream bad("0 1\n2 x\n");
    CHECK_THROWS_AS(read_facets(bad), ParseError);
}

TEST_CASE("order complex faces are the chains", "[complex]") {
    const Poset p4 = build_proper_part(4);
    const auto k = order_complex(p4);
    const auto expected = oracle::chain_counts_by_subsets(strict_matrix(p4));
    REQUIRE(static_cast<int>(expected.size()) == k.dimension() + 2);
    for (int d = -1; d <= k.dimension(); ++d) {
        CHECK(static_cast<long long>(k.faces(d).size()) == expected[static_cast<std::size_t>(d + 1)]);
    }
    const Poset nc = nc_interval(parse_permutation("(1 2 3 4)"));
    const auto knc = order_complex(nc);
    const auto enc = oracle::chain_counts_by_subsets(strict_matrix(nc));
    for (int d = -1; d <= knc.dimension(); ++d) {
        CHECK(static_cast<long long>(knc.faces(d).size()) == enc[static_cast<std::size_t>(d + 1)]);
    }
}

TEST_CASE("homology of standard spaces", "[homology]") {
    CHECK(reduced_homology(SimplicialComplex()) == std::vector<HomologyGroup>{free_group(1)});
    CHECK(reduced_homology(SimplicialComplex::from_facets({{0}})) ==
          std::vector<HomologyGroup>{{}, {}});
    CHECK(reduced_homology(SimplicialComplex::from_facets({{0}, {1}, {2}}))[1] == free_group(2));
    // boundary of a tetrahedron is a 2-sphere
    const auto s2 = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    const auto hs = reduced_homology(s2);
    CHECK(hs == std::vector<HomologyGroup>{{}, {}, {}, free_group(1)});
    const auto hp = reduced_homology(rp2());
    CHECK(hp[2] == HomologyGroup{0, {Integer(2)}});
    CHECK(hp[3].is_zero());
    const auto ht = reduced_homology(torus());
    CHECK(ht[2] == free_group(2));
    CHECK(ht[3] == free_group(1));
    CHECK(euler_characteristic_reduced(torus()) == -1);
    CHECK(euler_characteristic_reduced(s2) == 1);
}

TEST_CASE("boundary of boundary vanishes", "[homology]") {
    const auto k = order_complex(build_proper_part(4));
    for (int d = 1; d <= k.dimension(); ++d) {
        CHECK((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
    }
}

TEST_CASE("homology of the proper part of P_n", "[homology]") {
    const std::vector<std::size_t> top{0, 0, 2, 16};
    for (int n = 2; n <= 4; ++n) {
        const auto h = reduced_homology(order_complex(build_proper_part(n)));
        REQUIRE(static_cast<int>(h.size()) == n);
        for (int i = -1; i < n - 2; ++i) CHECK(h[static_cast<std::size_t>(i + 1)].is_zero());
        CHECK(h.back() == free_group(top[static_cast<std::size_t>(n - 1)]));
    }
}

TEST_CASE("homology export", "[homology]") {
    const auto h = reduced_homology(rp2());
    const std::string text = homology_to_text(h);
    CHECK(text.find("H~_1 = Z/2") != std::string::npos);
    const std::string json = homology_to_json(h);
    CHECK(json.find("\"torsion\":[\"2\"]") != std::string::npos);
}

TEST_CASE("Cohen-Macaulay checks", "[cm]") {
    for (int n = 3; n <= 4; ++n) {
        const Poset q = build_proper_part(n);
        const auto k = order_complex(q);
        const auto direct = is_cohen_macaulay_Z(k);
        CHECK(direct.cohen_macaulay);
        CHECK(direct.faces_checked == k.face_count());
        const auto grouped = is_cohen_macaulay_Z(k, absolute_order_link_signature(q));
        CHECK(grouped.cohen_macaulay);
        CHECK(grouped.links_computed < direct.links_computed);
        CHECK(is_cohen_macaulay_Z(k, 2).cohen_macaulay);
    }
    const auto two_edges = SimplicialComplex::from_facets({{0, 1}, {2, 3}});
    const auto bad = is_cohen_macaulay_Z(two_edges);
    CHECK_FALSE(bad.cohen_macaulay);
    REQUIRE(bad.witness_face.has_value());
    CHECK(bad.witness_face->empty());
    CHECK(bad.witness_degree == 0);
    // a pinched pair of triangles: connected, but the link of the pinch point is not
    const auto bowtie = SimplicialComplex::from_facets({{0, 1, 2}, {0, 3, 4}});
    const auto pinched = is_cohen_macaulay_Z(bowtie);
    CHECK_FALSE(pinched.cohen_macaulay);
    CHECK(*pinched.witness_face == Face{0});
    CHECK(is_cohen_macaulay_Z(rp2()).cohen_macaulay == false);
    CHECK(is_cohen_macaulay_Z(torus()).cohen_macaulay == false);
}

TEST_CASE("shelling verification", "[shelling]") {
    const auto bowtie = SimplicialComplex::from_facets({{0, 1, 2}, {0, 3, 4}});
    CHECK_FALSE(verify_shelling(bowtie, {0, 1}).valid);
    CHECK(verify_shelling(bowtie, {1, 0}).first_violation == std::size_t{1});
    CHECK_FALSE(find_shelling(bowtie).has_value());
    const auto s2 = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    std::vector<std::size_t> order(4);
    std::iota(order.begin(), order.end(), 0);
    do {
        CHECK(verify_shelling(s2, order).valid);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK_THROWS_AS(verify_shelling(s2, {0, 1, 2}), PreconditionViolation);
    CHECK_THROWS_AS(verify_shelling(SimplicialComplex::from_facets({{0, 1}, {2}}), {0, 1}),
                    PreconditionViolation);
    // a path of triangles is shellable only in orders that keep it connected
    const auto strip = SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    CHECK(verify_shelling(strip, {0, 1, 2}).valid);
    CHECK_FALSE(verify_shelling(strip, {0, 2, 1}).valid);
}

TEST_CASE("shellings are found for noncrossing interval complexes", "[shelling]") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> c(static_cast<std::size_t>(k));
        std::iota(c.begin(), c.end(), 1);
        const auto cyc = Permutation::from_cycles(k, std::vector<std::vector<int>>{c});
        const auto complex = order_complex(nc_interval(cyc));
        const auto order = find_shelling(complex);
        REQUIRE(order.has_value());
        CHECK(verify_shelling(complex, *order).valid);
    }
    CHECK_FALSE(find_shelling(rp2()).has_value());
    ShellingSearchLimits tiny;
    tiny.max_facets = 3;
    CHECK_THROWS_AS(find_shelling(torus(), tiny), ResourceCapExceeded);
}
