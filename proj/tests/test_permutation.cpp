#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "absorder/errors.hpp"
#include "absorder/permutation.hpp"
#include "oracles.hpp"

using namespace absorder;

namespace {
oracle::Line line_of(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }
}  // namespace

TEST_CASE("cycle canonical rotation and equality", "[perm]") {
    Cycle a({3, 1, 2});
    Cycle b({1, 2, 3});
    CHECK(a == b);
    CHECK(a.elements() == std::vector<int>{1, 2, 3});
    CHECK(a != Cycle({1, 3, 2}));
    CHECK_THROWS_AS(Cycle({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Cycle({0, 2}), std::invalid_argument);
}

TEST_CASE("composition is right-to-left and matches pointwise evaluation", "[perm]") {
    for (const auto& u : all_permutations(4)) {
        for (const auto& v : all_permutations(4)) {
            CHECK(line_of(compose(u, v)) == oracle::compose(line_of(u), line_of(v)));
        }
    }
    // (1 2)(2 3) sends 3 -> 2 -> 1
    const auto p = compose(parse_permutation("(1 2)", 3), parse_permutation("(2 3)", 3));
    CHECK(p(3) == 1);
    CHECK(to_cycle_string(p) == "(1 2 3)");
}

TEST_CASE("inverse", "[perm]") {
    for (const auto& u : all_permutations(5)) {
        CHECK(compose(u, inverse(u)).is_identity());
        CHECK(line_of(inverse(u)) == oracle::inverse(line_of(u)));
    }
}

TEST_CASE("cycle decomposition round-trips and counts fixed points", "[perm]") {
    const auto w = parse_permutation("(3 5 1 9 2 6 4)", 9);
    const auto d = cycle_decomposition(w);
    CHECK(d.count() == 3);
    CHECK(d.cycles[0].elements() == std::vector<int>{1, 9, 2, 6, 4, 3, 5});
    CHECK(d.recompose() == w);
    CHECK(cycle_count(Permutation(5)) == 5);
    for (const auto& u : all_permutations(5)) {
        CHECK(cycle_decomposition(u).recompose() == u);
        CHECK(cycle_count(u) == static_cast<int>(oracle::cycles(line_of(u)).size()));
    }
}

TEST_CASE("reflection length agrees with Cayley graph distance", "[perm]") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& [line, dist] : oracle::cayley_distances(n)) {
            CHECK(reflection_length(Permutation::from_one_line(line)) == dist);
        }
    }
    CHECK(reflection_length(parse_permutation("(1 2)(3 4)")) == 2);
    CHECK(reflection_length(parse_permutation("(1 2 3 4)")) == 3);
}

TEST_CASE("cycle type is non-increasing", "[perm]") {
    CHECK(cycle_type(parse_permutation("(1 2)(3 4 5)", 6)) == std::vector<int>{3, 2, 1});
}

TEST_CASE("parsing both notations", "[perm]") {
    CHECK(parse_permutation("(1 2)(3 4)") == Permutation::from_one_line({2, 1, 4, 3}));
    CHECK(parse_permutation("2 1 4 3") == Permutation::from_one_line({2, 1, 4, 3}));
    CHECK(parse_permutation("(1,2,3)", 4) == Permutation::from_one_line({2, 3, 1, 4}));
    CHECK(parse_permutation("()", 3).is_identity());
    CHECK(natural_degree("(1 2)(3 7)") == 7);
    CHECK_THROWS_AS(parse_permutation("(1 2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), ParseError);
    CHECK_THROWS_AS(parse_permutation("2 2 1"), ParseError);
    CHECK_THROWS_AS(parse_permutation("(1 5)", 3), DegreeMismatch);
    CHECK_THROWS_AS(parse_permutation("(a b)"), ParseError);
}

TEST_CASE("printing", "[perm]") {
    const auto w = parse_permutation("(2 3)", 4);
    CHECK(to_cycle_string(w) == "(2 3)");
    CHECK(to_cycle_string(w, true) == "(1)(2 3)(4)");
    CHECK(to_one_line_string(w) == "1 3 2 4");
    CHECK(to_cycle_string(Permutation(3)) == "()");
}

TEST_CASE("print then parse is the identity map", "[perm]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        const auto w = Permutation::from_one_line(img);
        CHECK(parse_permutation(to_cycle_string(w), n) == w);
        CHECK(parse_permutation(to_cycle_string(w, true)) == w);
        CHECK(parse_permutation(to_one_line_string(w)) == w);
    }
}

TEST_CASE("enumeration sizes", "[perm]") {
    CHECK(all_permutations(5).size() == 120);
    const auto s4 = all_permutations(4);
    CHECK(std::is_sorted(s4.begin(), s4.end()));
    CHECK(all_transpositions(5).size() == 10);
}
