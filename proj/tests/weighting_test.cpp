#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "weightable/oracle.hpp"
#include "weightable/weighting.hpp"

using namespace weightable;

TEST_CASE("theta weighting from the triangular solve") {
    auto g = fixtures::theta();
    auto w = find_weighting(g);
    CHECK(w.at(0) == 1);
    CHECK(w.at(1) == 0);
    CHECK(w.at(2) == 0);
    CHECK(verify_weighting_oracle(g, w));
}

TEST_CASE("plain cycle gets weight one on the designated edge") {
    auto g = fixtures::circ(5);
    auto w = find_weighting(g);
    int ones = 0;
    for (auto& [e, v] : w.w)
        if (v == 1) ones++;
    CHECK(ones == 1);
    CHECK(verify_weighting_oracle(g, w));
}

TEST_CASE("tridigon solve is basis-feasible but fails the oracle") {
    auto g = fixtures::tridigon();
    auto b = ear_basis(g);
    auto w = find_weighting(g, b);
    CHECK(verify_weighting_basis(g, b, w));
    CHECK_FALSE(verify_weighting_oracle(g, w));
}

TEST_CASE("basis verification rejects the zero map") {
    auto g = fixtures::theta();
    auto b = ear_basis(g);
    CHECK_FALSE(verify_weighting_basis(g, b, zero_weighting(g)));
}

TEST_CASE("carter thick edges form a weighting") {
    auto c = fixtures::carter();
    Weighting w = zero_weighting(c.g);
    for (int id : c.thick) w.w[id] = 1;
    CHECK(verify_weighting_oracle(c.g, w));
}

TEST_CASE("digon half-half verifies, all-ones does not") {
    auto g = fixtures::digon();
    Weighting w = zero_weighting(g);
    w.w[0] = Rat(1, 2);
    w.w[1] = Rat(1, 2);
    CHECK(verify_weighting_oracle(g, w));
    w.w[0] = 1;
    w.w[1] = 1;
    CHECK_FALSE(verify_weighting_oracle(g, w));
}

TEST_CASE("to_01 on the digon picks the tree-rooted form") {
    auto g = fixtures::digon();
    Weighting w = zero_weighting(g);
    w.w[0] = Rat(1, 2);
    w.w[1] = Rat(1, 2);
    auto w01 = to_01(g, w);
    CHECK(w01.is_zero_one());
    CHECK(verify_weighting_oracle(g, w01));
    CHECK(w01.at(0) + w01.at(1) == 1);
}

TEST_CASE("to_01 leaves a 0/1 weighting intact up to shifts") {
    auto c = fixtures::carter();
    Weighting w = zero_weighting(c.g);
    for (int id : c.thick) w.w[id] = 1;
    auto w01 = to_01(c.g, w);
    CHECK(w01.is_zero_one());
    CHECK(verify_weighting_oracle(c.g, w01));
}

TEST_CASE("to_01 on thirds of a triangle") {
    auto g = fixtures::circ(3);
    Weighting w;
    for (int i = 0; i < 3; i++) w.w[i] = Rat(1, 3);
    auto w01 = to_01(g, w);
    CHECK(w01.is_zero_one());
    CHECK(verify_weighting_oracle(g, w01));
    CHECK(w01.at(0) + w01.at(1) + w01.at(2) == 1);
}

TEST_CASE("to_01 phase two decreases the negative mass strictly") {
    // force a negative: weighting of C4 with values 3, -1, -1, 0
    auto g = fixtures::circ(4);
    Weighting w;
    w.w[0] = 3;
    w.w[1] = -1;
    w.w[2] = -1;
    w.w[3] = 0;
    REQUIRE(verify_weighting_oracle(g, w));
    To01Stats stats;
    auto w01 = to_01(g, w, &stats);
    CHECK(w01.is_zero_one());
    CHECK(verify_weighting_oracle(g, w01));
    for (size_t i = 1; i < stats.negative_mass.size(); i++)
        CHECK(stats.negative_mass[i] < stats.negative_mass[i - 1]);
}

TEST_CASE("to_01 rejects non-weightings") {
    auto g = fixtures::digon();
    Weighting w = zero_weighting(g);
    w.w[0] = Rat(1, 3);
    w.w[1] = Rat(1, 3);
    CHECK_THROWS_AS(to_01(g, w), precondition_error);
}

TEST_CASE("normalize theta at its first vertex") {
    auto g = fixtures::theta();
    auto w01 = to_01(g, find_weighting(g));
    auto w = normalize_at_vertex(g, w01, 0, NormalizeMode::heads_one);
    CHECK(w.at(1) == 1);
    CHECK(w.at(2) == 1);
    CHECK(w.at(0) == 0);
    CHECK(verify_weighting_oracle(g, w));
}

TEST_CASE("normalize C3 heads_one puts the one on the in-edge") {
    auto g = fixtures::circ(3);
    auto w01 = to_01(g, find_weighting(g));
    for (int u : g.vertices()) {
        auto w = normalize_at_vertex(g, w01, u, NormalizeMode::heads_one);
        CHECK(w.at(g.in(u)[0]) == 1);
        CHECK(verify_weighting_oracle(g, w));
    }
}

TEST_CASE("normalize digon tails_one") {
    auto g = fixtures::digon();
    Weighting w = zero_weighting(g);
    w.w[0] = 1;
    auto t = normalize_at_vertex(g, w, 0, NormalizeMode::tails_one);
    CHECK(t.at(0) == 1);  // edge 0 has tail u
    CHECK(t.at(1) == 0);
    CHECK(verify_weighting_oracle(g, t));
}

TEST_CASE("normalize postcondition across all vertices and both modes") {
    auto c = fixtures::carter();
    Weighting base = zero_weighting(c.g);
    for (int id : c.thick) base.w[id] = 1;
    for (int u : c.g.vertices()) {
        auto wh = normalize_at_vertex(c.g, base, u, NormalizeMode::heads_one);
        for (int id : c.g.in(u)) CHECK(wh.at(id) == 1);
        for (int id : c.g.out(u)) CHECK(wh.at(id) == 0);
        CHECK(verify_weighting_oracle(c.g, wh));
        auto wt = normalize_at_vertex(c.g, base, u, NormalizeMode::tails_one);
        for (int id : c.g.out(u)) CHECK(wt.at(id) == 1);
        for (int id : c.g.in(u)) CHECK(wt.at(id) == 0);
        CHECK(verify_weighting_oracle(c.g, wt));
    }
}

TEST_CASE("potential shifts never change dicycle sums") {
    std::mt19937 rng(3);
    auto c = fixtures::carter();
    Weighting w = zero_weighting(c.g);
    for (int id : c.thick) w.w[id] = 1;
    auto cycles = enumerate_dicycles(c.g);
    for (int trial = 0; trial < 20; trial++) {
        PotentialShift s;
        for (int v : c.g.vertices())
            if (rng() % 2) s.x.insert(v);
        Weighting shifted = w;
        apply_shift(c.g, shifted, s, (int)(rng() % 5) - 2);
        for (const auto& cy : cycles) CHECK(shifted.sum_over(cy.edges) == 1);
    }
}

TEST_CASE("cycle integrality on basis members and mixed cycles") {
    auto g = fixtures::theta();
    auto b = ear_basis(g);
    auto w = find_weighting(g, b);
    for (const auto& c : b.cycles) CHECK(cycle_integrality(g, w, characteristic_vector(c)) == 1);
    auto w01 = normalize_at_vertex(g, to_01(g, w), 0, NormalizeMode::heads_one);
    auto mixed = characteristic_vector(g, {{1, true}, {2, false}});
    CHECK(cycle_integrality(g, w01, mixed) == 0);
    CHECK(cycle_integrality(g, w01, mixed.negated()) == 0);
    auto v = characteristic_vector(b.cycles[0]);
    CHECK(cycle_integrality(g, w01, v.negated()) == -1);
}

TEST_CASE("non-integer dot products are reported") {
    auto g = fixtures::digon();
    Weighting w = zero_weighting(g);
    w.w[0] = Rat(1, 2);
    w.w[1] = Rat(1, 4);
    auto cycles = enumerate_dicycles(g);
    CHECK_THROWS_AS(cycle_integrality(g, w, characteristic_vector(cycles[0])), precondition_error);
}
