#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "weightable/digraph.hpp"

using namespace weightable;

TEST_CASE("connectivity on a digon") {
    auto r = connectivity(fixtures::digon());
    CHECK(r.is_1strong);
    CHECK(r.is_1weak);
    CHECK(r.strong_k == 1);  // fewer than three vertices blocks 2-strong
    CHECK(r.weak_k == 1);
}

TEST_CASE("connectivity on the 4-double-cycle fixture") {
    auto r = connectivity(fixtures::w4dc());
    CHECK(r.is_1strong);
    CHECK(r.strong_components.size() == 1);
}

TEST_CASE("C3 plus isolated vertex has two weak components") {
    fixtures::Builder b;
    b.e("a", "b");
    b.e("b", "c");
    b.e("c", "a");
    b.v("lonely");
    auto g = b.build();
    auto r = connectivity(g);
    CHECK_FALSE(r.is_1weak);
    CHECK(r.weak_components.size() == 2);
    CHECK_FALSE(r.is_1strong);
}

TEST_CASE("connectivity matches the definition checker on small digraphs") {
    // brute force: k-weak iff >= k+1 vertices and no (<k)-subset disconnects
    auto brute_weak_k = [](const Digraph& g) {
        auto connected_after = [&](const std::set<int>& del) {
            std::vector<int> keep;
            for (int v : g.vertices())
                if (!del.count(v)) keep.push_back(v);
            if (keep.empty()) return true;
            return is_weakly_connected(g.induced(keep));
        };
        int best = 0;
        for (int k = 1; k <= 3; k++) {
            if (g.n() < k + 1) break;
            bool ok = true;
            std::vector<int> vs = g.vertices();
            // all subsets of size < k
            for (int mask = 0; mask < (1 << g.n()) && ok; mask++) {
                std::set<int> del;
                for (int i = 0; i < g.n(); i++)
                    if (mask & (1 << i)) del.insert(vs[i]);
                if ((int)del.size() >= k) continue;
                if (!connected_after(del)) ok = false;
            }
            if (ok) best = k;
        }
        return best;
    };

    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; trial++) {
        int n = 2 + (int)(rng() % 4);  // up to 5 vertices
        std::vector<int> vs;
        for (int i = 0; i < n; i++) vs.push_back(i);
        std::vector<Edge> es;
        int id = 0;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                if (i != j && rng() % 3 == 0) es.push_back(Edge{id++, i, j});
        Digraph g(vs, es);
        CHECK(connectivity(g).weak_k == brute_weak_k(g));
    }
}

TEST_CASE("reduce_to_strong_parts drops acyclic edges") {
    auto [parts, map] = reduce_to_strong_parts(fixtures::path3());
    CHECK(parts.size() == 3);
    for (auto& p : parts) CHECK(p.m() == 0);
    CHECK(map.forced_num.size() == 2);
    for (auto& [e, w] : map.forced_num) CHECK(w == 0);
}

TEST_CASE("reduce_to_strong_parts keeps two disjoint digons apart") {
    fixtures::Builder b;
    b.e("u", "v");
    b.e("v", "u");
    b.e("x", "y");
    b.e("y", "x");
    auto [parts, map] = reduce_to_strong_parts(b.build());
    CHECK(parts.size() == 2);
    CHECK(parts[0].m() == 2);
    CHECK(parts[1].m() == 2);
}

TEST_CASE("reduce_to_strong_parts matches the component structure") {
    fixtures::Builder b;
    b.e("a", "b");
    b.e("b", "c");
    b.e("c", "a");
    b.e("c", "d");
    b.e("d", "e");
    b.e("e", "d");
    auto g = b.build();
    auto [parts, map] = reduce_to_strong_parts(g);
    CHECK(parts.size() == 2);
    CHECK(map.forced_num.count(3));  // the bridge c->d
}

TEST_CASE("simplify collapses the theta multigraph") {
    auto [s, map] = simplify(fixtures::theta());
    CHECK(s.n() == 2);
    CHECK(s.m() == 2);
    CHECK(map.edge_to.at(2) == 1);  // parallel b->a joins its class head
}

TEST_CASE("simplify removes loops with forced weight one") {
    Digraph g({0}, {Edge{0, 0, 0}});
    auto [s, map] = simplify(g);
    CHECK(s.m() == 0);
    CHECK(map.forced_num.at(0) == 1);
}

TEST_CASE("simplify leaves the carter fixture alone") {
    auto c = fixtures::carter();
    CHECK(c.g.n() == 16);
    CHECK(c.g.m() == 34);
    auto [s, map] = simplify(c.g);
    CHECK(s.m() == 34);
}

TEST_CASE("simplify is idempotent") {
    auto [s1, m1] = simplify(fixtures::theta());
    auto [s2, m2] = simplify(s1);
    CHECK(s1 == s2);
}

TEST_CASE("butterfly contraction of a C3 edge gives a digon") {
    auto g = fixtures::circ(3);
    CHECK(is_singular_edge(g, 0));
    auto [h, map] = butterfly_contract(g, 0);
    CHECK(h.n() == 2);
    CHECK(h.m() == 2);
    CHECK(is_strongly_connected(h));
}

TEST_CASE("butterfly contraction rejects non-singular edges") {
    auto g = fixtures::tridigon();  // every head and tail sees two edges
    for (const Edge& e : g.edges()) CHECK_FALSE(is_singular_edge(g, e.id));
    CHECK_THROWS_AS(butterfly_contract(g, 0), precondition_error);
}

TEST_CASE("butterfly contraction rejects loops") {
    Digraph g({0, 1}, {Edge{0, 0, 0}, Edge{1, 0, 1}, Edge{2, 1, 0}});
    CHECK_THROWS_AS(butterfly_contract(g, 0), precondition_error);
}

TEST_CASE("squishing one endpoint of a digon renames it") {
    auto g = fixtures::digon();
    auto [h, map] = squish(g, {0});
    CHECK(h.n() == 2);
    CHECK(h.m() == 2);
    CHECK(is_strongly_connected(h));
}

TEST_CASE("squishing the a-row of carter deletes its three internal edges") {
    auto c = fixtures::carter();
    std::vector<int> a = {c.vid["a1"], c.vid["a2"], c.vid["a3"], c.vid["a4"]};
    auto [h, map] = squish(c.g, a);
    CHECK(h.n() == 13);
    CHECK(h.m() == 31);
}

TEST_CASE("squishing everything is rejected") {
    auto g = fixtures::digon();
    CHECK_THROWS_AS(squish(g, {0, 1}), precondition_error);
    CHECK_THROWS_AS(squish(g, {}), precondition_error);
}
