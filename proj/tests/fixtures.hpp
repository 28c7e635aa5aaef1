#ifndef WEIGHTABLE_TESTS_FIXTURES_HPP
#define WEIGHTABLE_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "weightable/digraph.hpp"

namespace fixtures {

using weightable::Digraph;
using weightable::Edge;

// Small named digraphs used across the suites. Vertex names map to dense
// ids in insertion order; edge ids are dense in listing order.
class Builder {
  public:
    int v(const std::string& name) {
        auto it = vids_.find(name);
        if (it != vids_.end()) return it->second;
        int id = (int)vids_.size();
        vids_[name] = id;
        return id;
    }
    int e(const std::string& tail, const std::string& head) {
        int id = (int)edges_.size();
        edges_.push_back(Edge{id, v(tail), v(head)});
        return id;
    }
    Digraph build() const {
        std::vector<int> vs;
        for (auto& [n, id] : vids_) vs.push_back(id);
        return Digraph(vs, edges_);
    }
    int vid(const std::string& name) const { return vids_.at(name); }

  private:
    std::map<std::string, int> vids_;
    std::vector<Edge> edges_;
};

inline Digraph digon() {
    Builder b;
    b.e("u", "v");
    b.e("v", "u");
    return b.build();
}

// a->b plus two parallel b->a edges; edge ids 0,1,2
inline Digraph theta() {
    Builder b;
    b.e("a", "b");
    b.e("b", "a");
    b.e("b", "a");
    return b.build();
}

inline Digraph tridigon() {
    Builder b;
    b.e("u1", "u2");
    b.e("u2", "u1");
    b.e("u2", "u3");
    b.e("u3", "u2");
    b.e("u3", "u1");
    b.e("u1", "u3");
    return b.build();
}

inline Digraph circ(int n) {
    Builder b;
    for (int i = 0; i < n; i++) b.e("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return b.build();
}

inline Digraph path3() {
    Builder b;
    b.e("a", "b");
    b.e("b", "c");
    return b.build();
}

// weak 4-double-cycle on 9 vertices, 13 edges
inline Digraph w4dc() {
    Builder b;
    int pairs[13][2] = {{1, 2}, {2, 4}, {4, 9}, {9, 3}, {3, 8}, {8, 1}, {3, 5},
                        {5, 6}, {6, 4}, {6, 7}, {7, 5}, {7, 1}, {2, 7}};
    for (auto& p : pairs) b.e("n" + std::to_string(p[0]), "n" + std::to_string(p[1]));
    return b.build();
}

// the four dicycles making w4dc a weak 4-double-cycle, as edge-id lists
inline std::vector<std::vector<int>> w4dc_ring() {
    // C1 = 1-2-4-9-3-8-1, C2 = 3-5-6-4-9-3, C3 = 5-6-7-5, C4 = 1-2-7-1
    return {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 2, 3}, {7, 9, 10}, {0, 12, 11}};
}

// 7-vertex digraph with arcs i->i-1 and i->i+2 (mod 7); 14 edges
inline Digraph f7() {
    Builder b;
    for (int i = 0; i < 7; i++) b.e("x" + std::to_string(i), "x" + std::to_string((i + 6) % 7));
    for (int i = 0; i < 7; i++) b.e("x" + std::to_string(i), "x" + std::to_string((i + 2) % 7));
    return b.build();
}

// 16-vertex weightable planar digraph with no circular drawing; the four
// thick edges (weight one) are c8->a1, b1->a1, b3->a3, c8->c1
struct Carter {
    Digraph g;
    std::vector<int> thick;
    std::map<std::string, int> vid;
};

inline Carter carter() {
    Builder b;
    const char* plain[][2] = {
        {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"b2", "b1"}, {"b3", "b2"}, {"b4", "b3"},
        {"a2", "b2"}, {"a4", "b4"}, {"c1", "c2"}, {"c2", "c3"}, {"c5", "c6"}, {"c6", "c7"},
        {"a1", "c1"}, {"c1", "a2"}, {"a2", "c2"}, {"c2", "a3"}, {"a3", "c3"}, {"c3", "a4"},
        {"b4", "c5"}, {"c5", "b3"}, {"b3", "c6"}, {"c6", "b2"}, {"b2", "c7"}, {"c7", "b1"},
        {"a4", "c4"}, {"c4", "b4"}, {"b1", "c8"}, {"c7", "c8"}, {"c4", "c5"}, {"c3", "c4"}};
    for (auto& p : plain) b.e(p[0], p[1]);
    Carter c;
    c.thick.push_back(b.e("c8", "a1"));
    c.thick.push_back(b.e("b1", "a1"));
    c.thick.push_back(b.e("b3", "a3"));
    c.thick.push_back(b.e("c8", "c1"));
    c.g = b.build();
    for (const char* n : {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4",
                          "c5", "c6", "c7", "c8"})
        c.vid[n] = b.vid(n);
    return c;
}

// 6-vertex diplanar weightable digraph where the curve around {a,b} has
// change number two but squishing makes a non-weightable part
inline Digraph badcut() {
    Builder b;
    b.e("b", "a");
    b.e("d", "c");
    b.e("b", "d");
    b.e("c", "a");
    b.e("a", "c");
    b.e("d", "e");
    b.e("e", "d");
    b.e("c", "f");
    b.e("f", "c");
    b.e("e", "b");
    b.e("e", "f");
    b.e("f", "e");
    return b.build();
}

}  // namespace fixtures

#endif
