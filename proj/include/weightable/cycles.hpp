#ifndef WEIGHTABLE_CYCLES_HPP
#define WEIGHTABLE_CYCLES_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "weightable/digraph.hpp"

namespace weightable {

inline constexpr long long kDefaultCycleCap = 1000000;

// A directed cycle given by its edge ids in traversal order, rotated so the
// smallest edge id comes first. verts[i] is the tail of edges[i].
struct Dicycle {
    std::vector<int> edges;
    std::vector<int> verts;

    int length() const { return (int)edges.size(); }
    bool contains_vertex(int v) const;
    bool operator==(const Dicycle& o) const { return edges == o.edges; }
};

Dicycle make_dicycle(const Digraph& g, std::vector<int> edge_ids);

// Sparse +-1 vector over the edge set of an oriented cycle.
struct CharVector {
    std::map<int, int> entries;  // edge id -> +1 / -1

    int at(int edge_id) const {
        auto it = entries.find(edge_id);
        return it == entries.end() ? 0 : it->second;
    }
    CharVector negated() const;
};

// All elementary dicycles, in lexicographic order of their sorted edge-id
// sets. Throws cap_exceeded if there are more than cap of them.
std::vector<Dicycle> enumerate_dicycles(const Digraph& g, long long cap = kDefaultCycleCap);

// Ordered dicycles C0..Cn built from an ear sequence. Every edge is a "new"
// edge of exactly one ear (the edges of C0 count as new for index 0), and
// the designated new edge of ear i appears in no earlier cycle, which makes
// the (cycle x designated edge) matrix triangular.
struct EarBasis {
    std::vector<Dicycle> cycles;
    std::vector<std::vector<int>> new_edges;  // per cycle index
    std::vector<int> designated;              // e*_i, smallest-id new edge of ear i
};

// Greedy ear growth: C0 is the first dicycle through the smallest vertex,
// then repeatedly the shortest available ear (ties by smallest edge id).
// Requires a 1-strong digraph with at least one edge.
EarBasis ear_basis(const Digraph& g);

// Checks the EarBasis structural invariants against g.
bool check_ear_basis(const Digraph& g, const EarBasis& b);

CharVector characteristic_vector(const Dicycle& c);

// Characteristic vector of a not-necessarily-directed cycle, given as edge
// ids with a traversal sign (+1 = along edge direction). Validates that the
// input is a cycle of g.
CharVector characteristic_vector(const Digraph& g, const std::vector<std::pair<int, bool>>& walk);

// Integer coefficients lambda_0..lambda_n with sum lambda_i * c_i = c,
// computed by peeling designated edges in reverse ear order.
std::vector<mpz_class> express_in_basis(const CharVector& c, const EarBasis& b);

}  // namespace weightable

#endif
