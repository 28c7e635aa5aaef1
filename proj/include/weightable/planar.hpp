#ifndef WEIGHTABLE_PLANAR_HPP
#define WEIGHTABLE_PLANAR_HPP

#include <optional>

#include "weightable/cycles.hpp"
#include "weightable/digraph.hpp"

namespace weightable {

// Combinatorial embedding of the underlying multigraph. Darts: edge slot k
// (position in g.edges()) owns darts 2k (leaves the tail) and 2k+1 (leaves
// the head); rotations list the darts leaving each vertex in cyclic order,
// normalized so the smallest dart comes first.
struct Embedding {
    Digraph g;
    std::vector<std::vector<int>> rot;  // by vertex slot
    std::vector<int> face_of;           // by dart
    int n_faces = 0;
    std::optional<int> outer_face;
    bool diplanar = false;

    int edge_slot(int edge_id) const;
    int vertex_slot(int v) const;
    int dart_src(int d) const;
    int dart_dst(int d) const;
    static int twin(int d) { return d ^ 1; }
    int edge_of_dart(int d) const { return g.edges()[d / 2].id; }
    bool dart_forward(int d) const { return (d & 1) == 0; }
    // face successor: rotation successor of the twin at the dart's head
    int next_in_face(int d) const;
};

// Planar embedding of the underlying multigraph, or nothing if nonplanar.
std::optional<Embedding> planar_embed(const Digraph& g);

// Wraps explicit rotations (darts leaving each vertex slot, cyclic order)
// into an embedding and derives its faces.
Embedding make_embedding(const Digraph& g, std::vector<std::vector<int>> rot);

// Embedding in which the in-edges at every vertex form an interval of the
// rotation, or nothing. Found by splitting each vertex into an in-half and
// an out-half joined by a link edge and testing plain planarity.
std::optional<Embedding> diplanar_embed(const Digraph& g);

bool check_embedding(const Embedding& e);    // rotation/face/Euler consistency
bool check_diplanar(const Embedding& e);     // in-edges consecutive everywhere

enum class Rotation { clockwise, counterclockwise };

// Orientation of a dicycle in the punctured plane given the chosen outer
// face, determined combinatorially from which side of the traversal the
// enclosed faces lie.
Rotation cycle_orientation(const Embedding& e, const Dicycle& c);

// Sphere-level test: two vertex-disjoint dicycles bound discs with disjoint
// interiors; true iff their rotations induce the same sphere orientation.
bool similarly_oriented(const Embedding& e, const Dicycle& c1, const Dicycle& c2);

// Faces lying strictly between the two disjoint discs.
int annulus_face_count(const Embedding& e, const Dicycle& c1, const Dicycle& c2);

// Vertex-disjoint similarly-oriented dicycle pair minimizing the annulus
// face count, or nothing (in which case a 1-strong diplanar digraph is
// circular). Enumeration-backed; throws cap_exceeded.
std::optional<std::pair<Dicycle, Dicycle>> find_similar_pair(const Embedding& e,
                                                             long long cap = kDefaultCycleCap);

// A closed curve crossing each listed edge once, with exactly two direction
// changes; crossed edges are exactly the A-B edges.
struct CutCurve {
    std::vector<int> crossed;    // edge ids in cyclic order along the curve
    std::vector<bool> into_a;    // per crossing: head lies in A
    std::vector<int> a_side, b_side;
    int gap_face_1 = -1, gap_face_2 = -1;  // faces holding the two changes
};

struct CutCurveOptions {
    int min_side = 2;               // minimum vertices on each side
    bool require_side_cycles = true;  // each side must contain a dicycle
    bool require_goodcut = true;    // opposite crossing pairs share dicycles
    bool require_strong_parts = true;  // squished parts must be 1-strong
};

// Searches for a bond cut-curve with change number two passing the checks
// above. Two internally disjoint directed dual paths between a pair of gap
// faces give exactly such a curve; gap-face pairs are scanned in increasing
// id order and the first accepted curve wins.
std::optional<CutCurve> find_change2_cutcurve(const Embedding& e, const CutCurveOptions& opt = {});

// Change number of the bond separating A from the rest: direction
// alternations of the crossed edges around the dual cycle. Requires both
// sides nonnull and weakly connected.
int change_number(const Embedding& e, const std::vector<int>& a);

// Embedding of squish(A) derived by collapsing the A-disc; the rotation at
// the new vertex is the crossing order of the boundary bond.
std::pair<Embedding, SurgeryMap> squish_embedding(const Embedding& e, const std::vector<int>& a);

// Carving tree: every node has degree 1 or 3, leaves biject with vertices.
struct Carving {
    std::vector<std::vector<int>> adj;
    std::map<int, int> leaf_of;    // graph vertex -> tree node
    std::map<int, int> vertex_at;  // tree node -> graph vertex
};

// Vertex sets induced by the tree edges (both sides of every edge).
std::vector<std::vector<int>> carving_sets(const Carving& c, const Digraph& g);

// Bond carving of diwidth two for a 1-strong loopless diplanar-embedded
// digraph, when one exists. Splits on accepted cut-curves, falls back to
// exhaustive bond splitting on small graphs and to the outer-boundary
// peeling procedure otherwise.
std::optional<Carving> bond_carving(const Embedding& e);

// Checks tree degrees, the leaf bijection, the bond condition and diwidth
// at most two for every induced set.
bool verify_carving(const Embedding& e, const Carving& c);

}  // namespace weightable

#endif
