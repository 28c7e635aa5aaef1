#ifndef WEIGHTABLE_DIGRAPH_HPP
#define WEIGHTABLE_DIGRAPH_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightable {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a cycle enumeration would exceed its cap. Callers must treat
// this as "answer unavailable", never as a verdict.
struct cap_exceeded : error {
    long long cap;
    explicit cap_exceeded(long long c)
        : error("cycle enumeration cap exceeded (" + std::to_string(c) + ")"), cap(c) {}
};

// Precondition violations carry a short machine-checkable code
// ("NotSingular", "BadSet", "NotStrong", ...).
struct precondition_error : error {
    std::string code;
    precondition_error(std::string c, const std::string& what)
        : error(c + ": " + what), code(std::move(c)) {}
};

struct Edge {
    int id;
    int tail;
    int head;
};

// Directed multigraph with stable vertex and edge identifiers. Loops and
// parallel edges are permitted. Instances are immutable after construction;
// all surgeries return new values.
class Digraph {
  public:
    Digraph() = default;
    Digraph(std::vector<int> verts, std::vector<Edge> edges);

    int n() const { return (int)verts_.size(); }
    int m() const { return (int)edges_.size(); }
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }  // ascending by id

    bool has_vertex(int v) const { return vindex_.count(v) != 0; }
    bool has_edge(int id) const { return eindex_.count(id) != 0; }
    const Edge& edge(int id) const;

    // Incident edge ids, ascending. Loops appear in both lists.
    const std::vector<int>& out(int v) const;
    const std::vector<int>& in(int v) const;
    int out_deg(int v) const { return (int)out(v).size(); }
    int in_deg(int v) const { return (int)in(v).size(); }

    int max_vertex_id() const;
    int max_edge_id() const;

    Digraph induced(const std::vector<int>& vs) const;
    Digraph without_edges(const std::vector<int>& ids) const;
    Digraph with_edges(const std::vector<Edge>& more) const;
    Digraph with_vertex(int v) const;

    bool operator==(const Digraph& o) const {
        return verts_ == o.verts_ && eq_edges(o);
    }

  private:
    bool eq_edges(const Digraph& o) const;
    std::vector<int> verts_;           // sorted
    std::vector<Edge> edges_;          // sorted by id
    std::map<int, int> vindex_;        // vertex id -> slot
    std::map<int, int> eindex_;        // edge id -> slot in edges_
    std::vector<std::vector<int>> out_, in_;
};

struct ConnectivityReport {
    bool is_1weak = false;
    bool is_1strong = false;
    int weak_k = 0;    // largest k <= 3 such that the underlying graph is k-connected
    int strong_k = 0;  // largest k <= 2 such that the digraph is k-strong
    std::vector<std::vector<int>> weak_components;
    std::vector<std::vector<int>> strong_components;     // reverse topological order
    std::vector<std::pair<int, int>> condensation_arcs;  // between component indexes
};

ConnectivityReport connectivity(const Digraph& g);

bool is_strongly_connected(const Digraph& g);
bool is_weakly_connected(const Digraph& g);
std::vector<std::vector<int>> strong_components(const Digraph& g);
std::vector<std::vector<int>> weak_components(const Digraph& g);

// Records what a surgery did to ids. Weightings of the image lift back to
// the preimage: surviving edges copy their image value, dropped edges take
// the forced value recorded here.
struct SurgeryMap {
    std::map<int, int> edge_to;       // old edge id -> new edge id
    std::map<int, int> forced_num;    // dropped edge id -> forced integer weight
    std::map<int, int> vertex_to;     // old vertex id -> new vertex id
};

// Deletes every edge lying in no dicycle (the edges between distinct strong
// components) and returns the strong components as separate digraphs. The
// whole graph is weightable iff every part is; deleted edges get weight 0.
std::pair<std::vector<Digraph>, SurgeryMap> reduce_to_strong_parts(const Digraph& g);

// Removes loops (forced weight 1: a loop is a dicycle of length one) and
// collapses each parallel class onto its smallest-id member. All members of
// a parallel class carry equal weight in any weighting, since swapping two
// parallel edges maps dicycles to dicycles; so this preserves weightability
// in both directions.
std::pair<Digraph, SurgeryMap> simplify(const Digraph& g);

// Contracts a singular edge e = uv (u != v, and e is the only in-edge of v
// or the only out-edge of u). Weightability is preserved both ways. The
// merged vertex keeps the smaller of the two ids.
std::pair<Digraph, SurgeryMap> butterfly_contract(const Digraph& g, int edge_id);

bool is_singular_edge(const Digraph& g, int edge_id);

// Deletes all edges inside A and identifies A to one new vertex (max id + 1).
// Surviving edge ids are unchanged; endpoint changes are recorded in the map.
std::pair<Digraph, SurgeryMap> squish(const Digraph& g, const std::vector<int>& a);

}  // namespace weightable

#endif
