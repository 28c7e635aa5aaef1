#ifndef WEIGHTABLE_DECOMPOSE_HPP
#define WEIGHTABLE_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <string>

#include "weightable/oracle.hpp"
#include "weightable/planar.hpp"
#include "weightable/weighting.hpp"

namespace weightable {

struct DecompNode {
    int id = 0;
    std::string kind;  // StrongSplit, WeakSplit, PlanarCut, NonplanarCase1/2/3,
                       // LeafCircular, LeafSmall, LeafF7, LeafOracle
    std::map<std::string, std::string> params;
    std::string verdict;  // weightable | not-weightable | unknown
    std::vector<int> children;
};

struct DecompTrace {
    std::vector<DecompNode> nodes;
    bool enumeration_fallback = false;  // some leaf needed cycle enumeration

    int add(const std::string& kind) {
        DecompNode n;
        n.id = (int)nodes.size();
        n.kind = kind;
        nodes.push_back(n);
        return n.id;
    }
};

struct Verdict {
    enum class Kind { Weightable, NotWeightable, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Weighting> weighting;    // total over the input edge set
    std::optional<BadTriple> certificate;  // bad triple of the input digraph
    bool f7_leaf = false;
    bool certified = false;
    DecompTrace trace;
};

struct RecognizeOptions {
    long long cap = kDefaultCycleCap;
    long long certificate_cap = 200000;  // enumeration budget for negative certificates
    bool oracle_verify = false;          // also check outputs against full enumeration
};

// Decides weightability and produces either a verified weighting or a bad
// triple, decomposing with the vertex-cut, planar-cut and nonplanar-cut
// constructions and recombining weightings bottom-up.
Verdict recognize(const Digraph& g, const RecognizeOptions& opt = {});

// ------------------------------------------------------------------ splits

// One-vertex split: c cuts the digraph, B is a sink strong component of
// G - c, A the rest; A->B edges reroute through c in both parts.
struct StrongSplit {
    int c = -1;
    std::vector<int> a, b;
    Digraph g1, g2;
};
StrongSplit split_1strong(const Digraph& g);
Weighting compose_1strong(const Digraph& g, const StrongSplit& s, const Weighting& w1,
                          const Weighting& w2);

// Two-vertex split along an underlying 2-cut {c,d}; both parts gain the
// digon c<->d.
struct WeakSplit {
    int c = -1, d = -1;
    std::vector<int> a, b;
    Digraph g1, g2;
    int cd1 = -1, dc1 = -1, cd2 = -1, dc2 = -1;  // digon edge ids per part
};
WeakSplit split_2weak(const Digraph& g);
Weighting compose_2weak(const Digraph& g, const WeakSplit& s, const Weighting& w1,
                        const Weighting& w2);

// Planar split along an accepted cut-curve: each side is squished.
struct PlanarCutSplit {
    CutCurve curve;
    Digraph g1, g2;       // keeps A (B squished to b), keeps B (A squished to a)
    int b_vertex = -1, a_vertex = -1;
};
PlanarCutSplit split_planarcut(const Embedding& e, const CutCurve& f);
Weighting compose_planarcut(const Digraph& g, const PlanarCutSplit& s, const Weighting& w1,
                            const Weighting& w2);

// Nonplanar split data: the cutset Y with labels fixed, the two special
// components, wing edge sets, the constructed parts, and the ids of every
// added vertex and edge keyed by role name ("v1", "g1.y2y1", ...).
struct YSplit {
    int case_id = 0;
    std::vector<int> y;
    std::vector<int> d1, d2;
    std::set<int> w1_edges, w2_edges, w3_edges;
    Digraph g1, g2, g0;  // g0 only for case 2
    std::map<std::string, int> role;
};
std::optional<YSplit> find_Y(const Digraph& g);

Weighting compose_firstcon(const Digraph& g, const YSplit& s, const Weighting& w1,
                           const Weighting& w2);
Weighting compose_secondcon(const Digraph& g, const YSplit& s, const Weighting& w1,
                            const Weighting& w2, const Weighting& w0);
Weighting compose_thirdcon(const Digraph& g, const YSplit& s, const Weighting& w1,
                           const Weighting& w2);

// Isomorphism against the 7-vertex digraph with arcs i->i-1 and i->i+2.
bool is_F7(const Digraph& g);

}  // namespace weightable

#endif
