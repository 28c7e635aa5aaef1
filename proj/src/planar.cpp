#include "weightable/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "planar_internal.hpp"

namespace weightable {

int Embedding::edge_slot(int edge_id) const {
    const auto& es = g.edges();
    auto it = std::lower_bound(es.begin(), es.end(), edge_id,
                               [](const Edge& e, int id) { return e.id < id; });
    if (it == es.end() || it->id != edge_id) throw error("edge not in embedding");
    return (int)(it - es.begin());
}

int Embedding::vertex_slot(int v) const {
    const auto& vs = g.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) throw error("vertex not in embedding");
    return (int)(it - vs.begin());
}

int Embedding::dart_src(int d) const {
    const Edge& e = g.edges()[d / 2];
    return (d & 1) ? e.head : e.tail;
}

int Embedding::dart_dst(int d) const {
    const Edge& e = g.edges()[d / 2];
    return (d & 1) ? e.tail : e.head;
}

int Embedding::next_in_face(int d) const {
    int t = twin(d);
    const auto& r = rot[vertex_slot(dart_src(t))];
    auto it = std::find(r.begin(), r.end(), t);
    if (it == r.end()) throw error("dart missing from rotation");
    ++it;
    return it == r.end() ? r.front() : *it;
}

namespace detail {

// Fills face_of / n_faces from rotations.
void trace_faces(Embedding& e) {
    int darts = 2 * e.g.m();
    e.face_of.assign(darts, -1);
    e.n_faces = 0;
    for (int d = 0; d < darts; d++) {
        if (e.face_of[d] != -1) continue;
        int f = e.n_faces++;
        int cur = d;
        do {
            e.face_of[cur] = f;
            cur = e.next_in_face(cur);
        } while (cur != d);
    }
}

void canonicalize_rotations(Embedding& e) {
    for (auto& r : e.rot) {
        if (r.empty()) continue;
        auto it = std::min_element(r.begin(), r.end());
        std::rotate(r.begin(), it, r.end());
    }
}

}  // namespace detail

using detail::bond_dual_cycle;
using detail::canonicalize_rotations;
using detail::trace_faces;

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

Embedding make_embedding(const Digraph& g, std::vector<std::vector<int>> rot) {
    Embedding e;
    e.g = g;
    e.rot = std::move(rot);
    if ((int)e.rot.size() != g.n()) throw error("rotation table size mismatch");
    trace_faces(e);
    e.diplanar = check_diplanar(e);
    return e;
}

std::optional<Embedding> planar_embed(const Digraph& g) {
    Embedding emb;
    emb.g = g;
    int n = g.n(), m = g.m();
    emb.rot.assign(n, {});
    if (m == 0) {
        trace_faces(emb);
        return emb;
    }

    // Subdivide every edge twice; the result is simple no matter what loops
    // or parallel edges the input has, and rotations map straight back.
    BoostGraph bg(n + 2 * m);
    std::vector<BoostGraph::edge_descriptor> seg;  // 3 segments per edge
    const auto& es = g.edges();
    std::map<int, int> vslot;
    for (int i = 0; i < n; i++) vslot[g.vertices()[i]] = i;
    for (int k = 0; k < m; k++) {
        int t = vslot[es[k].tail], h = vslot[es[k].head];
        int m1 = n + 2 * k, m2 = n + 2 * k + 1;
        seg.push_back(boost::add_edge(t, m1, bg).first);
        seg.push_back(boost::add_edge(m1, m2, bg).first);
        seg.push_back(boost::add_edge(m2, h, bg).first);
    }
    int idx = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, idx++);

    std::vector<std::vector<BoostGraph::edge_descriptor>> bemb(boost::num_vertices(bg));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(bemb.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    std::map<std::pair<int, int>, int> seg_to_dart;  // (min boost endpoint key) handled below
    // For original vertex slot v, each incident boost edge is either the
    // tail segment of edge k (dart 2k) or the head segment (dart 2k+1).
    for (int v = 0; v < n; v++) {
        for (auto be : bemb[v]) {
            int a = (int)boost::source(be, bg), b = (int)boost::target(be, bg);
            int other = (a == v) ? b : a;
            int k = (other - n) / 2;
            bool tail_side = ((other - n) % 2) == 0;
            emb.rot[v].push_back(tail_side ? 2 * k : 2 * k + 1);
        }
    }
    canonicalize_rotations(emb);
    trace_faces(emb);
    return emb;
}

std::optional<Embedding> diplanar_embed(const Digraph& g) {
    int n = g.n();
    std::map<int, int> vslot;
    for (int i = 0; i < n; i++) vslot[g.vertices()[i]] = i;

    // split graph: vertex 2i = in-half, 2i+1 = out-half, link 2i -> 2i+1
    std::vector<int> sverts;
    for (int i = 0; i < 2 * n; i++) sverts.push_back(i);
    std::vector<Edge> sedges;
    int link_base = g.max_edge_id() + 1;
    for (const Edge& e : g.edges())
        sedges.push_back(Edge{e.id, 2 * vslot[e.tail] + 1, 2 * vslot[e.head]});
    for (int i = 0; i < n; i++) sedges.push_back(Edge{link_base + i, 2 * i, 2 * i + 1});
    Digraph split(sverts, sedges);

    auto semb = planar_embed(split);
    if (!semb) return std::nullopt;

    Embedding emb;
    emb.g = g;
    emb.rot.assign(n, {});
    for (int i = 0; i < n; i++) {
        int vin = 2 * i, vout = 2 * i + 1;
        int link_slot = semb->edge_slot(link_base + i);
        int link_fwd = 2 * link_slot;      // leaves vin
        int link_bwd = 2 * link_slot + 1;  // leaves vout
        const auto& rin = semb->rot[semb->vertex_slot(vin)];
        const auto& rout = semb->rot[semb->vertex_slot(vout)];
        auto map_dart = [&](int sd) {
            int eid = semb->edge_of_dart(sd);
            int k = emb.edge_slot(eid);
            return (sd & 1) ? 2 * k + 1 : 2 * k;
        };
        // contract the link: walk rout, splicing rin (minus the link) in
        // at the link position, starting after the link dart
        std::vector<int> merged;
        auto pos_out = std::find(rout.begin(), rout.end(), link_bwd);
        auto pos_in = std::find(rin.begin(), rin.end(), link_fwd);
        if (pos_out == rout.end() || pos_in == rin.end()) throw error("link dart missing");
        for (auto it = rout.begin(); it != rout.end(); ++it) {
            if (it != pos_out) {
                merged.push_back(map_dart(*it));
                continue;
            }
            size_t start = (pos_in - rin.begin() + 1) % rin.size();
            for (size_t s = 0; s < rin.size() - 1; s++)
                merged.push_back(map_dart(rin[(start + s) % rin.size()]));
        }
        emb.rot[i] = merged;
    }
    canonicalize_rotations(emb);
    trace_faces(emb);
    emb.diplanar = true;
    if (!check_diplanar(emb)) throw error("vertex-split merge lost the in-interval property");
    return emb;
}

bool check_embedding(const Embedding& e) {
    // every dart exactly once across rotations, at its source vertex
    int darts = 2 * e.g.m();
    std::vector<int> seen(darts, 0);
    for (int v = 0; v < e.g.n(); v++) {
        for (int d : e.rot[v]) {
            if (d < 0 || d >= darts) return false;
            if (e.vertex_slot(e.dart_src(d)) != v) return false;
            seen[d]++;
        }
    }
    for (int c : seen)
        if (c != 1) return false;
    // Euler per weak component: V - E + F == 2 (edgeless components count
    // one face)
    auto comps = weak_components(e.g);
    for (auto& comp : comps) {
        std::set<int> cs(comp.begin(), comp.end());
        int cv = (int)comp.size(), ce = 0;
        std::set<int> faces;
        for (const Edge& ed : e.g.edges())
            if (cs.count(ed.tail)) ce++;
        for (int d = 0; d < darts; d++)
            if (cs.count(e.dart_src(d))) faces.insert(e.face_of[d]);
        int cf = faces.empty() ? 1 : (int)faces.size();
        if (cv - ce + cf != 2) return false;
    }
    return true;
}

bool check_diplanar(const Embedding& e) {
    for (int v = 0; v < e.g.n(); v++) {
        const auto& r = e.rot[v];
        int changes = 0;
        for (size_t i = 0; i < r.size(); i++) {
            bool in_i = !e.dart_forward(r[i]);
            bool in_j = !e.dart_forward(r[(i + 1) % r.size()]);
            if (in_i != in_j) changes++;
        }
        if (changes > 2) return false;
    }
    return true;
}

// ------------------------------------------------------------- orientation

namespace {

// Dual reachability from face `from`, not crossing the edges in `blocked`.
std::set<int> face_side(const Embedding& e, int from, const std::set<int>& blocked_edges) {
    std::set<int> seen{from};
    std::deque<int> q{from};
    int darts = 2 * e.g.m();
    // face -> darts incidence
    std::vector<std::vector<int>> by_face(e.n_faces);
    for (int d = 0; d < darts; d++) by_face[e.face_of[d]].push_back(d);
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int d : by_face[f]) {
            if (blocked_edges.count(e.edge_of_dart(d))) continue;
            int g2 = e.face_of[Embedding::twin(d)];
            if (!seen.count(g2)) {
                seen.insert(g2);
                q.push_back(g2);
            }
        }
    }
    return seen;
}

// Faces carried by the forward traversal darts of a dicycle (all on one
// side of it).
std::set<int> traversal_faces(const Embedding& e, const Dicycle& c) {
    std::set<int> out;
    for (int id : c.edges) out.insert(e.face_of[2 * e.edge_slot(id)]);
    return out;
}

std::set<int> cycle_edge_set(const Dicycle& c) { return {c.edges.begin(), c.edges.end()}; }

}  // namespace

Rotation cycle_orientation(const Embedding& e, const Dicycle& c) {
    if (!e.outer_face) throw precondition_error("NoOuterFace", "orientation needs a chosen outer face");
    std::set<int> outside = face_side(e, *e.outer_face, cycle_edge_set(c));
    std::set<int> trav = traversal_faces(e, c);
    bool any_out = false, any_in = false;
    for (int f : trav) (outside.count(f) ? any_out : any_in) = true;
    if (any_out == any_in) throw error("cycle traversal faces on both sides");
    return any_out ? Rotation::clockwise : Rotation::counterclockwise;
}

bool similarly_oriented(const Embedding& e, const Dicycle& c1, const Dicycle& c2) {
    // disc of c1 = side away from c2, and vice versa
    std::set<int> side1 = face_side(e, e.face_of[2 * e.edge_slot(c2.edges[0])], cycle_edge_set(c1));
    std::set<int> side2 = face_side(e, e.face_of[2 * e.edge_slot(c1.edges[0])], cycle_edge_set(c2));
    bool flag1 = side1.count(*traversal_faces(e, c1).begin()) == 0;  // traversal faces inside own disc
    bool flag2 = side2.count(*traversal_faces(e, c2).begin()) == 0;
    return flag1 == flag2;
}

int annulus_face_count(const Embedding& e, const Dicycle& c1, const Dicycle& c2) {
    std::set<int> near1 = face_side(e, e.face_of[2 * e.edge_slot(c2.edges[0])], cycle_edge_set(c1));
    std::set<int> near2 = face_side(e, e.face_of[2 * e.edge_slot(c1.edges[0])], cycle_edge_set(c2));
    int count = 0;
    for (int f = 0; f < e.n_faces; f++)
        if (near1.count(f) && near2.count(f)) count++;
    return count;
}

std::optional<std::pair<Dicycle, Dicycle>> find_similar_pair(const Embedding& e, long long cap) {
    auto cycles = enumerate_dicycles(e.g, cap);
    std::optional<std::pair<Dicycle, Dicycle>> best;
    int best_annulus = -1;
    for (size_t i = 0; i < cycles.size(); i++) {
        std::set<int> vi(cycles[i].verts.begin(), cycles[i].verts.end());
        for (size_t j = i + 1; j < cycles.size(); j++) {
            bool disjoint = true;
            for (int v : cycles[j].verts)
                if (vi.count(v)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            if (!similarly_oriented(e, cycles[i], cycles[j])) continue;
            int a = annulus_face_count(e, cycles[i], cycles[j]);
            if (best_annulus == -1 || a < best_annulus) {
                best_annulus = a;
                best = {cycles[i], cycles[j]};
            }
        }
    }
    return best;
}

// --------------------------------------------------------------- cut curves

namespace {

// Directed dual: one arc per primal edge, from the face of its forward dart
// to the face of its backward dart.
struct DualArcs {
    struct Arc {
        int from, to, edge_id;
    };
    std::vector<Arc> arcs;                     // by edge slot
    std::vector<std::vector<int>> out_of;      // face -> arc indexes
};

DualArcs dual_arcs(const Embedding& e) {
    DualArcs d;
    d.out_of.assign(e.n_faces, {});
    const auto& es = e.g.edges();
    for (int k = 0; k < (int)es.size(); k++) {
        int from = e.face_of[2 * k], to = e.face_of[2 * k + 1];
        d.arcs.push_back({from, to, es[k].id});
        d.out_of[from].push_back(k);
    }
    return d;
}

// Iterative dominator computation for the flow graph (dual arcs, root u).
// idom[v] == u exactly when two internally disjoint u->v dipaths exist.
std::vector<int> dominators(const DualArcs& d, int nf, int root) {
    std::vector<int> rpo;
    std::vector<int> state(nf, 0);
    // iterative DFS postorder
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
        auto& [f, i] = stack.back();
        if (i < d.out_of[f].size()) {
            int to = d.arcs[d.out_of[f][i++]].to;
            if (!state[to]) {
                state[to] = 1;
                stack.push_back({to, 0});
            }
        } else {
            rpo.push_back(f);
            stack.pop_back();
        }
    }
    std::reverse(rpo.begin(), rpo.end());
    std::vector<int> po_num(nf, -1);
    for (int i = 0; i < (int)rpo.size(); i++) po_num[rpo[i]] = (int)rpo.size() - 1 - i;

    std::vector<std::vector<int>> preds(nf);
    for (const auto& a : d.arcs)
        if (po_num[a.from] >= 0 && po_num[a.to] >= 0) preds[a.to].push_back(a.from);

    std::vector<int> idom(nf, -1);
    idom[root] = root;
    auto intersect = [&](int a, int b) {
        while (a != b) {
            while (po_num[a] < po_num[b]) a = idom[a];
            while (po_num[b] < po_num[a]) b = idom[b];
        }
        return a;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f : rpo) {
            if (f == root) continue;
            int nd = -1;
            for (int p : preds[f]) {
                if (idom[p] == -1) continue;
                nd = (nd == -1) ? p : intersect(nd, p);
            }
            if (nd != -1 && idom[f] != nd) {
                idom[f] = nd;
                changed = true;
            }
        }
    }
    return idom;
}

// Two internally disjoint directed dual paths from u to v, as arc-index
// sequences, or nothing. Unit-capacity flow with split faces.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths(const DualArcs& d,
                                                                                int nf, int u, int v) {
    int N = 2 * nf;  // f_in = 2f, f_out = 2f+1
    struct FArc {
        int to, cap, flow, twin_index;
        int label;  // dual arc index, or -1 for node arcs
    };
    std::vector<std::vector<int>> adj(N);
    std::vector<FArc> arcs;
    auto add = [&](int a, int b, int cap, int label) {
        adj[a].push_back((int)arcs.size());
        arcs.push_back({b, cap, 0, (int)arcs.size() + 1, label});
        adj[b].push_back((int)arcs.size());
        arcs.push_back({a, 0, 0, (int)arcs.size() - 1, label});
    };
    for (int f = 0; f < nf; f++) add(2 * f, 2 * f + 1, (f == u || f == v) ? 2 : 1, -1);
    for (int i = 0; i < (int)d.arcs.size(); i++) add(2 * d.arcs[i].from + 1, 2 * d.arcs[i].to, 1, i);

    int source = 2 * u, sink = 2 * v + 1;
    int total = 0;
    for (int round = 0; round < 2; round++) {
        // BFS augmenting path
        std::vector<int> pre(N, -1);
        std::deque<int> q{source};
        std::vector<bool> vis(N, false);
        vis[source] = true;
        while (!q.empty() && !vis[sink]) {
            int x = q.front();
            q.pop_front();
            for (int ai : adj[x]) {
                const FArc& a = arcs[ai];
                if (a.cap - a.flow <= 0 || vis[a.to]) continue;
                vis[a.to] = true;
                pre[a.to] = ai;
                if (a.to == sink) break;
                q.push_back(a.to);
            }
        }
        if (!vis[sink]) break;
        int x = sink;
        while (x != source) {
            int ai = pre[x];
            arcs[ai].flow++;
            arcs[arcs[ai].twin_index].flow--;
            x = arcs[arcs[ai].twin_index].to;
        }
        total++;
    }
    if (total < 2) return std::nullopt;

    // decompose: walk twice from u to v along saturated dual arcs
    std::set<int> used;  // dual arc indexes carrying flow
    for (int ai = 0; ai < (int)arcs.size(); ai += 2)
        if (arcs[ai].label >= 0 && arcs[ai].flow == 1) used.insert(arcs[ai].label);
    std::vector<std::vector<int>> paths;
    for (int round = 0; round < 2; round++) {
        std::vector<int> path;
        int f = u;
        while (f != v) {
            int found = -1;
            for (int i : used)
                if (d.arcs[i].from == f) {
                    found = i;
                    break;
                }
            if (found == -1) return std::nullopt;
            used.erase(found);
            path.push_back(found);
            f = d.arcs[found].to;
            if ((int)path.size() > (int)d.arcs.size()) return std::nullopt;
        }
        if (path.empty()) return std::nullopt;
        paths.push_back(path);
    }
    return std::make_pair(paths[0], paths[1]);
}

}  // namespace

std::optional<CutCurve> find_change2_cutcurve(const Embedding& e, const CutCurveOptions& opt) {
    const Digraph& g = e.g;
    if (g.m() == 0 || e.n_faces < 2) return std::nullopt;
    DualArcs d = dual_arcs(e);

    auto reaches_within = [&](const std::set<int>& side, int from, int to) {
        if (from == to) return true;
        std::set<int> seen{from};
        std::deque<int> q{from};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int id : g.out(x)) {
                int h = g.edge(id).head;
                if (!side.count(h) || seen.count(h)) continue;
                if (h == to) return true;
                seen.insert(h);
                q.push_back(h);
            }
        }
        return false;
    };

    auto side_has_cycle = [&](const std::vector<int>& side) {
        Digraph sub = g.induced(side);
        // any strong component with an edge (or loop) means a dicycle
        for (auto& comp : strong_components(sub)) {
            if (comp.size() > 1) return true;
            for (int id : sub.out(comp[0]))
                if (sub.edge(id).head == comp[0]) return true;
        }
        return false;
    };

    for (int u = 0; u < e.n_faces; u++) {
        auto idom = dominators(d, e.n_faces, u);
        for (int v = 0; v < e.n_faces; v++) {
            if (v == u || idom[v] != u) continue;
            auto paths = two_disjoint_paths(d, e.n_faces, u, v);
            if (!paths) continue;

            // the two paths, one forward one backward, form the dual cycle
            std::vector<int> crossed;
            std::set<int> crossed_set;
            for (int ai : paths->first) crossed.push_back(d.arcs[ai].edge_id);
            for (auto it = paths->second.rbegin(); it != paths->second.rend(); ++it)
                crossed.push_back(d.arcs[*it].edge_id);
            for (int id : crossed) crossed_set.insert(id);
            if (crossed_set.size() != crossed.size()) continue;

            // partition by removing the crossed edges
            std::vector<Edge> rest;
            for (const Edge& ed : g.edges())
                if (!crossed_set.count(ed.id)) rest.push_back(ed);
            auto comps = weak_components(Digraph(g.vertices(), rest));
            if (comps.size() != 2) continue;
            // A = side the first-block arcs point into
            int probe_head = g.edge(d.arcs[paths->first[0]].edge_id).head;
            std::set<int> s0(comps[0].begin(), comps[0].end());
            std::vector<int> a = s0.count(probe_head) ? comps[0] : comps[1];
            std::vector<int> b = s0.count(probe_head) ? comps[1] : comps[0];
            std::set<int> aset(a.begin(), a.end()), bset(b.begin(), b.end());

            bool ok = true;
            std::vector<bool> into_a;
            for (size_t i = 0; i < crossed.size() && ok; i++) {
                const Edge& ed = g.edge(crossed[i]);
                bool fwd_block = i < paths->first.size();
                bool in_a = aset.count(ed.head) && bset.count(ed.tail);
                bool in_b = bset.count(ed.head) && aset.count(ed.tail);
                if (!in_a && !in_b) ok = false;
                if (fwd_block != in_a) ok = false;  // blocks must cross uniformly
                into_a.push_back(in_a);
            }
            if (!ok) continue;
            // every A-B edge must be crossed
            for (const Edge& ed : g.edges()) {
                if (crossed_set.count(ed.id)) continue;
                if (aset.count(ed.tail) != aset.count(ed.head)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            if ((int)a.size() < opt.min_side || (int)b.size() < opt.min_side) continue;
            if (opt.require_side_cycles && (!side_has_cycle(a) || !side_has_cycle(b))) continue;

            if (opt.require_strong_parts) {
                auto [g1, m1] = squish(g, b);
                auto [g2, m2] = squish(g, a);
                if (!is_strongly_connected(g1) || !is_strongly_connected(g2)) continue;
            }

            if (opt.require_goodcut) {
                // heads of B->A crossings must reach tails of A->B crossings
                // within A, and symmetrically within B
                std::vector<int> heads_in_a, tails_in_a, heads_in_b, tails_in_b;
                for (size_t i = 0; i < crossed.size(); i++) {
                    const Edge& ed = g.edge(crossed[i]);
                    if (into_a[i]) {
                        heads_in_a.push_back(ed.head);
                        tails_in_b.push_back(ed.tail);
                    } else {
                        heads_in_b.push_back(ed.head);
                        tails_in_a.push_back(ed.tail);
                    }
                }
                bool good = true;
                for (int h : heads_in_a)
                    for (int t : tails_in_a)
                        if (!reaches_within(aset, h, t)) good = false;
                for (int h : heads_in_b)
                    for (int t : tails_in_b)
                        if (!reaches_within(bset, h, t)) good = false;
                if (!good) continue;
            }

            CutCurve cc;
            cc.crossed = crossed;
            cc.into_a = into_a;
            cc.a_side = a;
            cc.b_side = b;
            cc.gap_face_1 = u;
            cc.gap_face_2 = v;
            return cc;
        }
    }
    return std::nullopt;
}

// Cyclic crossing order of a bond around its dual cycle.
std::vector<int> detail::bond_dual_cycle(const Embedding& e, const std::set<int>& cut) {
    // each involved face must meet exactly two cut edges
    std::map<int, std::vector<int>> at_face;  // face -> cut edge ids
    for (int id : cut) {
        int k = e.edge_slot(id);
        int f1 = e.face_of[2 * k], f2 = e.face_of[2 * k + 1];
        if (f1 == f2) throw precondition_error("NotABond", "cut edge has both sides on one face");
        at_face[f1].push_back(id);
        at_face[f2].push_back(id);
    }
    for (auto& [f, ids] : at_face)
        if (ids.size() != 2) throw precondition_error("NotABond", "cut is not a simple dual cycle");
    std::vector<int> order;
    int start = *cut.begin();
    int cur = start;
    int face = e.face_of[2 * e.edge_slot(start)];
    do {
        order.push_back(cur);
        // step to the other cut edge at `face`, then hop across it
        auto& pair = at_face[face];
        int nxt = (pair[0] == cur) ? pair[1] : pair[0];
        int k = e.edge_slot(nxt);
        face = (e.face_of[2 * k] == face) ? e.face_of[2 * k + 1] : e.face_of[2 * k];
        cur = nxt;
    } while (cur != start);
    if (order.size() != cut.size()) throw precondition_error("NotABond", "cut dual cycle is disconnected");
    return order;
}

int change_number(const Embedding& e, const std::vector<int>& a) {
    const Digraph& g = e.g;
    std::set<int> aset(a.begin(), a.end());
    std::vector<int> b;
    for (int v : g.vertices())
        if (!aset.count(v)) b.push_back(v);
    if (a.empty() || b.empty()) throw precondition_error("NotABond", "empty side");
    if (!is_weakly_connected(g.induced(a)) || !is_weakly_connected(g.induced(b)))
        throw precondition_error("NotABond", "sides must be weakly connected");

    std::set<int> cut;
    for (const Edge& ed : g.edges())
        if (aset.count(ed.tail) != aset.count(ed.head)) cut.insert(ed.id);
    if (cut.empty()) throw precondition_error("NotABond", "no edges cross the partition");

    auto order = bond_dual_cycle(e, cut);
    int changes = 0;
    for (size_t i = 0; i < order.size(); i++) {
        bool out_i = aset.count(g.edge(order[i]).tail) != 0;
        bool out_j = aset.count(g.edge(order[(i + 1) % order.size()]).tail) != 0;
        if (out_i != out_j) changes++;
    }
    return changes;
}

std::pair<Embedding, SurgeryMap> squish_embedding(const Embedding& e, const std::vector<int>& a) {
    auto [sg, map] = squish(e.g, a);
    int nv = sg.max_vertex_id();  // the new vertex (fresh max id)
    for (auto& [old_v, new_v] : map.vertex_to)
        if (new_v != old_v) nv = new_v;

    std::set<int> aset(a.begin(), a.end());
    std::set<int> cut;
    for (const Edge& ed : sg.edges())
        if (ed.tail == nv || ed.head == nv) cut.insert(ed.id);

    Embedding out;
    out.g = sg;
    out.rot.assign(sg.n(), {});
    out.diplanar = false;

    auto old_dart_to_new = [&](int d) {
        int eid = e.edge_of_dart(d);
        if (!sg.has_edge(eid)) return -1;
        int k = out.edge_slot(eid);
        return (d & 1) ? 2 * k + 1 : 2 * k;
    };
    for (int v : sg.vertices()) {
        if (v == nv) continue;
        std::vector<int> r;
        for (int d : e.rot[e.vertex_slot(v)]) {
            int nd = old_dart_to_new(d);
            if (nd >= 0) r.push_back(nd);
        }
        out.rot[out.vertex_slot(v)] = r;
    }
    // rotation at the squished vertex: boundary crossing order
    if (!cut.empty()) {
        auto order = bond_dual_cycle(e, cut);
        std::vector<int> r;
        for (int id : order) {
            int k = out.edge_slot(id);
            r.push_back(sg.edge(id).tail == nv ? 2 * k : 2 * k + 1);
        }
        auto& slot = out.rot[out.vertex_slot(nv)];
        slot = r;
        trace_faces(out);
        if (!check_embedding(out)) {
            std::reverse(slot.begin(), slot.end());
            trace_faces(out);
            if (!check_embedding(out)) throw error("squish embedding failed both boundary orders");
        }
    } else {
        trace_faces(out);
    }
    canonicalize_rotations(out);
    trace_faces(out);
    out.diplanar = check_diplanar(out);
    return {out, map};
}

}  // namespace weightable
