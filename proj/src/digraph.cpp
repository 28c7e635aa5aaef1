#include "weightable/digraph.hpp"

#include <algorithm>
#include <set>

namespace weightable {

Digraph::Digraph(std::vector<int> verts, std::vector<Edge> edges)
    : verts_(std::move(verts)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (int i = 0; i < (int)verts_.size(); i++) vindex_[verts_[i]] = i;
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    for (int i = 0; i < (int)edges_.size(); i++) {
        const Edge& e = edges_[i];
        if (eindex_.count(e.id)) throw error("duplicate edge id " + std::to_string(e.id));
        auto t = vindex_.find(e.tail), h = vindex_.find(e.head);
        if (t == vindex_.end() || h == vindex_.end())
            throw error("edge " + std::to_string(e.id) + " references missing vertex");
        eindex_[e.id] = i;
        out_[t->second].push_back(e.id);
        in_[h->second].push_back(e.id);
    }
}

const Edge& Digraph::edge(int id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw error("no edge " + std::to_string(id));
    return edges_[it->second];
}

const std::vector<int>& Digraph::out(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw error("no vertex " + std::to_string(v));
    return out_[it->second];
}

const std::vector<int>& Digraph::in(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw error("no vertex " + std::to_string(v));
    return in_[it->second];
}

int Digraph::max_vertex_id() const { return verts_.empty() ? -1 : verts_.back(); }
int Digraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

bool Digraph::eq_edges(const Digraph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); i++) {
        if (edges_[i].id != o.edges_[i].id || edges_[i].tail != o.edges_[i].tail ||
            edges_[i].head != o.edges_[i].head)
            return false;
    }
    return true;
}

Digraph Digraph::induced(const std::vector<int>& vs) const {
    std::set<int> keep(vs.begin(), vs.end());
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (keep.count(e.tail) && keep.count(e.head)) es.push_back(e);
    return Digraph(std::vector<int>(keep.begin(), keep.end()), es);
}

Digraph Digraph::without_edges(const std::vector<int>& ids) const {
    std::set<int> drop(ids.begin(), ids.end());
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!drop.count(e.id)) es.push_back(e);
    return Digraph(verts_, es);
}

Digraph Digraph::with_edges(const std::vector<Edge>& more) const {
    std::vector<Edge> es = edges_;
    es.insert(es.end(), more.begin(), more.end());
    return Digraph(verts_, es);
}

Digraph Digraph::with_vertex(int v) const {
    std::vector<int> vs = verts_;
    vs.push_back(v);
    return Digraph(vs, edges_);
}

// ---------------------------------------------------------------- connectivity

std::vector<std::vector<int>> weak_components(const Digraph& g) {
    std::map<int, int> comp;
    std::vector<std::vector<int>> out;
    for (int v : g.vertices()) {
        if (comp.count(v)) continue;
        std::vector<int> stack{v}, members;
        comp[v] = (int)out.size();
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            auto visit = [&](int w) {
                if (!comp.count(w)) {
                    comp[w] = (int)out.size();
                    stack.push_back(w);
                }
            };
            for (int id : g.out(u)) visit(g.edge(id).head);
            for (int id : g.in(u)) visit(g.edge(id).tail);
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

bool is_weakly_connected(const Digraph& g) { return weak_components(g).size() <= 1; }

// Iterative Tarjan. Components come out in reverse topological order.
std::vector<std::vector<int>> strong_components(const Digraph& g) {
    std::map<int, int> index, low;
    std::map<int, bool> onstack;
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        size_t next;
    };
    for (int root : g.vertices()) {
        if (index.count(root)) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& outs = g.out(f.v);
            if (f.next < outs.size()) {
                int w = g.edge(outs[f.next++]).head;
                if (!index.count(w)) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = true;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        onstack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(comp);
                }
            }
        }
    }
    return comps;
}

bool is_strongly_connected(const Digraph& g) {
    if (g.n() <= 1) return true;
    return strong_components(g).size() == 1;
}

namespace {

Digraph delete_vertices(const Digraph& g, const std::vector<int>& del) {
    std::set<int> drop(del.begin(), del.end());
    std::vector<int> vs;
    for (int v : g.vertices())
        if (!drop.count(v)) vs.push_back(v);
    return g.induced(vs);
}

// Underlying-graph k-connectivity per definition: at least k+1 vertices and
// no cutset of size < k. Only needed up to k = 3.
bool is_k_weak(const Digraph& g, int k) {
    if (g.n() < k + 1) return false;
    if (!is_weakly_connected(g)) return false;
    if (k == 1) return true;
    const auto& vs = g.vertices();
    if (k >= 2) {
        for (int v : vs)
            if (!is_weakly_connected(delete_vertices(g, {v}))) return false;
    }
    if (k >= 3) {
        for (size_t i = 0; i < vs.size(); i++)
            for (size_t j = i + 1; j < vs.size(); j++)
                if (!is_weakly_connected(delete_vertices(g, {vs[i], vs[j]}))) return false;
    }
    return true;
}

bool is_k_strong(const Digraph& g, int k) {
    if (k <= 1) return is_strongly_connected(g);
    if (g.n() < k + 1) return false;
    for (int v : g.vertices())
        if (!is_strongly_connected(delete_vertices(g, {v}))) return false;
    return true;
}

}  // namespace

ConnectivityReport connectivity(const Digraph& g) {
    ConnectivityReport r;
    r.weak_components = weak_components(g);
    r.strong_components = strong_components(g);
    r.is_1weak = r.weak_components.size() <= 1;
    r.is_1strong = g.n() <= 1 || r.strong_components.size() == 1;
    r.weak_k = 0;
    for (int k = 1; k <= 3; k++)
        if (is_k_weak(g, k)) r.weak_k = k;
    r.strong_k = 0;
    if (r.is_1strong && g.n() >= 1) r.strong_k = 1;
    if (is_k_strong(g, 2)) r.strong_k = 2;

    std::map<int, int> comp_of;
    for (int i = 0; i < (int)r.strong_components.size(); i++)
        for (int v : r.strong_components[i]) comp_of[v] = i;
    std::set<std::pair<int, int>> arcs;
    for (const Edge& e : g.edges()) {
        int a = comp_of[e.tail], b = comp_of[e.head];
        if (a != b) arcs.insert({a, b});
    }
    r.condensation_arcs.assign(arcs.begin(), arcs.end());
    return r;
}

// ----------------------------------------------------------------- surgeries

std::pair<std::vector<Digraph>, SurgeryMap> reduce_to_strong_parts(const Digraph& g) {
    auto comps = strong_components(g);
    std::map<int, int> comp_of;
    for (int i = 0; i < (int)comps.size(); i++)
        for (int v : comps[i]) comp_of[v] = i;

    std::vector<std::vector<Edge>> part_edges(comps.size());
    SurgeryMap map;
    for (const Edge& e : g.edges()) {
        if (comp_of[e.tail] == comp_of[e.head]) {
            part_edges[comp_of[e.tail]].push_back(e);
            map.edge_to[e.id] = e.id;
        } else {
            map.forced_num[e.id] = 0;
        }
    }
    for (int v : g.vertices()) map.vertex_to[v] = v;

    std::vector<Digraph> parts;
    for (int i = 0; i < (int)comps.size(); i++) parts.emplace_back(comps[i], part_edges[i]);
    return {parts, map};
}

std::pair<Digraph, SurgeryMap> simplify(const Digraph& g) {
    SurgeryMap map;
    for (int v : g.vertices()) map.vertex_to[v] = v;
    std::map<std::pair<int, int>, int> rep;  // (tail, head) -> representative edge id
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {  // ascending id, so the first seen is the smallest
        if (e.tail == e.head) {
            map.forced_num[e.id] = 1;
            continue;
        }
        auto key = std::make_pair(e.tail, e.head);
        auto it = rep.find(key);
        if (it == rep.end()) {
            rep[key] = e.id;
            es.push_back(e);
            map.edge_to[e.id] = e.id;
        } else {
            map.edge_to[e.id] = it->second;
        }
    }
    return {Digraph(g.vertices(), es), map};
}

bool is_singular_edge(const Digraph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    if (e.tail == e.head) return false;
    return g.in_deg(e.head) == 1 || g.out_deg(e.tail) == 1;
}

std::pair<Digraph, SurgeryMap> butterfly_contract(const Digraph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    if (e.tail == e.head) throw precondition_error("Loop", "cannot contract a loop");
    if (!is_singular_edge(g, edge_id))
        throw precondition_error("NotSingular", "edge " + std::to_string(edge_id) +
                                                    " is not the unique in-edge of its head nor the "
                                                    "unique out-edge of its tail");
    int keep = std::min(e.tail, e.head);
    int gone = std::max(e.tail, e.head);

    SurgeryMap map;
    for (int v : g.vertices()) map.vertex_to[v] = (v == gone) ? keep : v;
    map.forced_num[edge_id] = 0;

    std::vector<int> vs;
    for (int v : g.vertices())
        if (v != gone) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        if (f.id == edge_id) continue;
        Edge ne = f;
        ne.tail = map.vertex_to[f.tail];
        ne.head = map.vertex_to[f.head];
        es.push_back(ne);
        map.edge_to[f.id] = f.id;
    }
    return {Digraph(vs, es), map};
}

std::pair<Digraph, SurgeryMap> squish(const Digraph& g, const std::vector<int>& a) {
    std::set<int> aset(a.begin(), a.end());
    for (int v : a)
        if (!g.has_vertex(v)) throw precondition_error("BadSet", "squish set has foreign vertex");
    if (aset.empty() || (int)aset.size() >= g.n())
        throw precondition_error("BadSet", "squish set must be a nonempty proper vertex subset");

    int nv = g.max_vertex_id() + 1;
    SurgeryMap map;
    for (int v : g.vertices()) map.vertex_to[v] = aset.count(v) ? nv : v;

    std::vector<int> vs{nv};
    for (int v : g.vertices())
        if (!aset.count(v)) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        bool t = aset.count(e.tail) != 0, h = aset.count(e.head) != 0;
        if (t && h) continue;  // internal edges are deleted, not contracted
        es.push_back(Edge{e.id, t ? nv : e.tail, h ? nv : e.head});
        map.edge_to[e.id] = e.id;
    }
    return {Digraph(vs, es), map};
}

}  // namespace weightable
