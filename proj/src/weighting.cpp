#include "weightable/weighting.hpp"

#include <algorithm>
#include <deque>

namespace weightable {

const Rat& Weighting::at(int edge_id) const {
    auto it = w.find(edge_id);
    if (it == w.end()) throw error("weighting has no entry for edge " + std::to_string(edge_id));
    return it->second;
}

bool Weighting::is_zero_one() const {
    for (auto& [e, v] : w)
        if (v != 0 && v != 1) return false;
    return true;
}

Rat Weighting::sum_over(const std::vector<int>& edge_ids) const {
    Rat s = 0;
    for (int e : edge_ids) s += at(e);
    return s;
}

Weighting zero_weighting(const Digraph& g) {
    Weighting w;
    for (const Edge& e : g.edges()) w.w[e.id] = 0;
    return w;
}

int PotentialShift::delta(const Digraph& g, int edge_id) const {
    const Edge& e = g.edge(edge_id);
    bool t = x.count(e.tail) != 0, h = x.count(e.head) != 0;
    if (t && !h) return 1;
    if (!t && h) return -1;
    return 0;
}

void apply_shift(const Digraph& g, Weighting& w, const PotentialShift& s, const Rat& times) {
    if (times == 0) return;
    for (const Edge& e : g.edges()) {
        int d = s.delta(g, e.id);
        if (d != 0) w.w[e.id] += times * d;
    }
}

Weighting find_weighting(const Digraph& g, const EarBasis& b) {
    Weighting w = zero_weighting(g);
    for (size_t i = 0; i < b.cycles.size(); i++) {
        Rat rest = 0;
        for (int e : b.cycles[i].edges)
            if (e != b.designated[i]) rest += w.w[e];
        w.w[b.designated[i]] = Rat(1) - rest;
    }
    return w;
}

Weighting find_weighting(const Digraph& g) { return find_weighting(g, ear_basis(g)); }

bool verify_weighting_basis(const Digraph& g, const EarBasis& b, const Weighting& w) {
    (void)g;
    for (const Dicycle& c : b.cycles)
        if (w.sum_over(c.edges) != 1) return false;
    return true;
}

bool verify_weighting_oracle(const Digraph& g, const Weighting& w, long long cap) {
    for (const Dicycle& c : enumerate_dicycles(g, cap))
        if (w.sum_over(c.edges) != 1) return false;
    return true;
}

namespace {

// BFS spanning tree of the underlying graph from the smallest vertex.
// Returns (parent vertex, connecting edge id, children) indexed by vertex.
struct SpanningTree {
    std::map<int, int> parent_edge;  // vertex -> edge id to parent (absent for root)
    std::vector<int> order;          // BFS order, root first
};

SpanningTree bfs_tree(const Digraph& g) {
    SpanningTree t;
    if (g.n() == 0) return t;
    std::set<int> seen;
    for (int root : g.vertices()) {
        if (seen.count(root)) continue;
        seen.insert(root);
        std::deque<int> q{root};
        t.order.push_back(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            std::vector<std::pair<int, int>> nbrs;  // (edge id, other end)
            for (int id : g.out(v)) nbrs.push_back({id, g.edge(id).head});
            for (int id : g.in(v)) nbrs.push_back({id, g.edge(id).tail});
            std::sort(nbrs.begin(), nbrs.end());
            for (auto& [id, w] : nbrs) {
                if (seen.count(w)) continue;
                seen.insert(w);
                t.parent_edge[w] = id;
                t.order.push_back(w);
                q.push_back(w);
            }
        }
    }
    return t;
}

// Vertex set of the subtree rooted at v (v plus descendants).
std::set<int> subtree_of(const Digraph& g, const SpanningTree& t, int v) {
    std::map<int, std::vector<int>> children;
    for (auto& [c, eid] : t.parent_edge) {
        const Edge& e = g.edge(eid);
        int p = (e.tail == c) ? e.head : e.tail;
        children[p].push_back(c);
    }
    std::set<int> out;
    std::deque<int> q{v};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        out.insert(u);
        for (int c : children[u]) q.push_back(c);
    }
    return out;
}

}  // namespace

Weighting to_01(const Digraph& g, const Weighting& w_in, To01Stats* stats) {
    // Work per strong component; edges between components lie on no dicycle
    // and are reset to 0.
    auto [parts, rmap] = reduce_to_strong_parts(g);
    Weighting out = zero_weighting(g);

    for (const Digraph& part : parts) {
        if (part.m() == 0) continue;
        Weighting w;
        for (const Edge& e : part.edges()) w.w[e.id] = w_in.at(e.id);

        // Phase 1: zero every spanning-tree edge by shifting the subtree
        // below it, leaf-upward. Each tree edge is crossed only by its own
        // subtree cut, so the zeros persist.
        SpanningTree tree = bfs_tree(part);
        for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
            int v = *it;
            auto pe = tree.parent_edge.find(v);
            if (pe == tree.parent_edge.end()) continue;
            const Edge& e = part.edge(pe->second);
            PotentialShift s{subtree_of(part, tree, v)};
            int d = s.delta(part, e.id);
            // d is +1 or -1; choose the multiple that cancels w(e)
            apply_shift(part, w, s, -w.w[e.id] / d);
        }
        for (auto& [eid, val] : w.w) {
            if (val.get_den() != 1)
                throw precondition_error("NotAWeighting",
                                         "non-integer weight after tree reduction; input was not a weighting");
        }

        // Phase 2: while some edge is negative, push from its head along
        // non-positive edges. The total negative mass strictly decreases.
        mpz_class prev_mass = -1;
        while (true) {
            mpz_class mass = 0;
            int bad = -1;
            for (const Edge& e : part.edges()) {
                if (w.w[e.id] < 0) {
                    mass += -w.w[e.id].get_num();
                    if (bad == -1) bad = e.id;
                }
            }
            if (stats && (bad != -1 || prev_mass != -1)) stats->negative_mass.push_back(mass);
            if (prev_mass != -1 && mass >= prev_mass)
                throw precondition_error("NotAWeighting", "negative mass failed to decrease");
            if (bad == -1) break;
            prev_mass = mass;

            // X = vertices reachable from the head along edges of weight <= 0
            std::set<int> x;
            std::deque<int> q{part.edge(bad).head};
            x.insert(part.edge(bad).head);
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int id : part.out(v)) {
                    if (w.w[id] > 0) continue;
                    int h = part.edge(id).head;
                    if (!x.count(h)) {
                        x.insert(h);
                        q.push_back(h);
                    }
                }
            }
            if (x.count(part.edge(bad).tail))
                throw precondition_error("NotAWeighting",
                                         "non-positive dicycle found; input was not a weighting");
            apply_shift(part, w, PotentialShift{x}, -1);
        }

        for (auto& [eid, val] : w.w) {
            if (val != 0 && val != 1)
                throw precondition_error("NotAWeighting", "conversion did not reach 0/1 weights");
            out.w[eid] = val;
        }
    }
    return out;
}

Weighting normalize_at_vertex(const Digraph& g, const Weighting& w01, int u, NormalizeMode mode) {
    if (!w01.is_zero_one()) throw precondition_error("NotZeroOne", "normalize needs a 0/1 weighting");
    if (!g.has_vertex(u)) throw error("no vertex " + std::to_string(u));
    if (!is_strongly_connected(g)) throw precondition_error("NotStrong", "normalize needs a 1-strong digraph");

    if (mode == NormalizeMode::tails_one) {
        // Reverse all edges, normalize heads_one there, map back.
        std::vector<Edge> rev;
        for (const Edge& e : g.edges()) rev.push_back({e.id, e.head, e.tail});
        Digraph gr(g.vertices(), rev);
        return normalize_at_vertex(gr, w01, u, NormalizeMode::heads_one);
    }

    Weighting w = w01;
    while (true) {
        // X = vertices reachable from u along weight-0 edges
        std::set<int> x{u};
        std::deque<int> q{u};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int id : g.out(v)) {
                if (w.w[id] != 0) continue;
                int h = g.edge(id).head;
                if (!x.count(h)) {
                    x.insert(h);
                    q.push_back(h);
                }
            }
        }
        if ((int)x.size() == g.n()) break;
        // every edge leaving X has weight 1, every edge entering weight 0;
        // shifting down grows X strictly
        for (const Edge& e : g.edges()) {
            bool t = x.count(e.tail) != 0, h = x.count(e.head) != 0;
            if (t && !h && w.w[e.id] != 1)
                throw precondition_error("NotZeroOne", "input is not a weighting");
            if (!t && h && w.w[e.id] != 0)
                throw precondition_error("NotZeroOne", "input is not a weighting");
        }
        apply_shift(g, w, PotentialShift{x}, -1);
    }
    // with X = V(G): in-edges of u close 0-paths into dicycles, so they carry
    // weight 1; out-edges lie on dicycles through an in-edge, so weight 0
    for (int id : g.in(u))
        if (w.w[id] != 1) throw precondition_error("NotZeroOne", "input is not a weighting");
    for (int id : g.out(u))
        if (g.edge(id).head != u && w.w[id] != 0)
            throw precondition_error("NotZeroOne", "input is not a weighting");
    return w;
}

mpz_class cycle_integrality(const Digraph& g, const Weighting& w, const CharVector& c) {
    (void)g;
    Rat dot = 0;
    for (auto& [e, s] : c.entries) dot += w.at(e) * s;
    if (dot.get_den() != 1)
        throw precondition_error("NonInteger", "cycle dot product is not an integer; w is not a weighting");
    return dot.get_num();
}

}  // namespace weightable
