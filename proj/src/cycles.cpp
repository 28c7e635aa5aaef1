#include "weightable/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace weightable {

bool Dicycle::contains_vertex(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

Dicycle make_dicycle(const Digraph& g, std::vector<int> edge_ids) {
    if (edge_ids.empty()) throw precondition_error("NotACycle", "empty edge list");
    // rotate smallest edge id first
    size_t best = 0;
    for (size_t i = 1; i < edge_ids.size(); i++)
        if (edge_ids[i] < edge_ids[best]) best = i;
    std::rotate(edge_ids.begin(), edge_ids.begin() + best, edge_ids.end());

    Dicycle c;
    c.edges = edge_ids;
    std::set<int> seen;
    for (size_t i = 0; i < edge_ids.size(); i++) {
        const Edge& e = g.edge(edge_ids[i]);
        const Edge& next = g.edge(edge_ids[(i + 1) % edge_ids.size()]);
        if (e.head != next.tail) throw precondition_error("NotACycle", "edges do not chain");
        if (!seen.insert(e.tail).second) throw precondition_error("NotACycle", "repeated vertex");
        c.verts.push_back(e.tail);
    }
    return c;
}

CharVector CharVector::negated() const {
    CharVector n;
    for (auto& [e, s] : entries) n.entries[e] = -s;
    return n;
}

CharVector characteristic_vector(const Dicycle& c) {
    CharVector v;
    for (int e : c.edges) v.entries[e] = 1;
    return v;
}

CharVector characteristic_vector(const Digraph& g, const std::vector<std::pair<int, bool>>& walk) {
    if (walk.empty()) throw precondition_error("NotACycle", "empty walk");
    CharVector v;
    std::set<int> verts_seen;
    int cur = -1;
    for (size_t i = 0; i < walk.size(); i++) {
        auto [id, fwd] = walk[i];
        const Edge& e = g.edge(id);
        int from = fwd ? e.tail : e.head;
        int to = fwd ? e.head : e.tail;
        if (i == 0)
            cur = from;
        else if (cur != from)
            throw precondition_error("NotACycle", "walk does not chain");
        if (!verts_seen.insert(from).second) throw precondition_error("NotACycle", "repeated vertex");
        if (v.entries.count(id)) throw precondition_error("NotACycle", "repeated edge");
        v.entries[id] = fwd ? 1 : -1;
        cur = to;
    }
    int start = walk[0].second ? g.edge(walk[0].first).tail : g.edge(walk[0].first).head;
    if (cur != start) throw precondition_error("NotACycle", "walk does not close");
    return v;
}

// ------------------------------------------------------------- enumeration

namespace {

// Johnson-style elementary circuit search, adapted to multigraphs: loops are
// length-one cycles and parallel edges yield distinct cycles.
struct CircuitFinder {
    const Digraph& g;
    long long cap;
    std::vector<int> verts;           // ascending
    std::map<int, int> pos;           // vertex -> rank
    std::vector<Dicycle> found;
    std::set<int> blocked;
    std::map<int, std::set<int>> block_map;
    std::vector<int> path_edges;
    int start = 0;

    CircuitFinder(const Digraph& gg, long long c) : g(gg), cap(c) {
        verts = g.vertices();
        for (int i = 0; i < (int)verts.size(); i++) pos[verts[i]] = i;
    }

    void emit(std::vector<int> edges) {
        if ((long long)found.size() >= cap) throw cap_exceeded(cap);
        found.push_back(make_dicycle(g, std::move(edges)));
    }

    void unblock(int v) {
        blocked.erase(v);
        auto it = block_map.find(v);
        if (it == block_map.end()) return;
        auto ws = it->second;
        it->second.clear();
        for (int w : ws)
            if (blocked.count(w)) unblock(w);
    }

    bool circuit(int v) {
        bool closed = false;
        blocked.insert(v);
        for (int id : g.out(v)) {
            const Edge& e = g.edge(id);
            if (e.head == e.tail) continue;  // loops handled separately
            if (pos[e.head] < start) continue;
            if (e.head == verts[start]) {
                path_edges.push_back(id);
                emit(path_edges);
                path_edges.pop_back();
                closed = true;
            } else if (!blocked.count(e.head)) {
                path_edges.push_back(id);
                if (circuit(e.head)) closed = true;
                path_edges.pop_back();
            }
        }
        if (closed)
            unblock(v);
        else
            for (int id : g.out(v)) {
                const Edge& e = g.edge(id);
                if (e.head == e.tail || pos[e.head] < start) continue;
                block_map[e.head].insert(v);
            }
        return closed;
    }

    std::vector<Dicycle> run() {
        for (const Edge& e : g.edges())
            if (e.tail == e.head) emit({e.id});
        for (start = 0; start < (int)verts.size(); start++) {
            blocked.clear();
            block_map.clear();
            path_edges.clear();
            circuit(verts[start]);
        }
        return found;
    }
};

}  // namespace

std::vector<Dicycle> enumerate_dicycles(const Digraph& g, long long cap) {
    if (cap < 1) throw precondition_error("BadParams", "cap must be >= 1");
    CircuitFinder cf(g, cap);
    auto cycles = cf.run();
    std::sort(cycles.begin(), cycles.end(), [](const Dicycle& a, const Dicycle& b) {
        std::vector<int> sa = a.edges, sb = b.edges;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa < sb;
    });
    return cycles;
}

// --------------------------------------------------------------- ear basis

namespace {

// Shortest dipath from any vertex of `from` to `target` inside the edge set
// `allowed`, ties broken by smaller edge ids; empty if target in from.
std::optional<std::vector<int>> bfs_path(const Digraph& g, const std::set<int>& from, int target,
                                         const std::set<int>& allowed_edges) {
    if (from.count(target)) return std::vector<int>{};
    std::map<int, int> via;  // vertex -> edge id used to reach it
    std::deque<int> queue(from.begin(), from.end());
    std::set<int> seen = from;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int id : g.out(v)) {
            if (!allowed_edges.count(id)) continue;
            int w = g.edge(id).head;
            if (seen.count(w)) continue;
            seen.insert(w);
            via[w] = id;
            if (w == target) {
                std::vector<int> path;
                int cur = w;
                while (!from.count(cur)) {
                    path.push_back(via[cur]);
                    cur = g.edge(via[cur]).tail;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

}  // namespace

EarBasis ear_basis(const Digraph& g) {
    if (g.m() == 0) throw precondition_error("EmptyGraph", "ear basis needs at least one edge");
    if (!is_strongly_connected(g)) throw precondition_error("NotStrong", "ear basis needs a 1-strong digraph");

    std::set<int> all_edges;
    for (const Edge& e : g.edges()) all_edges.insert(e.id);

    // C0: shortest dicycle through the smallest vertex that carries an edge.
    int v0 = -1;
    for (int v : g.vertices())
        if (g.out_deg(v) > 0) {
            v0 = v;
            break;
        }
    std::vector<int> c0_edges;
    {
        // try each out-edge of v0 in id order, close with a shortest path back
        std::optional<std::vector<int>> best;
        for (int id : g.out(v0)) {
            const Edge& e = g.edge(id);
            if (e.head == v0) {
                best = std::vector<int>{id};  // loop or digon edge closing immediately
                break;
            }
            auto back = bfs_path(g, {e.head}, v0, all_edges);
            if (!back) continue;
            std::vector<int> cand{id};
            cand.insert(cand.end(), back->begin(), back->end());
            if (!best || cand.size() < best->size()) best = cand;
        }
        if (!best) throw precondition_error("NotStrong", "no dicycle through start vertex");
        c0_edges = *best;
    }

    EarBasis basis;
    basis.cycles.push_back(make_dicycle(g, c0_edges));
    basis.new_edges.push_back(c0_edges);
    basis.designated.push_back(*std::min_element(c0_edges.begin(), c0_edges.end()));

    std::set<int> h_verts(basis.cycles[0].verts.begin(), basis.cycles[0].verts.end());
    std::set<int> h_edges(c0_edges.begin(), c0_edges.end());

    while ((int)h_edges.size() < g.m()) {
        // BFS over non-H edges from H: shortest ear, parents by smallest edge id.
        // Level 0 candidates are single edges from H back to H.
        std::map<int, int> via;      // vertex outside H -> edge id
        std::map<int, int> dist;
        std::deque<int> queue;
        std::optional<std::vector<int>> ear;

        auto path_to = [&](int v) {
            std::vector<int> p;
            int cur = v;
            while (!h_verts.count(cur)) {
                p.push_back(via[cur]);
                cur = g.edge(via[cur]).tail;
            }
            std::reverse(p.begin(), p.end());
            return p;
        };

        // single-edge ears first (includes loops at H vertices)
        int best_single = -1;
        for (int v : g.vertices()) {
            if (!h_verts.count(v)) continue;
            for (int id : g.out(v)) {
                if (h_edges.count(id)) continue;
                if (h_verts.count(g.edge(id).head))
                    if (best_single == -1 || id < best_single) best_single = id;
            }
        }
        if (best_single != -1) {
            ear = std::vector<int>{best_single};
        } else {
            for (int v : g.vertices()) {
                if (!h_verts.count(v)) continue;
                for (int id : g.out(v)) {
                    if (h_edges.count(id)) continue;
                    int w = g.edge(id).head;
                    if (h_verts.count(w)) continue;
                    if (!dist.count(w) || (dist[w] == 1 && id < via[w])) {
                        dist[w] = 1;
                        via[w] = id;
                    }
                }
            }
            std::vector<std::pair<int, int>> frontier;  // (via edge, vertex), sorted
            for (auto& [w, d] : dist) frontier.push_back({via[w], w});
            std::sort(frontier.begin(), frontier.end());
            for (auto& [e, w] : frontier) queue.push_back(w);

            while (!queue.empty() && !ear) {
                int v = queue.front();
                queue.pop_front();
                std::vector<std::pair<int, int>> nexts;
                for (int id : g.out(v)) {
                    if (h_edges.count(id)) continue;
                    int w = g.edge(id).head;
                    if (h_verts.count(w)) {
                        auto p = path_to(v);
                        p.push_back(id);
                        ear = p;
                        break;
                    }
                    if (!dist.count(w)) nexts.push_back({id, w});
                }
                if (ear) break;
                std::sort(nexts.begin(), nexts.end());
                for (auto& [id, w] : nexts) {
                    if (dist.count(w)) continue;
                    dist[w] = dist[v] + 1;
                    via[w] = id;
                    queue.push_back(w);
                }
            }
        }
        if (!ear) throw precondition_error("NotStrong", "no ear found; digraph not 1-strong");

        // Close the ear into a dicycle with a dipath of the current H.
        int ear_tail = g.edge(ear->front()).tail;
        int ear_head = g.edge(ear->back()).head;
        std::vector<int> cyc = *ear;
        if (ear_head != ear_tail) {
            auto close = bfs_path(g, {ear_head}, ear_tail, h_edges);
            if (!close) throw precondition_error("NotStrong", "current subdigraph not 1-strong");
            cyc.insert(cyc.end(), close->begin(), close->end());
        }
        basis.cycles.push_back(make_dicycle(g, cyc));
        basis.new_edges.push_back(*ear);
        basis.designated.push_back(*std::min_element(ear->begin(), ear->end()));
        for (int id : *ear) {
            h_edges.insert(id);
            h_verts.insert(g.edge(id).tail);
            h_verts.insert(g.edge(id).head);
        }
    }
    return basis;
}

bool check_ear_basis(const Digraph& g, const EarBasis& b) {
    if (b.cycles.empty()) return false;
    if (b.cycles.size() != b.new_edges.size() || b.cycles.size() != b.designated.size()) return false;
    std::set<int> covered;
    for (size_t i = 0; i < b.cycles.size(); i++) {
        std::set<int> ce(b.cycles[i].edges.begin(), b.cycles[i].edges.end());
        bool has_designated = false;
        for (int id : b.new_edges[i]) {
            if (!covered.insert(id).second) return false;  // new edge claimed twice
            if (!ce.count(id) && i > 0) return false;      // ear edges must lie on their cycle
            if (id == b.designated[i]) has_designated = true;
        }
        if (!has_designated) return false;
        // designated edge must be absent from all earlier cycles
        for (size_t j = 0; j < i; j++)
            for (int id : b.cycles[j].edges)
                if (id == b.designated[i]) return false;
    }
    return (int)covered.size() == g.m();
}

std::vector<mpz_class> express_in_basis(const CharVector& c, const EarBasis& b) {
    std::map<int, mpz_class> residual;
    for (auto& [e, s] : c.entries) residual[e] = s;
    int n = (int)b.cycles.size();
    std::vector<mpz_class> lambda(n, 0);
    for (int i = n - 1; i >= 0; i--) {
        auto it = residual.find(b.designated[i]);
        mpz_class coef = (it == residual.end()) ? 0 : it->second;
        lambda[i] = coef;
        if (coef != 0) {
            for (int e : b.cycles[i].edges) {
                residual[e] -= coef;
                if (residual[e] == 0) residual.erase(e);
            }
        }
    }
    if (!residual.empty())
        throw precondition_error("NotInSpan", "vector is not an integer combination of the ear basis");
    return lambda;
}

}  // namespace weightable
