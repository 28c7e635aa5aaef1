#include "weightable/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weightable {

namespace {

std::map<int, int> positions(const Dicycle& c) {
    std::map<int, int> pos;
    for (int i = 0; i < (int)c.verts.size(); i++) pos[c.verts[i]] = i;
    return pos;
}

bool in_order_pos(const std::map<int, int>& pos, int len, int u, int v, int w) {
    auto iu = pos.find(u), iv = pos.find(v), iw = pos.find(w);
    if (iu == pos.end() || iv == pos.end() || iw == pos.end())
        throw precondition_error("NotOnCycle", "triple vertex not on cycle");
    int dv = ((iv->second - iu->second) % len + len) % len;
    int dw = ((iw->second - iu->second) % len + len) % len;
    return dv < dw;
}

}  // namespace

bool triple_in_order(const Dicycle& c, int u, int v, int w) {
    if (u == v || v == w || u == w) throw precondition_error("NotOnCycle", "triple must be distinct");
    return in_order_pos(positions(c), (int)c.verts.size(), u, v, w);
}

bool verify_bad_triple(const Digraph& g, const BadTriple& t) {
    try {
        Dicycle c1 = make_dicycle(g, t.c1.edges);
        Dicycle c2 = make_dicycle(g, t.c2.edges);
        return triple_in_order(c1, t.u, t.v, t.w) && triple_in_order(c2, t.w, t.v, t.u);
    } catch (const error&) {
        return false;
    }
}

std::optional<BadTriple> find_bad_triple(const Digraph& g, long long cap) {
    auto cycles = enumerate_dicycles(g, cap);
    std::sort(cycles.begin(), cycles.end(), [](const Dicycle& a, const Dicycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.edges < b.edges;
    });
    std::vector<std::vector<int>> vsets(cycles.size());
    std::vector<std::map<int, int>> pos(cycles.size());
    for (size_t i = 0; i < cycles.size(); i++) {
        vsets[i] = cycles[i].verts;
        std::sort(vsets[i].begin(), vsets[i].end());
        pos[i] = positions(cycles[i]);
    }
    for (size_t i = 0; i < cycles.size(); i++) {
        for (size_t j = i + 1; j < cycles.size(); j++) {
            std::vector<int> common;
            std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                                  std::back_inserter(common));
            if (common.size() < 3) continue;
            int li = cycles[i].length(), lj = cycles[j].length();
            for (size_t a = 0; a < common.size(); a++)
                for (size_t b = a + 1; b < common.size(); b++)
                    for (size_t c = b + 1; c < common.size(); c++) {
                        bool oi = in_order_pos(pos[i], li, common[a], common[b], common[c]);
                        bool oj = in_order_pos(pos[j], lj, common[a], common[b], common[c]);
                        if (oi == oj) continue;
                        BadTriple t;
                        t.u = common[a];
                        t.v = common[b];
                        t.w = common[c];
                        t.c1 = oi ? cycles[i] : cycles[j];
                        t.c2 = oi ? cycles[j] : cycles[i];
                        return t;
                    }
        }
    }
    return std::nullopt;
}

bool is_weightable_oracle(const Digraph& g, long long cap) {
    auto [parts, map] = reduce_to_strong_parts(g);
    for (const Digraph& part : parts)
        if (find_bad_triple(part, cap)) return false;
    return true;
}

// ------------------------------------------------------------ double cycles

namespace {

// The intersection of two dicycles as a subdigraph (all common vertices and
// edges); returns its vertex sequence when that subdigraph is a dipath.
std::optional<std::vector<int>> intersection_path(const Dicycle& a, const Dicycle& b) {
    std::set<int> va(a.verts.begin(), a.verts.end());
    std::set<int> vb(b.verts.begin(), b.verts.end());
    std::vector<int> common_v;
    for (int v : va)
        if (vb.count(v)) common_v.push_back(v);
    if (common_v.empty()) return std::nullopt;

    std::set<int> eb(b.edges.begin(), b.edges.end());
    std::vector<int> common_e;
    for (int e : a.edges)
        if (eb.count(e)) common_e.push_back(e);
    if (common_e.size() + 1 != common_v.size()) return std::nullopt;
    if (common_e.empty()) return std::vector<int>{common_v[0]};

    // chain the common edges using a's traversal structure
    std::map<int, int> tail_of, head_of;  // vertex -> edge id in the chain
    std::map<int, std::pair<int, int>> ends;
    for (size_t i = 0; i < a.edges.size(); i++) {
        if (!eb.count(a.edges[i])) continue;
        int t = a.verts[i];
        int h = a.verts[(i + 1) % a.verts.size()];
        ends[a.edges[i]] = {t, h};
    }
    for (auto& [e, th] : ends) {
        if (tail_of.count(th.first) || head_of.count(th.second)) return std::nullopt;
        tail_of[th.first] = e;
        head_of[th.second] = e;
    }
    int start = -1;
    for (int v : common_v)
        if (tail_of.count(v) && !head_of.count(v)) {
            if (start != -1) return std::nullopt;
            start = v;
        }
    if (start == -1) return std::nullopt;
    std::vector<int> seq{start};
    std::set<int> seen{start};
    int cur = start;
    while (tail_of.count(cur)) {
        cur = ends[tail_of[cur]].second;
        if (!seen.insert(cur).second) return std::nullopt;
        seq.push_back(cur);
    }
    if (seq.size() != common_v.size()) return std::nullopt;
    for (int v : seq)
        if (!vb.count(v)) return std::nullopt;
    return seq;
}

// Edge ids along c from vertex `from` to vertex `to` (empty when equal).
std::vector<int> arc_of(const Dicycle& c, int from, int to) {
    auto pos = positions(c);
    int len = (int)c.verts.size();
    auto pf = pos.find(from), pt = pos.find(to);
    if (pf == pos.end() || pt == pos.end())
        throw precondition_error("NotOnCycle", "arc endpoint not on cycle");
    std::vector<int> out;
    for (int i = pf->second; i != pt->second; i = (i + 1) % len) out.push_back(c.edges[i]);
    return out;
}

}  // namespace

bool verify_double_cycle(const Digraph& h, const DoubleCycleWitness& w) {
    int k = w.k;
    if (k < 3 || (int)w.cycles.size() != k) return false;
    std::vector<Dicycle> cyc;
    try {
        for (const Dicycle& c : w.cycles) cyc.push_back(make_dicycle(h, c.edges));
    } catch (const error&) {
        return false;
    }
    std::map<int, int> count;
    for (const Dicycle& c : cyc)
        for (int v : c.verts) count[v]++;
    for (auto& [v, n] : count)
        if (n > 2) return false;

    for (int i = 0; i < k; i++) {
        int j = (i + 1) % k;
        if (!intersection_path(cyc[i], cyc[j])) return false;
    }
    for (int i = 0; i < k; i++)
        for (int j = i + 2; j < k; j++) {
            if (i == 0 && j == k - 1) continue;  // consecutive around the ring
            std::set<int> vi(cyc[i].verts.begin(), cyc[i].verts.end());
            for (int v : cyc[j].verts)
                if (vi.count(v)) return false;
        }
    return true;
}

BadTriple double_cycle_bad_triple(const Digraph& h, const DoubleCycleWitness& w) {
    if (!verify_double_cycle(h, w))
        throw precondition_error("BadWitness", "not a weak k-double-cycle");
    int k = w.k;
    std::vector<Dicycle> cyc;
    for (const Dicycle& c : w.cycles) cyc.push_back(make_dicycle(h, c.edges));

    // s[i] = intersection path of C_i and C_{i+1} (0-based ring)
    std::vector<std::vector<int>> s(k);
    for (int i = 0; i < k; i++) s[i] = *intersection_path(cyc[i], cyc[(i + 1) % k]);
    auto last = [&](int i) { return s[i].back(); };
    auto first = [&](int i) { return s[i].front(); };

    // forward cycle: arcs C_i from last(s[i-1]) to last(s[i])
    std::vector<int> fwd;
    for (int i = 0; i < k; i++) {
        auto arc = arc_of(cyc[i], last((i - 1 + k) % k), last(i));
        fwd.insert(fwd.end(), arc.begin(), arc.end());
    }
    // reverse cycle: from last(s[k-1]) through C_{k-1}..C_2 (via first
    // vertices of their shared paths) to last(s[1]), then back through C_1, C_0
    std::vector<int> rev;
    if (k == 3) {
        auto a = arc_of(cyc[2], last(2), last(1));
        rev.insert(rev.end(), a.begin(), a.end());
    } else {
        auto a = arc_of(cyc[k - 1], last(k - 1), first(k - 2));
        rev.insert(rev.end(), a.begin(), a.end());
        for (int j = k - 2; j >= 3; j--) {
            auto b = arc_of(cyc[j], first(j), first(j - 1));
            rev.insert(rev.end(), b.begin(), b.end());
        }
        auto c = arc_of(cyc[2], first(2), last(1));
        rev.insert(rev.end(), c.begin(), c.end());
    }
    auto q2 = arc_of(cyc[1], last(1), last(0));
    rev.insert(rev.end(), q2.begin(), q2.end());
    auto q1 = arc_of(cyc[0], last(0), last(k - 1));
    rev.insert(rev.end(), q1.begin(), q1.end());

    BadTriple t;
    t.u = last(k - 1);
    t.v = last(0);
    t.w = last(1);
    t.c1 = make_dicycle(h, fwd);
    t.c2 = make_dicycle(h, rev);
    if (!triple_in_order(t.c1, t.u, t.v, t.w) || !triple_in_order(t.c2, t.w, t.v, t.u))
        throw error("double-cycle triple construction failed order check");
    return t;
}

}  // namespace weightable
