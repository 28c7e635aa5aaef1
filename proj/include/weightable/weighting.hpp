#ifndef WEIGHTABLE_WEIGHTING_HPP
#define WEIGHTABLE_WEIGHTING_HPP

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include "weightable/cycles.hpp"
#include "weightable/digraph.hpp"

namespace weightable {

using Rat = mpq_class;

// Exact-rational edge weight map, total over E(G).
struct Weighting {
    std::map<int, Rat> w;

    const Rat& at(int edge_id) const;
    bool is_zero_one() const;
    Rat sum_over(const std::vector<int>& edge_ids) const;
};

Weighting zero_weighting(const Digraph& g);

// c_X: +1 on edges leaving X, -1 on edges entering X, 0 otherwise. Adding
// any multiple of it to a weighting changes no dicycle sum.
struct PotentialShift {
    std::set<int> x;
    int delta(const Digraph& g, int edge_id) const;
};

void apply_shift(const Digraph& g, Weighting& w, const PotentialShift& s, const Rat& times);

// Triangular solve over an ear basis: all weights start at 0 and the
// designated edge of each cycle is set so the cycle sums to 1. If g is
// weightable the result is a weighting of every dicycle; otherwise it is
// merely feasible for the basis cycles.
Weighting find_weighting(const Digraph& g, const EarBasis& b);
Weighting find_weighting(const Digraph& g);

// True iff w . c_i = 1 for every basis cycle. For a digraph known to be
// weightable this certifies w is a weighting.
bool verify_weighting_basis(const Digraph& g, const EarBasis& b, const Weighting& w);

// Exact check on every elementary dicycle (full enumeration under cap).
bool verify_weighting_oracle(const Digraph& g, const Weighting& w, long long cap = kDefaultCycleCap);

// Statistics from the 0/1 conversion, exposed for tests.
struct To01Stats {
    std::vector<mpz_class> negative_mass;  // phase-2 potential after each iteration
};

// Converts a weighting to a 0/1-valued one: first zero out a spanning tree
// with potential shifts (forcing all weights integral), then repeatedly push
// up the most negative edge. Requires w to be a genuine weighting.
Weighting to_01(const Digraph& g, const Weighting& w, To01Stats* stats = nullptr);

enum class NormalizeMode { heads_one, tails_one };

// Reshapes a 0/1 weighting so every in-edge of u has weight 1 and every
// out-edge weight 0 (heads_one), or the reverse (tails_one). Requires a
// 1-strong digraph.
Weighting normalize_at_vertex(const Digraph& g, const Weighting& w01, int u, NormalizeMode mode);

// w . c for a cycle characteristic vector; must be an integer when w is a
// weighting of a 1-strong digraph.
mpz_class cycle_integrality(const Digraph& g, const Weighting& w, const CharVector& c);

}  // namespace weightable

#endif
