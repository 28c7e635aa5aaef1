#ifndef WEIGHTABLE_ORACLE_HPP
#define WEIGHTABLE_ORACLE_HPP

#include <optional>

#include "weightable/cycles.hpp"
#include "weightable/digraph.hpp"

namespace weightable {

// Two dicycles visiting {u,v,w} in opposite cyclic orders: (u,v,w) is in
// order in c1 and (w,v,u) in order in c2.
struct BadTriple {
    int u, v, w;
    Dicycle c1, c2;
};

// True iff the dipath of c from u to v does not pass through w.
bool triple_in_order(const Dicycle& c, int u, int v, int w);

// Scans all dicycle pairs (sorted by length, then edge ids) and all shared
// vertex triples; returns the first disagreeing triple found, or nothing.
std::optional<BadTriple> find_bad_triple(const Digraph& g, long long cap = kDefaultCycleCap);

// Ground truth: reduce to strong parts, then no part may contain a bad
// triple. Exponential in the worst case; cap overruns surface as
// cap_exceeded, never as a verdict.
bool is_weightable_oracle(const Digraph& g, long long cap = kDefaultCycleCap);

// k >= 3 dicycles in a ring: consecutive ones meet in a dipath, each vertex
// lies on at most two, and non-consecutive ones are vertex-disjoint.
struct DoubleCycleWitness {
    int k = 0;
    std::vector<Dicycle> cycles;
};

// Checks every clause of the witness definition against h. A passing
// witness certifies that h (and any supergraph) is not weightable.
bool verify_double_cycle(const Digraph& h, const DoubleCycleWitness& w);

// Constructive direction: from a verified witness, produce the explicit bad
// triple on the last vertices of three consecutive intersection paths.
BadTriple double_cycle_bad_triple(const Digraph& h, const DoubleCycleWitness& w);

bool verify_bad_triple(const Digraph& g, const BadTriple& t);

}  // namespace weightable

#endif
