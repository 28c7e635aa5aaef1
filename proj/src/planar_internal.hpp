#ifndef WEIGHTABLE_PLANAR_INTERNAL_HPP
#define WEIGHTABLE_PLANAR_INTERNAL_HPP

#include <set>

#include "weightable/planar.hpp"

namespace weightable::detail {

void trace_faces(Embedding& e);
void canonicalize_rotations(Embedding& e);

// Cyclic order of a bond's edges around its dual cycle.
std::vector<int> bond_dual_cycle(const Embedding& e, const std::set<int>& cut);

}  // namespace weightable::detail

#endif
