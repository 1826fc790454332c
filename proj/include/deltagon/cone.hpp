#pragma once

#include "deltagon/inequalities.hpp"

#include <string>
#include <vector>

namespace deltagon {

// Homogeneous system rows . x <= 0 in free coordinates.
struct ConeHRep {
  int dim = 0;
  RatMat rows;  // r x dim
  std::vector<std::string> names;
};

struct ConeVRep {
  std::vector<RatVec> rays;       // primitive integer, canonically sorted
  std::vector<RatVec> lineality;  // basis of the lineality space; empty iff pointed
};

struct IrredundanceResult {
  ConeHRep subsystem;                    // greedy minimal subsystem, original order
  std::vector<bool> redundant;           // per row: removable individually
  std::vector<bool> implicit_equality;   // per row: holds with equality on the cone
};

// Double description: extreme rays (and lineality basis if not pointed) of
// {x : rows . x <= 0}. Deterministic: dynamic insertion order picks the
// unprocessed row satisfied by the fewest current rays; output sorted.
ConeVRep extreme_rays(const ConeHRep& h);

// Per-row exact LP redundancy (conic Farkas against the other rows), plus a
// greedily reduced subsystem with the same solution set.
IrredundanceResult irredundant(const ConeHRep& h);

// Facet description of the cone spanned by the given generators (polar
// double description); meaningful for full-dimensional cones.
ConeHRep facets_from_generators(const ConeVRep& v, int dim);

// Does every solution of inner satisfy outer? (solutions(inner) subseteq
// solutions(outer), decided by V-rep of inner vs rows of outer.)
bool cone_contains(const ConeHRep& outer, const ConeHRep& inner);
bool cones_equal(const ConeHRep& a, const ConeHRep& b);

// Bridge from inequality systems. A2 sides drop the z coordinate via
// z = -x - y; other root systems pass through. Rays convert back with
// rays_to_sides.
ConeHRep from_system(const InequalitySystem& system);
int free_dim(RootSystem rs);
RatVec side_row_to_free(RootSystem rs, const RatVec& row);
RatVec free_point_to_side(RootSystem rs, const RatVec& p);

// Split a ray of the n-side cone into per-side ambient vectors.
std::vector<RatVec> ray_to_sides(RootSystem rs, int n, const RatVec& ray);

// Flatten per-side ambient vectors into free coordinates.
RatVec sides_to_free(RootSystem rs, const std::vector<RatVec>& sides);

}  // namespace deltagon
