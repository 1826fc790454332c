#pragma once

#include "deltagon/schubert.hpp"

#include <string>
#include <vector>

namespace deltagon {

struct Provenance {
  enum class Kind { Stability, Weak, Chamber };
  Kind kind = Kind::Stability;
  // Stability: Grassmannian vertex and ordered degree tuple.
  int vertex = 0;
  std::vector<int> tuple;
  // Weak: Weyl element index, the two twisted sides, fundamental weight index.
  int weyl_index = -1;
  int role1 = 0;
  int role2 = 0;
  int weight_index = 0;
  // Chamber: side and chamber functional index.
  int side = 0;
  int functional = 0;
};

// One inequality sum_i rows.row(i) . h_i <= 0 with integer coefficients of
// content 1. In the A2 ambient each side row carries the min-entry-zero
// representative of its functional on the sum-zero subspace.
struct LinearInequality {
  RatMat rows;  // n x ambient_dim
  Provenance prov;
  std::string label;
};

struct InequalitySystem {
  RootSystem rs;
  int n = 0;
  int ambient_dim = 0;
  bool includes_chamber = false;
  std::vector<LinearInequality> items;
};

// Canonical gauge: A2 side rows shifted by multiples of (1,1,1) to have
// minimum entry zero, then the whole coefficient matrix scaled to integer
// content 1. Other root systems only scale.
RatMat canonical_rows(RootSystem rs, RatMat rows);

// Lexicographically minimal canonical form over all side permutations.
RatMat orbit_representative(RootSystem rs, const RatMat& rows);

bool rows_equal(const RatMat& a, const RatMat& b);
bool rows_less(const RatMat& a, const RatMat& b);

// Schubert stability system for P_n: for both Grassmannians and each ordered
// degree tuple (j_1..j_n) admissible in the given mode, the inequality
// sum_i lambda^{(j_i)}(h_i) <= 0, where lambda^{(j)} is the weight of the
// cycle of dimension m-1-j. Chamber rows appended per side when requested.
InequalitySystem stability_system(RootSystem rs, int n, ProductMode mode, bool with_chamber,
                                  int n_limit = 8);

// Weak system: scalarizations of w h_{i1}# <= w h_{i2} + sum of the others,
// over all w, all ordered side pairs (i1, i2), both fundamental weights.
InequalitySystem weak_system(RootSystem rs, int n, int n_limit = 8);

// The weak rows for one fixed role pair (i1, i2), not deduplicated across
// pairs; this fixed-role subsystem is exactly equivalent to the geometric
// hull condition tested by weak_geometric_test.
InequalitySystem weak_subsystem(RootSystem rs, int n, int i1, int i2);

// Chamber rows only (each h_i dominant), as <= 0 inequalities.
InequalitySystem chamber_system(RootSystem rs, int n);

// h1# - h2 in convex hull of W.(h3+...+hn), decided by exact feasibility.
// All h_i must be dominant.
bool weak_geometric_test(RootSystem rs, const std::vector<RatVec>& h);

Rat evaluate(const LinearInequality& ineq, const std::vector<RatVec>& h);

struct MembershipResult {
  bool member = false;
  std::vector<int> violated;  // indices into system.items
  std::vector<int> tight;     // satisfied with equality
};

// Exact evaluation of every inequality at h (each h_i dominant, else error).
MembershipResult membership(const InequalitySystem& system, const std::vector<RatVec>& h);

// One representative per S_n-orbit, in first-seen order.
std::vector<LinearInequality> orbit_representatives(const InequalitySystem& system);

}  // namespace deltagon
