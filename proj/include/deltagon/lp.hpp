#pragma once

#include "deltagon/rational.hpp"

#include <vector>

namespace deltagon {

// Is there x >= 0 with M x = c? Exact phase-1 simplex with Bland's rule.
// When out is non-null and the system is feasible, *out holds one solution.
bool nonneg_solution_exists(const RatMat& M, const RatVec& c, RatVec* out = nullptr);

// Is `a` a nonnegative combination of the rows of `rows`? (Conic Farkas:
// exactly the condition for `a . x <= 0` to follow from `rows . x <= 0`.)
bool in_conic_hull(const RatMat& rows, const RatVec& a);

// Is v a convex combination of the given points?
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& v);

}  // namespace deltagon
