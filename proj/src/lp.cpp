#include "deltagon/lp.hpp"

#include <stdexcept>

namespace deltagon {

// Phase-1 simplex on the tableau for: min sum(s) s.t. M x + s = c, x,s >= 0
// (rows pre-scaled so c >= 0). Bland's rule on both pivot choices, so the
// iteration cannot cycle; arithmetic is exact throughout.
bool nonneg_solution_exists(const RatMat& M, const RatVec& c, RatVec* out) {
  const int rows = static_cast<int>(M.rows());
  const int vars = static_cast<int>(M.cols());
  if (c.size() != rows) throw std::invalid_argument("dimension mismatch");

  // tableau: vars structural columns, rows artificial columns, one rhs column
  RatMat t(rows, vars + rows + 1);
  for (int i = 0; i < rows; ++i) {
    Rat sign = c(i) < 0 ? Rat(-1) : Rat(1);
    for (int j = 0; j < vars; ++j) t(i, j) = sign * M(i, j);
    for (int j = 0; j < rows; ++j) t(i, vars + j) = (i == j) ? Rat(1) : Rat(0);
    t(i, vars + rows) = sign * c(i);
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = vars + i;

  // reduced cost of column j for objective sum(artificials): z_j = -sum over
  // rows of t(i,j) where the basic variable is artificial, plus 1 if j is
  // artificial itself; maintained implicitly by recomputation (small systems)
  auto reduced_cost = [&](int j) {
    Rat z(0);
    for (int i = 0; i < rows; ++i)
      if (basis[i] >= vars) z -= t(i, j);
    if (j >= vars) z += 1;
    return z;
  };

  while (true) {
    int enter = -1;
    for (int j = 0; j < vars + rows; ++j) {
      bool basic = false;
      for (int i = 0; i < rows; ++i)
        if (basis[i] == j) { basic = true; break; }
      if (basic) continue;
      if (reduced_cost(j) < 0) { enter = j; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best(0);
    for (int i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, vars + rows) / t(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 objective is bounded below");
    Rat piv = t(leave, enter);
    for (int j = 0; j <= vars + rows; ++j) t(leave, j) /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (int j = 0; j <= vars + rows; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  Rat objective(0);
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= vars) objective += t(i, vars + rows);
  if (objective != 0) return false;
  if (out != nullptr) {
    *out = RatVec::Zero(vars);
    for (int i = 0; i < rows; ++i)
      if (basis[i] < vars) (*out)(basis[i]) = t(i, vars + rows);
  }
  return true;
}

bool in_conic_hull(const RatMat& rows, const RatVec& a) {
  if (rows.rows() == 0) {
    for (int i = 0; i < a.size(); ++i)
      if (a(i) != 0) return false;
    return true;
  }
  return nonneg_solution_exists(rows.transpose(), a);
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& v) {
  if (points.empty()) return false;
  const int dim = static_cast<int>(v.size());
  RatMat M(dim + 1, static_cast<int>(points.size()));
  RatVec c(dim + 1);
  for (int k = 0; k < static_cast<int>(points.size()); ++k) {
    for (int i = 0; i < dim; ++i) M(i, k) = points[k](i);
    M(dim, k) = 1;
  }
  for (int i = 0; i < dim; ++i) c(i) = v(i);
  c(dim) = 1;
  return nonneg_solution_exists(M, c);
}

}  // namespace deltagon
