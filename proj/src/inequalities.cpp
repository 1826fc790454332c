#include "deltagon/inequalities.hpp"

#include "deltagon/lp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deltagon {

namespace {

void check_n(int n, int n_limit) {
  if (n < 3) throw std::invalid_argument("need at least three sides");
  if (n > n_limit) throw std::invalid_argument("side count exceeds the configured limit");
}

std::string word_name(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (int g : w.word) s += "s" + std::to_string(g);
  return s;
}

std::string tuple_name(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

RatMat canonical_rows(RootSystem rs, RatMat rows) {
  if (rs == RootSystem::A2) {
    for (int i = 0; i < rows.rows(); ++i) {
      Rat mn = rows(i, 0);
      for (int j = 1; j < rows.cols(); ++j) mn = std::min(mn, rows(i, j));
      for (int j = 0; j < rows.cols(); ++j) rows(i, j) -= mn;
    }
  }
  // scale the whole matrix to coprime integers, preserving signs
  RatVec flat(rows.rows() * rows.cols());
  int k = 0;
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) flat(k++) = rows(i, j);
  flat = primitive_integer(flat);
  k = 0;
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) rows(i, j) = flat(k++);
  return rows;
}

bool rows_equal(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool rows_less(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (a(i, j) > b(i, j)) return false;
    }
  return false;
}

RatMat orbit_representative(RootSystem rs, const RatMat& rows) {
  std::vector<int> perm(rows.rows());
  std::iota(perm.begin(), perm.end(), 0);
  RatMat best = canonical_rows(rs, rows);
  do {
    RatMat p(rows.rows(), rows.cols());
    for (int i = 0; i < rows.rows(); ++i) p.row(i) = rows.row(perm[i]);
    p = canonical_rows(rs, p);
    if (rows_less(p, best)) best = p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

InequalitySystem chamber_system(RootSystem rs, int n) {
  const RootSystemData& rsd = build_root_system(rs);
  InequalitySystem sys{rs, n, rsd.ambient_dim, true, {}};
  for (int side = 0; side < n; ++side) {
    for (int f = 0; f < static_cast<int>(rsd.chamber_inequalities.size()); ++f) {
      LinearInequality ineq;
      ineq.rows = RatMat::Zero(n, rsd.ambient_dim);
      ineq.rows.row(side) = -rsd.chamber_inequalities[f].transpose();
      ineq.rows = canonical_rows(rs, ineq.rows);
      ineq.prov.kind = Provenance::Kind::Chamber;
      ineq.prov.side = side + 1;
      ineq.prov.functional = f + 1;
      ineq.label = "chamber side " + std::to_string(side + 1) + " row " + std::to_string(f + 1);
      sys.items.push_back(std::move(ineq));
    }
  }
  return sys;
}

namespace {

void append_deduped(InequalitySystem& sys, LinearInequality ineq) {
  for (const auto& other : sys.items)
    if (rows_equal(other.rows, ineq.rows)) return;
  sys.items.push_back(std::move(ineq));
}

}  // namespace

InequalitySystem stability_system(RootSystem rs, int n, ProductMode mode, bool with_chamber,
                                  int n_limit) {
  check_n(n, n_limit);
  const RootSystemData& rsd = build_root_system(rs);
  InequalitySystem sys{rs, n, rsd.ambient_dim, with_chamber, {}};
  for (int vertex = 1; vertex <= 2; ++vertex) {
    const CohomologyRing& ring = class_table(rs, vertex);
    for (const auto& tuple : point_products(ring, n, mode)) {
      LinearInequality ineq;
      ineq.rows = RatMat(n, rsd.ambient_dim);
      for (int i = 0; i < n; ++i) {
        // weight of the cycle of dimension m-1-j_i
        ineq.rows.row(i) = ring.weights_by_dim[ring.m - 1 - tuple[i]].transpose();
      }
      ineq.rows = canonical_rows(rs, ineq.rows);
      ineq.prov.kind = Provenance::Kind::Stability;
      ineq.prov.vertex = vertex;
      ineq.prov.tuple = tuple;
      ineq.label = "P" + std::to_string(vertex) + " " + tuple_name(tuple);
      append_deduped(sys, std::move(ineq));
    }
  }
  if (with_chamber)
    for (auto& ineq : chamber_system(rs, n).items) append_deduped(sys, std::move(ineq));
  return sys;
}

namespace {

LinearInequality weak_inequality(const RootSystemData& rsd, int n, const WeylElement& w, int i1,
                                 int i2, int weight_index) {
  // scalarization of  w h_{i1}# <= w h_{i2} + sum_{k != i1,i2} h_k
  // against the fundamental weight: with h# = -w0 h on dominant vectors,
  // side i1 carries -lambda.w.w0, side i2 carries -lambda.w, others -lambda.
  const RatVec& lambda = rsd.fundamental_weights[weight_index - 1];
  LinearInequality ineq;
  ineq.rows = RatMat(n, rsd.ambient_dim);
  RatVec tail = -lambda;
  RatVec r1 = -(w.matrix * rsd.w0).transpose() * lambda;
  RatVec r2 = -w.matrix.transpose() * lambda;
  for (int k = 0; k < n; ++k) ineq.rows.row(k) = tail.transpose();
  ineq.rows.row(i1 - 1) = r1.transpose();
  ineq.rows.row(i2 - 1) = r2.transpose();
  ineq.rows = canonical_rows(rsd.name, ineq.rows);
  ineq.prov.kind = Provenance::Kind::Weak;
  ineq.prov.weyl_index = w.index;
  ineq.prov.role1 = i1;
  ineq.prov.role2 = i2;
  ineq.prov.weight_index = weight_index;
  ineq.label = "weak w=" + word_name(w) + " roles(" + std::to_string(i1) + "," +
               std::to_string(i2) + ") l" + std::to_string(weight_index);
  return ineq;
}

}  // namespace

InequalitySystem weak_subsystem(RootSystem rs, int n, int i1, int i2) {
  if (i1 == i2 || i1 < 1 || i2 < 1 || i1 > n || i2 > n)
    throw std::invalid_argument("role sides must be distinct and in range");
  const RootSystemData& rsd = build_root_system(rs);
  InequalitySystem sys{rs, n, rsd.ambient_dim, false, {}};
  for (const auto& w : rsd.weyl)
    for (int l = 1; l <= 2; ++l) append_deduped(sys, weak_inequality(rsd, n, w, i1, i2, l));
  return sys;
}

InequalitySystem weak_system(RootSystem rs, int n, int n_limit) {
  check_n(n, n_limit);
  const RootSystemData& rsd = build_root_system(rs);
  InequalitySystem sys{rs, n, rsd.ambient_dim, false, {}};
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = 1; i2 <= n; ++i2) {
      if (i1 == i2) continue;
      for (const auto& w : rsd.weyl)
        for (int l = 1; l <= 2; ++l) append_deduped(sys, weak_inequality(rsd, n, w, i1, i2, l));
    }
  return sys;
}

bool weak_geometric_test(RootSystem rs, const std::vector<RatVec>& h) {
  if (h.size() < 3) throw std::invalid_argument("need at least three sides");
  const RootSystemData& rsd = build_root_system(rs);
  for (const auto& hi : h)
    if (!is_dominant(rsd, hi)) throw std::invalid_argument("sides must be dominant");
  RatVec tail = RatVec::Zero(rsd.ambient_dim);
  for (size_t k = 2; k < h.size(); ++k) tail += h[k];
  std::vector<RatVec> hull;
  for (const auto& w : rsd.weyl) hull.push_back(w.matrix * tail);
  RatVec target = sharp(rsd, h[0]) - h[1];
  return in_convex_hull(hull, target);
}

Rat evaluate(const LinearInequality& ineq, const std::vector<RatVec>& h) {
  Rat v(0);
  for (int i = 0; i < ineq.rows.rows(); ++i)
    for (int j = 0; j < ineq.rows.cols(); ++j) v += ineq.rows(i, j) * h[i](j);
  return v;
}

MembershipResult membership(const InequalitySystem& system, const std::vector<RatVec>& h) {
  if (static_cast<int>(h.size()) != system.n)
    throw std::invalid_argument("wrong number of sides");
  const RootSystemData& rsd = build_root_system(system.rs);
  for (const auto& hi : h)
    if (!is_dominant(rsd, hi)) throw std::invalid_argument("sides must be dominant");
  MembershipResult res;
  res.member = true;
  for (int idx = 0; idx < static_cast<int>(system.items.size()); ++idx) {
    Rat v = evaluate(system.items[idx], h);
    if (v > 0) {
      res.member = false;
      res.violated.push_back(idx);
    } else if (v == 0) {
      res.tight.push_back(idx);
    }
  }
  return res;
}

std::vector<LinearInequality> orbit_representatives(const InequalitySystem& system) {
  std::vector<LinearInequality> reps;
  std::vector<RatMat> seen;
  for (const auto& ineq : system.items) {
    RatMat rep = orbit_representative(system.rs, ineq.rows);
    bool dup = false;
    for (const auto& s : seen)
      if (rows_equal(s, rep)) { dup = true; break; }
    if (dup) continue;
    seen.push_back(rep);
    LinearInequality r = ineq;
    r.rows = rep;
    reps.push_back(std::move(r));
  }
  return reps;
}

}  // namespace deltagon
