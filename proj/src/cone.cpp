#include "deltagon/cone.hpp"

#include "deltagon/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltagon {

namespace {

struct Ray {
  RatVec v;
  std::vector<uint8_t> tight;  // indexed by original row number, processed rows only
};

bool vec_less(const RatVec& a, const RatVec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

}  // namespace

ConeVRep extreme_rays(const ConeHRep& h) {
  const int dim = h.dim;
  const int nrows = static_cast<int>(h.rows.rows());
  if (h.rows.cols() != dim && nrows > 0) throw std::invalid_argument("row width != dim");

  std::vector<RatVec> lines;
  for (int i = 0; i < dim; ++i) {
    RatVec e = RatVec::Zero(dim);
    e(i) = 1;
    lines.push_back(e);
  }
  std::vector<Ray> rays;
  std::vector<bool> processed(nrows, false);

  for (int step = 0; step < nrows; ++step) {
    // dynamic order: unprocessed row satisfied by the fewest current rays
    int pick = -1;
    int best = -1;
    for (int i = 0; i < nrows; ++i) {
      if (processed[i]) continue;
      int sat = 0;
      for (const auto& r : rays)
        if (dot(h.rows.row(i).transpose(), r.v) <= 0) ++sat;
      if (pick < 0 || sat < best) {
        pick = i;
        best = sat;
      }
    }
    processed[pick] = true;
    RatVec a = h.rows.row(pick).transpose();

    // lineality step: a line with nonzero pairing becomes a ray
    int l0 = -1;
    for (size_t i = 0; i < lines.size(); ++i)
      if (dot(a, lines[i]) != 0) { l0 = static_cast<int>(i); break; }
    if (l0 >= 0) {
      RatVec v0 = lines[l0];
      Rat p0 = dot(a, v0);
      if (p0 > 0) { v0 = -v0; p0 = -p0; }
      std::vector<RatVec> new_lines;
      for (size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == l0) continue;
        Rat pi = dot(a, lines[i]);
        new_lines.push_back(primitive_integer(lines[i] - (pi / p0) * v0));
      }
      lines = std::move(new_lines);
      for (auto& r : rays) {
        Rat pr = dot(a, r.v);
        r.v = primitive_integer(r.v - (pr / p0) * v0);
        r.tight[pick] = 1;
      }
      Ray nr;
      nr.v = primitive_integer(v0);
      nr.tight.assign(nrows, 0);
      for (int i = 0; i < nrows; ++i)
        if (processed[i] && i != pick) nr.tight[i] = 1;  // former line: tight on all
      rays.push_back(std::move(nr));
      continue;
    }

    // ray step
    std::vector<int> neg, zero, pos;
    std::vector<Rat> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] < 0) neg.push_back(static_cast<int>(i));
      else if (val[i] == 0) zero.push_back(static_cast<int>(i));
      else pos.push_back(static_cast<int>(i));
    }
    if (pos.empty()) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].tight[pick] = 1;
      continue;
    }
    std::vector<Ray> next;
    for (int i : neg) next.push_back(rays[i]);
    for (int i : zero) {
      rays[i].tight[pick] = 1;
      next.push_back(rays[i]);
    }
    // candidate new rays from adjacent (pos, neg) pairs
    int needed = dim - static_cast<int>(lines.size()) - 2;
    for (int ip : pos) {
      for (int in : neg) {
        std::vector<uint8_t> common(nrows, 0);
        int card = 0;
        for (int k = 0; k < nrows; ++k) {
          common[k] = rays[ip].tight[k] & rays[in].tight[k];
          card += common[k];
        }
        if (card < needed) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size(); ++r) {
          if (static_cast<int>(r) == ip || static_cast<int>(r) == in) continue;
          bool covers = true;
          for (int k = 0; k < nrows; ++k)
            if (common[k] && !rays[r].tight[k]) { covers = false; break; }
          if (covers) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v = primitive_integer(val[ip] * rays[in].v - val[in] * rays[ip].v);
        nr.tight = common;
        nr.tight[pick] = 1;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeVRep out;
  for (auto& l : lines) out.lineality.push_back(primitive_integer(l));
  for (auto& r : rays) out.rays.push_back(r.v);
  std::sort(out.rays.begin(), out.rays.end(), vec_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end(), vec_eq), out.rays.end());
  return out;
}

namespace {

RatMat drop_row(const RatMat& m, int skip) {
  RatMat out(m.rows() - 1, m.cols());
  int k = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (i == skip) continue;
    out.row(k++) = m.row(i);
  }
  return out;
}

RatMat select_rows(const RatMat& m, const std::vector<int>& keep) {
  RatMat out(static_cast<int>(keep.size()), m.cols());
  for (size_t i = 0; i < keep.size(); ++i) out.row(static_cast<int>(i)) = m.row(keep[i]);
  return out;
}

}  // namespace

IrredundanceResult irredundant(const ConeHRep& h) {
  const int nrows = static_cast<int>(h.rows.rows());
  IrredundanceResult res;
  res.redundant.assign(nrows, false);
  res.implicit_equality.assign(nrows, false);
  for (int i = 0; i < nrows; ++i) {
    RatVec a = h.rows.row(i).transpose();
    res.redundant[i] = in_conic_hull(drop_row(h.rows, i), a);
    res.implicit_equality[i] = in_conic_hull(h.rows, RatVec(-a));
  }
  // greedy reduction, first to last, against the surviving rows
  std::vector<int> active(nrows);
  for (int i = 0; i < nrows; ++i) active[i] = i;
  for (int i = 0; i < nrows; ++i) {
    auto it = std::find(active.begin(), active.end(), i);
    if (it == active.end()) continue;
    std::vector<int> others;
    for (int j : active)
      if (j != i) others.push_back(j);
    if (in_conic_hull(select_rows(h.rows, others), h.rows.row(i).transpose()))
      active.erase(std::find(active.begin(), active.end(), i));
  }
  res.subsystem.dim = h.dim;
  res.subsystem.rows = select_rows(h.rows, active);
  for (int j : active)
    res.subsystem.names.push_back(j < static_cast<int>(h.names.size()) ? h.names[j] : "");
  return res;
}

ConeHRep facets_from_generators(const ConeVRep& v, int dim) {
  // rows of the polar cone are the generators; its extreme rays are the
  // facet normals (lineality directions impose equalities, handled as two
  // opposite rows)
  std::vector<RatVec> gen = v.rays;
  for (const auto& l : v.lineality) {
    gen.push_back(l);
    gen.push_back(-l);
  }
  ConeHRep polar;
  polar.dim = dim;
  polar.rows = RatMat(static_cast<int>(gen.size()), dim);
  for (size_t i = 0; i < gen.size(); ++i) polar.rows.row(static_cast<int>(i)) = gen[i].transpose();
  ConeVRep polar_rays = extreme_rays(polar);
  ConeHRep out;
  out.dim = dim;
  out.rows = RatMat(static_cast<int>(polar_rays.rays.size()), dim);
  for (size_t i = 0; i < polar_rays.rays.size(); ++i)
    out.rows.row(static_cast<int>(i)) = polar_rays.rays[i].transpose();
  return out;
}

bool cone_contains(const ConeHRep& outer, const ConeHRep& inner) {
  if (outer.dim != inner.dim) throw std::invalid_argument("dimension mismatch");
  ConeVRep v = extreme_rays(inner);
  for (const auto& r : v.rays)
    for (int i = 0; i < outer.rows.rows(); ++i)
      if (dot(outer.rows.row(i).transpose(), r) > 0) return false;
  for (const auto& l : v.lineality)
    for (int i = 0; i < outer.rows.rows(); ++i)
      if (dot(outer.rows.row(i).transpose(), l) != 0) return false;
  return true;
}

bool cones_equal(const ConeHRep& a, const ConeHRep& b) {
  return cone_contains(a, b) && cone_contains(b, a);
}

int free_dim(RootSystem rs) { return rs == RootSystem::A2 ? 2 : 2; }

RatVec side_row_to_free(RootSystem rs, const RatVec& row) {
  if (rs == RootSystem::A2) {
    // functional on the sum-zero plane in coordinates (x, y), z = -x-y
    RatVec out(2);
    out(0) = row(0) - row(2);
    out(1) = row(1) - row(2);
    return out;
  }
  return row;
}

RatVec free_point_to_side(RootSystem rs, const RatVec& p) {
  if (rs == RootSystem::A2) {
    RatVec out(3);
    out(0) = p(0);
    out(1) = p(1);
    out(2) = -p(0) - p(1);
    return out;
  }
  return p;
}

ConeHRep from_system(const InequalitySystem& system) {
  const int fd = free_dim(system.rs);
  ConeHRep h;
  h.dim = system.n * fd;
  h.rows = RatMat(static_cast<int>(system.items.size()), h.dim);
  for (size_t q = 0; q < system.items.size(); ++q) {
    const auto& ineq = system.items[q];
    for (int i = 0; i < system.n; ++i) {
      RatVec fr = side_row_to_free(system.rs, ineq.rows.row(i).transpose());
      for (int j = 0; j < fd; ++j) h.rows(static_cast<int>(q), i * fd + j) = fr(j);
    }
    h.names.push_back(ineq.label);
  }
  return h;
}

std::vector<RatVec> ray_to_sides(RootSystem rs, int n, const RatVec& ray) {
  const int fd = free_dim(rs);
  if (ray.size() != n * fd) throw std::invalid_argument("ray has wrong dimension");
  std::vector<RatVec> sides;
  for (int i = 0; i < n; ++i) {
    RatVec p(fd);
    for (int j = 0; j < fd; ++j) p(j) = ray(i * fd + j);
    sides.push_back(free_point_to_side(rs, p));
  }
  return sides;
}

RatVec sides_to_free(RootSystem rs, const std::vector<RatVec>& sides) {
  const int fd = free_dim(rs);
  RatVec out(static_cast<int>(sides.size()) * fd);
  for (size_t i = 0; i < sides.size(); ++i) {
    const RatVec& s = sides[i];
    if (rs == RootSystem::A2) {
      out(static_cast<int>(i) * fd) = s(0);
      out(static_cast<int>(i) * fd + 1) = s(1);
    } else {
      for (int j = 0; j < fd; ++j) out(static_cast<int>(i) * fd + j) = s(j);
    }
  }
  return out;
}

}  // namespace deltagon
