// End-to-end acceptance checks. Each criterion prints one line
// "criterion N: PASS|FAIL"; the exit status is nonzero if any fail.
// Reference data (cohomology tables, inequality lists, generator tables)
// is frozen inline; tolerances are pinned next to their checks.

#include "deltagon/cone.hpp"
#include "deltagon/configurations.hpp"
#include "deltagon/coxeter.hpp"
#include "deltagon/inequalities.hpp"
#include "deltagon/lp.hpp"
#include "deltagon/polygons.hpp"
#include "deltagon/rational.hpp"
#include "deltagon/schubert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace deltagon;

namespace {

RatMat rows_from(const std::vector<std::vector<int>>& e) {
  RatMat m(static_cast<int>(e.size()), static_cast<int>(e[0].size()));
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = e[i][j];
  return m;
}

RatVec vec_from(const std::vector<int>& e) {
  RatVec v(static_cast<int>(e.size()));
  for (size_t i = 0; i < e.size(); ++i) v(static_cast<int>(i)) = e[i];
  return v;
}

bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

struct RowsLess {
  bool operator()(const RatMat& a, const RatMat& b) const { return rows_less(a, b); }
};

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Dominant rational vector lambda1 zeta1 + lambda2 zeta2.
RatVec dominant_sample(const RootSystemData& rsd, const Rat& l1, const Rat& l2) {
  RatVec h = RatVec::Zero(rsd.ambient_dim);
  h += l1 * rsd.fundamental_coweights[0];
  h += l2 * rsd.fundamental_coweights[1];
  return h;
}

// ---- criterion 1: cohomology ring tables -----------------------------------

struct RingTable {
  RootSystem rs;
  int vertex;
  int m;
  std::map<std::pair<int, int>, int> special;  // entries differing from 1 below the top
};

bool check_ring_tables() {
  const std::vector<RingTable> tables = {
      {RootSystem::A2, 1, 3, {}},
      {RootSystem::A2, 2, 3, {}},
      {RootSystem::B2, 1, 4, {{{1, 1}, 2}}},
      {RootSystem::B2, 2, 4, {}},
      {RootSystem::G2, 1, 6, {{{1, 2}, 2}, {{2, 1}, 2}, {{2, 2}, 2}}},
      {RootSystem::G2,
       2,
       6,
       {{{1, 1}, 3}, {{1, 2}, 2}, {{2, 1}, 2}, {{1, 3}, 3}, {{3, 1}, 3}, {{2, 2}, 2}}},
  };
  bool ok = true;
  for (const auto& t : tables) {
    const CohomologyRing& ring = class_table(t.rs, t.vertex);
    if (ring.m != t.m) {
      std::fprintf(stderr, "ring %s P%d: m = %d, want %d\n", to_string(t.rs).c_str(), t.vertex,
                   ring.m, t.m);
      ok = false;
      continue;
    }
    auto table = structure_constants(ring);
    for (int j = 0; j < t.m; ++j) {
      for (int k = 0; k < t.m; ++k) {
        Int want = 0;
        if (j + k < t.m) {
          auto it = t.special.find({j, k});
          want = (it != t.special.end()) ? it->second : 1;
        }
        if (table[j][k] != want) {
          std::fprintf(stderr, "ring %s P%d: c(%d,%d) = %s, want %s\n", to_string(t.rs).c_str(),
                       t.vertex, j, k, table[j][k].str().c_str(), want.str().c_str());
          ok = false;
        }
      }
    }
  }
  return ok;
}

// ---- criterion 2: inequality lists at n = 3 --------------------------------

struct FamilyList {
  RootSystem rs;
  int vertex;
  std::vector<std::vector<std::vector<int>>> reps;  // raw side rows, <= 0 form
};

bool check_inequality_lists() {
  const std::vector<FamilyList> families = {
      {RootSystem::A2, 1, {{{1, 0, 0}, {0, 0, 1}, {0, 0, 1}}, {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}}},
      {RootSystem::A2,
       2,
       {{{0, 0, -1}, {-1, 0, 0}, {-1, 0, 0}}, {{0, -1, 0}, {0, -1, 0}, {-1, 0, 0}}}},
      {RootSystem::B2, 1, {{{1, 0}, {-1, 0}, {-1, 0}}, {{0, 1}, {0, -1}, {-1, 0}}}},
      {RootSystem::B2,
       2,
       {{{1, 1}, {-1, -1}, {-1, -1}},
        {{1, -1}, {-1, 1}, {-1, -1}},
        {{-1, 1}, {-1, 1}, {-1, 1}}}},
      {RootSystem::G2,
       1,
       {{{2, 1}, {-2, -1}, {-2, -1}},
        {{1, 1}, {-1, -1}, {-2, -1}},
        {{1, 0}, {-1, 0}, {-2, -1}},
        {{1, 0}, {-1, -1}, {-1, -1}}}},
      {RootSystem::G2,
       2,
       {{{3, 2}, {-3, -2}, {-3, -2}},
        {{3, 1}, {-3, -1}, {-3, -2}},
        {{0, 1}, {0, -1}, {-3, -2}}}},
  };
  const std::map<RootSystem, size_t> counts = {
      {RootSystem::A2, 12}, {RootSystem::B2, 19}, {RootSystem::G2, 33}};

  bool ok = true;
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    auto sys = stability_system(rs, 3, ProductMode::ExactPoint, false);
    if (sys.items.size() != counts.at(rs)) {
      std::fprintf(stderr, "%s: %zu stability items, want %zu\n", to_string(rs).c_str(),
                   sys.items.size(), counts.at(rs));
      ok = false;
    }
    for (const auto& fam : families) {
      if (fam.rs != rs) continue;
      std::set<RatMat, RowsLess> got;
      for (const auto& item : sys.items)
        if (item.prov.vertex == fam.vertex) got.insert(orbit_representative(rs, item.rows));
      std::set<RatMat, RowsLess> want;
      for (const auto& raw : fam.reps)
        want.insert(orbit_representative(rs, canonical_rows(rs, rows_from(raw))));
      if (got.size() != want.size() ||
          !std::equal(got.begin(), got.end(), want.begin(),
                      [](const RatMat& a, const RatMat& b) { return rows_equal(a, b); })) {
        std::fprintf(stderr, "%s P%d: orbit representatives differ (%zu vs %zu expected)\n",
                     to_string(rs).c_str(), fam.vertex, got.size(), want.size());
        ok = false;
      }
    }
  }
  return ok;
}

// ---- criterion 3: redundancy pattern at n = 3 ------------------------------

bool check_redundancy() {
  bool ok = true;
  const std::map<RootSystem, std::set<std::string>> expected = {
      {RootSystem::A2, {}},
      {RootSystem::B2, {"P2 (1,1,1)"}},
      {RootSystem::G2, {"P1 (1,1,3)", "P1 (1,3,1)", "P1 (3,1,1)"}},
  };
  const std::map<RootSystem, RatMat> redundant_rows = {
      {RootSystem::B2, rows_from({{-1, 1}, {-1, 1}, {-1, 1}})},
      {RootSystem::G2, rows_from({{1, 0}, {-1, -1}, {-1, -1}})},
  };
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    auto sys = stability_system(rs, 3, ProductMode::ExactPoint, true);
    auto cone = from_system(sys);
    auto irr = irredundant(cone);
    std::set<std::string> got;
    for (size_t i = 0; i < irr.redundant.size(); ++i) {
      if (irr.redundant[i]) got.insert(cone.names[i]);
      if (irr.implicit_equality[i]) {
        std::fprintf(stderr, "%s: unexpected implicit equality %s\n", to_string(rs).c_str(),
                     cone.names[i].c_str());
        ok = false;
      }
    }
    if (got != expected.at(rs)) {
      std::fprintf(stderr, "%s: redundant set mismatch (%zu flagged)\n", to_string(rs).c_str(),
                   got.size());
      ok = false;
      continue;
    }
    auto it = redundant_rows.find(rs);
    if (it == redundant_rows.end()) continue;
    RatMat want = orbit_representative(rs, canonical_rows(rs, it->second));
    for (size_t i = 0; i < irr.redundant.size(); ++i) {
      if (!irr.redundant[i]) continue;
      if (!rows_equal(orbit_representative(rs, sys.items[i].rows), want)) {
        std::fprintf(stderr, "%s: flagged row %s is not the expected functional\n",
                     to_string(rs).c_str(), cone.names[i].c_str());
        ok = false;
      }
    }
  }
  return ok;
}

// ---- criterion 4: extreme rays vs generator tables -------------------------

const std::vector<std::vector<std::vector<int>>>& generator_table(RootSystem rs) {
  static const std::vector<std::vector<std::vector<int>>> a2 = {
      {{2, -1, -1}, {2, -1, -1}, {2, -1, -1}}, {{1, 1, -2}, {2, -1, -1}, {0, 0, 0}},
      {{0, 0, 0}, {1, 1, -2}, {2, -1, -1}},    {{2, -1, -1}, {0, 0, 0}, {1, 1, -2}},
      {{0, 0, 0}, {2, -1, -1}, {1, 1, -2}},    {{2, -1, -1}, {1, 1, -2}, {0, 0, 0}},
      {{1, 1, -2}, {0, 0, 0}, {2, -1, -1}},    {{1, 1, -2}, {1, 1, -2}, {1, 1, -2}},
  };
  static const std::vector<std::vector<std::vector<int>>> b2 = {
      {{1, 1}, {1, 1}, {2, 0}}, {{1, 0}, {0, 0}, {1, 0}}, {{1, 1}, {1, 1}, {0, 0}},
      {{1, 1}, {2, 0}, {1, 1}}, {{1, 0}, {1, 0}, {0, 0}}, {{1, 0}, {1, 0}, {1, 1}},
      {{2, 0}, {1, 1}, {1, 1}}, {{0, 0}, {1, 1}, {1, 1}}, {{1, 0}, {1, 1}, {1, 0}},
      {{0, 0}, {1, 0}, {1, 0}}, {{1, 1}, {0, 0}, {1, 1}}, {{1, 1}, {1, 0}, {1, 0}},
  };
  static const std::vector<std::vector<std::vector<int>>> g2 = {
      {{0, 3}, {1, 0}, {2, 0}}, {{1, 0}, {0, 1}, {0, 2}}, {{0, 1}, {0, 0}, {0, 1}},
      {{0, 3}, {2, 0}, {1, 0}}, {{1, 0}, {0, 2}, {0, 1}}, {{0, 1}, {0, 1}, {0, 0}},
      {{1, 0}, {0, 3}, {2, 0}}, {{0, 2}, {0, 1}, {1, 0}}, {{0, 0}, {1, 0}, {1, 0}},
      {{1, 0}, {2, 0}, {0, 3}}, {{0, 2}, {1, 0}, {0, 1}}, {{1, 0}, {0, 0}, {1, 0}},
      {{2, 0}, {0, 3}, {1, 0}}, {{0, 3}, {1, 0}, {1, 0}}, {{1, 0}, {1, 0}, {0, 0}},
      {{2, 0}, {1, 0}, {0, 3}}, {{1, 0}, {0, 3}, {1, 0}}, {{0, 1}, {0, 1}, {1, 0}},
      {{0, 1}, {0, 2}, {1, 0}}, {{1, 0}, {1, 0}, {0, 3}}, {{0, 1}, {1, 0}, {0, 1}},
      {{0, 1}, {1, 0}, {0, 2}}, {{0, 0}, {0, 1}, {0, 1}}, {{1, 0}, {0, 1}, {0, 1}},
  };
  switch (rs) {
    case RootSystem::A2:
      return a2;
    case RootSystem::B2:
      return b2;
    default:
      return g2;
  }
}

bool check_extreme_rays() {
  bool ok = true;
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    auto sys = stability_system(rs, 3, ProductMode::ExactPoint, true);
    auto v = extreme_rays(from_system(sys));
    if (!v.lineality.empty()) {
      std::fprintf(stderr, "%s: cone not pointed\n", to_string(rs).c_str());
      ok = false;
      continue;
    }
    std::vector<RatVec> got;
    for (const auto& r : v.rays) got.push_back(primitive_integer(r));
    std::vector<RatVec> want;
    for (const auto& gen : generator_table(rs)) {
      std::vector<RatVec> sides;
      for (const auto& s : gen) sides.push_back(vec_from(s));
      want.push_back(primitive_integer(sides_to_free(rs, sides)));
    }
    std::sort(got.begin(), got.end(), vec_less);
    std::sort(want.begin(), want.end(), vec_less);
    if (got.size() != want.size() ||
        !std::equal(got.begin(), got.end(), want.begin(), vec_eq)) {
      std::fprintf(stderr, "%s: ray set mismatch (%zu rays, want %zu)\n", to_string(rs).c_str(),
                   got.size(), want.size());
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 5: cone identities -------------------------------------------

ConeHRep stack_cones(const ConeHRep& a, const ConeHRep& b) {
  ConeHRep out;
  out.dim = a.dim;
  out.rows = RatMat(a.rows.rows() + b.rows.rows(), a.dim);
  out.rows << a.rows, b.rows;
  out.names = a.names;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  return out;
}

bool rows_contain(const RatMat& rows, const RatVec& r) {
  for (int i = 0; i < rows.rows(); ++i)
    if (vec_eq(rows.row(i).transpose(), r)) return true;
  return false;
}

bool check_cone_identities() {
  bool ok = true;
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    for (int n : {3, 4}) {
      auto exact = from_system(stability_system(rs, n, ProductMode::ExactPoint, true));
      auto loose = from_system(stability_system(rs, n, ProductMode::Nonzero, true));
      // The exact-point rows are a subset; each extra nonzero-mode row must be
      // implied, which is conic hull membership by Farkas.
      for (int i = 0; i < exact.rows.rows(); ++i) {
        if (!rows_contain(loose.rows, exact.rows.row(i).transpose())) {
          std::fprintf(stderr, "%s n=%d: exact row %d missing from nonzero system\n",
                       to_string(rs).c_str(), n, i);
          ok = false;
        }
      }
      for (int i = 0; i < loose.rows.rows(); ++i) {
        RatVec r = loose.rows.row(i).transpose();
        if (rows_contain(exact.rows, r)) continue;
        if (!in_conic_hull(exact.rows, r)) {
          std::fprintf(stderr, "%s n=%d: nonzero row %s not implied by exact system\n",
                       to_string(rs).c_str(), n, loose.names[i].c_str());
          ok = false;
        }
      }
      if (n == 3 && !cones_equal(exact, loose)) {
        std::fprintf(stderr, "%s n=3: exact and nonzero cones differ\n", to_string(rs).c_str());
        ok = false;
      }
    }
    auto stab = from_system(stability_system(rs, 3, ProductMode::ExactPoint, false));
    auto weak = from_system(weak_system(rs, 3));
    if (!cone_contains(weak, stab)) {
      std::fprintf(stderr, "%s: stability cone not inside weak cone\n", to_string(rs).c_str());
      ok = false;
    }
    auto chamber = from_system(chamber_system(rs, 3));
    if (!cones_equal(stack_cones(stab, chamber), stack_cones(weak, chamber))) {
      std::fprintf(stderr, "%s: weak system does not cut the same polyhedron\n",
                   to_string(rs).c_str());
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 6: weak scalarizations vs hull test --------------------------

bool check_weak_equivalence() {
  std::mt19937_64 rng(20240819);
  bool ok = true;
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    const RootSystemData& rsd = build_root_system(rs);
    auto weak = weak_system(rs, 3);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      std::vector<RatVec> h;
      for (int i = 0; i < 3; ++i) {
        Rat l1(static_cast<long>(rng() % 13), static_cast<long>(1 + rng() % 4));
        Rat l2(static_cast<long>(rng() % 13), static_cast<long>(1 + rng() % 4));
        h.push_back(dominant_sample(rsd, l1, l2));
      }
      bool scalar = true;
      for (const auto& item : weak.items)
        if (evaluate(item, h) > 0) {
          scalar = false;
          break;
        }
      bool geometric = true;
      for (int i = 0; i < 3 && geometric; ++i)
        for (int j = 0; j < 3 && geometric; ++j) {
          if (i == j) continue;
          int k = 3 - i - j;
          if (!weak_geometric_test(rs, {h[i], h[j], h[k]})) geometric = false;
        }
      if (scalar != geometric) {
        std::fprintf(stderr, "%s trial %d: scalar %d vs hull %d\n", to_string(rs).c_str(), trial,
                     scalar, geometric);
        ok = false;
      }
    }
  }
  return ok;
}

// ---- criterion 7: sampled triangles respect the inequalities ----------------

bool check_thompson() {
  const double slack = 1e-9;
  auto rep = sample_thompson(3, 1000, 20240819ULL);
  bool ok = rep.samples == 1000 && rep.rows > 0 && rep.max_violation_p <= slack &&
            rep.max_violation_X <= slack;
  if (!ok)
    std::fprintf(stderr, "triangle sampling: rows=%d viol_p=%g viol_X=%g\n", rep.rows,
                 rep.max_violation_p, rep.max_violation_X);
  return ok;
}

// ---- criterion 8: polygon construction inside and outside the cone ----------

std::vector<DVec> spectra_from_sides(const std::vector<RatVec>& sides) {
  double scale = 0;
  for (const auto& s : sides)
    for (int i = 0; i < s.size(); ++i) scale = std::max(scale, std::abs(rat_to_double(s(i))));
  if (scale == 0) scale = 1;
  std::vector<DVec> spectra;
  for (const auto& s : sides) {
    DVec v(s.size());
    for (int i = 0; i < s.size(); ++i) v(i) = rat_to_double(s(i)) / scale;
    spectra.push_back(v);
  }
  return spectra;
}

bool check_polygon_construction() {
  const double pass_tol = 1e-8;
  const double fail_floor = 1e-3;
  const auto& gens = generator_table(RootSystem::A2);
  bool ok = true;

  std::vector<std::vector<RatVec>> ray_sides;
  for (const auto& gen : gens) {
    std::vector<RatVec> sides;
    for (const auto& s : gen) sides.push_back(vec_from(s));
    ray_sides.push_back(sides);
  }

  int idx = 0;
  for (const auto& sides : ray_sides) {
    auto res = construct_polygon_momentum(spectra_from_sides(sides), pass_tol, 5000, 10,
                                          100 + idx++);
    if (!res.success || res.residual >= pass_tol) {
      std::fprintf(stderr, "generator %d: residual %g\n", idx - 1, res.residual);
      ok = false;
    }
  }

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RatVec> sides(3, RatVec::Zero(3));
    for (const auto& gen : ray_sides) {
      long w = 1 + static_cast<long>(rng() % 10);
      for (int i = 0; i < 3; ++i) sides[i] += Rat(w) * gen[i];
    }
    auto res =
        construct_polygon_momentum(spectra_from_sides(sides), pass_tol, 5000, 10, 500 + trial);
    if (!res.success || res.residual >= pass_tol) {
      std::fprintf(stderr, "interior %d: residual %g\n", trial, res.residual);
      ok = false;
    }
  }

  // Points violating some stability inequality by at least 0.1 after scaling
  // both the functional and the point to unit Frobenius norm.
  const RootSystemData& rsd = build_root_system(RootSystem::A2);
  auto sys = stability_system(RootSystem::A2, 3, ProductMode::ExactPoint, true);
  int found = 0;
  for (unsigned long draw = 0; draw < 200000 && found < 20; ++draw) {
    std::vector<RatVec> h;
    double hnorm2 = 0;
    for (int i = 0; i < 3; ++i) {
      Rat l1(static_cast<long>(rng() % 5));
      Rat l2(static_cast<long>(rng() % 5));
      h.push_back(dominant_sample(rsd, l1, l2));
      for (int j = 0; j < 3; ++j) hnorm2 += std::pow(rat_to_double(h[i](j)), 2);
    }
    if (hnorm2 == 0) continue;
    auto mem = membership(sys, h);
    if (mem.member) continue;
    double best = 0;
    for (int vi : mem.violated) {
      const auto& item = sys.items[vi];
      double rnorm2 = 0;
      for (int r = 0; r < item.rows.rows(); ++r)
        for (int c = 0; c < item.rows.cols(); ++c)
          rnorm2 += std::pow(rat_to_double(item.rows(r, c)), 2);
      best = std::max(best, rat_to_double(evaluate(item, h)) / std::sqrt(rnorm2 * hnorm2));
    }
    if (best < 0.1) continue;
    ++found;
    auto res = construct_polygon_momentum(spectra_from_sides(h), pass_tol, 2000, 10, 900 + found);
    if (res.residual <= fail_floor) {
      std::fprintf(stderr, "outside point %d: residual %g unexpectedly small\n", found,
                   res.residual);
      ok = false;
    }
  }
  if (found < 20) {
    std::fprintf(stderr, "only %d outside points found\n", found);
    ok = false;
  }
  return ok;
}

// ---- criterion 9: circle configurations and polygon closure -----------------

bool check_fixed_points() {
  const double closure_tol = 1e-8;
  const double roundtrip_tol = 1e-8;
  std::mt19937_64 rng(424242);
  auto u01 = [&rng]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  bool ok = true;

  for (int trial = 0; trial < 100; ++trial) {
    HyperbolicConfig cfg;
    for (int guard = 0;; ++guard) {
      if (guard > 1000) return false;
      cfg.atoms.clear();
      int k = 3 + static_cast<int>(rng() % 4);
      double total = 0;
      for (int i = 0; i < k; ++i) {
        IdealAtom a;
        a.angle = 2.0 * M_PI * u01();
        a.mass = 0.5 + u01();
        total += a.mass;
        cfg.atoms.push_back(a);
      }
      double maxm = 0;
      for (auto& a : cfg.atoms) {
        a.mass /= total;
        maxm = std::max(maxm, a.mass);
      }
      // Nearly coincident ideal points make the closed polygon ill
      // conditioned (the short side direction is almost neutral), so the
      // sampler keeps the directions separated.
      double mingap = 10;
      for (size_t i = 0; i < cfg.atoms.size(); ++i)
        for (size_t j = i + 1; j < cfg.atoms.size(); ++j)
          mingap = std::min(mingap, std::fabs(std::remainder(
                                        cfg.atoms[i].angle - cfg.atoms[j].angle, 2.0 * M_PI)));
      if (maxm <= 0.45 && mingap >= 0.2) break;
    }
    // The polygon error is the per-round displacement amplified by the
    // contraction margin, so the iteration tolerance sits well below the
    // 1e-8 targets.
    auto res = phi_fixed_point(cfg, 1e-12, 400000);
    if (!res.converged || res.closure_error >= closure_tol) {
      std::fprintf(stderr, "stable config %d: converged=%d closure=%g\n", trial, res.converged,
                   res.closure_error);
      ok = false;
      continue;
    }
    auto back = gauss_map(res.polygon);
    if (back.atoms.size() != cfg.atoms.size()) {
      std::fprintf(stderr, "stable config %d: atom count changed\n", trial);
      ok = false;
      continue;
    }
    for (size_t i = 0; i < cfg.atoms.size(); ++i) {
      double da = std::fabs(std::remainder(back.atoms[i].angle - cfg.atoms[i].angle, 2.0 * M_PI));
      double dm = std::fabs(back.atoms[i].mass - cfg.atoms[i].mass);
      if (da >= roundtrip_tol || dm >= roundtrip_tol) {
        std::fprintf(stderr, "stable config %d atom %zu: angle err %g mass err %g\n", trial, i,
                     da, dm);
        ok = false;
      }
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    HyperbolicConfig cfg;
    int k = 3 + static_cast<int>(rng() % 3);
    double heavy = 0.55 + 0.3 * u01();
    for (int i = 0; i < k; ++i) {
      IdealAtom a;
      a.angle = 2.0 * M_PI * u01();
      a.mass = (i == 0) ? heavy : (1.0 - heavy) / (k - 1);
      cfg.atoms.push_back(a);
    }
    auto res = phi_fixed_point(cfg, 1e-9, 100000);
    if (res.converged) {
      std::fprintf(stderr, "unstable config %d converged unexpectedly\n", trial);
      ok = false;
    }
  }
  return ok;
}

// ---- criterion 10: subset-span enumeration vs independent oracle ------------

int elim_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rat>> mat_cols_as_rows(const RatMat& m) {
  std::vector<std::vector<Rat>> rows;
  for (int c = 0; c < m.cols(); ++c) {
    std::vector<Rat> row;
    for (int r = 0; r < m.rows(); ++r) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

int oracle_dim_cap(const RatMat& u, const RatMat& v) {
  auto ru = mat_cols_as_rows(u);
  auto rv = mat_cols_as_rows(v);
  int du = elim_rank(ru);
  int dv = elim_rank(rv);
  auto stacked = ru;
  stacked.insert(stacked.end(), rv.begin(), rv.end());
  return du + dv - elim_rank(stacked);
}

StabilityVerdict oracle_verdict(const GrassmannianMeasure& meas) {
  const int k = static_cast<int>(meas.atoms.size());
  Rat total = 0;
  for (const auto& a : meas.atoms) total += a.mass;
  bool tie = false;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    RatMat u(meas.n_ambient, 0);
    std::vector<std::vector<Rat>> cols;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i))
        for (int c = 0; c < meas.atoms[i].basis.cols(); ++c) {
          std::vector<Rat> col;
          for (int r = 0; r < meas.n_ambient; ++r) col.push_back(meas.atoms[i].basis(r, c));
          cols.push_back(col);
        }
    RatMat span(meas.n_ambient, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
      for (int r = 0; r < meas.n_ambient; ++r) span(r, static_cast<int>(c)) = cols[c][r];
    int du = elim_rank(mat_cols_as_rows(span));
    if (du == 0 || du >= meas.n_ambient) continue;
    Rat lhs = 0;
    for (const auto& a : meas.atoms) lhs += a.mass * oracle_dim_cap(span, a.basis);
    lhs *= meas.n_ambient;
    Rat rhs = Rat(du) * Rat(meas.q) * total;
    if (lhs > rhs) return StabilityVerdict::Unstable;
    if (lhs == rhs) tie = true;
  }
  return tie ? StabilityVerdict::Semistable : StabilityVerdict::Stable;
}

bool oracle_violates(const GrassmannianMeasure& meas, const RatMat& witness) {
  auto rows = mat_cols_as_rows(witness);
  int du = elim_rank(rows);
  if (du == 0 || du >= meas.n_ambient) return false;
  Rat total = 0, lhs = 0;
  for (const auto& a : meas.atoms) {
    total += a.mass;
    lhs += a.mass * oracle_dim_cap(witness, a.basis);
  }
  lhs *= meas.n_ambient;
  return lhs > Rat(du) * Rat(meas.q) * total;
}

bool check_grassmannian_oracle() {
  std::mt19937_64 rng(99);
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    GrassmannianMeasure meas;
    meas.n_ambient = 2 + static_cast<int>(rng() % 3);
    meas.q = 1;
    int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      GrassmannianAtom atom;
      atom.basis = RatMat::Zero(meas.n_ambient, 1);
      bool nonzero = false;
      while (!nonzero) {
        for (int r = 0; r < meas.n_ambient; ++r) {
          long e = static_cast<long>(rng() % 7) - 3;
          atom.basis(r, 0) = e;
          if (e != 0) nonzero = true;
        }
      }
      atom.mass = Rat(1 + static_cast<long>(rng() % 5));
      meas.atoms.push_back(atom);
    }
    auto lib = sl_semistable(meas, Strategy::Spans);
    auto want = oracle_verdict(meas);
    if (lib.verdict != want) {
      std::fprintf(stderr, "instance %d: library %s vs oracle %s\n", trial,
                   to_string(lib.verdict).c_str(), to_string(want).c_str());
      ok = false;
      continue;
    }
    if (lib.verdict == StabilityVerdict::Unstable) {
      if (!lib.witness || !oracle_violates(meas, *lib.witness)) {
        std::fprintf(stderr, "instance %d: witness does not violate\n", trial);
        ok = false;
      }
    }
  }

  // Half-mass threshold on the projective line, exact at the boundary.
  auto line = [](long x, long y) {
    RatMat m(2, 1);
    m(0, 0) = x;
    m(1, 0) = y;
    return m;
  };
  auto run = [&](std::vector<std::pair<RatMat, Rat>> atoms) {
    GrassmannianMeasure meas;
    meas.n_ambient = 2;
    meas.q = 1;
    for (auto& [b, m] : atoms) meas.atoms.push_back({b, m});
    return sl_semistable(meas, Strategy::Spans).verdict;
  };
  if (run({{line(1, 0), Rat(1)}, {line(0, 1), Rat(1)}}) != StabilityVerdict::Semistable) {
    std::fprintf(stderr, "half-mass equality not semistable\n");
    ok = false;
  }
  if (run({{line(1, 0), Rat(9, 4)}, {line(0, 1), Rat(1)}, {line(1, 1), Rat(1)}}) !=
      StabilityVerdict::Unstable) {
    std::fprintf(stderr, "above half-mass not unstable\n");
    ok = false;
  }
  if (run({{line(1, 0), Rat(7, 4)}, {line(0, 1), Rat(1)}, {line(1, 1), Rat(1)}}) !=
      StabilityVerdict::Stable) {
    std::fprintf(stderr, "below half-mass not stable\n");
    ok = false;
  }
  return ok;
}

// ---- criterion 11: property suite -------------------------------------------

CMat exp_skew_local(const CMat& z) {
  CMat h = std::complex<double>(0, -1) * z;
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  CMat d = CMat::Zero(z.rows(), z.cols());
  for (int i = 0; i < z.rows(); ++i)
    d(i, i) = std::exp(std::complex<double>(0, es.eigenvalues()(i)));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

bool check_property_suite() {
  bool ok = true;
  std::mt19937_64 rng(31337);
  auto u01 = [&rng]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  auto gauss = [&]() {
    double a = u01(), b = u01();
    return std::sqrt(-2.0 * std::log(a + 1e-300)) * std::cos(2.0 * M_PI * b);
  };

  // Inner product is constant on Weyl orbits.
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    const RootSystemData& rsd = build_root_system(rs);
    for (const auto& w : rsd.weyl) {
      for (int rep = 0; rep < 5; ++rep) {
        RatVec u(rsd.ambient_dim), v(rsd.ambient_dim);
        for (int i = 0; i < rsd.ambient_dim; ++i) {
          u(i) = static_cast<long>(rng() % 11) - 5;
          v(i) = static_cast<long>(rng() % 11) - 5;
        }
        if (rsd.pair(w.matrix * u, w.matrix * v) != rsd.pair(u, v)) {
          std::fprintf(stderr, "%s: pairing moved by weyl element %d\n", to_string(rs).c_str(),
                       w.index);
          ok = false;
        }
      }
    }
    // Involution fixing the chamber.
    for (int rep = 0; rep < 20; ++rep) {
      RatVec h = dominant_sample(rsd, Rat(static_cast<long>(rng() % 9)),
                                 Rat(static_cast<long>(rng() % 9)));
      RatVec s = sharp(rsd, h);
      if (!is_dominant(rsd, s) || !vec_eq(sharp(rsd, s), h)) {
        std::fprintf(stderr, "%s: involution failed\n", to_string(rs).c_str());
        ok = false;
      }
      if (rs != RootSystem::A2 && !vec_eq(s, h)) {
        std::fprintf(stderr, "%s: involution should fix the chamber pointwise\n",
                     to_string(rs).c_str());
        ok = false;
      }
    }
    if (rs == RootSystem::A2) {
      if (!vec_eq(sharp(rsd, rsd.fundamental_coweights[0]), rsd.fundamental_coweights[1])) {
        std::fprintf(stderr, "A2: involution should swap the coweights\n");
        ok = false;
      }
    }
    // Complementary degrees multiply to the point class with coefficient one.
    for (int vertex : {1, 2}) {
      const auto& ring = class_table(rs, vertex);
      for (int j = 0; j < ring.m; ++j)
        if (ring.structure(j, ring.m - 1 - j) != 1) {
          std::fprintf(stderr, "%s P%d: degree %d has no unit pairing\n", to_string(rs).c_str(),
                       vertex, j);
          ok = false;
        }
    }
  }

  // Descent direction vs central finite differences.
  for (int rep = 0; rep < 25; ++rep) {
    const int m = 3, n = 3;
    std::vector<DVec> spectra;
    for (int i = 0; i < n; ++i) {
      DVec s(m);
      for (int j = 0; j < m; ++j) s(j) = gauss();
      std::sort(s.data(), s.data() + m, std::greater<double>());
      s.array() -= s.mean();
      spectra.push_back(s);
    }
    std::vector<CMat> ks, etas;
    for (int i = 0; i < n; ++i) {
      CMat g(m, m), e(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
          g(r, c) = std::complex<double>(gauss(), gauss());
          e(r, c) = std::complex<double>(gauss(), gauss());
        }
      Eigen::HouseholderQR<CMat> qr(g);
      ks.push_back(CMat(qr.householderQ()));
      etas.push_back(((e - e.adjoint()) / 2.0).eval());
    }
    auto z = momentum_direction(spectra, ks);
    double analytic = 0;
    for (int i = 0; i < n; ++i) analytic += (etas[i] * z[i]).trace().real();
    const double t = 1e-5;
    auto shifted = [&](double tt) {
      std::vector<CMat> kt;
      for (int i = 0; i < n; ++i) kt.push_back(exp_skew_local(tt * etas[i]) * ks[i]);
      return momentum_value(spectra, kt);
    };
    double numeric = (shifted(t) - shifted(-t)) / (2.0 * t);
    double denom = std::max({std::fabs(analytic), std::fabs(numeric), 1e-8});
    if (std::fabs(numeric - analytic) / denom > 1e-5) {
      std::fprintf(stderr, "descent direction %d: analytic %g vs numeric %g\n", rep, analytic,
                   numeric);
      ok = false;
    }
  }

  // Ray steps never increase distance.
  for (int rep = 0; rep < 200; ++rep) {
    auto point = [&]() {
      double r = 3.0 * u01(), th = 2.0 * M_PI * u01();
      return Vec3(std::sinh(r) * std::cos(th), std::sinh(r) * std::sin(th), std::cosh(r));
    };
    Vec3 x = point(), y = point();
    double a = 2.0 * M_PI * u01();
    Vec3 xi(std::cos(a), std::sin(a), 1.0);
    double t = 3.0 * u01();
    double before = hyperbolic_distance(x, y);
    double after = hyperbolic_distance(phi_step(x, xi, t), phi_step(y, xi, t));
    if (after > before + 1e-9) {
      std::fprintf(stderr, "ray step %d expanded %g -> %g\n", rep, before, after);
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  using Fn = bool (*)();
  const std::pair<int, Fn> checks[] = {
      {1, &check_ring_tables},       {2, &check_inequality_lists},
      {3, &check_redundancy},        {4, &check_extreme_rays},
      {5, &check_cone_identities},   {6, &check_weak_equivalence},
      {7, &check_thompson},          {8, &check_polygon_construction},
      {9, &check_fixed_points},      {10, &check_grassmannian_oracle},
      {11, &check_property_suite},
  };
  int failed = 0;
  for (const auto& [num, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d: exception: %s\n", num, e.what());
    }
    std::printf("criterion %d: %s\n", num, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
