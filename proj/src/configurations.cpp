#include "deltagon/configurations.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace deltagon {

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable: return "Stable";
    case StabilityVerdict::Semistable: return "Semistable";
    case StabilityVerdict::Unstable: return "Unstable";
    case StabilityVerdict::Undetermined: return "Undetermined";
  }
  throw std::logic_error("bad verdict");
}

RatVec closing_vector(const ApartmentConfiguration& cfg) {
  const RootSystemData& rsd = build_root_system(cfg.rs);
  RatVec v = RatVec::Zero(rsd.ambient_dim);
  for (const auto& p : cfg.points) {
    if (!is_dominant(rsd, p.h)) throw std::invalid_argument("point type must be dominant");
    if (p.w == nullptr) throw std::invalid_argument("point without Weyl element");
    v += p.w->matrix * p.h;
  }
  return v;
}

ApartmentResult apartment_semistability(const ApartmentConfiguration& cfg) {
  const RootSystemData& rsd = build_root_system(cfg.rs);
  ApartmentResult res;
  RatVec v = closing_vector(cfg);
  bool zero = true;
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != 0) { zero = false; break; }
  if (zero) {
    res.verdict = StabilityVerdict::Semistable;
    res.steepest = v;
    res.dominant_type = v;
    res.note =
        "closing vector is zero: slope vanishes on all apartment directions; "
        "apartment data cannot separate Stable from Semistable";
    return res;
  }
  res.verdict = StabilityVerdict::Unstable;
  res.steepest = v;
  auto [d, u] = dominant_representative(rsd, v);
  res.dominant_type = d;
  auto coords = coweight_coordinates(rsd, d);
  for (int i = 0; i < 2; ++i) {
    if (coords[i] == 0) continue;
    RatVec eta = u->matrix * rsd.fundamental_coweights[i];
    HNVertexReport rep;
    rep.vertex = eta;
    rep.unique_in_orbit = true;
    Rat best = rsd.pair(v, eta);
    for (const auto& w : rsd.weyl) {
      RatVec other = w.matrix * rsd.fundamental_coweights[i];
      if (other == eta) continue;
      if (rsd.pair(v, other) >= best) {
        rep.unique_in_orbit = false;
        break;
      }
    }
    res.hn_vertices.push_back(std::move(rep));
  }
  return res;
}

int dim_intersection(const RatMat& U, const RatMat& V) {
  if (U.rows() != V.rows()) throw std::invalid_argument("ambient dimension mismatch");
  RatMat joint(U.rows(), U.cols() + V.cols());
  joint.leftCols(U.cols()) = U;
  joint.rightCols(V.cols()) = V;
  return rank_of(U) + rank_of(V) - rank_of(joint);
}

RatMat perp(const RatMat& V, const RatMat& b) {
  // x in perp iff (V^T b) x = 0
  RatMat rows = kernel_rows(RatMat(V.transpose() * b));
  return rows.transpose();
}

TitsCosine sl_tits_cosine(const RatMat& U, const RatMat& V, int n_ambient) {
  int p = rank_of(U), q = rank_of(V);
  if (p <= 0 || q <= 0 || p >= n_ambient || q >= n_ambient)
    throw std::invalid_argument("subspaces must be proper and nonzero");
  int s = dim_intersection(U, V);
  TitsCosine out;
  out.numerator = Int(s) * n_ambient - Int(p) * q;
  out.radicand = Int(p) * (n_ambient - p) * Int(q) * (n_ambient - q);
  return out;
}

Strategy strategy_from_string(const std::string& s, int* mc_samples) {
  if (s == "spans") return Strategy::Spans;
  if (s == "lattice") return Strategy::Lattice;
  if (s.rfind("mc:", 0) == 0) {
    int k = std::stoi(s.substr(3));
    if (k <= 0) throw std::invalid_argument("sample count must be positive");
    if (mc_samples) *mc_samples = k;
    return Strategy::MonteCarlo;
  }
  if (s == "mc") {
    if (mc_samples) *mc_samples = 100;
    return Strategy::MonteCarlo;
  }
  throw std::invalid_argument("unknown strategy: " + s);
}

namespace {

// Canonical row-reduced basis, used as the identity of a subspace.
RatMat canonical_subspace(const RatMat& columns) {
  return row_space_basis(RatMat(columns.transpose()));
}

bool same_matrix(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

struct SubspaceSet {
  std::vector<RatMat> canon;  // canonical row bases
  bool add(const RatMat& columns) {
    if (rank_of(columns) == 0) return false;
    RatMat c = canonical_subspace(columns);
    for (const auto& x : canon)
      if (same_matrix(x, c)) return false;
    canon.push_back(c);
    return true;
  }
};

RatMat span_columns(const RatMat& A, const RatMat& B) {
  RatMat joint(A.rows(), A.cols() + B.cols());
  joint.leftCols(A.cols()) = A;
  joint.rightCols(B.cols()) = B;
  return joint;
}

RatMat intersect_columns(const RatMat& A, const RatMat& B) {
  // x = A u = B w: solve [A -B] (u;w) = 0; intersection spanned by A u parts
  RatMat joint(A.rows(), A.cols() + B.cols());
  joint.leftCols(A.cols()) = A;
  joint.rightCols(B.cols()) = -B;
  RatMat null_rows = kernel_rows(joint);  // rows are (u; w)
  RatMat out(A.rows(), null_rows.rows());
  for (int i = 0; i < null_rows.rows(); ++i) {
    RatVec u = null_rows.row(i).head(A.cols()).transpose();
    out.col(i) = A * u;
  }
  return out;
}

void validate_measure(const GrassmannianMeasure& m, bool need_form) {
  if (m.n_ambient <= 0) throw std::invalid_argument("ambient dimension must be positive");
  if (m.q <= 0 || m.q >= m.n_ambient)
    throw std::invalid_argument("atom dimension must be proper and nonzero");
  for (const auto& a : m.atoms) {
    if (a.basis.rows() != m.n_ambient || rank_of(a.basis) != m.q)
      throw std::invalid_argument("atom basis must have rank q in the ambient space");
    if (a.mass <= 0) throw std::invalid_argument("atom mass must be positive");
  }
  if (need_form) {
    if (!m.form.has_value()) throw std::invalid_argument("isotropic criterion needs a form");
    const RatMat& b = *m.form;
    if (b.rows() != m.n_ambient || b.cols() != m.n_ambient)
      throw std::invalid_argument("form must be square of the ambient dimension");
    if (rank_of(b) != m.n_ambient) throw std::invalid_argument("form must be nondegenerate");
    for (const auto& a : m.atoms) {
      RatMat g = a.basis.transpose() * b * a.basis;
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
          if (g(i, j) != 0) throw std::invalid_argument("atoms must be isotropic for the form");
    }
  }
}

std::vector<RatMat> candidate_family(const GrassmannianMeasure& m, Strategy strategy,
                                     int mc_samples, unsigned seed, int lattice_cap,
                                     bool* cap_exceeded,
                                     const std::vector<RatMat>* extra_seeds = nullptr) {
  SubspaceSet set;
  std::vector<RatMat> columns;
  auto push = [&](const RatMat& c) {
    int r = rank_of(c);
    if (r == 0 || r >= m.n_ambient) return;
    if (set.add(c)) columns.push_back(c);
  };
  if (strategy == Strategy::Spans) {
    const size_t k = m.atoms.size();
    if (k > 20) throw std::invalid_argument("too many atoms for subset enumeration");
    for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
      RatMat joint(m.n_ambient, 0);
      for (size_t i = 0; i < k; ++i)
        if (mask & (size_t{1} << i)) joint = span_columns(joint, m.atoms[i].basis);
      push(joint);
    }
  } else if (strategy == Strategy::Lattice) {
    for (const auto& a : m.atoms) push(a.basis);
    if (extra_seeds)
      for (const auto& s : *extra_seeds) push(s);
    size_t frontier = 0;
    while (frontier < columns.size() && !*cap_exceeded) {
      size_t f0 = frontier++;
      RatMat c = columns[f0];
      for (size_t j = 0; j < f0 && !*cap_exceeded; ++j) {
        push(span_columns(c, columns[j]));
        push(intersect_columns(c, columns[j]));
        if (static_cast<int>(columns.size()) > lattice_cap) *cap_exceeded = true;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dims(1, m.n_ambient - 1);
    for (int t = 0; t < mc_samples; ++t) {
      int p = dims(rng);
      RatMat c(m.n_ambient, p);
      for (int i = 0; i < m.n_ambient; ++i)
        for (int j = 0; j < p; ++j) c(i, j) = entry(rng);
      if (rank_of(c) == p) push(c);
    }
  }
  return columns;
}

}  // namespace

GrassmannianResult sl_semistable(const GrassmannianMeasure& m, Strategy strategy, int mc_samples,
                                 unsigned seed, int lattice_cap) {
  validate_measure(m, false);
  GrassmannianResult res;
  if (m.atoms.empty()) {
    res.verdict = StabilityVerdict::Semistable;
    res.note = "empty measure";
    return res;
  }
  Rat total(0);
  for (const auto& a : m.atoms) total += a.mass;
  auto family =
      candidate_family(m, strategy, mc_samples, seed, lattice_cap, &res.cap_exceeded);
  bool all_strict = true;
  for (const auto& U : family) {
    int p = rank_of(U);
    Rat lhs(0);
    for (const auto& a : m.atoms) lhs += a.mass * dim_intersection(U, a.basis);
    lhs *= m.n_ambient;
    Rat rhs = Rat(p) * m.q * total;
    if (lhs > rhs) {
      res.verdict = StabilityVerdict::Unstable;
      res.witness = U;
      return res;
    }
    if (lhs == rhs) all_strict = false;
  }
  if (strategy == Strategy::Spans && m.q == 1) {
    res.verdict = all_strict ? StabilityVerdict::Stable : StabilityVerdict::Semistable;
    res.note = "span family is complete for q = 1";
  } else {
    res.verdict = StabilityVerdict::Undetermined;
    res.note = res.cap_exceeded ? "no violation found; lattice cap exceeded"
                                : "no violation found in the candidate family";
  }
  return res;
}

GrassmannianResult iso_semistable(const GrassmannianMeasure& m, Strategy strategy, int mc_samples,
                                  unsigned seed, int lattice_cap) {
  validate_measure(m, true);
  GrassmannianResult res;
  if (m.atoms.empty()) {
    res.verdict = StabilityVerdict::Semistable;
    res.note = "empty measure";
    return res;
  }
  const RatMat& b = *m.form;
  Rat total(0);
  for (const auto& a : m.atoms) total += a.mass;
  std::vector<RatMat> perps;
  for (const auto& a : m.atoms) perps.push_back(perp(a.basis, b));
  // the perps seed the lattice so candidates like V_i cap V_j^perp appear
  auto family = candidate_family(m, strategy, mc_samples, seed, lattice_cap,
                                 &res.cap_exceeded, &perps);
  for (const auto& U : family) {
    // keep only b-isotropic candidates
    RatMat g = U.transpose() * b * U;
    bool isotropic = true;
    for (int i = 0; i < g.rows() && isotropic; ++i)
      for (int j = 0; j < g.cols(); ++j)
        if (g(i, j) != 0) { isotropic = false; break; }
    if (!isotropic) continue;
    int p = rank_of(U);
    Rat lhs(0);
    for (size_t i = 0; i < m.atoms.size(); ++i)
      lhs += m.atoms[i].mass *
             (dim_intersection(U, m.atoms[i].basis) + dim_intersection(U, perps[i]));
    Rat rhs = Rat(p) * total;
    if (lhs > rhs) {
      res.verdict = StabilityVerdict::Unstable;
      res.witness = U;
      return res;
    }
  }
  res.verdict = StabilityVerdict::Undetermined;
  res.note = res.cap_exceeded
                 ? "no isotropic violation found; lattice cap exceeded"
                 : "no violation found among isotropic members of the candidate family";
  return res;
}

}  // namespace deltagon
