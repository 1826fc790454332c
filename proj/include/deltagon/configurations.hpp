#pragma once

#include "deltagon/coxeter.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltagon {

enum class StabilityVerdict { Stable, Semistable, Unstable, Undetermined };
std::string to_string(StabilityVerdict v);

// Ideal point with mass folded in: the vector w . h, h dominant. A zero h is
// a zero-mass point and is allowed.
struct ApartmentPoint {
  const WeylElement* w = nullptr;
  RatVec h;
};

struct ApartmentConfiguration {
  RootSystem rs;
  std::vector<ApartmentPoint> points;
};

// Sum of the point vectors; the negative gradient of the weighted Busemann
// function at the base point.
RatVec closing_vector(const ApartmentConfiguration& cfg);

struct HNVertexReport {
  RatVec vertex;
  bool unique_in_orbit = false;  // strict pairing maximum within its W-orbit
};

struct ApartmentResult {
  StabilityVerdict verdict = StabilityVerdict::Semistable;
  RatVec steepest;       // closing vector, when unstable
  RatVec dominant_type;  // its dominant representative
  std::vector<HNVertexReport> hn_vertices;
  std::string note;
};

// Slope on apartment directions is -<v, .>, so the configuration is unstable
// iff the closing vector v is nonzero; the steepest direction is v and the
// simplex it spans provides the filtration vertices. With v = 0 the slope
// vanishes on every apartment direction, so stability cannot be separated
// from semistability by apartment data: reports Semistable with a note.
ApartmentResult apartment_semistability(const ApartmentConfiguration& cfg);

struct GrassmannianAtom {
  RatMat basis;  // columns span the subspace
  Rat mass;
};

struct GrassmannianMeasure {
  int n_ambient = 0;
  int q = 0;  // common dimension of the atom subspaces
  std::vector<GrassmannianAtom> atoms;
  std::optional<RatMat> form;  // symmetric or alternating, for the isotropic case
};

// dim(U cap V) for column-span matrices.
int dim_intersection(const RatMat& U, const RatMat& V);

// b-orthogonal complement of the column span (columns of the result).
RatMat perp(const RatMat& V, const RatMat& b);

// cos angle([U],[V]) = numerator / sqrt(radicand) with
// numerator = s n - p q and radicand = p(n-p) q(n-q), s = dim(U cap V).
// Exact; only the sign of the numerator carries the criterion.
struct TitsCosine {
  Int numerator;
  Int radicand;
};
TitsCosine sl_tits_cosine(const RatMat& U, const RatMat& V, int n_ambient);

enum class Strategy { Spans, Lattice, MonteCarlo };
Strategy strategy_from_string(const std::string& s, int* mc_samples);

struct GrassmannianResult {
  StabilityVerdict verdict = StabilityVerdict::Undetermined;
  std::optional<RatMat> witness;  // violating subspace, columns
  bool cap_exceeded = false;
  std::string note;
};

// Criterion: for every proper nonzero subspace U,
//   n * sum_i m_i dim(U cap V_i) <= dim(U) * q * |mu|.
// Spans strategy enumerates spans of atom subsets and is complete for q = 1
// (certifies Semistable, or Stable when every inequality is strict);
// lattice closes the atoms under sum and intersection up to a cap;
// Monte-Carlo samples random subspaces; both can only falsify.
GrassmannianResult sl_semistable(const GrassmannianMeasure& m, Strategy strategy,
                                 int mc_samples = 0, unsigned seed = 1, int lattice_cap = 10000);

// Isotropic criterion: for every nonzero b-isotropic U,
//   sum_i m_i (dim(U cap V_i) + dim(U cap V_i-perp)) <= dim(U) * |mu|.
// Candidates are the isotropic members of the strategy family; no candidate
// family is known complete, so a clean pass returns Undetermined (Semistable
// only for the empty measure).
GrassmannianResult iso_semistable(const GrassmannianMeasure& m, Strategy strategy,
                                  int mc_samples = 0, unsigned seed = 1, int lattice_cap = 10000);

}  // namespace deltagon
