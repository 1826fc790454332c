#include "deltagon/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace deltagon {

namespace {

// Primitive root vector of the reflection s, signed to pair positively with
// the chamber interior.
RatVec root_of_reflection(const RootSystemData& rsd, const RatMat& refl) {
  RatMat shifted = refl + RatMat::Identity(rsd.ambient_dim, rsd.ambient_dim);
  RatMat ker = kernel_rows(shifted);
  if (ker.rows() != 1) throw std::logic_error("reflection must have a line of roots");
  RatVec alpha = primitive_integer(ker.row(0).transpose());
  RatVec interior = RatVec::Zero(rsd.ambient_dim);
  for (const auto& zeta : rsd.fundamental_coweights) interior += zeta;
  Rat p = rsd.pair(alpha, interior);
  if (p == 0) throw std::logic_error("root orthogonal to chamber interior");
  if (p < 0) alpha = -alpha;
  return alpha;
}

std::vector<RatVec> positive_roots(const RootSystemData& rsd) {
  std::vector<RatVec> simple;
  for (const auto& s : rsd.simple_reflections) simple.push_back(root_of_reflection(rsd, s));
  std::vector<RatVec> out;
  for (const auto& w : rsd.weyl) {
    for (const auto& a : simple) {
      RatVec beta = primitive_integer(w.matrix * a);
      RatVec interior = RatVec::Zero(rsd.ambient_dim);
      for (const auto& zeta : rsd.fundamental_coweights) interior += zeta;
      if (rsd.pair(beta, interior) < 0) beta = -beta;
      bool seen = false;
      for (const auto& b : out)
        if (b == beta) { seen = true; break; }
      if (!seen) out.push_back(beta);
    }
  }
  if (static_cast<int>(out.size()) != rsd.m)
    throw std::logic_error("positive root count must equal m");
  return out;
}

RatVec coroot(const RootSystemData& rsd, const RatVec& beta) {
  return (Rat(2) / rsd.pair(beta, beta)) * beta;
}

// Index (1 or 2) of the simple root the vertex coweight pairs nonzero with.
int detected_simple(const RootSystemData& rsd, int vertex) {
  const RatVec& zeta = rsd.fundamental_coweights[vertex - 1];
  std::vector<RatVec> simple;
  for (const auto& s : rsd.simple_reflections) simple.push_back(root_of_reflection(rsd, s));
  int hit = 0;
  for (int i = 0; i < 2; ++i)
    if (rsd.pair(zeta, simple[i]) != 0) {
      if (hit != 0) throw std::logic_error("vertex coweight must detect one simple root");
      hit = i + 1;
    }
  if (hit == 0) throw std::logic_error("vertex coweight detects no simple root");
  return hit;
}

// Functional row o with o . coroot(alpha_k) = delta_{k,target}; for A2 the
// ambient has one extra dimension, gauged by o . (1,..,1) = 0.
RatVec fundamental_weight_row(const RootSystemData& rsd, int target) {
  std::vector<RatVec> simple;
  for (const auto& s : rsd.simple_reflections) simple.push_back(root_of_reflection(rsd, s));
  int dim = rsd.ambient_dim;
  RatMat cols(dim, dim);
  RatVec rhs = RatVec::Zero(dim);
  for (int i = 0; i < 2; ++i) cols.col(i) = coroot(rsd, simple[i]);
  rhs(target - 1) = 1;
  if (dim == 3) cols.col(2) = RatVec::Constant(3, 1);
  RatVec o;
  if (!solve_exact(cols.transpose(), rhs, o))
    throw std::logic_error("fundamental weight system must be solvable");
  return o;
}

// Minimal-length representatives of the cosets w W_P, one per length 0..m-1.
std::vector<const WeylElement*> coset_chain(const RootSystemData& rsd, int detected) {
  int fixed = 3 - detected;  // W_P is generated by the other simple reflection
  const RatMat& sj = rsd.simple_reflections[fixed - 1];
  std::vector<const WeylElement*> chain(rsd.m, nullptr);
  for (const auto& w : rsd.weyl) {
    const WeylElement& other = rsd.element_for(w.matrix * sj);
    if (w.length < other.length) {
      if (chain[w.length] != nullptr)
        throw std::logic_error("coset chain must have one representative per length");
      chain[w.length] = &w;
    }
  }
  for (const auto* p : chain)
    if (p == nullptr) throw std::logic_error("coset chain has a gap");
  return chain;
}

const WeylElement& inverse_of(const RootSystemData& rsd, const WeylElement* w) {
  std::vector<int> rev(w->word.rbegin(), w->word.rend());
  return rsd.element_for_word(rev);
}

// Weight functional of the cycle with vertex cw: the pairing <cw, .> under
// the invariant form, as a primitive integer row. In the A2 ambient the
// functional is only meaningful modulo (1,1,1); the representative with
// minimum entry zero is the canonical one.
RatVec weight_row_of_coweight(const RootSystemData& rsd, const RatVec& cw) {
  RatVec row = rsd.gram * cw;
  if (rsd.ambient_dim == 3) {
    Rat mn = row(0);
    for (int i = 1; i < row.size(); ++i) mn = std::min(mn, row(i));
    for (int i = 0; i < row.size(); ++i) row(i) -= mn;
  }
  return primitive_integer(row);
}

std::vector<Int> seeded_chevalley(RootSystem rs, int vertex) {
  switch (rs) {
    case RootSystem::A2:
      return {1, 1};
    case RootSystem::B2:
      return vertex == 1 ? std::vector<Int>{1, 2, 1} : std::vector<Int>{1, 1, 1};
    case RootSystem::G2:
      return vertex == 1 ? std::vector<Int>{1, 1, 2, 1, 1} : std::vector<Int>{1, 3, 2, 3, 1};
  }
  throw std::invalid_argument("unknown root system");
}

CohomologyRing build_ring(RootSystem rs, int vertex) {
  if (vertex != 1 && vertex != 2) throw std::invalid_argument("vertex index must be 1 or 2");
  const RootSystemData& rsd = build_root_system(rs);
  CohomologyRing ring;
  ring.rs = rs;
  ring.vertex = vertex;
  ring.m = rsd.m;

  int det = detected_simple(rsd, vertex);
  auto chain = coset_chain(rsd, det);
  const RatVec& zeta = rsd.fundamental_coweights[vertex - 1];
  ring.coweights_by_dim.resize(ring.m);
  ring.weights_by_dim.resize(ring.m);
  for (int d = 0; d < ring.m; ++d) {
    RatVec cw = primitive_integer(chain[d]->matrix * zeta);
    ring.coweights_by_dim[d] = cw;
    ring.weights_by_dim[d] = weight_row_of_coweight(rsd, cw);
  }
  ring.classes.resize(ring.m);
  for (int j = 0; j < ring.m; ++j) {
    ring.classes[j].degree = j;
    ring.classes[j].weight = ring.weights_by_dim[ring.m - 1 - j];
    ring.classes[j].coweight = ring.coweights_by_dim[ring.m - 1 - j];
  }

  ring.chevalley = seeded_chevalley(rs, vertex);
  ring.a.assign(ring.m, Int(1));
  for (int j = 1; j < ring.m; ++j) ring.a[j] = ring.a[j - 1] * ring.chevalley[j - 1];
  return ring;
}

}  // namespace

Int CohomologyRing::structure(int j, int k) const {
  if (j < 0 || k < 0 || j > m - 1 || k > m - 1) throw std::out_of_range("degree out of range");
  if (j + k > m - 1) return 0;
  Int num = a[j + k];
  Int den = a[j] * a[k];
  if (num % den != 0) throw std::logic_error("non-integral structure constant");
  return num / den;
}

const CohomologyRing& class_table(RootSystem rs, int vertex) {
  static std::map<std::pair<int, int>, CohomologyRing> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(rs), vertex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_ring(rs, vertex)).first;
  return it->second;
}

std::vector<Int> chevalley_multiply(const CohomologyRing& ring) { return ring.chevalley; }

std::vector<Int> chevalley_row_from_roots(RootSystem rs, int vertex) {
  const RootSystemData& rsd = build_root_system(rs);
  int det = detected_simple(rsd, vertex);
  auto chain = coset_chain(rsd, det);
  RatVec omega = fundamental_weight_row(rsd, det);
  std::vector<RatVec> pos = positive_roots(rsd);
  std::vector<Int> row;
  for (int j = 0; j + 1 < rsd.m; ++j) {
    RatMat refl = inverse_of(rsd, chain[j]).matrix * chain[j + 1]->matrix;
    const RatVec* beta = nullptr;
    for (const auto& b : pos)
      if (refl * b == -b) {
        if (beta != nullptr) throw std::logic_error("ambiguous covering root");
        beta = &b;
      }
    if (beta == nullptr) throw std::logic_error("covering step is not a reflection");
    Rat c = dot(omega, coroot(rsd, *beta));
    if (c <= 0 || denominator(c) != 1)
      throw std::logic_error("Chevalley coefficient must be a positive integer");
    row.push_back(Int(numerator(c)));
  }
  return row;
}

std::vector<std::vector<Int>> structure_constants(const CohomologyRing& ring) {
  std::vector<std::vector<Int>> table(ring.m, std::vector<Int>(ring.m, Int(0)));
  for (int j = 0; j < ring.m; ++j)
    for (int k = 0; k < ring.m; ++k) table[j][k] = ring.structure(j, k);
  return table;
}

ProductMode product_mode_from_string(const std::string& s) {
  if (s == "exact_point" || s == "exact-point" || s == "exact") return ProductMode::ExactPoint;
  if (s == "nonzero") return ProductMode::Nonzero;
  throw std::invalid_argument("unknown product mode: " + s);
}

Int point_coefficient(const CohomologyRing& ring, const std::vector<int>& tuple) {
  int sum = 0;
  for (int j : tuple) {
    if (j < 0 || j > ring.m - 1) throw std::out_of_range("degree out of range");
    sum += j;
  }
  if (sum != ring.m - 1) throw std::invalid_argument("degrees must sum to the top degree");
  Int den(1);
  for (int j : tuple) den *= ring.a[j];
  Int num = ring.a[ring.m - 1];
  if (num % den != 0) throw std::logic_error("non-integral point coefficient");
  return num / den;
}

std::vector<std::vector<int>> point_products(const CohomologyRing& ring, int n, ProductMode mode) {
  if (n < 3) throw std::invalid_argument("need at least three factors");
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(n, 0);
  // Ordered tuples (j_1..j_n), entries 0..m-1, summing to m-1.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      if (remaining == 0 &&
          (mode == ProductMode::Nonzero || point_coefficient(ring, tuple) == 1))
        out.push_back(tuple);
      return;
    }
    int cap = std::min(remaining, ring.m - 1);
    for (int j = 0; j <= cap; ++j) {
      tuple[pos] = j;
      rec(pos + 1, remaining - j);
    }
  };
  rec(0, ring.m - 1);
  return out;
}

}  // namespace deltagon
