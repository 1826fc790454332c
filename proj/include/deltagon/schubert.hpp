#pragma once

#include "deltagon/coxeter.hpp"

namespace deltagon {

struct SchubertClass {
  int degree;       // cohomological degree j (cycle dimension is m-1-j)
  RatVec weight;    // functional row, primitive integer
  RatVec coweight;  // vertex of the cycle, primitive integer
};

struct CohomologyRing {
  RootSystem rs;
  int vertex;  // 1 or 2
  int m;       // number of classes; dim_C(G/P) = m-1
  std::vector<SchubertClass> classes;    // indexed by degree 0..m-1
  std::vector<RatVec> coweights_by_dim;  // cycle dimension 0..m-1
  std::vector<RatVec> weights_by_dim;
  std::vector<Int> chevalley;  // b_j for j = 0..m-2: gamma_1 * gamma_j = b_j gamma_{j+1}
  std::vector<Int> a;          // gamma_1^j = a_j gamma_j

  // c_{jk} with gamma_j * gamma_k = c_{jk} gamma_{j+k}; 0 when j+k > m-1.
  Int structure(int j, int k) const;
};

const CohomologyRing& class_table(RootSystem rs, int vertex);

// The gamma_1 row of the shipped ring (b_0..b_{m-2}).
std::vector<Int> chevalley_multiply(const CohomologyRing& ring);

// Chevalley row recomputed from root data alone (covering relation in W^P,
// coefficients <omega, alpha_vee>). Verification layer: matches the shipped
// rows per vertex for A2 and B2; for G2 it attaches the two rows to the
// opposite vertices, and the shipped assignment is the one whose n=3 system
// has the documented redundancy and extreme-ray structure.
std::vector<Int> chevalley_row_from_roots(RootSystem rs, int vertex);

// Full table c_{jk} for 0 <= j,k <= m-1 (zero above the top degree).
std::vector<std::vector<Int>> structure_constants(const CohomologyRing& ring);

enum class ProductMode { ExactPoint, Nonzero };
ProductMode product_mode_from_string(const std::string& s);

// Ordered degree tuples (j_1..j_n) with sum m-1 whose product of classes is
// the point class exactly (ExactPoint) or merely nonzero (Nonzero).
std::vector<std::vector<int>> point_products(const CohomologyRing& ring, int n, ProductMode mode);

// Coefficient of the point class in gamma_{j_1} ... gamma_{j_n} (tuple summing to m-1).
Int point_coefficient(const CohomologyRing& ring, const std::vector<int>& tuple);

}  // namespace deltagon
