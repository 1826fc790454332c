#pragma once

#include "deltagon/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace deltagon {

enum class RootSystem { A2, B2, G2 };

RootSystem root_system_from_string(const std::string& name);
std::string to_string(RootSystem rs);

struct WeylElement {
  RatMat matrix;
  std::vector<int> word;  // reduced word, generator indices 1..2
  int length = 0;
  int index = 0;  // position in enumerate_weyl order: by (length, word lex)
};

struct RootSystemData {
  RootSystem name;
  int ambient_dim;                 // 3 for A2 (sum-zero plane), 2 for B2/G2
  int m;                           // dihedral edge label; |W| = 2m
  RatMat gram;                     // inner product on the ambient coordinates
  std::vector<RatMat> simple_reflections;       // s1, s2
  std::vector<RatVec> fundamental_coweights;    // zeta_1, zeta_2 (primitive integer)
  std::vector<RatVec> fundamental_weights;      // functional rows, primitive integer
  std::vector<RatVec> chamber_inequalities;     // functional rows, >= 0 on the chamber
  // chamber_wall_reflection[j]: index into simple_reflections of the
  // reflection across the wall where chamber row j vanishes
  std::array<int, 2> chamber_wall_reflection{};
  std::vector<WeylElement> weyl;                // full group, identity first
  RatMat w0;                                    // longest element

  const WeylElement& identity() const { return weyl.front(); }
  const WeylElement& longest() const { return weyl.back(); }
  // Canonical element with the given matrix; throws if not in the group.
  const WeylElement& element_for(const RatMat& m) const;
  const WeylElement& element_for_word(const std::vector<int>& word) const;
  Rat pair(const RatVec& u, const RatVec& v) const;  // gram inner product
};

const RootSystemData& build_root_system(RootSystem name);

const std::vector<WeylElement>& enumerate_weyl(const RootSystemData& rs);

struct DominantVector {
  RatVec coords;
};

bool is_dominant(const RootSystemData& rs, const RatVec& v);

// (d, w) with w * d = v and d dominant.
std::pair<RatVec, const WeylElement*> dominant_representative(const RootSystemData& rs,
                                                              const RatVec& v);

// h |-> -w0 h, an involution of the chamber.
RatVec sharp(const RootSystemData& rs, const RatVec& h);

// a <= b in the dominance order: <b - a, lambda> >= 0 for both fundamental weights.
bool dominance_leq(const RootSystemData& rs, const RatVec& a, const RatVec& b);

// Coefficients (c1, c2) with v = c1 zeta_1 + c2 zeta_2; requires v in span of coweights
// (for A2: v sum-zero).
std::array<Rat, 2> coweight_coordinates(const RootSystemData& rs, const RatVec& v);

}  // namespace deltagon
