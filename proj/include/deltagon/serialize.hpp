#pragma once

#include "deltagon/inequalities.hpp"
#include "deltagon/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace deltagon {

// Comma separated rationals, e.g. "2,-1,-1".
RatVec parse_vector(const std::string& s);

// One inequality per line: coefficients grouped per side,
// "c11 c12 ... | c21 c22 ... | ... <= 0".
std::string inequality_line(const RatMat& rows);

// Side groups in the printed generator layout: "(0,3) (1,0) (2,0)".
std::string sides_line(const std::vector<RatVec>& sides);

// Flattened row-major coefficients for lexicographic output ordering.
std::vector<Rat> flatten(const RatMat& rows);
bool flat_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

// FNV-1a over every shipped class table (weights, degree steps, a-sequence,
// structure constants); changes when any seeded table changes.
std::uint64_t data_table_checksum();

}  // namespace deltagon
