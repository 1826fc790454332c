#include "deltagon/serialize.hpp"

#include "deltagon/schubert.hpp"

#include <sstream>
#include <stdexcept>

namespace deltagon {

RatVec parse_vector(const std::string& s) {
  std::vector<Rat> vals;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) vals.push_back(parse_rational(cur));
  if (vals.empty()) throw std::invalid_argument("empty vector");
  RatVec v(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) v(i) = vals[i];
  return v;
}

std::string inequality_line(const RatMat& rows) {
  std::ostringstream os;
  for (int i = 0; i < rows.rows(); ++i) {
    if (i) os << " | ";
    for (int j = 0; j < rows.cols(); ++j) {
      if (j) os << " ";
      os << rat_to_string(rows(i, j));
    }
  }
  os << " <= 0";
  return os.str();
}

std::string sides_line(const std::vector<RatVec>& sides) {
  std::ostringstream os;
  for (size_t i = 0; i < sides.size(); ++i) {
    if (i) os << " ";
    os << "(";
    for (int j = 0; j < sides[i].size(); ++j) {
      if (j) os << ",";
      os << rat_to_string(sides[i](j));
    }
    os << ")";
  }
  return os.str();
}

std::vector<Rat> flatten(const RatMat& rows) {
  std::vector<Rat> out;
  out.reserve(rows.size());
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) out.push_back(rows(i, j));
  return out;
}

bool flat_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

namespace {

void fnv_mix(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

}  // namespace

std::uint64_t data_table_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (RootSystem rs : {RootSystem::A2, RootSystem::B2, RootSystem::G2}) {
    for (int vertex = 1; vertex <= 2; ++vertex) {
      const auto& ring = class_table(rs, vertex);
      fnv_mix(h, std::to_string(ring.m));
      for (const auto& cls : ring.classes) {
        for (int j = 0; j < cls.weight.size(); ++j) fnv_mix(h, rat_to_string(cls.weight(j)));
        fnv_mix(h, std::to_string(cls.degree));
      }
      for (const auto& b : ring.chevalley) fnv_mix(h, b.str());
      for (const auto& a : ring.a) fnv_mix(h, a.str());
      for (int j = 0; j < ring.m; ++j)
        for (int k = 0; k < ring.m; ++k)
          if (j + k < ring.m) fnv_mix(h, ring.structure(j, k).str());
    }
  }
  return h;
}

}  // namespace deltagon
