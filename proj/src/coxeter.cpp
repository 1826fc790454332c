#include "deltagon/coxeter.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace deltagon {

RootSystem root_system_from_string(const std::string& name) {
  if (name == "A2") return RootSystem::A2;
  if (name == "B2" || name == "C2") return RootSystem::B2;
  if (name == "G2") return RootSystem::G2;
  throw std::invalid_argument("unknown root system: " + name);
}

std::string to_string(RootSystem rs) {
  switch (rs) {
    case RootSystem::A2: return "A2";
    case RootSystem::B2: return "B2";
    case RootSystem::G2: return "G2";
  }
  throw std::logic_error("bad root system enum");
}

namespace {

RatMat mat_from(std::initializer_list<std::initializer_list<Rat>> rows) {
  RatMat m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Rat& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<int> key_of(const RatMat& m) {
  std::vector<int> k;
  k.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      // group matrices here are integer with small entries
      k.push_back(static_cast<int>(numerator(m(i, j))));
    }
  return k;
}

void enumerate_group(RootSystemData& rs) {
  std::map<std::vector<int>, int> seen;
  std::vector<WeylElement> elems;
  WeylElement id;
  id.matrix = RatMat::Identity(rs.ambient_dim, rs.ambient_dim);
  id.word = {};
  id.length = 0;
  seen[key_of(id.matrix)] = 0;
  elems.push_back(id);
  std::size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    std::size_t frontier_end = elems.size();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
      for (int g = 1; g <= 2; ++g) {
        RatMat m = elems[e].matrix * rs.simple_reflections[g - 1];
        auto k = key_of(m);
        if (seen.count(k)) continue;
        WeylElement w;
        w.matrix = m;
        w.word = elems[e].word;
        w.word.push_back(g);
        w.length = elems[e].length + 1;
        seen[k] = static_cast<int>(elems.size());
        elems.push_back(w);
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(elems.begin(), elems.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < elems.size(); ++i) elems[i].index = static_cast<int>(i);
  rs.weyl = std::move(elems);
  rs.w0 = rs.weyl.back().matrix;
}

RootSystemData make(RootSystem name) {
  RootSystemData rs;
  rs.name = name;
  switch (name) {
    case RootSystem::A2: {
      rs.ambient_dim = 3;
      rs.m = 3;
      rs.gram = RatMat::Identity(3, 3);
      rs.simple_reflections = {
          mat_from({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),   // swap x,y
          mat_from({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})};  // swap y,z
      rs.fundamental_coweights = {rat_vec({2, -1, -1}), rat_vec({1, 1, -2})};
      rs.fundamental_weights = {rat_vec({1, 0, 0}), rat_vec({0, 0, -1})};
      rs.chamber_inequalities = {rat_vec({1, -1, 0}), rat_vec({0, 1, -1})};
      break;
    }
    case RootSystem::B2: {
      rs.ambient_dim = 2;
      rs.m = 4;
      rs.gram = RatMat::Identity(2, 2);
      rs.simple_reflections = {mat_from({{1, 0}, {0, -1}}),  // fixes (1,0)
                               mat_from({{0, 1}, {1, 0}})};  // fixes (1,1)
      rs.fundamental_coweights = {rat_vec({1, 0}), rat_vec({1, 1})};
      rs.fundamental_weights = {rat_vec({1, 0}), rat_vec({1, 1})};
      rs.chamber_inequalities = {rat_vec({1, -1}), rat_vec({0, 1})};
      break;
    }
    case RootSystem::G2: {
      rs.ambient_dim = 2;
      rs.m = 6;
      rs.gram = mat_from({{3, Rat(3, 2)}, {Rat(3, 2), 1}});
      rs.simple_reflections = {mat_from({{1, 1}, {0, -1}}),   // fixes (1,0)
                               mat_from({{-1, 0}, {3, 1}})};  // fixes (0,1)
      rs.fundamental_coweights = {rat_vec({1, 0}), rat_vec({0, 1})};
      rs.fundamental_weights = {rat_vec({2, 1}), rat_vec({3, 2})};
      rs.chamber_inequalities = {rat_vec({1, 0}), rat_vec({0, 1})};
      break;
    }
  }
  enumerate_group(rs);
  // Match each chamber wall with the simple reflection across it: the row
  // functional is negated exactly by that reflection.
  for (int j = 0; j < 2; ++j) {
    int hit = -1;
    for (int i = 0; i < 2; ++i) {
      RatVec composed = rs.simple_reflections[i].transpose() * rs.chamber_inequalities[j];
      if (composed == -rs.chamber_inequalities[j]) {
        if (hit >= 0) throw std::logic_error("chamber wall matches two reflections");
        hit = i;
      }
    }
    if (hit < 0) throw std::logic_error("chamber wall matches no simple reflection");
    rs.chamber_wall_reflection[j] = hit;
  }
  return rs;
}

}  // namespace

const RootSystemData& build_root_system(RootSystem name) {
  static std::mutex mu;
  static std::map<RootSystem, RootSystemData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make(name)).first;
  return it->second;
}

const std::vector<WeylElement>& enumerate_weyl(const RootSystemData& rs) { return rs.weyl; }

const WeylElement& RootSystemData::element_for(const RatMat& m) const {
  for (const auto& w : weyl)
    if (w.matrix == m) return w;
  throw std::invalid_argument("matrix is not a Weyl group element");
}

const WeylElement& RootSystemData::element_for_word(const std::vector<int>& word) const {
  RatMat m = RatMat::Identity(ambient_dim, ambient_dim);
  for (int g : word) {
    if (g < 1 || g > 2) throw std::invalid_argument("generator index out of range in word");
    m = m * simple_reflections[g - 1];
  }
  return element_for(m);
}

Rat RootSystemData::pair(const RatVec& u, const RatVec& v) const {
  return (u.transpose() * gram * v)(0, 0);
}

bool is_dominant(const RootSystemData& rs, const RatVec& v) {
  if (v.size() != rs.ambient_dim) throw std::invalid_argument("wrong vector dimension");
  if (rs.name == RootSystem::A2 && v.sum() != 0) return false;
  for (const auto& row : rs.chamber_inequalities)
    if (dot(row, v) < 0) return false;
  return true;
}

std::pair<RatVec, const WeylElement*> dominant_representative(const RootSystemData& rs,
                                                              const RatVec& v) {
  if (v.size() != rs.ambient_dim) throw std::invalid_argument("wrong vector dimension");
  RatVec d = v;
  RatMat w = RatMat::Identity(rs.ambient_dim, rs.ambient_dim);
  // Folding terminates: each reflection strictly increases the pairing with
  // the chamber-interior direction sum of fundamental coweights.
  for (int guard = 0; guard < 4 * rs.m; ++guard) {
    bool moved = false;
    for (int j = 0; j < 2; ++j) {
      if (dot(rs.chamber_inequalities[j], d) < 0) {
        const RatMat& s = rs.simple_reflections[rs.chamber_wall_reflection[j]];
        d = s * d;
        w = w * s;
        moved = true;
        break;
      }
    }
    if (!moved) return {d, &rs.element_for(w)};
  }
  throw std::logic_error("chamber folding failed to terminate");
}

RatVec sharp(const RootSystemData& rs, const RatVec& h) {
  return dominant_representative(rs, RatVec(-h)).first;
}

bool dominance_leq(const RootSystemData& rs, const RatVec& a, const RatVec& b) {
  RatVec d = b - a;
  for (const auto& lam : rs.fundamental_weights)
    if (dot(lam, d) < 0) return false;
  return true;
}

std::array<Rat, 2> coweight_coordinates(const RootSystemData& rs, const RatVec& v) {
  RatMat a(rs.ambient_dim, 2);
  a.col(0) = rs.fundamental_coweights[0];
  a.col(1) = rs.fundamental_coweights[1];
  RatVec x;
  if (!solve_exact(a, v, x))
    throw std::invalid_argument("vector is not in the span of the fundamental coweights");
  return {x(0), x(1)};
}

}  // namespace deltagon
