#include "deltagon/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace deltagon {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid(num) || !valid(den) || Int(den) == 0)
    throw std::invalid_argument("bad rational literal: " + s);
  return Rat(Int(num), Int(den));
}

std::string rat_to_string(const Rat& r) {
  return r.str();
}

RatVec rat_vec(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

RatVec primitive_integer(const RatVec& v) {
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v(i)));
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, Int(numerator(v(i)) * (lcm_den / denominator(v(i)))));
  if (g == 0) return RatVec::Zero(v.size());
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = Rat(Int(numerator(v(i)) * (lcm_den / denominator(v(i)))) / g);
  return out;
}

bool is_integer_vector(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (denominator(v(i)) != 1) return false;
  return true;
}

Int integer_content(const RatVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, numerator(v(i)));
  return g;
}

int rank_of(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<RatMat> lu(m);
  return static_cast<int>(lu.rank());
}

RatMat kernel_rows(const RatMat& m) {
  if (m.rows() == 0) {
    return RatMat::Identity(m.cols(), m.cols());
  }
  Eigen::FullPivLU<RatMat> lu(m);
  if (lu.rank() == m.cols()) return RatMat(0, m.cols());
  RatMat k = lu.kernel();  // columns span the kernel
  RatMat out(k.cols(), m.cols());
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.row(j) = k.col(j).transpose();
  return out;
}

RatMat row_space_basis(const RatMat& m) {
  RatMat a = m;
  Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    a.row(r) /= a(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && a(i, c) != 0) a.row(i) -= a(i, c) * a.row(r);
    ++r;
  }
  return a.topRows(r);
}

bool solve_exact(const RatMat& a, const RatVec& b, RatVec& x) {
  Eigen::FullPivLU<RatMat> lu(a);
  x = lu.solve(b);
  RatVec resid = a * x - b;
  for (Eigen::Index i = 0; i < resid.size(); ++i)
    if (resid(i) != 0) return false;
  return true;
}

}  // namespace deltagon
