#include "deltagon/polygons.hpp"

#include "deltagon/inequalities.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace deltagon {

namespace {

using Cplx = std::complex<double>;

// Deterministic uniform in (0,1) from the raw 64-bit stream, so results do
// not depend on the standard library's distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

struct Gaussian {
  std::mt19937_64 rng;
  bool have_spare = false;
  double spare = 0.0;

  explicit Gaussian(unsigned long long seed) : rng(seed) {}

  double operator()() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare = r * std::sin(a);
    have_spare = true;
    return r * std::cos(a);
  }

  Cplx complex_unit() { return Cplx((*this)(), (*this)()); }
};

CMat random_complex(Gaussian& g, int m) {
  CMat z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) z(i, j) = g.complex_unit();
  return z;
}

CMat random_unitary(Gaussian& g, int m) {
  Eigen::HouseholderQR<CMat> qr(random_complex(g, m));
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    Cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 1e-300) ? d / a : Cplx(1, 0);
  }
  return q;
}

CMat random_traceless_hermitian(Gaussian& g, int m) {
  CMat z = random_complex(g, m);
  CMat h = (z + z.adjoint()) / 2.0;
  h -= (h.trace() / static_cast<double>(m)) * CMat::Identity(m, m);
  return h;
}

CMat random_sl(Gaussian& g, int m) {
  for (;;) {
    CMat z = random_complex(g, m);
    Cplx det = z.determinant();
    if (std::abs(det) < 1e-8) continue;
    return z / std::pow(det, 1.0 / static_cast<double>(m));
  }
}

void check_hermitian(const CMat& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  double scale = 1.0 + a.cwiseAbs().maxCoeff();
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("matrix is not Hermitian");
}

DVec sorted_desc(DVec v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

// e^{Z} for skew-Hermitian Z, via the spectral decomposition of -iZ; the
// result is unitary by construction.
CMat exp_skew(const CMat& z) {
  CMat h = Cplx(0, -1) * z;
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& lam = es.eigenvalues();
  CMat d = CMat::Zero(z.rows(), z.cols());
  for (int i = 0; i < lam.size(); ++i) d(i, i) = std::exp(Cplx(0, lam(i)));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

double minkowski(const Vec3& x, const Vec3& y) {
  return x(0) * y(0) + x(1) * y(1) - x(2) * y(2);
}

// Projects back to the sheet when the quadratic form still has the right
// sign. Far from the origin the form is lost to cancellation; the point is
// passed through unchanged and the caller's divergence cap decides.
Vec3 renormalize(Vec3 x) {
  double q = -minkowski(x, x);
  if (q > 0) return x / std::sqrt(q);
  return x;
}

}  // namespace

DVec delta_length_p(const CMat& A, const CMat& B, double herm_tol) {
  check_hermitian(A, herm_tol);
  check_hermitian(B, herm_tol);
  if (A.rows() != B.rows()) throw std::invalid_argument("size mismatch");
  Eigen::SelfAdjointEigenSolver<CMat> es(B - A);
  return sorted_desc(es.eigenvalues());
}

DVec delta_length_X(const CMat& g1, const CMat& g2) {
  if (g1.rows() != g1.cols() || g2.rows() != g2.cols() || g1.rows() != g2.rows())
    throw std::invalid_argument("size mismatch");
  Eigen::JacobiSVD<CMat> s1(g1);
  double smin = s1.singularValues()(s1.singularValues().size() - 1);
  if (smin < 1e-12 * s1.singularValues()(0) || smin == 0.0)
    throw std::invalid_argument("singular input");
  CMat m = g1.partialPivLu().solve(g2);
  Eigen::JacobiSVD<CMat> sv(m);
  DVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    double s = sv.singularValues()(i);
    if (s <= 0) throw std::invalid_argument("singular input");
    out(i) = std::log(s);
  }
  return sorted_desc(out);  // already non-increasing, kept for clarity
}

MomentumResult construct_polygon_momentum(const std::vector<DVec>& spectra, double tol,
                                          int max_iter, int restarts,
                                          unsigned long long seed) {
  const int n = static_cast<int>(spectra.size());
  if (n < 3) throw std::invalid_argument("need at least three spectra");
  const int m = static_cast<int>(spectra[0].size());
  for (const auto& h : spectra) {
    if (static_cast<int>(h.size()) != m) throw std::invalid_argument("spectra size mismatch");
    for (int i = 0; i + 1 < m; ++i)
      if (h(i) < h(i + 1) - 1e-12) throw std::invalid_argument("spectrum not sorted");
    if (std::abs(h.sum()) > 1e-8 * (1.0 + h.cwiseAbs().maxCoeff()))
      throw std::invalid_argument("spectrum does not sum to zero");
  }

  std::vector<CMat> diag(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = CMat::Zero(m, m);
    for (int j = 0; j < m; ++j) diag[i](j, j) = spectra[i](j);
  }

  Gaussian g(seed);
  MomentumResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int attempt = 0; attempt <= restarts; ++attempt) {
    std::vector<CMat> k(n);
    for (int i = 0; i < n; ++i)
      k[i] = (attempt == 0) ? CMat::Identity(m, m) : random_unitary(g, m);

    std::vector<CMat> a(n);
    auto sides = [&]() {
      for (int i = 0; i < n; ++i) a[i] = k[i] * diag[i] * k[i].adjoint();
    };
    sides();
    CMat s = CMat::Zero(m, m);
    for (const auto& ai : a) s += ai;
    double f = s.squaredNorm();
    double eta = 1.0 / (2.0 + 2.0 * std::sqrt(f));

    for (int iter = 0; iter < max_iter; ++iter) {
      if (std::sqrt(f) < tol) break;
      std::vector<CMat> z(n);
      double gnorm2 = 0;
      for (int i = 0; i < n; ++i) {
        z[i] = 2.0 * (a[i] * s - s * a[i]);
        gnorm2 += z[i].squaredNorm();
      }
      if (gnorm2 < 1e-28 * (1.0 + f)) break;  // critical point, restart

      bool stepped = false;
      for (int half = 0; half < 48; ++half) {
        std::vector<CMat> kt(n);
        for (int i = 0; i < n; ++i) kt[i] = exp_skew(eta * z[i]) * k[i];
        CMat st = CMat::Zero(m, m);
        for (int i = 0; i < n; ++i) st += kt[i] * diag[i] * kt[i].adjoint();
        double ft = st.squaredNorm();
        if (ft <= f - 0.25 * eta * gnorm2) {
          k = std::move(kt);
          s = std::move(st);
          f = ft;
          sides();
          eta *= 2.0;
          stepped = true;
          break;
        }
        eta /= 2.0;
      }
      if (!stepped) break;
    }

    double res = std::sqrt(f);
    if (res < best.residual) {
      best.residual = res;
      for (auto& ai : a) ai = ((ai + ai.adjoint()) / 2.0).eval();
      best.sides = a;
    }
    if (best.residual < tol) break;
  }

  best.success = best.residual < tol;
  return best;
}

namespace {

std::vector<CMat> momentum_sides(const std::vector<DVec>& spectra, const std::vector<CMat>& ks) {
  if (spectra.size() != ks.size() || spectra.empty())
    throw std::invalid_argument("spectra and unitaries must pair up");
  const int m = static_cast<int>(spectra[0].size());
  std::vector<CMat> a(spectra.size());
  for (size_t i = 0; i < spectra.size(); ++i) {
    if (static_cast<int>(spectra[i].size()) != m || ks[i].rows() != m || ks[i].cols() != m)
      throw std::invalid_argument("size mismatch");
    a[i] = ks[i] * spectra[i].asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
           ks[i].adjoint();
  }
  return a;
}

}  // namespace

double momentum_value(const std::vector<DVec>& spectra, const std::vector<CMat>& ks) {
  auto a = momentum_sides(spectra, ks);
  CMat s = CMat::Zero(a[0].rows(), a[0].cols());
  for (const auto& ai : a) s += ai;
  return s.squaredNorm();
}

std::vector<CMat> momentum_direction(const std::vector<DVec>& spectra,
                                     const std::vector<CMat>& ks) {
  auto a = momentum_sides(spectra, ks);
  CMat s = CMat::Zero(a[0].rows(), a[0].cols());
  for (const auto& ai : a) s += ai;
  std::vector<CMat> z(a.size());
  for (size_t i = 0; i < a.size(); ++i) z[i] = 2.0 * (a[i] * s - s * a[i]);
  return z;
}

double hyperbolic_distance(const Vec3& x, const Vec3& y) {
  // chord formula <x-y,x-y> = 4 sinh^2(d/2) resolves small separations that
  // acosh(-<x,y>) loses to rounding near 1
  Vec3 diff = x - y;
  double q = minkowski(diff, diff);
  if (q <= 0) return 0.0;
  if (q < 1.0) return 2.0 * std::asinh(std::sqrt(q) / 2.0);
  return std::acosh(std::max(1.0, -minkowski(x, y)));
}

Vec3 phi_step(const Vec3& x, const Vec3& xi, double t) {
  if (t == 0.0) return x;
  double c = -minkowski(xi, x);
  Vec3 y = std::exp(-t) * x + (std::sinh(t) / c) * xi;
  return renormalize(y);
}

FixedPointResult phi_fixed_point(const HyperbolicConfig& cfg, double tol, int max_iter) {
  for (const auto& atom : cfg.atoms)
    if (atom.mass < 0) throw std::invalid_argument("negative mass");
  const int n = static_cast<int>(cfg.atoms.size());
  std::vector<Vec3> xi(n);
  for (int i = 0; i < n; ++i)
    xi[i] = Vec3(std::cos(cfg.atoms[i].angle), std::sin(cfg.atoms[i].angle), 1.0);

  // Beyond this height the offset c = -<xi,x> in phi_step cancels in double
  // precision and a step can teleport the iterate, so anything higher is
  // declared an escape on the spot.
  const double cap = 1e6;
  Vec3 y(0, 0, 1);
  FixedPointResult out;
  for (int iter = 0; iter < max_iter; ++iter) {
    Vec3 next = y;
    for (int i = 0; i < n; ++i) {
      next = phi_step(next, xi[i], cfg.atoms[i].mass);
      // negated comparison also catches NaN from degenerate far-out steps
      if (!(next(2) <= cap)) {
        out.iterations = iter + 1;
        return out;  // diverged
      }
    }
    double disp = hyperbolic_distance(y, next);
    y = next;
    out.iterations = iter + 1;
    if (disp < tol) {
      out.converged = true;
      out.polygon.vertices.resize(n);
      Vec3 v = y;
      for (int i = 0; i < n; ++i) {
        v = phi_step(v, xi[i], cfg.atoms[i].mass);
        out.polygon.vertices[i] = v;
      }
      out.closure_error = hyperbolic_distance(out.polygon.vertices[n - 1], y);
      return out;
    }
  }
  return out;  // max_iter exhausted, diverged
}

HyperbolicConfig gauss_map(const HyperbolicPolygon& poly) {
  const int n = static_cast<int>(poly.vertices.size());
  HyperbolicConfig cfg;
  cfg.atoms.resize(n);
  for (int i = 0; i < n; ++i) {
    Vec3 a = renormalize(poly.vertices[(i + n - 1) % n]);
    Vec3 b = renormalize(poly.vertices[i]);
    double d = hyperbolic_distance(a, b);
    cfg.atoms[i].mass = d;
    if (d < 1e-12) {
      cfg.atoms[i].angle = 0.0;  // coincident endpoints, direction arbitrary
      continue;
    }
    Vec3 u = (b - std::cosh(d) * a) / std::sinh(d);
    Vec3 ideal = a + u;  // null, future pointing
    cfg.atoms[i].angle = std::atan2(ideal(1) / ideal(2), ideal(0) / ideal(2));
  }
  return cfg;
}

ThompsonReport sample_thompson(int n, int count, unsigned long long seed) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  if (count < 0) throw std::invalid_argument("negative sample count");

  auto system = stability_system(RootSystem::A2, n, ProductMode::ExactPoint, true);
  std::vector<Eigen::MatrixXd> rows;
  rows.reserve(system.items.size());
  for (const auto& item : system.items) {
    Eigen::MatrixXd r(n, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = static_cast<double>(item.rows(i, j).convert_to<double>());
    rows.push_back(std::move(r));
  }

  auto worst = [&](const std::vector<DVec>& h) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
      double acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) acc += r(i, j) * h[i](j);
      v = std::max(v, acc);
    }
    return v;
  };

  ThompsonReport rep;
  rep.n = n;
  rep.samples = count;
  rep.rows = static_cast<int>(rows.size());
  rep.max_violation_p = -std::numeric_limits<double>::infinity();
  rep.max_violation_X = -std::numeric_limits<double>::infinity();

  Gaussian gp(seed);
  Gaussian gx(seed ^ 0x9e3779b97f4a7c15ULL);
  const CMat zero = CMat::Zero(3, 3);

  for (int t = 0; t < count; ++t) {
    std::vector<CMat> e(n);
    CMat sum = CMat::Zero(3, 3);
    for (int i = 0; i + 1 < n; ++i) {
      e[i] = random_traceless_hermitian(gp, 3);
      sum += e[i];
    }
    e[n - 1] = -sum;
    std::vector<DVec> hp(n);
    for (int i = 0; i < n; ++i) hp[i] = delta_length_p(zero, e[i]);
    rep.max_violation_p = std::max(rep.max_violation_p, worst(hp));

    std::vector<CMat> gfac(n);
    CMat prod = CMat::Identity(3, 3);
    for (int i = 0; i + 1 < n; ++i) {
      gfac[i] = random_sl(gx, 3);
      prod = prod * gfac[i];
    }
    gfac[n - 1] = prod.inverse();
    std::vector<DVec> hx(n);
    for (int i = 0; i < n; ++i) hx[i] = delta_length_X(CMat::Identity(3, 3), gfac[i]);
    rep.max_violation_X = std::max(rep.max_violation_X, worst(hx));
  }

  if (count == 0) {
    rep.max_violation_p = 0.0;
    rep.max_violation_X = 0.0;
  }
  return rep;
}

}  // namespace deltagon
