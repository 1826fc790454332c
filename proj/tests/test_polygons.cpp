#include "doctest.h"

#include "deltagon/polygons.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace deltagon;

namespace {

const double kThird = 2.0 * M_PI / 3.0;

CMat cdiag(std::initializer_list<double> xs) {
  CMat m = CMat::Zero(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) m(i, i) = x, ++i;
  return m;
}

DVec dvec(std::initializer_list<double> xs) {
  DVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Vec3 hpoint(double x, double y) {
  Vec3 v;
  v << x, y, std::sqrt(1.0 + x * x + y * y);
  return v;
}

double mink(const Vec3& a, const Vec3& b) { return a(0) * b(0) + a(1) * b(1) - a(2) * b(2); }

}  // namespace

TEST_CASE("flat family lengths") {
  CMat zero = CMat::Zero(3, 3);
  DVec d = delta_length_p(zero, cdiag({2, -1, -1}));
  CHECK(d(0) == doctest::Approx(2).epsilon(1e-12));
  CHECK(d(1) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(d(2) == doctest::Approx(-1).epsilon(1e-12));

  // Sorted nonincreasing regardless of the input order on the diagonal.
  DVec d2 = delta_length_p(zero, cdiag({-1, 2, -1}));
  CHECK(d2(0) == doctest::Approx(2));
  CHECK((d2(0) >= d2(1) && d2(1) >= d2(2)));

  // Translation invariance and antisymmetry with reversal.
  std::mt19937_64 gen(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    CMat a = CMat::Zero(3, 3), b = CMat::Zero(3, 3), c = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        std::complex<double> z = i == j ? std::complex<double>(g(gen), 0)
                                        : std::complex<double>(g(gen), g(gen));
        a(i, j) = z;
        a(j, i) = std::conj(z);
        std::complex<double> w = i == j ? std::complex<double>(g(gen), 0)
                                        : std::complex<double>(g(gen), g(gen));
        b(i, j) = w;
        b(j, i) = std::conj(w);
        std::complex<double> u = i == j ? std::complex<double>(g(gen), 0)
                                        : std::complex<double>(g(gen), g(gen));
        c(i, j) = u;
        c(j, i) = std::conj(u);
      }
    DVec ab = delta_length_p(a, b);
    DVec shifted = delta_length_p(a + c, b + c);
    DVec back = delta_length_p(b, a);
    for (int i = 0; i < 3; ++i) {
      CHECK(ab(i) == doctest::Approx(shifted(i)).epsilon(1e-9));
      CHECK(back(i) == doctest::Approx(-ab(2 - i)).epsilon(1e-9));
    }
  }

  // Non-Hermitian input is rejected.
  CMat bad = CMat::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS(delta_length_p(bad, CMat::Zero(2, 2)));
}

TEST_CASE("group family lengths") {
  CMat eye = CMat::Identity(3, 3);
  DVec d = delta_length_X(eye, cdiag({std::exp(1.0), 1.0, std::exp(-1.0)}));
  CHECK(d(0) == doctest::Approx(1).epsilon(1e-9));
  CHECK(d(1) == doctest::Approx(0).epsilon(1e-9));
  CHECK(d(2) == doctest::Approx(-1).epsilon(1e-9));

  // Left invariance and the reversal identity.
  std::mt19937_64 gen(9);
  std::normal_distribution<double> g;
  auto rand_mat = [&] {
    CMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = std::complex<double>(g(gen), g(gen));
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    CMat g1 = rand_mat(), g2 = rand_mat(), h = rand_mat();
    DVec base = delta_length_X(g1, g2);
    DVec moved = delta_length_X(h * g1, h * g2);
    DVec back = delta_length_X(g2, g1);
    CHECK((base(0) >= base(1) && base(1) >= base(2)));
    for (int i = 0; i < 3; ++i) {
      CHECK(moved(i) == doctest::Approx(base(i)).epsilon(1e-7));
      CHECK(back(i) == doctest::Approx(-base(2 - i)).epsilon(1e-7));
    }
  }

  CHECK_THROWS(delta_length_X(CMat::Zero(3, 3), eye));
}

TEST_CASE("momentum construction finds closing configurations") {
  // Spectra on a cone generator: feasible, and the solver must keep the
  // prescribed side spectra while making the sides sum to zero.
  std::vector<DVec> gen3(3, dvec({1, 1, -2}));
  auto res = construct_polygon_momentum(gen3, 1e-8, 5000, 10, 1);
  CHECK(res.success);
  CHECK(res.residual < 1e-8);
  REQUIRE(res.sides.size() == 3);
  CMat total = CMat::Zero(3, 3);
  for (const auto& s : res.sides) {
    total += s;
    DVec ev = delta_length_p(CMat::Zero(3, 3), s);
    CHECK(ev(0) == doctest::Approx(1).epsilon(1e-6));
    CHECK(ev(1) == doctest::Approx(1).epsilon(1e-6));
    CHECK(ev(2) == doctest::Approx(-2).epsilon(1e-6));
  }
  CHECK(total.norm() < 1e-7);

  // The zero tuple is trivially feasible.
  std::vector<DVec> zero(3, dvec({0, 0, 0}));
  auto rz = construct_polygon_momentum(zero, 1e-8, 100, 2, 1);
  CHECK(rz.success);
  CHECK(rz.residual < 1e-12);

  // A point far outside the polyhedron: every restart stalls at a positive
  // residual, and the verdict is a confident failure.
  std::vector<DVec> bad = {dvec({2, -1, -1}), dvec({0.1, 0, -0.1}), dvec({0.1, 0, -0.1})};
  auto rb = construct_polygon_momentum(bad, 1e-8, 2000, 6, 1);
  CHECK(!rb.success);
  CHECK(rb.residual > 1e-3);

  // Input validation: spectra must be sorted and sum-compatible with zero.
  CHECK_THROWS(construct_polygon_momentum({dvec({-2, 1, 1}), dvec({1, 1, -2}), dvec({1, 1, -2})},
                                          1e-8, 10, 1, 1));
  CHECK_THROWS(construct_polygon_momentum({dvec({1, 0, 0}), dvec({1, 0, 0}), dvec({1, 0, 0})},
                                          1e-8, 10, 1, 1));
  CHECK_THROWS(construct_polygon_momentum({dvec({1, 1, -2}), dvec({1, 1, -2})}, 1e-8, 10, 1, 1));
}

TEST_CASE("hyperbolic distance") {
  Vec3 o = hpoint(0, 0);
  CHECK(hyperbolic_distance(o, o) == doctest::Approx(0).epsilon(1e-15));
  Vec3 p;
  p << std::sinh(2.0), 0, std::cosh(2.0);
  CHECK(hyperbolic_distance(o, p) == doctest::Approx(2).epsilon(1e-12));

  // Tiny separations do not collapse to zero: the chord formula resolves
  // displacements far below the acosh cancellation floor.
  Vec3 q;
  double eps = 1e-9;
  q << std::sinh(eps), 0, std::cosh(eps);
  CHECK(hyperbolic_distance(o, q) == doctest::Approx(eps).epsilon(1e-6));

  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 a = hpoint(u(gen), u(gen));
    Vec3 b = hpoint(u(gen), u(gen));
    Vec3 c = hpoint(u(gen), u(gen));
    double ab = hyperbolic_distance(a, b);
    CHECK(ab == doctest::Approx(hyperbolic_distance(b, a)).epsilon(1e-12));
    CHECK(ab <= hyperbolic_distance(a, c) + hyperbolic_distance(c, b) + 1e-9);
  }
}

TEST_CASE("horocycle flow step") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 30; ++trial) {
    double th = ang(gen);
    Vec3 xi;
    xi << std::cos(th), std::sin(th), 1.0;
    Vec3 x = hpoint(u(gen), u(gen));
    Vec3 y = hpoint(u(gen), u(gen));

    // t = 0 is the identity.
    Vec3 x0 = phi_step(x, xi, 0.0);
    CHECK((x0 - x).norm() == doctest::Approx(0).epsilon(1e-12));

    // The flow stays on the hyperboloid and contracts distances.
    double t = 0.7;
    Vec3 xt = phi_step(x, xi, t);
    Vec3 yt = phi_step(y, xi, t);
    CHECK(mink(xt, xt) == doctest::Approx(-1).epsilon(1e-9));
    CHECK(hyperbolic_distance(xt, yt) <= hyperbolic_distance(x, y) + 1e-12);
  }
}

TEST_CASE("ideal polygons from boundary measures") {
  HyperbolicConfig sym;
  sym.atoms = {{0.0, 1.0}, {kThird, 1.0}, {-kThird, 1.0}};
  auto res = phi_fixed_point(sym, 1e-9, 100000);
  REQUIRE(res.converged);
  CHECK(res.closure_error < 1e-6);
  REQUIRE(res.polygon.vertices.size() == 3);

  // The Gauss map inverts the construction: ideal directions and side
  // lengths reproduce the input angles and masses.
  auto back = gauss_map(res.polygon);
  REQUIRE(back.atoms.size() == 3);
  std::vector<double> masses, angles;
  for (const auto& a : back.atoms) {
    masses.push_back(a.mass);
    angles.push_back(a.angle);
  }
  std::sort(masses.begin(), masses.end());
  std::sort(angles.begin(), angles.end());
  for (double m : masses) CHECK(m == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(angles[0] == doctest::Approx(-kThird).epsilon(1e-6));
  CHECK(angles[1] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(angles[2] == doctest::Approx(kThird).epsilon(1e-6));

  // A balanced bigon closes.
  HyperbolicConfig bigon;
  bigon.atoms = {{0.0, 1.5}, {M_PI, 1.5}};
  auto rb = phi_fixed_point(bigon, 1e-9, 100000);
  CHECK(rb.converged);
  CHECK(rb.closure_error < 1e-8);

  // One atom with more than half the total mass diverges toward its ideal point.
  HyperbolicConfig heavy;
  heavy.atoms = {{0.0, 2.0}, {kThird, 0.5}, {-kThird, 0.5}};
  auto rh = phi_fixed_point(heavy, 1e-9, 100000);
  CHECK(!rh.converged);

  // An unbalanced bigon must diverge, not stall at a fake fixed point.
  HyperbolicConfig ub;
  ub.atoms = {{0.0, 2.0}, {M_PI, 1.0}};
  auto ru = phi_fixed_point(ub, 1e-9, 100000);
  CHECK(!ru.converged);
}

TEST_CASE("gauss map masses are the side lengths") {
  std::mt19937_64 gen(33);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  HyperbolicPolygon poly;
  poly.vertices = {hpoint(u(gen), u(gen)), hpoint(u(gen), u(gen)), hpoint(u(gen), u(gen)),
                   hpoint(u(gen), u(gen))};
  auto cfg = gauss_map(poly);
  REQUIRE(cfg.atoms.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    const Vec3& a = poly.vertices[i];
    const Vec3& b = poly.vertices[(i + 1) % 4];
    CHECK(cfg.atoms[(i + 1) % 4].mass == doctest::Approx(hyperbolic_distance(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("random matrix families satisfy every inequality") {
  auto rep = sample_thompson(3, 25, 7);
  CHECK(rep.n == 3);
  CHECK(rep.samples == 25);
  CHECK(rep.rows == 18);
  CHECK(rep.max_violation_p <= 1e-9);
  CHECK(rep.max_violation_X <= 1e-9);

  auto rep4 = sample_thompson(4, 10, 11);
  CHECK(rep4.rows == 28);
  CHECK(rep4.max_violation_p <= 1e-9);
  CHECK(rep4.max_violation_X <= 1e-9);

  // Deterministic under a fixed seed.
  auto again = sample_thompson(3, 25, 7);
  CHECK(again.max_violation_p == rep.max_violation_p);
  CHECK(again.max_violation_X == rep.max_violation_X);

  auto none = sample_thompson(3, 0, 1);
  CHECK(none.max_violation_p == 0.0);
  CHECK(none.max_violation_X == 0.0);
}
