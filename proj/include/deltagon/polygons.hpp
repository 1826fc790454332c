#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace deltagon {

using CMat = Eigen::MatrixXcd;
using DVec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

// Eigenvalues of B - A, sorted non-increasing. Throws if an input is not
// Hermitian within herm_tol (relative).
DVec delta_length_p(const CMat& A, const CMat& B, double herm_tol = 1e-9);

// Logs of the singular values of g1^{-1} g2, sorted non-increasing. The
// coordinates sum to log|det g2 / det g1|, which is 0 on SL(m). Throws on
// singular input.
DVec delta_length_X(const CMat& g1, const CMat& g2);

struct MomentumResult {
  bool success = false;
  double residual = 0.0;    // Frobenius norm of the side sum at the best point
  std::vector<CMat> sides;  // Hermitian sides with the requested spectra
};

// Searches for traceless Hermitian A_1..A_n with prescribed spectra summing
// to zero: minimizes |sum_i k_i diag(h_i) k_i*|_F^2 over unitary tuples by
// Riemannian gradient descent (exponential retraction, Armijo backtracking)
// with random restarts. success iff the residual drops below tol. Residuals
// stuck above 1e-3 after all restarts are a strong infeasibility signal, but
// failure is a report, not a proof.
MomentumResult construct_polygon_momentum(const std::vector<DVec>& spectra,
                                          double tol = 1e-8, int max_iter = 5000,
                                          int restarts = 10, unsigned long long seed = 1);

// Objective and search direction of the momentum descent, exposed so the
// step can be audited against finite differences. With a_i = k_i diag(h_i)
// k_i* and s = sum a_i: momentum_value is |s|_F^2 and momentum_direction
// returns z_i = 2(a_i s - s a_i), skew-Hermitian, normalized so that
// d/dt momentum_value({exp(t eta_i) k_i}) at t = 0 equals
// sum_i Re tr(eta_i z_i) for any skew-Hermitian eta_i. Along eta_i = z_i the
// derivative is -sum_i |z_i|_F^2, so z is a descent direction.
double momentum_value(const std::vector<DVec>& spectra, const std::vector<CMat>& ks);
std::vector<CMat> momentum_direction(const std::vector<DVec>& spectra,
                                     const std::vector<CMat>& ks);

// Hyperbolic plane, hyperboloid sheet x3 > 0 of <x,x> = -1 in R^{2,1} with
// <x,y> = x1 y1 + x2 y2 - x3 y3.

double hyperbolic_distance(const Vec3& x, const Vec3& y);

// Point at distance t from x along the ray toward the ideal point xi (a
// future null vector): e^{-t} x + (sinh t / c) xi with c = -<xi,x>.
Vec3 phi_step(const Vec3& x, const Vec3& xi, double t);

struct IdealAtom {
  double angle = 0.0;  // boundary circle position, xi = (cos, sin, 1)
  double mass = 0.0;
};

struct HyperbolicConfig {
  std::vector<IdealAtom> atoms;
};

// Vertices in cyclic order; side i runs from vertex i-1 to vertex i on the
// ray toward the i-th ideal point.
struct HyperbolicPolygon {
  std::vector<Vec3> vertices;
};

struct FixedPointResult {
  bool converged = false;  // false means the iteration diverged
  int iterations = 0;
  double closure_error = 0.0;
  HyperbolicPolygon polygon;  // filled on convergence
};

// Iterates the composition of the ray steps from the origin until the
// displacement per round drops below tol. Divergence is declared when the
// iterate climbs past height 1e6 on the sheet (hyperbolic radius about 14.5,
// beyond which the step arithmetic cannot be trusted) or max_iter runs out,
// which is the expected outcome for unstable configurations.
FixedPointResult phi_fixed_point(const HyperbolicConfig& cfg, double tol = 1e-9,
                                 int max_iter = 100000);

// Side lengths and forward ray endpoints of a closed polygon. A side with
// coincident endpoints gets mass 0 and an arbitrary ideal point.
HyperbolicConfig gauss_map(const HyperbolicPolygon& poly);

struct ThompsonReport {
  int n = 0;
  int samples = 0;
  int rows = 0;               // inequalities evaluated per sample
  double max_violation_p = 0.0;
  double max_violation_X = 0.0;
};

// Samples count random closed n-gons in the space of traceless Hermitian
// 3x3 matrices (last side the negative sum) and in SL(3,C) (last factor the
// inverse of the product), takes their side length tuples and evaluates every
// side length inequality for n sides. Violations should stay at floating
// point noise; the report carries the maxima.
ThompsonReport sample_thompson(int n, int count, unsigned long long seed);

}  // namespace deltagon
