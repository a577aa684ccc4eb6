#include "bosent/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

namespace bosent {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const cplx kI{0.0, 1.0};

Matrix4c quadrature_left() {
  Eigen::Matrix2cd q;
  q << -1.0, 1.0, kI, kI;
  q *= kInvSqrt2;
  Matrix4c out = Matrix4c::Zero();
  out.topLeftCorner<2, 2>() = q;
  out.bottomRightCorner<2, 2>() = q;
  return out;
}

double max_abs_entry(const TwoModeCovariance& m) {
  return std::max({std::abs(m.n1), std::abs(m.n2), std::abs(m.m1),
                   std::abs(m.m2), std::abs(m.ms), std::abs(m.mc)});
}

std::string fmt_value(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Closed-form inverse square root of a 2x2 symmetric positive definite matrix.
Eigen::Matrix2d inv_sqrt_spd(const Eigen::Matrix2d& a) {
  const double root_det = std::sqrt(a.determinant());
  const Eigen::Matrix2d sq =
      (a + root_det * Eigen::Matrix2d::Identity()) / std::sqrt(a.trace() + 2.0 * root_det);
  return sq.inverse();
}

} // namespace

double TwoModeCovariance::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double TwoModeCovariance::max_abs_difference(const TwoModeCovariance& other) const {
  double d = std::max(std::abs(n1 - other.n1), std::abs(n2 - other.n2));
  d = std::max(d, std::abs(m1 - other.m1));
  d = std::max(d, std::abs(m2 - other.m2));
  d = std::max(d, std::abs(ms - other.ms));
  return std::max(d, std::abs(mc - other.mc));
}

Matrix4d QuadratureCovariance::symplectic_form() {
  Matrix4d j = Matrix4d::Zero();
  j(0, 1) = 1.0;
  j(1, 0) = -1.0;
  j(2, 3) = 1.0;
  j(3, 2) = -1.0;
  return j;
}

bool QuadratureCovariance::is_physical(double tol) const {
  const Matrix4c h = gamma.cast<cplx>() + kI * symplectic_form().cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

bool SymplecticInvariants::is_symmetric(double tol) const {
  return std::abs(det_alpha - det_beta) <= tol * std::max(std::abs(det_alpha), 1.0);
}

QuadratureCovariance to_quadrature(const TwoModeCovariance& m, double tol) {
  const Matrix4c q = quadrature_left();
  const Matrix4c g = 2.0 * q * m.matrix() * q.adjoint();

  const double scale = std::max(1.0, max_abs_entry(m));
  const double imag_residue = g.imag().cwiseAbs().maxCoeff();
  if (imag_residue > tol * scale)
    throw ConsistencyError("quadrature covariance has imaginary residue " +
                           fmt_value(imag_residue) + "; covariance is malformed");
  const Matrix4d re = g.real();
  const double asym = (re - re.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale)
    throw ConsistencyError("quadrature covariance is not symmetric (residue " +
                           fmt_value(asym) + ")");

  QuadratureCovariance out;
  out.gamma = 0.5 * (re + re.transpose());
  return out;
}

TwoModeCovariance from_quadrature(const QuadratureCovariance& quad, double tol) {
  const Matrix4c q = quadrature_left();
  const Matrix4c m = 0.5 * q.adjoint() * quad.gamma.cast<cplx>() * q;

  TwoModeCovariance out;
  out.n1 = m(0, 0).real();
  out.n2 = m(2, 2).real();
  out.m1 = m(0, 1);
  out.m2 = m(2, 3);
  out.ms = m(0, 2);
  out.mc = m(0, 3);

  const double scale = std::max(1.0, quad.gamma.cwiseAbs().maxCoeff());
  const double residue = (out.matrix() - m).cwiseAbs().maxCoeff();
  if (residue > tol * scale)
    throw ConsistencyError("quadrature covariance does not map onto the "
                           "two-mode parameterization (residue " +
                           fmt_value(residue) + ")");
  return out;
}

SymplecticInvariants symplectic_invariants(const TwoModeCovariance& m) {
  SymplecticInvariants inv;
  inv.det_alpha = m.n1 * m.n1 - std::norm(m.m1);
  inv.det_beta = m.n2 * m.n2 - std::norm(m.m2);
  inv.det_gamma = std::norm(m.ms) - std::norm(m.mc);
  // det M is real for a Hermitian matrix; drop the rounding-level imaginary part
  inv.det_m = m.matrix().determinant().real();
  return inv;
}

NormalForm normal_form(const TwoModeCovariance& m, double tol) {
  const SymplecticInvariants inv = symplectic_invariants(m);
  if (!inv.is_symmetric(tol)) {
    throw UnsupportedStateError(
        "normal form requires a symmetric state: det(alpha) = " +
        fmt_value(inv.det_alpha) + ", det(beta) = " + fmt_value(inv.det_beta));
  }

  const double n_sq = 4.0 * inv.det_alpha;
  if (!(n_sq > 0.0))
    throw UnphysicalCovarianceError("det(alpha) must be positive, got " +
                                    fmt_value(inv.det_alpha));
  const double n = std::sqrt(n_sq);
  const double p = 4.0 * std::abs(inv.det_gamma);
  const double d = 16.0 * inv.det_m;

  // Reduce both local blocks to n * I with det-1 maps; the coupling block
  // then carries kx, kp as singular values. s = kx^2 + kp^2 equals
  // (n^4 + p^2 - d) / n^2, and s -+ 2p are sums of squares.
  const Matrix4d g = to_quadrature(m).gamma;
  const Eigen::Matrix2d a = g.topLeftCorner<2, 2>();
  const Eigen::Matrix2d b = g.bottomRightCorner<2, 2>();
  const Eigen::Matrix2d c = g.topRightCorner<2, 2>();
  if (!(a.trace() > 0.0 && b.trace() > 0.0 && a.determinant() > 0.0 && b.determinant() > 0.0))
    throw UnphysicalCovarianceError("local quadrature blocks are not positive definite");
  const Eigen::Matrix2d r = n * inv_sqrt_spd(a) * c * inv_sqrt_spd(b);

  const double sum_sq = std::hypot(r(0, 0) + r(1, 1), r(0, 1) - r(1, 0));
  const double diff_sq = std::hypot(r(0, 0) - r(1, 1), r(0, 1) + r(1, 0));
  // |sigma1 + sigma2| and |sigma1 - sigma2| depend on the sign of det r
  const bool flipped = r.determinant() < 0.0;
  const double plus = flipped ? diff_sq : sum_sq;
  const double minus = flipped ? sum_sq : diff_sq;

  NormalForm nf;
  nf.n = n;
  nf.kx = 0.5 * (plus + minus);
  nf.kp = 0.5 * (plus - minus);

  const double s = (n_sq * n_sq + p * p - d) / n_sq;
  const double scale = std::max({1.0, n_sq, std::abs(s)});
  if (std::abs(nf.kx * nf.kx + nf.kp * nf.kp - s) > std::sqrt(tol) * scale)
    throw UnphysicalCovarianceError("normal form is inconsistent with det(M): kx^2 + kp^2 = " +
                                    fmt_value(nf.kx * nf.kx + nf.kp * nf.kp) +
                                    ", invariants give " + fmt_value(s));
  // Gamma >= 0 needs n >= kx
  if (nf.n - nf.kx < -tol * nf.n)
    throw UnphysicalCovarianceError("normal form has kx = " + fmt_value(nf.kx) +
                                    " > n = " + fmt_value(nf.n));
  return nf;
}

bool separability_standard_form(const TwoModeCovariance& m, double tol) {
  auto require_zero = [&](cplx v, const char* name) {
    if (std::abs(v) > tol) {
      throw PreconditionError(std::string("separability criterion requires standard form; ") +
                              name + " = " + fmt_value(std::abs(v)) + " is nonzero");
    }
  };
  require_zero(m.mc, "mc");
  require_zero(m.m1, "m1");
  require_zero(m.m2, "m2");

  return m.n1 >= 0.5 - tol &&
         (m.n1 - 0.5) * (m.n2 - 0.5) >= std::norm(m.ms) - tol;
}

double partial_transpose_delta_squared(const TwoModeCovariance& m) {
  const SymplecticInvariants inv = symplectic_invariants(m);
  // Invariants of Gamma; partial transposition flips the sign of det(C).
  const double det_a = 4.0 * inv.det_alpha;
  const double det_b = 4.0 * inv.det_beta;
  const double det_c = 4.0 * inv.det_gamma;
  const double det_g = 16.0 * inv.det_m;

  const double sigma = det_a + det_b - 2.0 * det_c;
  const double disc = std::max(sigma * sigma - 4.0 * det_g, 0.0);
  const double larger = 0.5 * (sigma + std::sqrt(disc));
  if (!(larger > 0.0))
    throw UnphysicalCovarianceError("partially transposed covariance has no "
                                    "positive symplectic eigenvalue");
  return det_g / larger;
}

Formation formation_from_delta(double delta) {
  if (!(delta >= 0.0))
    throw PreconditionError("entanglement discriminant must be non-negative");

  Formation f;
  if (delta > 1.0 - 1e-12) return f;
  if (delta == 0.0) {
    f.delta = 0.0;
    f.c_plus = f.c_minus = std::numeric_limits<double>::infinity();
    f.ebits = std::numeric_limits<double>::infinity();
    f.out_of_domain = true;
    return f;
  }

  f.delta = delta;
  f.c_plus = (1.0 + delta) * (1.0 + delta) / (4.0 * delta);
  f.c_minus = (1.0 - delta) * (1.0 - delta) / (4.0 * delta);
  f.ebits = f.c_plus * std::log2(f.c_plus) - f.c_minus * std::log2(f.c_minus);
  return f;
}

double entanglement_of_formation(const NormalForm& nf, double tol) {
  const double d2 = nf.delta_squared();
  if (d2 < -tol)
    throw UnphysicalCovarianceError("(n - kx)(n - kp) = " + fmt_value(d2) +
                                    " is negative");
  return formation_from_delta(std::sqrt(std::max(d2, 0.0))).ebits;
}

} // namespace bosent
