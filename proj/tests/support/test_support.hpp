#pragma once

// Random generators and independent reference computations shared by the
// unit and acceptance suites. Nothing here calls into the code under test
// except for the plain data types.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "bosent/covariance.hpp"
#include "bosent/gaussian.hpp"
#include "bosent/mode_system.hpp"

namespace bosent::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

/// Haar-ish random unitary via QR of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(Rng& rng, int dim) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gaussian_complex(rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

inline ModeSpectrum random_spectrum(Rng& rng, std::size_t modes, double lo = 0.2,
                                    double hi = 5.0) {
  std::vector<double> w(modes);
  for (auto& x : w) x = uniform(rng, lo, hi);
  return ModeSpectrum(std::move(w));
}

/// Two orthonormal complex rows with T = 0 (vacuum-preserving).
inline TransformRows random_passive_rows(Rng& rng, std::size_t modes) {
  const Eigen::MatrixXcd u = random_unitary(rng, static_cast<int>(modes));
  TransformRows rows;
  rows.s_k.resize(modes);
  rows.s_l.resize(modes);
  for (std::size_t a = 0; a < modes; ++a) {
    rows.s_k[a] = u(0, static_cast<int>(a));
    rows.s_l[a] = u(1, static_cast<int>(a));
  }
  rows.t_k.assign(modes, cplx{});
  rows.t_l.assign(modes, cplx{});
  return rows;
}

/// Rows of a general Bogoliubov map: unitary, single-mode squeezers with
/// random phases, unitary. a = A b + B b^dag, so S = conj(A) and T = B.
inline TransformRows random_bogoliubov_rows(Rng& rng, std::size_t modes,
                                            double max_squeeze = 1.0) {
  const int n = static_cast<int>(modes);
  Eigen::MatrixXcd a = random_unitary(rng, n);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);

  Eigen::MatrixXcd a2(n, n), b2(n, n);
  for (int i = 0; i < n; ++i) {
    const double r = uniform(rng, 0.0, max_squeeze);
    const cplx phase = std::polar(1.0, uniform(rng, 0.0, 2.0 * M_PI));
    const cplx ch = std::cosh(r);
    const cplx sh = std::sinh(r) * phase;
    a2.row(i) = ch * a.row(i) + sh * b.row(i).conjugate();
    b2.row(i) = ch * b.row(i) + sh * a.row(i).conjugate();
  }
  const Eigen::MatrixXcd v = random_unitary(rng, n);
  a = v * a2;
  b = v * b2;

  TransformRows rows;
  for (int j = 0; j < n; ++j) {
    rows.s_k.push_back(std::conj(a(0, j)));
    rows.t_k.push_back(b(0, j));
    rows.s_l.push_back(std::conj(a(1, j)));
    rows.t_l.push_back(b(1, j));
  }
  return rows;
}

/// Random real 2x2 matrix with unit determinant: rotation * squeeze * rotation.
inline Eigen::Matrix2d random_local_symplectic(Rng& rng, double max_squeeze = 0.8) {
  auto rot = [](double t) {
    Eigen::Matrix2d r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
  };
  const double s = uniform(rng, -max_squeeze, max_squeeze);
  Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
  sq(0, 0) = std::exp(s);
  sq(1, 1) = std::exp(-s);
  return rot(uniform(rng, 0.0, 2.0 * M_PI)) * sq * rot(uniform(rng, 0.0, 2.0 * M_PI));
}

/// Physical symmetric quadrature covariance: two squeezed thermal modes
/// (symplectic eigenvalues nu >= 1) mixed on a balanced beam splitter, then
/// arbitrary local symplectic maps on each side. det A = det B throughout.
inline Eigen::Matrix4d random_symmetric_gamma(Rng& rng) {
  const double nu1 = uniform(rng, 1.0, 4.0);
  const double nu2 = uniform(rng, 1.0, 4.0);
  const double r1 = uniform(rng, -1.0, 1.0);
  const double r2 = uniform(rng, -1.0, 1.0);
  Eigen::Vector4d d(nu1 * std::exp(2 * r1), nu1 * std::exp(-2 * r1),
                    nu2 * std::exp(2 * r2), nu2 * std::exp(-2 * r2));
  const Eigen::Matrix4d g0 = d.asDiagonal();

  const double h = std::sqrt(0.5);
  Eigen::Matrix4d bs;
  bs << h, 0, h, 0,
        0, h, 0, h,
        h, 0, -h, 0,
        0, h, 0, -h;

  Eigen::Matrix4d local = Eigen::Matrix4d::Zero();
  local.topLeftCorner<2, 2>() = random_local_symplectic(rng);
  local.bottomRightCorner<2, 2>() = random_local_symplectic(rng);

  const Eigen::Matrix4d s = local * bs;
  Eigen::Matrix4d g = s * g0 * s.transpose();
  return 0.5 * (g + g.transpose());
}

/// coth by its exponential definition in long double.
inline long double coth_reference(long double x) {
  const long double e = std::exp(-2.0L * x);
  return (1.0L + e) / (1.0L - e);
}

/// Closed-form discriminant for the coupled pair, evaluated from scratch.
inline long double pair_delta_squared_reference(long double omega, long double t) {
  if (t == 0.0L) return 1.0L / omega;
  return coth_reference(0.5L / t) * coth_reference(0.5L * omega / t) / omega;
}

/// Bisection on coth(1/(2T)) coth(w/(2T)) = w, long double, tol on the
/// equation residual.
inline long double threshold_reference(long double omega, long double tol = 1e-8L) {
  long double lo = 1e-6L, hi = 1.0L;
  while (pair_delta_squared_reference(omega, hi) <= 1.0L) hi *= 2.0L;
  for (int i = 0; i < 400; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double f = pair_delta_squared_reference(omega, mid) - 1.0L;
    if (std::fabs(f) <= tol * 1e-4L) return mid;
    (f < 0 ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

/// Entanglement of formation from Delta, long double.
inline long double eof_reference(long double delta) {
  if (delta >= 1.0L) return 0.0L;
  const long double cp = (1 + delta) * (1 + delta) / (4 * delta);
  const long double cm = (1 - delta) * (1 - delta) / (4 * delta);
  return cp * std::log2(cp) - cm * std::log2(cm);
}

} // namespace bosent::testing
