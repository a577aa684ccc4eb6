#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bosent {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Matrix4d = Eigen::Matrix4d;

/**
 * Covariance of two bosonic modes in the ladder-operator basis
 * v = (a1, a1^dag, a2, a2^dag):
 *
 *     | n1     m1     ms     mc  |
 *     | m1*    n1     mc*    ms* |
 *     | ms*    mc     n2     m2  |
 *     | mc*    ms     m2*    n2  |
 *
 * with M_rs = (-1)^(r+s)/2 <v_r v_s^dag + v_s^dag v_r>. The vacuum has
 * n1 = n2 = 1/2 and every m = 0. Hermiticity follows from the
 * parameterization; positivity is checked by is_positive_semidefinite().
 */
struct TwoModeCovariance {
  double n1 = 0.5;
  double n2 = 0.5;
  cplx m1{};
  cplx m2{};
  cplx ms{};
  cplx mc{};

  static TwoModeCovariance vacuum() { return {}; }

  Eigen::Matrix2cd alpha() const {
    Eigen::Matrix2cd a;
    a << n1, m1, std::conj(m1), n1;
    return a;
  }

  Eigen::Matrix2cd beta() const {
    Eigen::Matrix2cd b;
    b << n2, m2, std::conj(m2), n2;
    return b;
  }

  Eigen::Matrix2cd gamma() const {
    Eigen::Matrix2cd g;
    g << ms, mc, std::conj(mc), std::conj(ms);
    return g;
  }

  Matrix4c matrix() const {
    Matrix4c m;
    m << n1, m1, ms, mc,
         std::conj(m1), n1, std::conj(mc), std::conj(ms),
         std::conj(ms), mc, n2, m2,
         std::conj(mc), ms, std::conj(m2), n2;
    return m;
  }

  /// Smallest eigenvalue of the assembled Hermitian matrix.
  double min_eigenvalue() const;

  bool is_positive_semidefinite(double tol = 1e-12) const {
    return min_eigenvalue() >= -tol;
  }

  /// Largest absolute difference over the six parameters.
  double max_abs_difference(const TwoModeCovariance& other) const;
};

} // namespace bosent
