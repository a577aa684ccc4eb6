#pragma once

#include "bosent/covariance.hpp"
#include "bosent/errors.hpp"

namespace bosent {

/// Real quadrature covariance Gamma_rs = <eta_r eta_s + eta_s eta_r> with
/// eta = (x1, p1, x2, p2), x = (a + a^dag)/sqrt2, p = i(a^dag - a)/sqrt2.
/// The vacuum is the identity in this convention.
struct QuadratureCovariance {
  Matrix4d gamma = Matrix4d::Identity();

  /// Block-diagonal symplectic form with blocks [[0, 1], [-1, 0]].
  static Matrix4d symplectic_form();

  /// Gamma + iJ >= 0 (uncertainty principle), to within `tol`.
  bool is_physical(double tol = 1e-10) const;
};

struct SymplecticInvariants {
  double det_alpha = 0.0;
  double det_beta = 0.0;
  double det_gamma = 0.0;
  double det_m = 0.0;

  bool is_symmetric(double tol = 1e-9) const;
};

/// Symmetric-state normal form
///
///     | n    0    kx   0   |
///     | 0    n    0   -kp  |
///     | kx   0    n    0   |
///     | 0   -kp   0    n   |
///
/// with kx >= kp >= 0.
struct NormalForm {
  double n = 1.0;
  double kx = 0.0;
  double kp = 0.0;

  /// delta^2 = (n - kx)(n - kp); the state is entangled iff this is < 1.
  double delta_squared() const noexcept { return (n - kx) * (n - kp); }
};

/// Entanglement of formation together with the intermediates of the
/// closed form, E = c+ log2 c+ - c- log2 c-.
struct Formation {
  double delta = 1.0; ///< min(1, delta), after clamping near 1
  double c_plus = 1.0;
  double c_minus = 0.0;
  double ebits = 0.0;
  bool out_of_domain = false; ///< delta -> 0: ebits is +inf
};

/// Gamma = 2 (Q + Q) M (Q' + Q'), Q = [[-1, 1], [i, i]]/sqrt2, Q' = Q^dag.
/// Throws ConsistencyError if the product carries an imaginary or
/// antisymmetric residue above `tol` (relative to the largest entry of M).
QuadratureCovariance to_quadrature(const TwoModeCovariance& m, double tol = 1e-12);

/// Inverse of to_quadrature: M = (1/2) (Q^dag + Q^dag) Gamma (Q + Q).
/// Throws ConsistencyError if Gamma does not map onto the six-parameter form.
TwoModeCovariance from_quadrature(const QuadratureCovariance& q, double tol = 1e-12);

SymplecticInvariants symplectic_invariants(const TwoModeCovariance& m);

/// Solves n^2 = 4 det(alpha), kx kp = 4 |det(gamma)| and
/// (n^2 - kx^2)(n^2 - kp^2) = 16 det(M) for a symmetric state.
///
/// kx^2 and kp^2 are the roots of t^2 - s t + (kx kp)^2 with
/// s = (n^4 + (kx kp)^2 - 16 det M) / n^2; s and kx kp are evaluated on the
/// locally reduced coupling block so near-degenerate roots keep full precision.
///
/// Throws UnsupportedStateError if |det alpha - det beta| exceeds
/// tol * max(|det alpha|, 1), UnphysicalCovarianceError if the local blocks
/// are not positive, if the roots disagree with det M, or if kx > n.
NormalForm normal_form(const TwoModeCovariance& m, double tol = 1e-9);

/// Separability test for covariances in standard form (m1 = m2 = mc = 0):
/// n1 >= 1/2 and (n1 - 1/2)(n2 - 1/2) >= |ms|^2. Inputs outside that class
/// raise PreconditionError naming the offending entry.
bool separability_standard_form(const TwoModeCovariance& m, double tol = 1e-12);

/// Smallest symplectic eigenvalue (squared) of the partially transposed
/// quadrature covariance, from the invariants alone. Defined for any
/// two-mode state, symmetric or not; for symmetric states with
/// det(gamma) <= 0 it equals NormalForm::delta_squared().
double partial_transpose_delta_squared(const TwoModeCovariance& m);

/// Closed-form entanglement for a given discriminant delta >= 0. Values in
/// (1 - 1e-12, inf) are clamped to 1.
Formation formation_from_delta(double delta);

/// Entanglement of formation in ebits. Throws UnphysicalCovarianceError if
/// (n - kx)(n - kp) < -tol.
double entanglement_of_formation(const NormalForm& nf, double tol = 1e-12);

} // namespace bosent
