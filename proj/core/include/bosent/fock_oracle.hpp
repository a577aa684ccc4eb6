#pragma once

#include <array>

#include "bosent/covariance.hpp"
#include "bosent/mode_system.hpp"

namespace bosent {

/// Highest Fock level kept per eigenmode.
class FockCutoff {
public:
  static constexpr int kMaxLevel = 200;
  static constexpr std::size_t kMaxModes = 4;

  explicit FockCutoff(int nmax);

  /// Smallest nmax whose neglected thermal weight is below `weight_tol` for
  /// every mode. Throws ResourceError if that exceeds kMaxLevel.
  static FockCutoff automatic(const ModeSpectrum& spectrum, Temperature temp,
                              double weight_tol = 1e-12);

  int nmax() const noexcept { return nmax_; }

  /// e^{-beta w nmax} / (1 - e^{-beta w}): weight above the cutoff, up to
  /// normalization. Zero at T = 0.
  double neglected_weight(double omega, Temperature temp) const;

private:
  int nmax_;
};

struct OracleResult {
  TwoModeCovariance covariance;
  /// Bound on |oracle - exact| for every covariance entry.
  double error_bound = 0.0;
  /// Largest deviation of the computed 4x4 moment matrix from the
  /// six-parameter pattern (Hermiticity and block structure).
  double structure_residual = 0.0;
  /// <a_k>, <a_l> in the truncated thermal state.
  std::array<cplx, 2> first_moments{};
  FockCutoff cutoff{1};
};

/// Evaluates M_rs = (-1)^(r+s)/2 <v_r v_s^dag + v_s^dag v_r> by dense
/// ladder-operator algebra in a truncated Fock basis of every eigenmode,
/// against the product thermal state normalized over the kept levels.
/// Uses none of the closed-form covariance expressions.
///
/// Throws ResourceError if the spectrum has more than kMaxModes modes or
/// the cutoff exceeds kMaxLevel, StructuralError on length mismatch.
OracleResult oracle_pair_covariance(const TransformRows& rows,
                                    const ModeSpectrum& spectrum,
                                    Temperature temp, FockCutoff cutoff);

} // namespace bosent
