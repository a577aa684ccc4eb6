#pragma once

#include <array>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bosent/covariance.hpp"
#include "bosent/errors.hpp"

namespace bosent {

using ComplexVector = std::vector<cplx>;

/// Default tolerance for commutation-relation residuals.
inline constexpr double kDefaultRowTolerance = 1e-10;

/// Eigenfrequencies of a free boson Hamiltonian H = sum_a w_a b_a^dag b_a.
class ModeSpectrum {
public:
  explicit ModeSpectrum(std::vector<double> frequencies);

  std::size_t size() const noexcept { return frequencies_.size(); }
  double operator[](std::size_t i) const { return frequencies_[i]; }
  std::span<const double> frequencies() const noexcept { return frequencies_; }

private:
  std::vector<double> frequencies_;
};

/// Dimensionless temperature T >= 0 (hbar = k_B = 1). T = 0 is an exact
/// limit: every thermal weight is exactly 1.
class Temperature {
public:
  constexpr Temperature() = default;
  explicit Temperature(double t);

  static constexpr Temperature zero() { return Temperature{}; }

  double value() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_ == 0.0; }
  double beta() const noexcept {
    return is_zero() ? std::numeric_limits<double>::infinity() : 1.0 / t_;
  }

  /// coth(omega / (2T)), the occupation weight 2 n_th + 1 of a mode.
  double coth_weight(double omega) const noexcept;

private:
  double t_ = 0.0;
};

/// Rows k and l of the Bogoliubov matrices S and T, with
/// a_i = sum_a (S*_ia b_a + T_ia b_a^dag).
struct TransformRows {
  ComplexVector s_k;
  ComplexVector t_k;
  ComplexVector s_l;
  ComplexVector t_l;

  /// Common length L; throws StructuralError if the four rows disagree.
  std::size_t length() const;
};

struct InvariantCheck {
  std::string name;
  cplx residual;
  bool passed = false;
};

/// Residuals of the canonical commutation relations for the two rows:
/// [a_k, a_k^dag] = 1, [a_l, a_l^dag] = 1, [a_k, a_l^dag] = 0, [a_k, a_l] = 0.
struct ValidationReport {
  std::array<InvariantCheck, 4> checks;
  double tolerance = kDefaultRowTolerance;

  bool passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string describe() const;
};

class InvalidRowsError : public PreconditionError {
public:
  explicit InvalidRowsError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

ValidationReport validate_rows(const TransformRows& rows,
                               double tol = kDefaultRowTolerance);

/// <x|y> = sum_a coth(beta w_a / 2) x*_a y_a
cplx thermal_inner_product(std::span<const cplx> x, std::span<const cplx> y,
                           const ModeSpectrum& spectrum, Temperature temp);

/// (x|y) = sum_a (coth(beta w_a / 2) - 1) x*_a y_a; vanishes at T = 0.
cplx residual_inner_product(std::span<const cplx> x, std::span<const cplx> y,
                            const ModeSpectrum& spectrum, Temperature temp);

/// Covariance of modes k and l in the thermal state of the spectrum.
/// Throws InvalidRowsError if the rows fail validate_rows at `tol`.
TwoModeCovariance pair_covariance(const TransformRows& rows,
                                  const ModeSpectrum& spectrum,
                                  Temperature temp,
                                  double tol = kDefaultRowTolerance);

} // namespace bosent
