#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bosent/gaussian.hpp"
#include "bosent/mode_system.hpp"

namespace bosent {

/// Two unit-mass, unit-frequency oscillators coupled by a spring of
/// frequency omega0:
///
///   H = p1^2/2 + p2^2/2 + x1^2/2 + x2^2/2 + omega0^2 (x1 - x2)^2 / 2
///
/// Normal modes have frequencies 1 and omega = sqrt(1 + 2 omega0^2).
class PairParams {
public:
  static PairParams from_omega(double omega, Temperature temp = {});
  static PairParams from_omega0(double omega0, Temperature temp = {});

  double omega() const noexcept { return omega_; }
  double omega0() const noexcept { return omega0_; }
  Temperature temperature() const noexcept { return temp_; }

private:
  PairParams(double omega, double omega0, Temperature temp)
      : omega_(omega), omega0_(omega0), temp_(temp) {}

  double omega_;
  double omega0_;
  Temperature temp_;
};

struct PairSystem {
  ModeSpectrum spectrum;
  TransformRows rows;
};

/// u = coth(beta/2), v = coth(beta omega/2), a = (1/omega + omega) v / 2,
/// b = (1/omega - omega) v / 2.
struct PairIntermediates {
  double u = 1.0;
  double v = 1.0;
  double a = 1.0;
  double b = 0.0;
};

/// xi_pm = (sqrt(1/omega) pm sqrt(omega)) / 2
struct Xi {
  double plus = 1.0;
  double minus = 0.0;
};

Xi xi(double omega);

PairIntermediates pair_intermediates(double omega, Temperature t);

/// Spectrum {1, omega} and the rows expressing the local modes
/// a_{1,2} = (x_{1,2} + i p_{1,2})/sqrt2 in terms of the normal modes.
PairSystem build_pair(const PairParams& p);

/// Closed form delta^2 = coth(beta/2) coth(beta omega/2) / omega.
double delta_squared(double omega, Temperature t);

/// Result of the full pipeline (rows -> covariance -> normal form -> E_f).
struct PairEntanglement {
  double delta_squared = 1.0;          ///< closed form
  double pipeline_delta_squared = 1.0; ///< (n - kx)(n - kp) from the normal form
  NormalForm normal_form;
  Formation formation;
};

/// Tolerance on |Delta_pipeline - min(1, sqrt(delta^2))|.
inline constexpr double kRouteAgreement = 1e-10;

/// Evaluates the pipeline and checks it against the closed form; throws
/// ConsistencyError if the two discriminants differ by more than
/// kRouteAgreement.
PairEntanglement evaluate_pair(double omega, Temperature t);

/// Entanglement of formation between the two oscillators, in ebits.
double entanglement(double omega, Temperature t);

/// Temperature at which delta^2 = 1. Bisection with bracket doubling, at
/// most 200 iterations. Throws DomainError for omega <= 1.
double threshold_temperature(double omega, double tol = 1e-8);

/// E(T = 0) = x log2 x - (x - 1) log2(x - 1), x = (1 + sqrt w)^2 / (4 sqrt w).
double zero_temperature_entanglement(double omega);

enum class Regime { small, large };

/// small (omega -> 1): (1/(16 ln2) + 1/4 - log2(omega - 1)/8) (omega - 1)^2
/// large (omega >> 1): 1/ln2 - 2 + log2(omega)/2
double emax_asymptotic(double omega, Regime regime);

struct SweepPoint {
  double omega = 1.0;
  double temperature = 0.0;
  double delta_squared = 1.0;
  double entanglement_ebits = 0.0;
};

/// `count` evenly spaced values from lo to hi inclusive (count >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Evaluates every (omega, T) pair, omega-major then T-ascending. Work is
/// split across `jobs` threads; the output order does not depend on it.
std::vector<SweepPoint> sweep(std::span<const double> omegas,
                              std::span<const double> temperatures,
                              unsigned jobs = 1);

} // namespace bosent
