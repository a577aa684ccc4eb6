#include "bosent/oscillator_pair.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace bosent {

namespace {

constexpr int kMaxBisectionIterations = 200;

void require_omega_at_least_one(double omega) {
  if (!(omega >= 1.0) || !std::isfinite(omega))
    throw PreconditionError("coupled-pair frequency omega must be finite and >= 1");
}

} // namespace

PairParams PairParams::from_omega(double omega, Temperature temp) {
  require_omega_at_least_one(omega);
  return PairParams(omega, std::sqrt(0.5 * (omega * omega - 1.0)), temp);
}

PairParams PairParams::from_omega0(double omega0, Temperature temp) {
  if (!(omega0 >= 0.0) || !std::isfinite(omega0))
    throw PreconditionError("coupling frequency omega0 must be finite and >= 0");
  return PairParams(std::sqrt(1.0 + 2.0 * omega0 * omega0), omega0, temp);
}

Xi xi(double omega) {
  require_omega_at_least_one(omega);
  const double r = std::sqrt(omega);
  return {0.5 * (1.0 / r + r), 0.5 * (1.0 / r - r)};
}

PairIntermediates pair_intermediates(double omega, Temperature t) {
  require_omega_at_least_one(omega);
  PairIntermediates p;
  p.u = t.coth_weight(1.0);
  p.v = t.coth_weight(omega);
  p.a = 0.5 * (1.0 / omega + omega) * p.v;
  p.b = 0.5 * (1.0 / omega - omega) * p.v;
  return p;
}

PairSystem build_pair(const PairParams& p) {
  const Xi x = xi(p.omega());
  const double h = std::numbers::sqrt2 / 2.0;

  TransformRows rows;
  rows.s_k = {h, h * x.plus};
  rows.t_k = {0.0, h * x.minus};
  rows.s_l = {h, -h * x.plus};
  rows.t_l = {0.0, -h * x.minus};
  return {ModeSpectrum({1.0, p.omega()}), std::move(rows)};
}

double delta_squared(double omega, Temperature t) {
  require_omega_at_least_one(omega);
  if (t.is_zero()) return 1.0 / omega;
  return t.coth_weight(1.0) * t.coth_weight(omega) / omega;
}

PairEntanglement evaluate_pair(double omega, Temperature t) {
  const PairSystem sys = build_pair(PairParams::from_omega(omega, t));
  const TwoModeCovariance m = pair_covariance(sys.rows, sys.spectrum, t);

  PairEntanglement out;
  out.delta_squared = delta_squared(omega, t);
  out.normal_form = normal_form(m);
  out.pipeline_delta_squared = out.normal_form.delta_squared();

  const double pipeline_delta = std::min(1.0, std::sqrt(std::max(out.pipeline_delta_squared, 0.0)));
  const double closed_delta = std::min(1.0, std::sqrt(out.delta_squared));
  if (std::abs(pipeline_delta - closed_delta) >= kRouteAgreement) {
    std::ostringstream os;
    os.precision(17);
    os << "pipeline Delta " << pipeline_delta << " disagrees with closed form "
       << closed_delta << " at omega=" << omega << ", T=" << t.value();
    throw ConsistencyError(os.str());
  }

  if (out.pipeline_delta_squared < -1e-12)
    throw UnphysicalCovarianceError("pipeline produced negative delta^2");
  out.formation = formation_from_delta(pipeline_delta);
  return out;
}

double entanglement(double omega, Temperature t) {
  return evaluate_pair(omega, t).formation.ebits;
}

double threshold_temperature(double omega, double tol) {
  if (!(omega > 1.0))
    throw DomainError("omega <= 1: the oscillators are never entangled");
  if (!(tol > 0.0)) throw PreconditionError("threshold tolerance must be positive");

  auto excess = [omega](double t) { return delta_squared(omega, Temperature(t)) - 1.0; };

  // delta^2(0) = 1/omega < 1, and delta^2 grows like 4T^2/omega at large T
  double lo = std::numeric_limits<double>::min();
  double hi = 1.0;
  int iterations = 0;
  while (excess(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++iterations >= kMaxBisectionIterations)
      throw DomainError("threshold temperature bracket did not close");
  }

  for (; iterations < kMaxBisectionIterations; ++iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f = excess(mid);
    if (std::abs(f) <= tol || mid == lo || mid == hi) return mid;
    (f < 0.0 ? lo : hi) = mid;
  }
  throw DomainError("threshold temperature bisection did not converge");
}

double zero_temperature_entanglement(double omega) {
  require_omega_at_least_one(omega);
  const double r = std::sqrt(omega);
  const double x = (1.0 + r) * (1.0 + r) / (4.0 * r);
  const double x_minus_one = (r - 1.0) * (r - 1.0) / (4.0 * r);
  if (x_minus_one == 0.0) return 0.0;
  return x * std::log2(x) - x_minus_one * std::log2(x_minus_one);
}

double emax_asymptotic(double omega, Regime regime) {
  if (regime == Regime::large) {
    if (!(omega > 0.0)) throw PreconditionError("large-omega form needs omega > 0");
    return 1.0 / std::numbers::ln2 - 2.0 + 0.5 * std::log2(omega);
  }
  require_omega_at_least_one(omega);
  const double e = omega - 1.0;
  if (e == 0.0) return 0.0;
  return (1.0 / (16.0 * std::numbers::ln2) + 0.25 - std::log2(e) / 8.0) * e * e;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw PreconditionError("grid needs at least two points");
  if (!(lo < hi)) throw PreconditionError("grid requires min < max");
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<SweepPoint> sweep(std::span<const double> omegas,
                              std::span<const double> temperatures,
                              unsigned jobs) {
  const std::size_t total = omegas.size() * temperatures.size();
  std::vector<SweepPoint> out(total);
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(total, 1)));

  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const double w = omegas[i / temperatures.size()];
      const Temperature t(temperatures[i % temperatures.size()]);
      const PairEntanglement e = evaluate_pair(w, t);
      out[i] = {w, t.value(), e.delta_squared, e.formation.ebits};
    }
  };

  if (jobs == 1) {
    work(0, total);
    return out;
  }

  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          work(total * j / jobs, total * (j + 1) / jobs);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace bosent
