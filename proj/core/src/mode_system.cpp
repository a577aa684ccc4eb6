#include "bosent/mode_system.hpp"

#include <cmath>
#include <sstream>

namespace bosent {

ModeSpectrum::ModeSpectrum(std::vector<double> frequencies)
    : frequencies_(std::move(frequencies)) {
  if (frequencies_.empty())
    throw StructuralError("mode spectrum must contain at least one frequency");
  for (double w : frequencies_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw PreconditionError("mode frequencies must be finite and positive");
  }
}

Temperature::Temperature(double t) : t_(t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw PreconditionError("temperature must be finite and non-negative");
}

double Temperature::coth_weight(double omega) const noexcept {
  if (is_zero()) return 1.0;
  const double x = omega / t_; // beta * omega
  if (x > 1.0) return 1.0 + 2.0 / std::expm1(x);
  return 1.0 / std::tanh(0.5 * x);
}

std::size_t TransformRows::length() const {
  const std::size_t n = s_k.size();
  if (n == 0 || t_k.size() != n || s_l.size() != n || t_l.size() != n) {
    std::ostringstream os;
    os << "transform rows must share a nonzero length (got s_k=" << s_k.size()
       << ", t_k=" << t_k.size() << ", s_l=" << s_l.size()
       << ", t_l=" << t_l.size() << ")";
    throw StructuralError(os.str());
  }
  return n;
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os.precision(6);
  for (const auto& c : checks) {
    os << c.name << ": residual " << std::abs(c.residual) << " ("
       << (c.passed ? "pass" : "FAIL") << ")\n";
  }
  os << "overall: " << (passed() ? "pass" : "FAIL") << " at tol " << tolerance;
  return os.str();
}

InvalidRowsError::InvalidRowsError(ValidationReport report)
    : PreconditionError("transform rows violate commutation relations:\n" +
                        report.describe()),
      report_(std::move(report)) {}

namespace {

// Plain sums: sum_a x*_a y_a
cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
  cplx acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

InvariantCheck make_check(std::string name, cplx residual, double tol) {
  return {std::move(name), residual, std::abs(residual) <= tol};
}

void require_same_length(std::span<const cplx> x, std::span<const cplx> y,
                         const ModeSpectrum& spectrum) {
  if (x.size() != spectrum.size() || y.size() != spectrum.size())
    throw StructuralError("inner product operands must match the spectrum length");
}

template <class Weight>
cplx weighted_dot(std::span<const cplx> x, std::span<const cplx> y,
                  const ModeSpectrum& spectrum, Weight&& weight) {
  require_same_length(x, y, spectrum);
  cplx acc{};
  for (std::size_t i = 0; i < x.size(); ++i)
    acc += weight(spectrum[i]) * std::conj(x[i]) * y[i];
  return acc;
}

} // namespace

ValidationReport validate_rows(const TransformRows& rows, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("validation tolerance must be positive");
  rows.length();

  ValidationReport report;
  report.tolerance = tol;
  const cplx norm_k = dot(rows.s_k, rows.s_k) - dot(rows.t_k, rows.t_k) - 1.0;
  const cplx norm_l = dot(rows.s_l, rows.s_l) - dot(rows.t_l, rows.t_l) - 1.0;
  // [a_k, a_l^dag] = sum S*_k S_l - T_k T*_l
  const cplx cross = dot(rows.s_k, rows.s_l) - dot(rows.t_l, rows.t_k);
  // [a_k, a_l] = sum S*_k T_l - S*_l T_k
  const cplx sym = dot(rows.s_k, rows.t_l) - dot(rows.s_l, rows.t_k);

  report.checks = {make_check("normalization_k", norm_k, tol),
                   make_check("normalization_l", norm_l, tol),
                   make_check("cross_orthogonality", cross, tol),
                   make_check("symmetry", sym, tol)};
  return report;
}

cplx thermal_inner_product(std::span<const cplx> x, std::span<const cplx> y,
                           const ModeSpectrum& spectrum, Temperature temp) {
  return weighted_dot(x, y, spectrum,
                      [&](double w) { return temp.coth_weight(w); });
}

cplx residual_inner_product(std::span<const cplx> x, std::span<const cplx> y,
                            const ModeSpectrum& spectrum, Temperature temp) {
  // coth - 1 = 2 / (e^{beta w} - 1), evaluated without the cancellation
  return weighted_dot(x, y, spectrum, [&](double w) {
    if (temp.is_zero()) return 0.0;
    const double beta_w = w / temp.value();
    if (beta_w > 1.0) return 2.0 / std::expm1(beta_w);
    return 1.0 / std::tanh(0.5 * beta_w) - 1.0;
  });
}

TwoModeCovariance pair_covariance(const TransformRows& rows,
                                  const ModeSpectrum& spectrum,
                                  Temperature temp, double tol) {
  if (rows.length() != spectrum.size())
    throw StructuralError("transform rows and spectrum have different lengths");
  auto report = validate_rows(rows, tol);
  if (!report.passed()) throw InvalidRowsError(std::move(report));

  auto ip = [&](const ComplexVector& x, const ComplexVector& y) {
    return thermal_inner_product(x, y, spectrum, temp);
  };

  TwoModeCovariance m;
  m.n1 = 0.5 * (ip(rows.s_k, rows.s_k) + ip(rows.t_k, rows.t_k)).real();
  m.n2 = 0.5 * (ip(rows.s_l, rows.s_l) + ip(rows.t_l, rows.t_l)).real();
  m.m1 = -ip(rows.s_k, rows.t_k);
  m.m2 = -ip(rows.s_l, rows.t_l);
  m.ms = 0.5 * (ip(rows.s_k, rows.s_l) + ip(rows.t_l, rows.t_k));
  m.mc = -0.5 * (ip(rows.s_k, rows.t_l) + ip(rows.s_l, rows.t_k));
  return m;
}

} // namespace bosent
