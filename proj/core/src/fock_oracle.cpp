#include "bosent/fock_oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bosent {

namespace {

using Dense = Eigen::MatrixXcd;

// Truncated annihilation operator: b|n> = sqrt(n)|n-1>.
Dense annihilator(int nmax) {
  const int dim = nmax + 1;
  Dense b = Dense::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
  return b;
}

// Diagonal of the truncated single-mode thermal state, unit trace.
Eigen::VectorXd thermal_populations(double omega, Temperature temp, int nmax) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(nmax + 1);
  if (temp.is_zero()) {
    p(0) = 1.0;
    return p;
  }
  const double q = std::exp(-omega / temp.value());
  double w = 1.0;
  for (int n = 0; n <= nmax; ++n) {
    p(n) = w;
    w *= q;
  }
  return p / p.sum();
}

// tr(rho X Y) for diagonal rho, in O(dim^2).
cplx trace_product(const Eigen::VectorXd& rho, const Dense& x, const Dense& y) {
  cplx acc{};
  for (Eigen::Index n = 0; n < rho.size(); ++n) {
    if (rho(n) == 0.0) continue;
    acc += rho(n) * x.row(n).transpose().cwiseProduct(y.col(n)).sum();
  }
  return acc;
}

cplx trace_one(const Eigen::VectorXd& rho, const Dense& x) {
  cplx acc{};
  for (Eigen::Index n = 0; n < rho.size(); ++n) acc += rho(n) * x(n, n);
  return acc;
}

// A mode operator sum_a O_a acting on the tensor product of eigenmodes,
// stored as its single-mode factors.
struct ModeOperator {
  std::vector<Dense> factors;

  ModeOperator adjoint() const {
    ModeOperator out;
    out.factors.reserve(factors.size());
    for (const auto& f : factors) out.factors.push_back(f.adjoint());
    return out;
  }
};

// <X Y> in a product state: same-mode terms need the single-mode product,
// different-mode terms factorize into <X_a><Y_b>.
cplx expectation_product(const std::vector<Eigen::VectorXd>& rho,
                         const ModeOperator& x, const ModeOperator& y) {
  const std::size_t modes = rho.size();
  std::vector<cplx> mean_x(modes), mean_y(modes);
  for (std::size_t a = 0; a < modes; ++a) {
    mean_x[a] = trace_one(rho[a], x.factors[a]);
    mean_y[a] = trace_one(rho[a], y.factors[a]);
  }
  cplx acc{};
  for (std::size_t a = 0; a < modes; ++a) {
    for (std::size_t b = 0; b < modes; ++b) {
      if (a == b)
        acc += trace_product(rho[a], x.factors[a], y.factors[a]);
      else
        acc += mean_x[a] * mean_y[b];
    }
  }
  return acc;
}

} // namespace

FockCutoff::FockCutoff(int nmax) : nmax_(nmax) {
  if (nmax < 1) throw PreconditionError("Fock cutoff must be at least 1");
}

double FockCutoff::neglected_weight(double omega, Temperature temp) const {
  if (temp.is_zero()) return 0.0;
  const double x = omega / temp.value();
  return std::exp(-x * nmax_) / -std::expm1(-x);
}

FockCutoff FockCutoff::automatic(const ModeSpectrum& spectrum, Temperature temp,
                                 double weight_tol) {
  for (int n = 1; n <= kMaxLevel; ++n) {
    const FockCutoff c(n);
    bool ok = true;
    for (double w : spectrum.frequencies()) ok = ok && c.neglected_weight(w, temp) < weight_tol;
    if (ok) return c;
  }
  throw ResourceError("no Fock cutoff up to " + std::to_string(kMaxLevel) +
                      " reaches neglected weight " + std::to_string(weight_tol));
}

OracleResult oracle_pair_covariance(const TransformRows& rows,
                                    const ModeSpectrum& spectrum,
                                    Temperature temp, FockCutoff cutoff) {
  const std::size_t modes = rows.length();
  if (modes != spectrum.size())
    throw StructuralError("transform rows and spectrum have different lengths");
  if (modes > FockCutoff::kMaxModes || cutoff.nmax() > FockCutoff::kMaxLevel)
    throw ResourceError("Fock oracle workspace guard exceeded (L <= 4, nmax <= 200)");

  const int nmax = cutoff.nmax();
  const Dense b = annihilator(nmax);
  const Dense bd = b.adjoint();

  std::vector<Eigen::VectorXd> rho;
  rho.reserve(modes);
  for (double w : spectrum.frequencies()) rho.push_back(thermal_populations(w, temp, nmax));

  // a_i = sum_a (S*_ia b_a + T_ia b_a^dag)
  auto mode_operator = [&](const ComplexVector& s, const ComplexVector& t) {
    ModeOperator op;
    op.factors.reserve(modes);
    for (std::size_t a = 0; a < modes; ++a) op.factors.push_back(std::conj(s[a]) * b + t[a] * bd);
    return op;
  };
  const ModeOperator ak = mode_operator(rows.s_k, rows.t_k);
  const ModeOperator al = mode_operator(rows.s_l, rows.t_l);

  // v = (a_k, a_k^dag, a_l, a_l^dag)
  const std::array<ModeOperator, 4> v = {ak, ak.adjoint(), al, al.adjoint()};
  std::array<ModeOperator, 4> vd;
  for (std::size_t r = 0; r < 4; ++r) vd[r] = v[r].adjoint();

  Matrix4c m;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) {
      const double sign = ((r + s) % 2 == 0) ? 0.5 : -0.5;
      m(r, s) = sign * (expectation_product(rho, v[r], vd[s]) +
                        expectation_product(rho, vd[s], v[r]));
    }
  }

  OracleResult out;
  out.cutoff = cutoff;
  out.covariance.n1 = m(0, 0).real();
  out.covariance.n2 = m(2, 2).real();
  out.covariance.m1 = m(0, 1);
  out.covariance.m2 = m(2, 3);
  out.covariance.ms = m(0, 2);
  out.covariance.mc = m(0, 3);
  out.structure_residual = (out.covariance.matrix() - m).cwiseAbs().maxCoeff();

  for (std::size_t a = 0; a < modes; ++a) {
    out.first_moments[0] += trace_one(rho[a], ak.factors[a]);
    out.first_moments[1] += trace_one(rho[a], al.factors[a]);
  }

  // Per mode, the symmetrized moment <b b^dag + b^dag b> is off by at most
  // w (3 nmax + 6 + 2/(1 - q)) with w the neglected weight and q = e^{-beta w};
  // each entry mixes those moments with coefficients bounded by `coupling`.
  double coupling = 0.0;
  const std::array<const ComplexVector*, 4> rs = {&rows.s_k, &rows.t_k, &rows.s_l, &rows.t_l};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      double c = 0.0;
      for (std::size_t a = 0; a < modes; ++a) {
        c += (std::abs((*rs[2 * r])[a]) + std::abs((*rs[2 * r + 1])[a])) *
             (std::abs((*rs[2 * s])[a]) + std::abs((*rs[2 * s + 1])[a]));
      }
      coupling = std::max(coupling, c);
    }
  }
  double moment_error = 0.0;
  if (!temp.is_zero()) {
    for (double w : spectrum.frequencies()) {
      const double one_minus_q = -std::expm1(-w / temp.value());
      moment_error = std::max(moment_error, cutoff.neglected_weight(w, temp) *
                                                (3.0 * nmax + 6.0 + 2.0 / one_minus_q));
    }
  }
  out.error_bound = coupling * moment_error;
  return out;
}

} // namespace bosent
