#include <doctest.h>

#include <cmath>

#include "bosent/mode_system.hpp"
#include "bosent/oscillator_pair.hpp"
#include "test_support.hpp"

using namespace bosent;
using bosent::testing::Rng;
using doctest::Approx;

namespace {

// coth(1), 40-digit reference
constexpr double kCoth1 = 1.3130352854993313036;

TransformRows identity_rows() {
  TransformRows r;
  r.s_k = {1.0, 0.0};
  r.t_k = {0.0, 0.0};
  r.s_l = {0.0, 1.0};
  r.t_l = {0.0, 0.0};
  return r;
}

} // namespace

TEST_CASE("spectrum and temperature reject invalid values") {
  CHECK_THROWS_AS(ModeSpectrum({}), StructuralError);
  CHECK_THROWS_AS(ModeSpectrum({1.0, 0.0}), PreconditionError);
  CHECK_THROWS_AS(ModeSpectrum({-2.0}), PreconditionError);
  CHECK_THROWS_AS(Temperature(-0.1), PreconditionError);
  CHECK_THROWS_AS(Temperature(std::nan("")), PreconditionError);
  CHECK(Temperature::zero().is_zero());
  CHECK(std::isinf(Temperature::zero().beta()));
}

TEST_CASE("coth weight") {
  CHECK(Temperature::zero().coth_weight(1e-3) == 1.0);
  CHECK(Temperature(0.5).coth_weight(1.0) == Approx(kCoth1).epsilon(1e-15));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double t = testing::uniform(rng, 0.01, 50.0);
    const double w = testing::uniform(rng, 0.01, 10.0);
    const double ref = static_cast<double>(testing::coth_reference(0.5L * w / t));
    CHECK(Temperature(t).coth_weight(w) == Approx(ref).epsilon(1e-13));
  }
  // no overflow deep in the quantum regime
  CHECK(Temperature(1e-4).coth_weight(10.0) == 1.0);
}

TEST_CASE("validate_rows") {
  SUBCASE("identity transformation passes") {
    const auto report = validate_rows(identity_rows(), 1e-12);
    CHECK(report.passed());
  }
  SUBCASE("coupled-pair rows pass at 1e-12") {
    const auto sys = build_pair(PairParams::from_omega(2.0));
    const auto report = validate_rows(sys.rows, 1e-12);
    CHECK(report.passed());
    for (const auto& c : report.checks) CHECK(std::abs(c.residual) < 1e-15);
  }
  SUBCASE("short row fails normalization with residual 0.19") {
    auto rows = identity_rows();
    rows.s_k = {0.9, 0.0};
    const auto report = validate_rows(rows, 1e-12);
    CHECK_FALSE(report.passed());
    CHECK(report.checks[0].name == "normalization_k");
    CHECK_FALSE(report.checks[0].passed);
    CHECK(std::abs(report.checks[0].residual) == Approx(0.19).epsilon(1e-12));
    CHECK(report.checks[1].passed);
    CHECK(report.checks[2].passed);
    CHECK(report.checks[3].passed);
    CHECK(report.describe().find("normalization_k") != std::string::npos);
  }
  SUBCASE("cross-orthogonality and symmetry are detected") {
    auto rows = identity_rows();
    rows.s_l = {std::sqrt(0.5), std::sqrt(0.5)};
    auto report = validate_rows(rows);
    CHECK_FALSE(report.checks[2].passed);

    // [a_k, a_l] != 0: T_l pairs with S_k but T_k does not pair with S_l
    const double c = std::cosh(0.3), s = std::sinh(0.3);
    rows = identity_rows();
    rows.s_l = {0.0, c};
    rows.t_l = {s, 0.0};
    report = validate_rows(rows);
    CHECK(report.checks[1].passed);
    CHECK(report.checks[2].passed);
    CHECK_FALSE(report.checks[3].passed);
    CHECK(std::abs(report.checks[3].residual) == Approx(s));
  }
  SUBCASE("length mismatch is structural, not physical") {
    auto rows = identity_rows();
    rows.t_l = {0.0};
    CHECK_THROWS_AS(validate_rows(rows), StructuralError);
  }
  SUBCASE("tolerance must be positive") {
    CHECK_THROWS_AS(validate_rows(identity_rows(), 0.0), PreconditionError);
  }
}

TEST_CASE("random Bogoliubov rows satisfy the commutation relations") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto rows = testing::random_bogoliubov_rows(rng, 2 + i % 5);
    CHECK(validate_rows(rows, 1e-10).passed());
  }
}

TEST_CASE("thermal inner product") {
  const ComplexVector e1 = {1.0, 0.0};
  const ComplexVector e2 = {0.0, 1.0};
  const ModeSpectrum one({1.0});
  const ComplexVector x1 = {1.0};

  CHECK(thermal_inner_product(x1, x1, one, Temperature::zero()) == cplx(1.0, 0.0));
  CHECK(thermal_inner_product(x1, x1, one, Temperature(0.5)).real() ==
        Approx(kCoth1).epsilon(1e-15));
  CHECK(thermal_inner_product(e1, e2, ModeSpectrum({0.7, 3.0}), Temperature(2.0)) == cplx{});
  CHECK_THROWS_AS(thermal_inner_product(e1, x1, ModeSpectrum({1.0, 2.0}), Temperature(1.0)),
                  StructuralError);

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto freqs = testing::random_spectrum(rng, n);
    const Temperature t(testing::uniform(rng, 0.0, 5.0));
    ComplexVector x(n), y(n);
    for (auto& v : x) v = testing::gaussian_complex(rng);
    for (auto& v : y) v = testing::gaussian_complex(rng);

    const cplx xy = thermal_inner_product(x, y, freqs, t);
    const cplx yx = thermal_inner_product(y, x, freqs, t);
    CHECK(std::abs(xy - std::conj(yx)) < 1e-12);

    const cplx xx = thermal_inner_product(x, x, freqs, t);
    double plain = 0.0;
    for (auto v : x) plain += std::norm(v);
    CHECK(std::abs(xx.imag()) < 1e-12);
    CHECK(xx.real() >= plain - 1e-12);
  }
}

TEST_CASE("residual inner product") {
  const ModeSpectrum one({1.0});
  const ComplexVector x1 = {cplx(0.3, -2.0)};
  CHECK(residual_inner_product(x1, x1, one, Temperature::zero()) == cplx{});

  const ComplexVector u = {1.0};
  CHECK(residual_inner_product(u, u, one, Temperature(0.5)).real() ==
        Approx(kCoth1 - 1.0).epsilon(1e-14));

  const ComplexVector e1 = {1.0, 0.0}, e2 = {0.0, 1.0};
  CHECK(residual_inner_product(e1, e2, ModeSpectrum({1.0, 2.0}), Temperature(3.0)) == cplx{});

  // thermal = plain + residual
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto freqs = testing::random_spectrum(rng, n);
    const Temperature t(testing::uniform(rng, 0.05, 5.0));
    ComplexVector x(n), y(n);
    for (auto& v : x) v = testing::gaussian_complex(rng);
    for (auto& v : y) v = testing::gaussian_complex(rng);
    cplx plain{};
    for (std::size_t a = 0; a < n; ++a) plain += std::conj(x[a]) * y[a];
    CHECK(std::abs(thermal_inner_product(x, y, freqs, t) -
                   (plain + residual_inner_product(x, y, freqs, t))) < 1e-12);
    CHECK(residual_inner_product(x, x, freqs, t).real() >= 0.0);
  }
}

TEST_CASE("pair_covariance examples") {
  SUBCASE("coupled pair at omega = 2, T = 1") {
    const auto sys = build_pair(PairParams::from_omega(2.0));
    const auto m = pair_covariance(sys.rows, sys.spectrum, Temperature(1.0));
    CHECK(m.n1 == Approx(0.95131188015320424).epsilon(1e-14));
    CHECK(m.n2 == Approx(0.95131188015320424).epsilon(1e-14));
    CHECK(m.m1.real() == Approx(0.24619411603112462).epsilon(1e-14));
    CHECK(m.m2.real() == Approx(0.24619411603112462).epsilon(1e-14));
    CHECK(m.ms.real() == Approx(0.13066482671612218).epsilon(1e-14));
    CHECK(m.mc.real() == Approx(-0.24619411603112462).epsilon(1e-14));
    CHECK(std::abs(m.m1.imag()) + std::abs(m.ms.imag()) + std::abs(m.mc.imag()) == 0.0);
  }
  SUBCASE("identity rows at zero temperature give the vacuum") {
    const auto m = pair_covariance(identity_rows(), ModeSpectrum({1.0, 1.0}), Temperature::zero());
    CHECK(m.n1 == 0.5);
    CHECK(m.n2 == 0.5);
    CHECK(m.m1 == cplx{});
    CHECK(m.m2 == cplx{});
    CHECK(m.ms == cplx{});
    CHECK(m.mc == cplx{});
  }
  SUBCASE("identity rows at T = 0.5") {
    const auto m = pair_covariance(identity_rows(), ModeSpectrum({1.0, 1.0}), Temperature(0.5));
    CHECK(m.n1 == Approx(kCoth1 / 2).epsilon(1e-15));
    CHECK(m.n2 == Approx(kCoth1 / 2).epsilon(1e-15));
    CHECK(m.ms == cplx{});
  }
  SUBCASE("invalid rows carry the report") {
    auto rows = identity_rows();
    rows.s_k = {0.9, 0.0};
    try {
      (void)pair_covariance(rows, ModeSpectrum({1.0, 1.0}), Temperature(1.0));
      FAIL("expected InvalidRowsError");
    } catch (const InvalidRowsError& e) {
      CHECK_FALSE(e.report().passed());
      CHECK(std::abs(e.report().checks[0].residual) == Approx(0.19));
    }
  }
  SUBCASE("spectrum length mismatch") {
    CHECK_THROWS_AS(pair_covariance(identity_rows(), ModeSpectrum({1.0}), Temperature(1.0)),
                    StructuralError);
  }
}

TEST_CASE("pair_covariance properties on random Bogoliubov systems") {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto rows = testing::random_bogoliubov_rows(rng, n);
    const auto freqs = testing::random_spectrum(rng, n);
    const Temperature t(i % 10 == 0 ? 0.0 : testing::uniform(rng, 0.05, 10.0));
    const auto m = pair_covariance(rows, freqs, t);

    const Matrix4c mat = m.matrix();
    CHECK((mat - mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.min_eigenvalue() >= -1e-12);
    CHECK(m.n1 >= 0.5 - 1e-12);
    CHECK(m.n2 >= 0.5 - 1e-12);
  }
}

TEST_CASE("occupation grows with temperature") {
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 4;
    const auto rows = testing::random_bogoliubov_rows(rng, n);
    const auto freqs = testing::random_spectrum(rng, n);
    double prev = 0.0;
    for (double t = 0.0; t <= 8.0; t += 0.25) {
      const double n1 = pair_covariance(rows, freqs, Temperature(t)).n1;
      CHECK(n1 >= prev);
      prev = n1;
    }
  }
}

TEST_CASE("vacuum-preserving rows at T = 0 give the vacuum") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto m = pair_covariance(testing::random_passive_rows(rng, n),
                                   testing::random_spectrum(rng, n), Temperature::zero());
    CHECK(m.max_abs_difference(TwoModeCovariance::vacuum()) < 1e-14);
  }
}
