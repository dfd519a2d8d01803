// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmeter/discrimination.hpp"
#include "qmeter/universal_qubit.hpp"

using namespace qmeter;

TEST_CASE("Bloch basis pairs are orthonormal") {
  for (double theta : {0.0, 0.7, 2.1}) {
    for (double phi : {0.0, 1.3, 5.0}) {
      BlochBasis basis{theta, phi};
      const Vector p = basis.psi_plus(), m = basis.psi_minus();
      CHECK(std::abs(p.norm() - 1.0) < 1e-12);
      CHECK(std::abs(m.norm() - 1.0) < 1e-12);
      CHECK(std::abs(p.dot(m)) < 1e-12);
    }
  }
}

TEST_CASE("symmetric projector is a rank-4 idempotent") {
  const Matrix sym = um_symmetric_projector();
  CHECK((sym * sym - sym).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((sym - sym.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(sym.trace().real() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("spectral vectors are orthonormal and avoid the symmetric subspace") {
  const UmOperators ops = um_build_r_analytic();
  const Matrix& sym = ops.spectral.sym_projector;
  const Vector* kets[] = {&ops.spectral.a_plus, &ops.spectral.b_plus,
                          &ops.spectral.a_minus, &ops.spectral.b_minus};
  for (const Vector* v : kets) {
    CHECK(std::abs(v->norm() - 1.0) < 1e-12);
    CHECK((sym * (*v)).norm() < 1e-12);
  }
  CHECK(std::abs(ops.spectral.a_plus.dot(ops.spectral.b_plus)) < 1e-12);
  CHECK(std::abs(ops.spectral.a_minus.dot(ops.spectral.b_minus)) < 1e-12);
}

TEST_CASE("averaged operators carry the known spectrum") {
  const UmOperators ops = um_build_r_analytic();
  CHECK(std::abs(ops.r_plus.trace().real() - 0.5) < 1e-12);
  CHECK(std::abs(ops.r_minus.trace().real() - 0.5) < 1e-12);
  for (const Matrix* r : {&ops.r_plus, &ops.r_minus}) {
    const auto values = herm_eig(Matrix(2.0 * (*r))).values;
    const double expected[] = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 12.0, 1.0 / 12.0,
                               1.0 / 12.0, 1.0 / 12.0, 0.0, 0.0};
    for (int i = 0; i < 8; ++i) CHECK(std::abs(values(i) - expected[i]) < 1e-10);
  }
}

TEST_CASE("analytic operators match the Bloch-sphere quadrature") {
  const UmOperators ops = um_build_r_analytic();
  auto [qp, qm] = um_build_r_haar(8, 16);
  CHECK((ops.r_plus - qp).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((ops.r_minus - qm).cwiseAbs().maxCoeff() < 1e-10);
  auto [cp, cm] = um_build_r_haar(3, 6);
  CHECK((ops.r_plus - cp).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((ops.r_minus - cm).cwiseAbs().maxCoeff() < 1e-9);
  CHECK_THROWS_AS(um_build_r_haar(2, 16), std::invalid_argument);
  CHECK_THROWS_AS(um_build_r_haar(8, 5), std::invalid_argument);
}

TEST_CASE("deterministic device reaches the two-state optimum") {
  const UmOperators ops = um_build_r_analytic();
  auto [povm, ps] = um_deterministic();
  CHECK(ps == doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).epsilon(1e-14));
  CHECK(validate_povm(povm, 1e-10).pass);
  const Rates rates = p_rates(povm, ops.r_plus, ops.r_minus);
  CHECK(rates.p_success == doctest::Approx(ps).epsilon(1e-10));
  const HelstromResult best = helstrom(ops.r_plus, ops.r_minus, povm.layout);
  CHECK(best.p_success == doctest::Approx(ps).epsilon(1e-10));
}

TEST_CASE("unambiguous device is error-free at P_I = 2/3") {
  const UmOperators ops = um_build_r_analytic();
  auto [povm, pi] = um_unambiguous();
  CHECK(pi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(validate_povm(povm, 1e-10).pass);
  const Rates rates = p_rates(povm, ops.r_plus, ops.r_minus);
  CHECK(rates.p_inconclusive == doctest::Approx(pi).epsilon(1e-10));
  CHECK(std::abs(rates.p_error) < 1e-10);
}

TEST_CASE("interpolated family is valid, consistent, and extremal") {
  const UmOperators ops = um_build_r_analytic();
  for (double p_i : {0.0, 0.2, 1.0 / 3.0, 0.45, 0.6, 2.0 / 3.0}) {
    auto [povm, ps] = um_interpolated(p_i);
    CHECK(validate_povm(povm, 1e-10).pass);
    const Rates rates = p_rates(povm, ops.r_plus, ops.r_minus);
    CHECK(rates.p_inconclusive == doctest::Approx(p_i).epsilon(1e-9));
    CHECK(rates.p_success == doctest::Approx(ps).epsilon(1e-9));
    const ExtremalCertificate cert =
        verify_extremal(povm, ops.r_plus, ops.r_minus, um_lagrange_a(p_i));
    CHECK(cert.pass);
  }
  CHECK_THROWS_AS(um_interpolated(0.7), std::invalid_argument);
  CHECK_THROWS_AS(um_interpolated(-0.1), std::invalid_argument);
}

TEST_CASE("success rate curve is continuous, decreasing, and anchored") {
  CHECK(um_ps_of_pi(0.0) == doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).epsilon(1e-14));
  CHECK(um_ps_of_pi(2.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // Both branch expressions agree at the seam.
  const double seam = 1.0 / 3.0;
  const double left = 0.5 * (1.0 + 1.0 / std::sqrt(3.0)) - 0.5 * seam;
  const double right = 0.5 - 0.5 * seam + (1.0 / 3.0) * std::sqrt(1.25 - 1.5 * seam);
  CHECK(std::abs(left - right) < 1e-12);
  double prev = um_ps_of_pi(0.0);
  for (int i = 1; i <= 50; ++i) {
    const double p_i = (2.0 / 3.0) * i / 50.0;
    const double p_s = um_ps_of_pi(p_i);
    CHECK(p_s <= prev + 1e-12);
    prev = p_s;
  }
  CHECK_THROWS_AS(um_ps_of_pi(0.8), std::invalid_argument);
}

TEST_CASE("the two POVM branches coincide at the seam") {
  auto [below, ps_b] = um_interpolated(1.0 / 3.0);
  auto [above, ps_a] = um_interpolated(1.0 / 3.0 + 1e-13);
  CHECK(std::abs(ps_b - ps_a) < 1e-9);
  for (const char* label : {"+", "-", "?"}) {
    const Matrix diff = *below.find(label) - *above.find(label);
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("the Lagrange multiplier tracks the interpolation branch") {
  CHECK(um_lagrange_a(0.1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(um_lagrange_a(2.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
  double prev = um_lagrange_a(1.0 / 3.0);
  for (double p_i : {0.4, 0.5, 0.6}) {
    const double a = um_lagrange_a(p_i);
    CHECK(a >= prev - 1e-12);
    prev = a;
  }
}
