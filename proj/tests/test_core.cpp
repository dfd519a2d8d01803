// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "qmeter/core.hpp"

using namespace qmeter;

namespace {

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (z + z.adjoint());
}

Matrix random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix rho = z * z.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("tensor satisfies the mixed-product identity") {
  std::mt19937_64 rng(11);
  const Matrix a = random_hermitian(2, rng), b = random_hermitian(3, rng);
  const Matrix c = random_hermitian(2, rng), d = random_hermitian(3, rng);
  const Matrix lhs = tensor(a, b) * tensor(c, d);
  const Matrix rhs = tensor(Matrix(a * c), Matrix(b * d));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tensor of basis kets composes indices data-first") {
  const Vector v = tensor(basis_ket(2, 1), basis_ket(3, 2));
  REQUIRE(v.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(v(i) - ((i == 5) ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("tensor_power preserves normalization") {
  Vector v(2);
  v << std::sqrt(0.3), Complex(0.0, std::sqrt(0.7));
  const Vector w = tensor_power(v, 5);
  REQUIRE(w.size() == 32);
  CHECK(std::abs(w.norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(tensor_power(v, 0), std::invalid_argument);
}

TEST_CASE("partial_trace recovers product factors and preserves trace") {
  std::mt19937_64 rng(23);
  const Matrix rho_a = random_density(2, rng);
  const Matrix rho_b = random_density(3, rng);
  const HilbertLayout layout{{2, 3}};
  const Matrix joint = tensor(rho_a, rho_b);

  const Matrix red_a = partial_trace(joint, layout, {0});
  const Matrix red_b = partial_trace(joint, layout, {1});
  CHECK((red_a - rho_a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((red_b - rho_b).cwiseAbs().maxCoeff() < 1e-12);

  const Matrix m = random_hermitian(6, rng);
  CHECK(std::abs(partial_trace(m, layout, {0}).trace() - m.trace()) < 1e-12);
  CHECK_THROWS_AS(partial_trace(m, layout, {2}), std::invalid_argument);
}

TEST_CASE("herm_eig reconstructs the input with descending eigenvalues") {
  std::mt19937_64 rng(37);
  for (int dim : {2, 8, 64, 256}) {
    const Matrix h = random_hermitian(dim, rng);
    const EigResult eig = herm_eig(h);
    for (int i = 1; i < dim; ++i) CHECK(eig.values(i) <= eig.values(i - 1) + 1e-12);
    const Matrix rebuilt =
        eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-9);
  }
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(herm_eig(bad), std::invalid_argument);
}

TEST_CASE("trace_norm is invariant under unitary conjugation") {
  std::mt19937_64 rng(41);
  const Matrix h = random_hermitian(6, rng);
  const Matrix u = haar_random_unitary(6, rng);
  CHECK(std::abs(trace_norm(h) - trace_norm(Matrix(u * h * u.adjoint()))) < 1e-10);
}

TEST_CASE("symmetric_basis_state has uniform amplitudes on fixed weight") {
  for (int n : {1, 3, 5}) {
    for (int k = 0; k <= n; ++k) {
      const Vector s = symmetric_basis_state(n, k);
      CHECK(std::abs(s.norm() - 1.0) < 1e-12);
      const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
      for (int i = 0; i < s.size(); ++i) {
        const double expected =
            (std::popcount(static_cast<unsigned>(i)) == k) ? amp : 0.0;
        CHECK(std::abs(s(i) - expected) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(symmetric_basis_state(2, 3), std::invalid_argument);
}

TEST_CASE("symmetric basis states of fixed n are orthonormal") {
  const int n = 4;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) {
      const Complex ov = symmetric_basis_state(n, k).dot(symmetric_basis_state(n, l));
      CHECK(std::abs(ov - ((k == l) ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("validate_povm accepts a projective split and rejects broken sums") {
  Povm good;
  good.layout = qubit_layout(1);
  Matrix p0 = basis_ket(2, 0) * basis_ket(2, 0).adjoint();
  good.elements = {{"0", p0}, {"1", Matrix::Identity(2, 2) - p0}};
  const PovmReport ok = validate_povm(good, 1e-10);
  CHECK(ok.pass);
  CHECK(ok.completeness_residual < 1e-15);

  Povm bad = good;
  bad.elements[0].op *= 1.01;
  CHECK_FALSE(validate_povm(bad, 1e-10).pass);

  Povm negative = good;
  negative.elements[0].op -= 1e-6 * Matrix::Identity(2, 2);
  negative.elements[1].op += 1e-6 * Matrix::Identity(2, 2);
  CHECK_FALSE(validate_povm(negative, 1e-8).pass);
}

TEST_CASE("binomial is exact up to the 64-bit limit") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(63, 31) == 916312070471295267ULL);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK_THROWS_AS(binomial(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(binomial(4, -1), std::invalid_argument);
}

TEST_CASE("effective_data_povm contracts the program factor") {
  std::mt19937_64 rng(53);
  Vector program(2);
  program << std::sqrt(0.2), std::sqrt(0.8);
  const Matrix p_a = random_hermitian(2, rng);
  const Matrix p_b = random_hermitian(2, rng);

  Povm joint;
  joint.layout = qubit_layout(2);
  joint.elements = {{"x", tensor(p_a, p_b)},
                    {"y", Matrix::Identity(4, 4) - tensor(p_a, p_b)}};
  const Povm eff = effective_data_povm(joint, program);
  REQUIRE(eff.elements.size() == 2);

  const Complex weight = program.dot(p_b * program);
  CHECK((eff.elements[0].op - weight * p_a).cwiseAbs().maxCoeff() < 1e-12);
  // Effective elements always stay complete for a normalized program.
  CHECK((eff.elements[0].op + eff.elements[1].op - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("haar_random_unitary is unitary and seed-deterministic") {
  for (int dim : {2, 3, 5}) {
    std::mt19937_64 rng_a(99), rng_b(99);
    const Matrix u = haar_random_unitary(dim, rng_a);
    const Matrix v = haar_random_unitary(dim, rng_b);
    CHECK((u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
  }
}
