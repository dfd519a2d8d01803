// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/universal_qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {

constexpr int kDim = 8;  // three qubits, |d p1 p2>

Vector ket_from(std::initializer_list<std::pair<int, double>> terms) {
  Vector v = Vector::Zero(kDim);
  for (const auto& [idx, amp] : terms) v(idx) = amp;
  return v;
}

int idx(int d, int p1, int p2) { return d * 4 + p1 * 2 + p2; }

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const double kSqrt2 = std::sqrt(2.0);

Vector a_plus_ket() {
  return ket_from({{idx(0, 1, 1), 1.0 / kSqrt6},
                   {idx(1, 0, 1), 1.0 / kSqrt6},
                   {idx(1, 1, 0), -2.0 / kSqrt6}});
}
Vector b_plus_ket() {
  return ket_from({{idx(0, 0, 1), -2.0 / kSqrt6},
                   {idx(0, 1, 0), 1.0 / kSqrt6},
                   {idx(1, 0, 0), 1.0 / kSqrt6}});
}
Vector a_minus_ket() {
  return ket_from({{idx(0, 1, 1), -1.0 / kSqrt6},
                   {idx(1, 0, 1), 2.0 / kSqrt6},
                   {idx(1, 1, 0), -1.0 / kSqrt6}});
}
Vector b_minus_ket() {
  return ket_from({{idx(0, 0, 1), -1.0 / kSqrt6},
                   {idx(0, 1, 0), 2.0 / kSqrt6},
                   {idx(1, 0, 0), -1.0 / kSqrt6}});
}

Vector phi1_ket() {
  const double c = 1.0 / (2.0 * kSqrt3);
  return ket_from({{idx(0, 0, 1), (kSqrt3 + 1.0) * c},
                   {idx(0, 1, 0), -(kSqrt3 - 1.0) * c},
                   {idx(1, 0, 0), -2.0 * c}});
}
Vector phi2_ket() {
  const double c = 1.0 / (2.0 * kSqrt3);
  return ket_from({{idx(1, 1, 0), (kSqrt3 + 1.0) * c},
                   {idx(1, 0, 1), -(kSqrt3 - 1.0) * c},
                   {idx(0, 1, 1), -2.0 * c}});
}

// Unit vectors splitting a 60-degree pure-state pair x_pm = (sqrt(3) b + s a)/2.
void sector_axes(const Vector& plus, const Vector& minus, Vector& alpha, Vector& beta) {
  alpha = plus - minus;
  beta = (plus + minus) / kSqrt3;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = x;
    weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

Vector BlochBasis::psi_plus() const {
  Vector v(2);
  v << std::cos(theta / 2.0),
      std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  return v;
}

Vector BlochBasis::psi_minus() const {
  Vector v(2);
  v << std::sin(theta / 2.0),
      -std::exp(Complex(0.0, phi)) * std::cos(theta / 2.0);
  return v;
}

Matrix um_symmetric_projector() {
  Matrix proj = Matrix::Zero(kDim, kDim);
  for (int k = 0; k <= 3; ++k) {
    Vector s = symmetric_basis_state(3, k);
    proj += s * s.adjoint();
  }
  return proj;
}

UmOperators um_build_r_analytic() {
  UmOperators ops;
  ops.spectral.sym_projector = um_symmetric_projector();
  ops.spectral.a_plus = a_plus_ket();
  ops.spectral.b_plus = b_plus_ket();
  ops.spectral.a_minus = a_minus_ket();
  ops.spectral.b_minus = b_minus_ket();

  auto build = [&](const Vector& a, const Vector& b) {
    Matrix r = (1.0 / 12.0) * ops.spectral.sym_projector +
               (1.0 / 3.0) * (a * a.adjoint()) + (1.0 / 3.0) * (b * b.adjoint());
    return Matrix(0.5 * r);  // fold in the equal priors
  };
  ops.r_plus = build(ops.spectral.a_plus, ops.spectral.b_plus);
  ops.r_minus = build(ops.spectral.a_minus, ops.spectral.b_minus);
  return ops;
}

std::pair<Matrix, Matrix> um_build_r_haar(int n_theta, int n_phi) {
  if (n_theta < 3) throw std::invalid_argument("um_build_r_haar: n_theta >= 3");
  if (n_phi < 6) throw std::invalid_argument("um_build_r_haar: n_phi >= 6");
  std::vector<double> nodes, weights;
  gauss_legendre(n_theta, nodes, weights);

  Matrix r_plus = Matrix::Zero(kDim, kDim);
  Matrix r_minus = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < n_theta; ++i) {
    BlochBasis basis;
    basis.theta = std::acos(nodes[static_cast<size_t>(i)]);
    const double w_theta = weights[static_cast<size_t>(i)] / 2.0;  // measure d(cos)/2
    for (int j = 0; j < n_phi; ++j) {
      basis.phi = 2.0 * M_PI * j / n_phi;
      Vector program = tensor(basis.psi_plus(), basis.psi_minus());
      Vector state_p = tensor(basis.psi_plus(), program);
      Vector state_m = tensor(basis.psi_minus(), program);
      const double w = w_theta / n_phi;
      r_plus += w * (state_p * state_p.adjoint());
      r_minus += w * (state_m * state_m.adjoint());
    }
  }
  return {Matrix(0.5 * r_plus), Matrix(0.5 * r_minus)};
}

std::pair<Povm, double> um_deterministic() {
  Vector phi1 = phi1_ket(), phi2 = phi2_ket();
  Matrix pi_plus = 0.5 * um_symmetric_projector() + phi1 * phi1.adjoint() +
                   phi2 * phi2.adjoint();
  Povm povm;
  povm.layout = qubit_layout(3);
  povm.elements = {{"+", pi_plus}, {"-", Matrix::Identity(kDim, kDim) - pi_plus}};
  return {std::move(povm), 0.5 * (1.0 + 1.0 / kSqrt3)};
}

std::pair<Povm, double> um_unambiguous() {
  Vector chi1 = ket_from({{idx(0, 0, 1), 1.0 / kSqrt2}, {idx(1, 0, 0), -1.0 / kSqrt2}});
  Vector chi2 = ket_from({{idx(0, 1, 1), 1.0 / kSqrt2}, {idx(1, 1, 0), -1.0 / kSqrt2}});
  Vector kap1 = ket_from({{idx(0, 1, 0), 1.0 / kSqrt2}, {idx(1, 0, 0), -1.0 / kSqrt2}});
  Vector kap2 = ket_from({{idx(0, 1, 1), 1.0 / kSqrt2}, {idx(1, 0, 1), -1.0 / kSqrt2}});
  Matrix pi_plus = (2.0 / 3.0) * (chi1 * chi1.adjoint() + chi2 * chi2.adjoint());
  Matrix pi_minus = (2.0 / 3.0) * (kap1 * kap1.adjoint() + kap2 * kap2.adjoint());
  Povm povm;
  povm.layout = qubit_layout(3);
  povm.elements = {{"+", pi_plus},
                   {"-", pi_minus},
                   {"?", Matrix::Identity(kDim, kDim) - pi_plus - pi_minus}};
  return {std::move(povm), 2.0 / 3.0};
}

std::pair<Povm, double> um_interpolated(double p_i_target) {
  if (p_i_target < 0.0 || p_i_target > 2.0 / 3.0 + 1e-12)
    throw std::invalid_argument("um_interpolated: P_I out of [0, 2/3]");
  Matrix sym = um_symmetric_projector();
  Povm povm;
  povm.layout = qubit_layout(3);

  if (p_i_target <= 1.0 / 3.0) {
    auto [det, ps_max] = um_deterministic();
    (void)ps_max;
    Matrix pi_plus = *det.find("+") - 1.5 * p_i_target * sym;
    Matrix pi_minus = *det.find("-") - 1.5 * p_i_target * sym;
    povm.elements = {{"+", pi_plus},
                     {"-", pi_minus},
                     {"?", 3.0 * p_i_target * sym}};
  } else {
    // tan^2(Phi) inverts P_I = 1/3 + (2/3) * (3/4)(1 - cot^2 Phi)
    const double cot2 = 5.0 / 3.0 - 2.0 * p_i_target;
    const double phi_angle = std::atan(1.0 / std::sqrt(cot2));
    const double s = std::sin(phi_angle), c = std::cos(phi_angle);
    const double scale = 1.0 / (2.0 * s * s);

    Matrix pi_plus = Matrix::Zero(kDim, kDim);
    Matrix pi_minus = Matrix::Zero(kDim, kDim);
    Matrix pi_unknown = sym;
    const std::pair<Vector, Vector> sectors[] = {
        {a_plus_ket(), a_minus_ket()}, {b_plus_ket(), b_minus_ket()}};
    for (const auto& [plus, minus] : sectors) {
      Vector alpha, beta;
      sector_axes(plus, minus, alpha, beta);
      Vector xi_plus = c * beta + s * alpha;
      Vector xi_minus = c * beta - s * alpha;
      pi_plus += scale * (xi_plus * xi_plus.adjoint());
      pi_minus += scale * (xi_minus * xi_minus.adjoint());
      pi_unknown += (1.0 - cot2) * (beta * beta.adjoint());
    }
    povm.elements = {{"+", pi_plus}, {"-", pi_minus}, {"?", pi_unknown}};
  }
  return {std::move(povm), um_ps_of_pi(p_i_target)};
}

double um_ps_of_pi(double p_i) {
  if (p_i < 0.0 || p_i > 2.0 / 3.0 + 1e-12)
    throw std::invalid_argument("um_ps_of_pi: P_I out of [0, 2/3]");
  if (p_i <= 1.0 / 3.0)
    return 0.5 * (1.0 + 1.0 / kSqrt3) - 0.5 * p_i;
  return 0.5 - 0.5 * p_i + (1.0 / 3.0) * std::sqrt(1.25 - 1.5 * p_i);
}

double um_lagrange_a(double p_i_target) {
  if (p_i_target <= 1.0 / 3.0) return 0.5;
  const double tan_phi = 1.0 / std::sqrt(5.0 / 3.0 - 2.0 * p_i_target);
  return 0.5 * (1.0 + tan_phi / kSqrt3);
}

}  // namespace qmeter
