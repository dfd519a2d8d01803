// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/phase_covariant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {

constexpr double kHalfTol = 1e-12;  // width of the a = 1/2 plateau

struct BlockPovm {
  Matrix pi_plus;
  Matrix pi_minus;
  Matrix pi_unknown;
  double p_s_k = 0.0;
  double p_i_k = 0.0;
};

// Optimal POVM on a two-dimensional block at Lagrange multiplier a.
// Orientation: p carries the dominant binomial weight c_big, q the other.
BlockPovm nondegenerate_block(const Vector& p, const Vector& q, double c_big,
                              double c_small, double c_total, double a) {
  const double a_th = 0.5 * (1.0 + std::sqrt(c_small / c_big));
  const double tan_phi =
      (a < a_th) ? 1.0 : std::sqrt(c_big / c_small) * (2.0 * a - 1.0);
  const double phi = std::atan(tan_phi);
  const double s = std::sin(phi), c = std::cos(phi);
  const double cot2 = (c * c) / (s * s);

  Vector xi_plus = c * p + s * q;
  Vector xi_minus = c * p - s * q;
  const double scale = 1.0 / (2.0 * s * s);

  BlockPovm out;
  out.pi_plus = scale * (xi_plus * xi_plus.adjoint());
  out.pi_minus = scale * (xi_minus * xi_minus.adjoint());
  out.pi_unknown = (1.0 - cot2) * (p * p.adjoint());
  out.p_i_k = (c_big / c_total) * (1.0 - cot2);
  const double theta = std::atan(std::sqrt(c_small / c_big));
  const double cp = std::cos(phi - theta);
  out.p_s_k = cp * cp * scale;
  return out;
}

// Degenerate one-dimensional block (identical states): a < 1/2 keeps the
// projective split, a > 1/2 routes everything to "?", a = 1/2 interpolates
// through eta.
BlockPovm degenerate_block(const Vector& ket, double a, double eta) {
  Matrix proj = ket * ket.adjoint();
  BlockPovm out;
  if (a < 0.5 - kHalfTol) {
    out.pi_plus = 0.5 * proj;
    out.pi_minus = 0.5 * proj;
    out.pi_unknown = Matrix::Zero(proj.rows(), proj.cols());
    out.p_s_k = 0.5;
    out.p_i_k = 0.0;
  } else if (a > 0.5 + kHalfTol) {
    out.pi_plus = Matrix::Zero(proj.rows(), proj.cols());
    out.pi_minus = out.pi_plus;
    out.pi_unknown = proj;
    out.p_s_k = 0.0;
    out.p_i_k = 1.0;
  } else {
    out.pi_plus = 0.5 * (1.0 - eta) * proj;
    out.pi_minus = out.pi_plus;
    out.pi_unknown = eta * proj;
    out.p_s_k = 0.5 * (1.0 - eta);
    out.p_i_k = eta;
  }
  return out;
}

}  // namespace

std::pair<Vector, Vector> pc_basis_kets(double phi) {
  const Complex phase = std::exp(Complex(0.0, phi));
  Vector plus(2), minus(2);
  plus << 1.0 / std::sqrt(2.0), phase / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -phase / std::sqrt(2.0);
  return {plus, minus};
}

std::pair<Vector, Vector> pc_block_kets(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("pc_block_kets: k out of 1..N");
  const double b = static_cast<double>(k) / (n + 1);
  Vector zero = basis_ket(2, 0), one = basis_ket(2, 1);
  Vector u = tensor(zero, symmetric_basis_state(n, k));
  Vector v = tensor(one, symmetric_basis_state(n, k - 1));
  Vector plus = std::sqrt(1.0 - b) * u + std::sqrt(b) * v;
  Vector minus = std::sqrt(1.0 - b) * u - std::sqrt(b) * v;
  return {plus, minus};
}

PcOperators pc_build_r_analytic(int n) {
  if (n < 1) throw std::invalid_argument("pc_build_r_analytic: n must be >= 1");
  const int dim = 1 << (n + 1);
  const double norm = std::ldexp(1.0, -(n + 1));  // 1/2^{N+1}
  Vector zero = basis_ket(2, 0), one = basis_ket(2, 1);

  PcOperators ops;
  ops.blocks.n = n;
  ops.r_plus = Matrix::Zero(dim, dim);
  ops.r_minus = Matrix::Zero(dim, dim);

  for (int k = 0; k <= n + 1; ++k) {
    PcBlock blk;
    blk.k = k;
    blk.weight = static_cast<double>(binomial(n + 1, k)) * norm;
    blk.b_nk = static_cast<double>(k) / (n + 1);
    if (k <= n) blk.ket0 = tensor(zero, symmetric_basis_state(n, k));
    if (k >= 1) blk.ket1 = tensor(one, symmetric_basis_state(n, k - 1));
    blk.dim = (k >= 1 && k <= n) ? 2 : 1;

    if (blk.dim == 2) {
      auto [plus, minus] = pc_block_kets(n, k);
      ops.r_plus += blk.weight * (plus * plus.adjoint());
      ops.r_minus += blk.weight * (minus * minus.adjoint());
    } else {
      const Vector& ket = (k == 0) ? blk.ket0 : blk.ket1;
      Matrix proj = blk.weight * (ket * ket.adjoint());
      ops.r_plus += proj;
      ops.r_minus += proj;
    }
    ops.blocks.blocks.push_back(std::move(blk));
  }
  // The block sum carries trace 1; halve to fold in the equal priors.
  ops.r_plus *= 0.5;
  ops.r_minus *= 0.5;
  return ops;
}

std::pair<Matrix, Matrix> pc_build_r_quadrature(int n, int m_points) {
  if (n < 1) throw std::invalid_argument("pc_build_r_quadrature: n must be >= 1");
  if (m_points < 2 * (n + 2))
    throw std::invalid_argument("pc_build_r_quadrature: need m_points >= 2(n+2)");
  const int dim = 1 << (n + 1);
  Matrix r_plus = Matrix::Zero(dim, dim);
  Matrix r_minus = Matrix::Zero(dim, dim);
  for (int j = 0; j < m_points; ++j) {
    const double phi = 2.0 * M_PI * j / m_points;
    auto [psi_p, psi_m] = pc_basis_kets(phi);
    Vector program = tensor_power(psi_p, n);
    Vector state_p = tensor(psi_p, program);
    Vector state_m = tensor(psi_m, program);
    r_plus += state_p * state_p.adjoint();
    r_minus += state_m * state_m.adjoint();
  }
  r_plus *= 0.5 / m_points;
  r_minus *= 0.5 / m_points;
  return {r_plus, r_minus};
}

double pc_ps_max(int n) {
  if (n < 1) throw std::invalid_argument("pc_ps_max: n must be >= 1");
  double sum = 0.0;
  for (int k = 1; k <= n; ++k)
    sum += std::sqrt(static_cast<double>(binomial(n, k)) *
                     static_cast<double>(binomial(n, k - 1)));
  return 0.5 + std::ldexp(sum, -(n + 1));
}

double pc_pi_unambiguous(int n) {
  if (n < 1) throw std::invalid_argument("pc_pi_unambiguous: n must be >= 1");
  if (n % 2 == 0) {
    const int m = n / 2;
    return std::ldexp(static_cast<double>(binomial(2 * m, m)), -2 * m);
  }
  const int m = (n + 1) / 2;
  return std::ldexp(static_cast<double>(binomial(2 * m - 1, m - 1)), -(2 * m - 1));
}

std::pair<Povm, double> pc_deterministic(int n) {
  PcOperators ops = pc_build_r_analytic(n);
  const int dim = 1 << (n + 1);
  Matrix pi_plus = Matrix::Zero(dim, dim);
  for (const PcBlock& blk : ops.blocks.blocks) {
    if (blk.dim == 2) {
      Vector ket = (blk.ket0 + blk.ket1) / std::sqrt(2.0);
      pi_plus += ket * ket.adjoint();
    } else {
      const Vector& ket = (blk.k == 0) ? blk.ket0 : blk.ket1;
      pi_plus += 0.5 * (ket * ket.adjoint());
    }
  }
  Povm povm;
  povm.layout = qubit_layout(n + 1);
  povm.elements = {{"+", pi_plus}, {"-", Matrix::Identity(dim, dim) - pi_plus}};
  return {std::move(povm), pc_ps_max(n)};
}

std::pair<Povm, double> pc_unambiguous(int n) {
  PcOperators ops = pc_build_r_analytic(n);
  const int dim = 1 << (n + 1);
  Matrix pi_plus = Matrix::Zero(dim, dim);
  Matrix pi_minus = Matrix::Zero(dim, dim);
  for (const PcBlock& blk : ops.blocks.blocks) {
    if (blk.dim != 2) continue;
    const double b = blk.b_nk;
    const double d_inv =
        (n + 1) / (2.0 * std::max(blk.k, n + 1 - blk.k));
    Vector perp_plus = std::sqrt(b) * blk.ket0 - std::sqrt(1.0 - b) * blk.ket1;
    Vector perp_minus = std::sqrt(b) * blk.ket0 + std::sqrt(1.0 - b) * blk.ket1;
    pi_plus += d_inv * (perp_minus * perp_minus.adjoint());
    pi_minus += d_inv * (perp_plus * perp_plus.adjoint());
  }
  Povm povm;
  povm.layout = qubit_layout(n + 1);
  Matrix pi_unknown = Matrix::Identity(dim, dim) - pi_plus - pi_minus;
  povm.elements = {{"+", pi_plus}, {"-", pi_minus}, {"?", pi_unknown}};
  return {std::move(povm), pc_pi_unambiguous(n)};
}

PcResult pc_interpolated(int n, const PcInterpolationParams& params) {
  if (params.a < 0.0 || params.a > 1.0)
    throw std::invalid_argument("pc_interpolated: a out of [0,1]");
  if (params.eta < 0.0 || params.eta > 1.0)
    throw std::invalid_argument("pc_interpolated: eta out of [0,1]");
  PcOperators ops = pc_build_r_analytic(n);
  const int dim = 1 << (n + 1);
  Matrix pi_plus = Matrix::Zero(dim, dim);
  Matrix pi_minus = Matrix::Zero(dim, dim);
  double p_s = 0.0, p_i = 0.0;

  for (const PcBlock& blk : ops.blocks.blocks) {
    BlockPovm piece;
    if (blk.dim == 2) {
      const double cnk = static_cast<double>(binomial(n, blk.k));
      const double cnk1 = static_cast<double>(binomial(n, blk.k - 1));
      const double c_total = static_cast<double>(binomial(n + 1, blk.k));
      if (cnk >= cnk1) {
        piece = nondegenerate_block(blk.ket0, blk.ket1, cnk, cnk1, c_total, params.a);
      } else {
        piece = nondegenerate_block(blk.ket1, blk.ket0, cnk1, cnk, c_total, params.a);
      }
    } else {
      const Vector& ket = (blk.k == 0) ? blk.ket0 : blk.ket1;
      piece = degenerate_block(ket, params.a, params.eta);
    }
    pi_plus += piece.pi_plus;
    pi_minus += piece.pi_minus;
    p_s += blk.weight * piece.p_s_k;
    p_i += blk.weight * piece.p_i_k;
  }

  PcResult res;
  res.povm.layout = qubit_layout(n + 1);
  Matrix pi_unknown = Matrix::Identity(dim, dim) - pi_plus - pi_minus;
  res.povm.elements = {{"+", pi_plus}, {"-", pi_minus}, {"?", pi_unknown}};
  res.p_s = p_s;
  res.p_i = p_i;
  return res;
}

std::vector<TradeoffPoint> pc_tradeoff_curve(int n, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("pc_tradeoff_curve: grid_size >= 2");
  std::vector<TradeoffPoint> points;
  auto emit = [&](double a, double eta) {
    PcResult res = pc_interpolated(n, {a, eta});
    TradeoffPoint pt;
    pt.a = a;
    pt.eta = eta;
    pt.p_i = res.p_i;
    pt.p_s = res.p_s;
    pt.p_rs = res.p_s / (1.0 - res.p_i);
    points.push_back(pt);
  };
  for (int i = 0; i < grid_size; ++i) {
    const double a = static_cast<double>(i) / (grid_size - 1);
    if (std::abs(a - 0.5) <= kHalfTol) continue;  // covered by the eta sweep
    emit(a, 0.0);
  }
  // The degenerate blocks jump at a = 1/2; eta bridges the gap continuously.
  for (int i = 0; i < grid_size; ++i)
    emit(0.5, static_cast<double>(i) / (grid_size - 1));
  std::sort(points.begin(), points.end(), [](const TradeoffPoint& x, const TradeoffPoint& y) {
    if (x.p_i != y.p_i) return x.p_i < y.p_i;
    return x.p_rs < y.p_rs;
  });
  return points;
}

Povm pc_effective_data_povm(const Povm& povm, double phi, int n) {
  auto [psi_p, psi_m] = pc_basis_kets(phi);
  (void)psi_m;
  return effective_data_povm(povm, tensor_power(psi_p, n));
}

PcInterpolationParams pc_params_for_pi(int n, double p_i_target) {
  const double p_i_max = pc_pi_unambiguous(n);
  if (p_i_target < 0.0 || p_i_target > p_i_max + 1e-12)
    throw std::invalid_argument("pc_params_for_pi: target out of range");
  const double plateau = std::ldexp(1.0, -n);  // P_I at a = 1/2, eta = 1
  if (p_i_target <= plateau)
    return {0.5, std::min(1.0, p_i_target / plateau)};
  double lo = 0.5, hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    const double p_i = pc_interpolated(n, {mid, 1.0}).p_i;
    if (std::abs(p_i - p_i_target) <= 1e-10) return {mid, 1.0};
    (p_i < p_i_target ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), 1.0};
}

}  // namespace qmeter
