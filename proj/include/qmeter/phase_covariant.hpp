// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_PHASE_COVARIANT_HPP
#define QMETER_PHASE_COVARIANT_HPP

#include <utility>

#include "qmeter/core.hpp"

namespace qmeter {

// Multimeters for equatorial bases |psi_pm(phi)> = (|0> pm e^{i phi}|1>)/sqrt(2)
// with program |psi_+>^{(x) N}. All joint operators live in the full
// 2^{N+1}-dimensional space, data qubit first.

/// One block of the common direct-sum structure of R+/R-.
/// Two-dimensional blocks (k = 1..N) are spanned by |0>_d|N,k>_p and
/// |1>_d|N,k-1>_p; k = 0 and k = N+1 are one-dimensional.
struct PcBlock {
  int k = 0;
  int dim = 1;
  double weight = 0.0;  // C(N+1,k)/2^{N+1}
  double b_nk = 0.0;    // k/(N+1)
  Vector ket0;          // |0>_d|N,k>_p   (absent for k = N+1)
  Vector ket1;          // |1>_d|N,k-1>_p (absent for k = 0)
};

struct PcDecomposition {
  int n = 0;
  std::vector<PcBlock> blocks;
};

struct PcOperators {
  Matrix r_plus;
  Matrix r_minus;
  PcDecomposition blocks;
};

struct PcInterpolationParams {
  double a = 0.0;    // Lagrange multiplier in [0,1]
  double eta = 0.0;  // consumed only at a = 1/2
};

struct PcResult {
  Povm povm;
  double p_s = 0.0;
  double p_i = 0.0;
};

struct TradeoffPoint {
  double a = 0.0;
  double eta = 0.0;
  double p_i = 0.0;
  double p_s = 0.0;
  double p_rs = 0.0;
};

/// Equatorial basis pair |psi_+(phi)>, |psi_-(phi)>.
std::pair<Vector, Vector> pc_basis_kets(double phi);

/// The pair ket |phi^{pm}_{N,k}> for a two-dimensional block.
std::pair<Vector, Vector> pc_block_kets(int n, int k);

/// Analytic R+/R- with trace 1/2 each, plus the block decomposition.
PcOperators pc_build_r_analytic(int n);

/// Uniform trapezoid quadrature oracle over phi; exact once
/// m_points >= 2(n+2).
std::pair<Matrix, Matrix> pc_build_r_quadrature(int n, int m_points);

/// Closed-form optimal deterministic success rate.
double pc_ps_max(int n);

/// Closed-form minimal inconclusive probability of the unambiguous device.
double pc_pi_unambiguous(int n);

/// Optimal two-outcome POVM and its success rate.
std::pair<Povm, double> pc_deterministic(int n);

/// Optimal error-free three-outcome POVM and its inconclusive rate.
std::pair<Povm, double> pc_unambiguous(int n);

/// Optimal POVM at fixed Lagrange multiplier a (and eta at the a = 1/2
/// plateau), with its exact rates.
PcResult pc_interpolated(int n, const PcInterpolationParams& params);

/// Sweep of the optimal family producing the P_RS(P_I) tradeoff curve.
std::vector<TradeoffPoint> pc_tradeoff_curve(int n, int grid_size);

/// Effective POVM on the data qubit for program |psi_+(phi)>^{(x) N}.
Povm pc_effective_data_povm(const Povm& povm, double phi, int n);

/// Monotone bisection for (a, eta) reaching a target P_I; the forward map
/// is pc_interpolated.
PcInterpolationParams pc_params_for_pi(int n, double p_i_target);

}  // namespace qmeter

#endif
