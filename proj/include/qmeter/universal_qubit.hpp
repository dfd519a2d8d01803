// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_UNIVERSAL_QUBIT_HPP
#define QMETER_UNIVERSAL_QUBIT_HPP

#include <utility>

#include "qmeter/core.hpp"

namespace qmeter {

// Multimeter for an arbitrary qubit basis, program |psi_+>|psi_->, three
// qubits total (data first).

/// Measurement basis parameterized by Bloch angles.
struct BlochBasis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  Vector psi_plus() const;
  Vector psi_minus() const;
};

/// Spectral data of the basis-averaged operators.
struct UmSpectralData {
  Matrix sym_projector;  // rank-4 projector on the three-qubit symmetric subspace
  Vector a_plus, b_plus, a_minus, b_minus;
};

struct UmOperators {
  Matrix r_plus;
  Matrix r_minus;
  UmSpectralData spectral;
};

/// Rank-4 projector onto the symmetric subspace of three qubits.
Matrix um_symmetric_projector();

/// Closed-form R+/R- (trace 1/2 each) with their eigenvector data.
UmOperators um_build_r_analytic();

/// Quadrature oracle over the Bloch sphere: Gauss-Legendre in cos(theta),
/// uniform in phi.
std::pair<Matrix, Matrix> um_build_r_haar(int n_theta, int n_phi);

/// Optimal deterministic POVM; p_s_max = (1 + 1/sqrt(3))/2.
std::pair<Povm, double> um_deterministic();

/// Optimal error-free POVM; p_i = 2/3.
std::pair<Povm, double> um_unambiguous();

/// Optimal POVM at a target inconclusive probability in [0, 2/3].
std::pair<Povm, double> um_interpolated(double p_i_target);

/// Piecewise closed-form maximal success rate as a function of P_I.
double um_ps_of_pi(double p_i);

/// Lagrange multiplier consistent with um_interpolated at the given P_I,
/// for extremal-certificate checks.
double um_lagrange_a(double p_i_target);

}  // namespace qmeter

#endif
