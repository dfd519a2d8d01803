// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_QUDIT_HPP
#define QMETER_QUDIT_HPP

#include <cstdint>

#include "qmeter/core.hpp"

namespace qmeter {

// Error-free universal multimeter for qudits: d+1 slots (data = slot 0,
// program qudits 1..d), outcome j projects onto the totally antisymmetric
// state of all slots except program slot j.

struct AntisymState {
  int d = 0;
  int excluded_program_slot = 0;  // 1..d
  Vector ket;                     // on the d participating qudits, dim d^d
};

struct GramF {
  int d = 0;
  Eigen::MatrixXd matrix;  // F_jk = delta_jk + (1 - delta_jk)(-1)^{j+k-1}/d
};

struct UniversalityReport {
  int d = 0;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double max_abs_deviation = 0.0;  // outcome probabilities vs delta_jk d/(d+1)!
  double p_s_estimate = 0.0;       // mean conclusive probability per sample
  bool pass = false;
};

/// Normalized totally antisymmetric state of d qudits (data + program slots
/// excluding j), ordered data-first then ascending program index.
AntisymState qd_antisymmetric_state(int d, int j);

/// The conjectured unambiguous POVM on all d+1 qudits, labels "1".."d","?".
Povm qd_povm(int d);

/// Closed-form Gram matrix of the |f_j> overlap structure.
GramF qd_gram_f(int d);

/// Numerical Gram matrix from the constructed antisymmetric states (d <= 5).
Eigen::MatrixXd qd_gram_numeric(int d);

/// Closed-form success probability d/(d+1)!.
double qd_p_success(int d);

/// Checks outcome statistics over Haar-random program bases.
UniversalityReport qd_universality_check(int d, int n_samples, std::uint64_t seed);

}  // namespace qmeter

#endif
