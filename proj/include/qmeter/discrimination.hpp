// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_DISCRIMINATION_HPP
#define QMETER_DISCRIMINATION_HPP

#include "qmeter/core.hpp"

namespace qmeter {

// Two-mixed-state discrimination oracle. Priors are folded into the
// operators: both R+ and R- carry trace 1/2.

struct HelstromResult {
  double p_success = 0.0;
  Povm povm;  // labels "+", "-"
};

struct PurePairBlocks {
  Matrix pi_plus;
  Matrix pi_minus;
  Matrix pi_unknown;  // completes the pair's 2-dim span
  double p_inconclusive = 0.0;
};

struct ExtremalCertificate {
  Matrix lambda_op;
  double a = 0.0;
  double min_residual_eigenvalue = 0.0;  // over lambda - R+/2, lambda - R-/2, lambda - a R?
  double max_equality_residual = 0.0;    // over ||(lambda - R/2) Pi||_max terms
  bool pass = false;
};

struct Rates {
  double p_success = 0.0;
  double p_inconclusive = 0.0;
  double p_error = 0.0;
};

/// Minimum-error discrimination optimum: P_S = 1/2 + 1/2 tr|R+ - R-| under
/// the trace-1/2 convention. Zero eigenvalues of the difference go to Pi+.
HelstromResult helstrom(const Matrix& r_plus, const Matrix& r_minus,
                        const HilbertLayout& layout);

/// Optimal unambiguous discrimination of a pure-state pair with equal priors
/// (IDP bound). Throws for identical states.
PurePairBlocks unambiguous_pure_pair(const Vector& a, const Vector& b, double weight);

/// Checks the fixed-P_I extremal conditions for a {+,-,?} POVM at Lagrange
/// multiplier a; R? = (R+ + R-)/2 is formed internally.
ExtremalCertificate verify_extremal(const Povm& povm, const Matrix& r_plus,
                                    const Matrix& r_minus, double a);

/// Success / inconclusive / error rates of a POVM against R+/R-.
Rates p_rates(const Povm& povm, const Matrix& r_plus, const Matrix& r_minus);

}  // namespace qmeter

#endif
