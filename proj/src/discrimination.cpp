// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/discrimination.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {

void check_trace_half(const Matrix& r, const char* name) {
  double tr = r.trace().real();
  if (std::abs(tr - 0.5) > 1e-10)
    throw std::invalid_argument(std::string(name) + ": trace must be 1/2 (priors folded in)");
}

double real_trace_product(const Matrix& a, const Matrix& b) {
  return (a * b).trace().real();
}

}  // namespace

HelstromResult helstrom(const Matrix& r_plus, const Matrix& r_minus,
                        const HilbertLayout& layout) {
  check_trace_half(r_plus, "helstrom R+");
  check_trace_half(r_minus, "helstrom R-");
  Matrix delta = r_plus - r_minus;
  EigResult eig = herm_eig(delta);
  const int dim = static_cast<int>(delta.rows());

  // Zero eigenvalues are assigned to Pi+ for deterministic output.
  Matrix pi_plus = Matrix::Zero(dim, dim);
  double tn = 0.0;
  for (int i = 0; i < dim; ++i) {
    tn += std::abs(eig.values(i));
    if (eig.values(i) >= -1e-12)
      pi_plus += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  }
  Matrix pi_minus = Matrix::Identity(dim, dim) - pi_plus;

  HelstromResult res;
  res.p_success = 0.5 + 0.5 * tn;
  res.povm.layout = layout;
  res.povm.elements = {{"+", pi_plus}, {"-", pi_minus}};
  return res;
}

PurePairBlocks unambiguous_pure_pair(const Vector& a, const Vector& b, double weight) {
  Complex overlap = a.dot(b);
  double s = std::abs(overlap);
  if (s >= 1.0 - 1e-12)
    throw std::invalid_argument("unambiguous_pure_pair: identical states");

  // Unit vectors in span{a,b} orthogonal to b and to a, respectively.
  Vector b_perp = a - b * b.dot(a);
  b_perp /= b_perp.norm();
  Vector a_perp = b - a * a.dot(b);
  a_perp /= a_perp.norm();

  const double inv = 1.0 / (1.0 + s);
  PurePairBlocks blocks;
  blocks.pi_plus = inv * (b_perp * b_perp.adjoint());
  blocks.pi_minus = inv * (a_perp * a_perp.adjoint());
  Matrix span = a * a.adjoint() + a_perp * a_perp.adjoint();
  blocks.pi_unknown = span - blocks.pi_plus - blocks.pi_minus;
  blocks.p_inconclusive = s * weight;
  return blocks;
}

ExtremalCertificate verify_extremal(const Povm& povm, const Matrix& r_plus,
                                    const Matrix& r_minus, double a) {
  const Matrix* pp = povm.find("+");
  const Matrix* pm = povm.find("-");
  if (!pp || !pm)
    throw std::invalid_argument("verify_extremal: POVM must carry labels + and -");
  const int dim = static_cast<int>(r_plus.rows());
  Matrix pi_q = Matrix::Zero(dim, dim);
  if (const Matrix* q = povm.find("?")) pi_q = *q;

  Matrix r_q = 0.5 * (r_plus + r_minus);
  Matrix raw = 0.5 * r_plus * (*pp) + 0.5 * r_minus * (*pm) + a * r_q * pi_q;
  Matrix lambda = 0.5 * (raw + raw.adjoint());

  ExtremalCertificate cert;
  cert.lambda_op = lambda;
  cert.a = a;

  auto min_eig = [](const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> s(0.5 * (m + m.adjoint()));
    return s.eigenvalues().minCoeff();
  };
  Matrix gp = lambda - 0.5 * r_plus;
  Matrix gm = lambda - 0.5 * r_minus;
  Matrix gq = lambda - a * r_q;
  cert.min_residual_eigenvalue = std::min({min_eig(gp), min_eig(gm), min_eig(gq)});
  cert.max_equality_residual = std::max({(gp * (*pp)).cwiseAbs().maxCoeff(),
                                         (gm * (*pm)).cwiseAbs().maxCoeff(),
                                         (gq * pi_q).cwiseAbs().maxCoeff()});
  cert.pass = cert.min_residual_eigenvalue >= -1e-8 && cert.max_equality_residual <= 1e-8;
  return cert;
}

Rates p_rates(const Povm& povm, const Matrix& r_plus, const Matrix& r_minus) {
  check_trace_half(r_plus, "p_rates R+");
  check_trace_half(r_minus, "p_rates R-");
  const Matrix* pp = povm.find("+");
  const Matrix* pm = povm.find("-");
  if (!pp || !pm)
    throw std::invalid_argument("p_rates: POVM must carry labels + and -");
  for (const auto& e : povm.elements)
    if (e.label != "+" && e.label != "-" && e.label != "?")
      throw std::invalid_argument("p_rates: unexpected label " + e.label);

  Rates rates;
  rates.p_success = real_trace_product(*pp, r_plus) + real_trace_product(*pm, r_minus);
  if (const Matrix* q = povm.find("?"))
    rates.p_inconclusive = real_trace_product(*q, r_plus + r_minus);
  rates.p_error = 1.0 - rates.p_success - rates.p_inconclusive;
  return rates;
}

}  // namespace qmeter
