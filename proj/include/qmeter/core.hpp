// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_CORE_HPP
#define QMETER_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qmeter {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerances used throughout (structural / eigen / normalization).
constexpr double kTolStructural = 1e-10;
constexpr double kTolEigen = 1e-9;
constexpr double kTolNorm = 1e-12;

/// Ordered subsystem dimensions; the data register is always subsystem 0,
/// program qudits follow left-to-right.
struct HilbertLayout {
  std::vector<int> dims;

  int total_dim() const {
    int d = 1;
    for (int s : dims) d *= s;
    return d;
  }
};

/// Uniform layout of n_qubits + 1 two-level systems (data qubit first).
HilbertLayout qubit_layout(int n_subsystems);

struct PovmElement {
  std::string label;
  Matrix op;
};

/// Ordered list of labeled PSD elements summing to identity.
struct Povm {
  HilbertLayout layout;
  std::vector<PovmElement> elements;

  const Matrix* find(const std::string& label) const;
};

struct PovmReport {
  bool pass = false;
  double completeness_residual = 0.0;  // max |sum(Pi) - I|
  double min_eigenvalue = 0.0;         // over all elements
};

struct EigResult {
  Eigen::VectorXd values;  // descending
  Matrix vectors;          // columns match values
};

/// Kronecker product, left factor varying slowest (data-first convention).
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

/// n-fold tensor power of a ket.
Vector tensor_power(const Vector& v, int n);

/// Computational basis ket |i> in the given dimension.
Vector basis_ket(int dim, int index);

/// Reduced operator on the kept subsystems (indices into layout.dims).
Matrix partial_trace(const Matrix& m, const HilbertLayout& layout,
                     const std::vector<int>& keep);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws if the input is not Hermitian within 1e-10.
EigResult herm_eig(const Matrix& h);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix& m);

/// Normalized totally symmetric n-qubit state with k qubits in |1>.
Vector symmetric_basis_state(int n, int k);

/// Completeness + positivity report; never throws.
PovmReport validate_povm(const Povm& p, double tol);

/// Exact binomial coefficient; result must fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Effective POVM on the data register for a fixed program state,
/// pi_j = Tr_p[(1_d (x) |Psi><Psi|) Pi_j].
Povm effective_data_povm(const Povm& joint, const Vector& program);

/// Haar-random unitary from QR of a complex Gaussian matrix with
/// phase-corrected R diagonal.
Matrix haar_random_unitary(int dim, std::mt19937_64& rng);

}  // namespace qmeter

#endif
