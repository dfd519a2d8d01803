// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/core.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qmeter {

HilbertLayout qubit_layout(int n_subsystems) {
  if (n_subsystems < 1) throw std::invalid_argument("qubit_layout: need >= 1 subsystem");
  return HilbertLayout{std::vector<int>(static_cast<size_t>(n_subsystems), 2)};
}

const Matrix* Povm::find(const std::string& label) const {
  for (const auto& e : elements)
    if (e.label == label) return &e.op;
  return nullptr;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vector tensor_power(const Vector& v, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power: n must be >= 1");
  Vector out = v;
  for (int i = 1; i < n; ++i) out = tensor(out, v);
  return out;
}

Vector basis_ket(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_ket: index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

Matrix partial_trace(const Matrix& m, const HilbertLayout& layout,
                     const std::vector<int>& keep) {
  const int n = static_cast<int>(layout.dims.size());
  const int dim = layout.total_dim();
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("partial_trace: matrix does not match layout");
  std::vector<bool> kept(static_cast<size_t>(n), false);
  for (int idx : keep) {
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("partial_trace: keep index out of range");
    kept[static_cast<size_t>(idx)] = true;
  }

  // Row-major strides for each subsystem.
  std::vector<int> stride(static_cast<size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    stride[static_cast<size_t>(i)] = stride[static_cast<size_t>(i + 1)] * layout.dims[static_cast<size_t>(i + 1)];

  std::vector<int> keep_idx, trace_idx;
  for (int i = 0; i < n; ++i) (kept[static_cast<size_t>(i)] ? keep_idx : trace_idx).push_back(i);

  int keep_dim = 1, trace_dim = 1;
  for (int i : keep_idx) keep_dim *= layout.dims[static_cast<size_t>(i)];
  for (int i : trace_idx) trace_dim *= layout.dims[static_cast<size_t>(i)];

  // Flat offset of a multi-index enumerated in subsystem order `subs`.
  auto offset = [&](const std::vector<int>& subs, int flat) {
    int off = 0;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      int d = layout.dims[static_cast<size_t>(*it)];
      off += (flat % d) * stride[static_cast<size_t>(*it)];
      flat /= d;
    }
    return off;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (int r = 0; r < keep_dim; ++r) {
    int ro = offset(keep_idx, r);
    for (int c = 0; c < keep_dim; ++c) {
      int co = offset(keep_idx, c);
      Complex acc = 0.0;
      for (int t = 0; t < trace_dim; ++t) {
        int to = offset(trace_idx, t);
        acc += m(ro + to, co + to);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

EigResult herm_eig(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("herm_eig: matrix not square");
  double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10) throw std::invalid_argument("herm_eig: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("herm_eig: solver failed");
  EigResult res;
  res.values = solver.eigenvalues().reverse();
  res.vectors = solver.eigenvectors().rowwise().reverse();
  return res;
}

double trace_norm(const Matrix& m) {
  return herm_eig(m).values.cwiseAbs().sum();
}

Vector symmetric_basis_state(int n, int k) {
  if (n < 1) throw std::invalid_argument("symmetric_basis_state: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("symmetric_basis_state: k out of range");
  const int dim = 1 << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
  Vector v = Vector::Zero(dim);
  for (int i = 0; i < dim; ++i)
    if (std::popcount(static_cast<unsigned>(i)) == k) v(i) = amp;
  return v;
}

PovmReport validate_povm(const Povm& p, double tol) {
  PovmReport rep;
  const int dim = p.layout.total_dim();
  Matrix sum = Matrix::Zero(dim, dim);
  double min_eig = 0.0;
  bool first = true;
  for (const auto& e : p.elements) {
    sum += e.op;
    Matrix sym = 0.5 * (e.op + e.op.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    double lo = solver.eigenvalues().minCoeff();
    if (first || lo < min_eig) min_eig = lo;
    first = false;
  }
  rep.completeness_residual = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  rep.min_eigenvalue = min_eig;
  rep.pass = rep.completeness_residual <= tol && rep.min_eigenvalue >= -tol;
  return rep;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("binomial: k out of range");
  if (k > n - k) k = n - k;
  // res * (n - k + i) stays divisible by i at every step, but the product can
  // exceed 64 bits even when the result fits (e.g. C(64,32)); widen it.
  unsigned __int128 res = 1;
  for (int i = 1; i <= k; ++i) {
    res = res * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  if (res > ~static_cast<std::uint64_t>(0))
    throw std::overflow_error("binomial: result exceeds 64 bits");
  return static_cast<std::uint64_t>(res);
}

Povm effective_data_povm(const Povm& joint, const Vector& program) {
  const int data_dim = joint.layout.dims.at(0);
  Povm out;
  out.layout = HilbertLayout{{data_dim}};
  std::vector<Vector> carriers;
  carriers.reserve(static_cast<size_t>(data_dim));
  for (int i = 0; i < data_dim; ++i)
    carriers.push_back(tensor(basis_ket(data_dim, i), program));
  for (const auto& e : joint.elements) {
    Matrix pi(data_dim, data_dim);
    for (int i = 0; i < data_dim; ++i)
      for (int j = 0; j < data_dim; ++j)
        pi(i, j) = carriers[static_cast<size_t>(i)].dot(e.op * carriers[static_cast<size_t>(j)]);
    out.elements.push_back({e.label, pi});
  }
  return out;
}

Matrix haar_random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    double mag = std::abs(d);
    q.col(i) *= (mag > 0 ? d / mag : Complex(1.0, 0.0));
  }
  return q;
}

}  // namespace qmeter
