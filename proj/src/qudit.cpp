// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmeter {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Digits of a flat index in base d, most significant first.
void to_digits(int flat, int d, int n_digits, std::vector<int>& digits) {
  for (int s = n_digits - 1; s >= 0; --s) {
    digits[static_cast<size_t>(s)] = flat % d;
    flat /= d;
  }
}

}  // namespace

AntisymState qd_antisymmetric_state(int d, int j) {
  if (d < 2) throw std::invalid_argument("qd_antisymmetric_state: d >= 2");
  if (d > 5) throw std::invalid_argument("qd_antisymmetric_state: d <= 5 (dimension guard)");
  if (j < 1 || j > d) throw std::invalid_argument("qd_antisymmetric_state: slot out of 1..d");

  const int dim = ipow(d, d);
  const double amp = 1.0 / std::sqrt(factorial(d));
  Vector ket = Vector::Zero(dim);
  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int flat = 0;
    for (int s = 0; s < d; ++s) flat = flat * d + perm[static_cast<size_t>(s)];
    ket(flat) = permutation_sign(perm) * amp;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return AntisymState{d, j, std::move(ket)};
}

Povm qd_povm(int d) {
  if (d < 2 || d > 4) throw std::invalid_argument("qd_povm: d out of 2..4");
  const int n_slots = d + 1;
  const int dim = ipow(d, n_slots);
  const double c_norm = static_cast<double>(d) / (d + 1);
  const Vector anti = qd_antisymmetric_state(d, 1).ket;
  Matrix proj = anti * anti.adjoint();  // on d participating qudits

  Povm povm;
  povm.layout = HilbertLayout{std::vector<int>(static_cast<size_t>(n_slots), d)};
  Matrix sum = Matrix::Zero(dim, dim);
  std::vector<int> digits_r(static_cast<size_t>(n_slots));
  std::vector<int> digits_c(static_cast<size_t>(n_slots));

  for (int j = 1; j <= d; ++j) {
    // Participating slots keep their relative order; slot j is a free factor.
    auto part_index = [&](const std::vector<int>& digits) {
      int flat = 0;
      for (int s = 0; s < n_slots; ++s)
        if (s != j) flat = flat * d + digits[static_cast<size_t>(s)];
      return flat;
    };
    Matrix pi = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
      to_digits(r, d, n_slots, digits_r);
      const int pr = part_index(digits_r);
      for (int c = 0; c < dim; ++c) {
        to_digits(c, d, n_slots, digits_c);
        if (digits_r[static_cast<size_t>(j)] != digits_c[static_cast<size_t>(j)]) continue;
        pi(r, c) = c_norm * proj(pr, part_index(digits_c));
      }
    }
    sum += pi;
    povm.elements.push_back({std::to_string(j), std::move(pi)});
  }
  povm.elements.push_back({"?", Matrix::Identity(dim, dim) - sum});
  return povm;
}

GramF qd_gram_f(int d) {
  if (d < 2) throw std::invalid_argument("qd_gram_f: d >= 2");
  GramF gram;
  gram.d = d;
  gram.matrix = Eigen::MatrixXd::Identity(d, d);
  for (int j = 1; j <= d; ++j)
    for (int k = 1; k <= d; ++k) {
      if (j == k) continue;
      gram.matrix(j - 1, k - 1) = (((j + k - 1) % 2 == 0) ? 1.0 : -1.0) / d;
    }
  return gram;
}

Eigen::MatrixXd qd_gram_numeric(int d) {
  if (d < 2 || d > 5) throw std::invalid_argument("qd_gram_numeric: d out of 2..5");
  const int n_slots = d + 1;
  const int dim = ipow(d, n_slots);
  const int part_dim = ipow(d, d);

  // |f_j> = antisymmetric state on slots != j, with program slot j in |1>
  // (basis index 0), embedded in the full d+1 qudit space.
  std::vector<Vector> f;
  std::vector<int> digits(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j) {
    const Vector anti = qd_antisymmetric_state(d, j).ket;
    Vector full = Vector::Zero(dim);
    for (int p = 0; p < part_dim; ++p) {
      if (anti(p) == 0.0) continue;
      to_digits(p, d, d, digits);
      int flat = 0;
      int next = 0;
      for (int s = 0; s < n_slots; ++s) {
        int digit = (s == j) ? 0 : digits[static_cast<size_t>(next++)];
        flat = flat * d + digit;
      }
      full(flat) = anti(p);
    }
    f.push_back(std::move(full));
  }

  Eigen::MatrixXd gram(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) gram(j, k) = f[static_cast<size_t>(j)].dot(f[static_cast<size_t>(k)]).real();
  return gram;
}

double qd_p_success(int d) {
  return static_cast<double>(d) / factorial(d + 1);
}

UniversalityReport qd_universality_check(int d, int n_samples, std::uint64_t seed) {
  if (d < 2 || d > 4) throw std::invalid_argument("qd_universality_check: d out of 2..4");
  if (n_samples < 1) throw std::invalid_argument("qd_universality_check: n_samples >= 1");

  const Povm povm = qd_povm(d);
  const double p_s = qd_p_success(d);
  UniversalityReport rep;
  rep.d = d;
  rep.n_samples = n_samples;
  rep.seed = seed;

  double conclusive_sum = 0.0;
  for (int sample = 0; sample < n_samples; ++sample) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x51a3c9d1ULL * (sample + 1))));
    Matrix u = haar_random_unitary(d, rng);
    Vector program = u.col(0);
    for (int m = 1; m < d; ++m) program = tensor(program, Vector(u.col(m)));
    for (int j = 0; j < d; ++j) {
      Vector state = tensor(Vector(u.col(j)), program);
      for (int k = 0; k < d; ++k) {
        const double p = state.dot(povm.elements[static_cast<size_t>(k)].op * state).real();
        const double expected = (j == k) ? p_s : 0.0;
        rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(p - expected));
        if (j == k) conclusive_sum += p;
      }
    }
  }
  rep.p_s_estimate = conclusive_sum / (n_samples * d);
  rep.pass = rep.max_abs_deviation <= ((d >= 4) ? 1e-8 : 1e-9);
  return rep;
}

}  // namespace qmeter
