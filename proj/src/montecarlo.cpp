// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmeter/phase_covariant.hpp"
#include "qmeter/universal_qubit.hpp"

namespace qmeter {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialCounts {
  std::vector<std::uint64_t> per_label;
  std::uint64_t success = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t error = 0;
};

// Outcome probabilities for a prepared joint state; tiny numerical dust
// (|p| <= 1e-10) is clamped to zero and the vector renormalized. Larger
// negatives indicate a construction bug and abort the run.
std::vector<double> outcome_probabilities(const Scenario& sc, const Vector& state) {
  std::vector<double> probs;
  probs.reserve(sc.povm.elements.size());
  double total = 0.0;
  for (const auto& e : sc.povm.elements) {
    double p = state.dot(e.op * state).real();
    if (p < -1e-10) {
      std::ostringstream msg;
      msg << "simulate: negative outcome probability " << p << " for label " << e.label
          << " in scenario " << sc.name;
      throw std::runtime_error(msg.str());
    }
    if (std::abs(p) <= 1e-10) p = 0.0;
    probs.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-8)
    throw std::runtime_error("simulate: outcome probabilities do not sum to 1");
  for (double& p : probs) p /= total;
  return probs;
}

// One Born-rule trial; returns (outcome index, prepared label).
std::pair<size_t, std::string> run_trial(const Scenario& sc, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector state;
  std::string prepared;

  switch (sc.kind) {
    case ScenarioKind::PhaseCovariant: {
      const double phi = 2.0 * M_PI * unit(rng);
      const bool plus = unit(rng) < 0.5;
      auto [psi_p, psi_m] = pc_basis_kets(phi);
      state = tensor(plus ? psi_p : psi_m, tensor_power(psi_p, sc.n_or_d));
      prepared = plus ? "+" : "-";
      break;
    }
    case ScenarioKind::UniversalQubit: {
      BlochBasis basis;
      basis.theta = std::acos(1.0 - 2.0 * unit(rng));
      basis.phi = 2.0 * M_PI * unit(rng);
      const bool plus = unit(rng) < 0.5;
      Vector program = tensor(basis.psi_plus(), basis.psi_minus());
      state = tensor(plus ? basis.psi_plus() : basis.psi_minus(), program);
      prepared = plus ? "+" : "-";
      break;
    }
    case ScenarioKind::Qudit: {
      const int d = sc.n_or_d;
      Matrix u = haar_random_unitary(d, rng);
      const int j = std::min(d - 1, static_cast<int>(unit(rng) * d));
      Vector program = u.col(0);
      for (int m = 1; m < d; ++m) program = tensor(program, Vector(u.col(m)));
      state = tensor(Vector(u.col(j)), program);
      prepared = std::to_string(j + 1);
      break;
    }
  }

  const std::vector<double> probs = outcome_probabilities(sc, state);
  double r = unit(rng);
  size_t outcome = probs.size() - 1;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (r < probs[i]) {
      outcome = i;
      break;
    }
    r -= probs[i];
  }
  return {outcome, prepared};
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("QMETER_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SimReport simulate(const SimConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("simulate: trials >= 1");
  const Scenario sc = build_scenario(config.scenario);
  const size_t n_labels = sc.povm.elements.size();
  const int threads = config.threads > 0 ? config.threads : default_thread_count();

  auto worker = [&](std::uint64_t first, std::uint64_t last, TrialCounts& counts) {
    counts.per_label.assign(n_labels, 0);
    for (std::uint64_t t = first; t < last; ++t) {
      std::mt19937_64 rng(splitmix64(config.seed ^ (0xc2b2ae3d27d4eb4fULL * (t + 1))));
      auto [outcome, prepared] = run_trial(sc, rng);
      ++counts.per_label[outcome];
      const std::string& label = sc.povm.elements[outcome].label;
      if (label == "?") {
        ++counts.inconclusive;
      } else if (label == prepared) {
        ++counts.success;
      } else {
        ++counts.error;
      }
    }
  };

  std::vector<TrialCounts> partial(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (config.trials + threads - 1) / threads;
  for (int i = 0; i < threads; ++i) {
    const std::uint64_t first = std::min<std::uint64_t>(config.trials, i * chunk);
    const std::uint64_t last = std::min<std::uint64_t>(config.trials, first + chunk);
    pool.emplace_back(worker, first, last, std::ref(partial[static_cast<size_t>(i)]));
  }
  for (auto& th : pool) th.join();

  SimReport rep;
  rep.scenario = config.scenario;
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.analytic = sc.analytic;
  std::vector<std::uint64_t> per_label(n_labels, 0);
  for (const auto& counts : partial) {
    if (counts.per_label.empty()) continue;
    for (size_t i = 0; i < n_labels; ++i) per_label[i] += counts.per_label[i];
    rep.success_count += counts.success;
    rep.inconclusive_count += counts.inconclusive;
    rep.error_count += counts.error;
  }
  for (size_t i = 0; i < n_labels; ++i)
    rep.counts[sc.povm.elements[i].label] = per_label[i];

  const double n = static_cast<double>(config.trials);
  auto estimate = [n](std::uint64_t count, double& hat, double& se) {
    hat = count / n;
    se = std::sqrt(hat * (1.0 - hat) / n);
  };
  estimate(rep.success_count, rep.p_success_hat, rep.p_success_se);
  estimate(rep.inconclusive_count, rep.p_inconclusive_hat, rep.p_inconclusive_se);
  estimate(rep.error_count, rep.p_error_hat, rep.p_error_se);
  return rep;
}

}  // namespace qmeter
