// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_MONTECARLO_HPP
#define QMETER_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qmeter/scenario.hpp"

namespace qmeter {

struct SimConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string scenario;
  int threads = 0;  // 0 = QMETER_THREADS env var or hardware count
};

struct SimReport {
  std::string scenario;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;  // by outcome label
  std::uint64_t success_count = 0;
  std::uint64_t inconclusive_count = 0;
  std::uint64_t error_count = 0;
  double p_success_hat = 0.0, p_success_se = 0.0;
  double p_inconclusive_hat = 0.0, p_inconclusive_se = 0.0;
  double p_error_hat = 0.0, p_error_se = 0.0;
  Rates analytic;
};

/// Born-rule sampling of multimeter outcomes. Reports are bit-identical for
/// a fixed (seed, trials) regardless of thread count: each trial derives its
/// own generator from (seed, trial_index).
SimReport simulate(const SimConfig& config);

/// Worker-thread cap: QMETER_THREADS env var, else hardware concurrency.
int default_thread_count();

}  // namespace qmeter

#endif
