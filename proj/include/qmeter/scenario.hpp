// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_SCENARIO_HPP
#define QMETER_SCENARIO_HPP

#include <optional>
#include <string>

#include "qmeter/core.hpp"
#include "qmeter/discrimination.hpp"

namespace qmeter {

// Named multimeter configurations shared by the CLI and the Monte Carlo
// sampler. Scenario strings:
//   pc-det:N | pc-unamb:N | pc-interp:N:a:eta
//   um-det   | um-unamb   | um-interp:PI
//   qd:D

enum class ScenarioKind { PhaseCovariant, UniversalQubit, Qudit };

struct Scenario {
  ScenarioKind kind = ScenarioKind::PhaseCovariant;
  std::string name;
  int n_or_d = 0;  // program copies N (pc), unused (um), dimension d (qd)
  Povm povm;
  Matrix r_plus, r_minus;       // empty for qudit scenarios
  Rates analytic;               // closed-form reference rates
  std::optional<double> lagrange_a;  // for extremal certificates
};

/// Parses and builds a scenario; throws on malformed strings.
Scenario build_scenario(const std::string& spec_string);

}  // namespace qmeter

#endif
