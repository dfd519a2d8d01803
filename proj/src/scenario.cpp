// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/scenario.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "qmeter/phase_covariant.hpp"
#include "qmeter/qudit.hpp"
#include "qmeter/universal_qubit.hpp"

namespace qmeter {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("scenario: bad integer " + s);
  return v;
}

double parse_double(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("scenario: bad number " + s);
  return v;
}

}  // namespace

Scenario build_scenario(const std::string& spec_string) {
  const auto parts = split(spec_string, ':');
  if (parts.empty()) throw std::invalid_argument("scenario: empty spec");
  const std::string& head = parts[0];
  Scenario sc;
  sc.name = spec_string;

  auto expect_args = [&](size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("scenario: " + head + " takes " + std::to_string(n) +
                                  " argument(s)");
  };

  if (head == "pc-det" || head == "pc-unamb" || head == "pc-interp") {
    sc.kind = ScenarioKind::PhaseCovariant;
    if (head == "pc-interp") expect_args(3); else expect_args(1);
    const int n = parse_int(parts[1]);
    PcOperators ops = pc_build_r_analytic(n);
    sc.n_or_d = n;
    sc.r_plus = ops.r_plus;
    sc.r_minus = ops.r_minus;
    if (head == "pc-det") {
      auto [povm, ps] = pc_deterministic(n);
      sc.povm = std::move(povm);
      sc.analytic = {ps, 0.0, 1.0 - ps};
      sc.lagrange_a = 0.0;
    } else if (head == "pc-unamb") {
      auto [povm, pi] = pc_unambiguous(n);
      sc.povm = std::move(povm);
      sc.analytic = {1.0 - pi, pi, 0.0};
      sc.lagrange_a = 1.0;
    } else {
      PcInterpolationParams params{parse_double(parts[2]), parse_double(parts[3])};
      PcResult res = pc_interpolated(n, params);
      sc.povm = std::move(res.povm);
      sc.analytic = {res.p_s, res.p_i, 1.0 - res.p_s - res.p_i};
      sc.lagrange_a = params.a;
    }
    return sc;
  }

  if (head == "um-det" || head == "um-unamb" || head == "um-interp") {
    sc.kind = ScenarioKind::UniversalQubit;
    if (head == "um-interp") expect_args(1); else expect_args(0);
    UmOperators ops = um_build_r_analytic();
    sc.r_plus = ops.r_plus;
    sc.r_minus = ops.r_minus;
    if (head == "um-det") {
      auto [povm, ps] = um_deterministic();
      sc.povm = std::move(povm);
      sc.analytic = {ps, 0.0, 1.0 - ps};
      sc.lagrange_a = 0.0;
    } else if (head == "um-unamb") {
      auto [povm, pi] = um_unambiguous();
      sc.povm = std::move(povm);
      sc.analytic = {1.0 - pi, pi, 0.0};
      sc.lagrange_a = 1.0;
    } else {
      const double p_i = parse_double(parts[1]);
      auto [povm, ps] = um_interpolated(p_i);
      sc.povm = std::move(povm);
      sc.analytic = {ps, p_i, 1.0 - ps - p_i};
      sc.lagrange_a = um_lagrange_a(p_i);
    }
    return sc;
  }

  if (head == "qd") {
    expect_args(1);
    sc.kind = ScenarioKind::Qudit;
    const int d = parse_int(parts[1]);
    sc.n_or_d = d;
    sc.povm = qd_povm(d);
    const double ps = qd_p_success(d);
    sc.analytic = {ps, 1.0 - ps, 0.0};
    return sc;
  }

  throw std::invalid_argument("scenario: unknown kind " + head);
}

}  // namespace qmeter
