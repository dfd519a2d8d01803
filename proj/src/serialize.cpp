// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmeter/serialize.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace qmeter {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(static_cast<size_t>(m.size()));
  im.reserve(static_cast<size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j;
}

Matrix matrix_from_json(const json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != static_cast<size_t>(rows * cols) || im.size() != re.size())
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  Matrix m(rows, cols);
  size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c, ++i) m(r, c) = Complex(re[i], im[i]);
  return m;
}

json povm_to_json(const Povm& p) {
  json j;
  j["layout"] = p.layout.dims;
  j["elements"] = json::array();
  for (const auto& e : p.elements)
    j["elements"].push_back({{"label", e.label}, {"matrix", matrix_to_json(e.op)}});
  return j;
}

Povm povm_from_json(const json& j) {
  Povm p;
  p.layout.dims = j.at("layout").get<std::vector<int>>();
  for (const auto& e : j.at("elements"))
    p.elements.push_back({e.at("label").get<std::string>(), matrix_from_json(e.at("matrix"))});
  return p;
}

json report_to_json(const PovmReport& r) {
  return {{"pass", r.pass},
          {"completeness_residual", r.completeness_residual},
          {"min_eigenvalue", r.min_eigenvalue}};
}

json certificate_to_json(const ExtremalCertificate& c) {
  return {{"pass", c.pass},
          {"a", c.a},
          {"min_residual_eigenvalue", c.min_residual_eigenvalue},
          {"max_equality_residual", c.max_equality_residual}};
}

json sim_report_to_json(const SimReport& r) {
  json counts = json::object();
  for (const auto& [label, count] : r.counts) counts[label] = count;
  return {{"scenario", r.scenario},
          {"trials", r.trials},
          {"seed", r.seed},
          {"counts", counts},
          {"p_success_hat", r.p_success_hat},
          {"p_success_se", r.p_success_se},
          {"p_inconclusive_hat", r.p_inconclusive_hat},
          {"p_inconclusive_se", r.p_inconclusive_se},
          {"p_error_hat", r.p_error_hat},
          {"p_error_se", r.p_error_se},
          {"analytic",
           {{"p_success", r.analytic.p_success},
            {"p_inconclusive", r.analytic.p_inconclusive},
            {"p_error", r.analytic.p_error}}}};
}

json universality_report_to_json(const UniversalityReport& r) {
  return {{"d", r.d},
          {"n_samples", r.n_samples},
          {"seed", r.seed},
          {"max_abs_deviation", r.max_abs_deviation},
          {"p_s_estimate", r.p_s_estimate},
          {"pass", r.pass}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace qmeter
