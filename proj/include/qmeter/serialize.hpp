// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMETER_SERIALIZE_HPP
#define QMETER_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qmeter/core.hpp"
#include "qmeter/discrimination.hpp"
#include "qmeter/montecarlo.hpp"
#include "qmeter/qudit.hpp"

namespace qmeter {

// Matrices serialize as {"rows","cols","re":[...],"im":[...]}, row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const PovmReport& r);
nlohmann::json certificate_to_json(const ExtremalCertificate& c);
nlohmann::json sim_report_to_json(const SimReport& r);
nlohmann::json universality_report_to_json(const UniversalityReport& r);

/// Fixed 9-significant-digit rendering used for all CSV output.
std::string format_double(double v);

}  // namespace qmeter

#endif
