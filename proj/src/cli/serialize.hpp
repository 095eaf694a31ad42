#pragma once

#include "nilzeta/cli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilzeta::cli {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const GroupElement& g);
json to_json(cplx z);
json to_json(const ZetaValue& z);
json to_json(const std::vector<DecompositionTerm>& terms);
json to_json(const TrustedConstant& c);
json to_json(const TorsionReport& r);
json to_json(const std::vector<CheckRow>& rows);
json to_json(const ZetaIIIResult& r);

Rational rational_from_json(const json& j);
cplx cplx_from_json(const json& j);
ZetaValue zeta_value_from_json(const json& j);
std::vector<DecompositionTerm> decomposition_from_json(const json& j);

std::string decomposition_csv(const std::vector<DecompositionTerm>& terms);
std::string decomposition_text(const std::vector<DecompositionTerm>& terms);
std::string torsion_text(const TorsionReport& r);
std::string checks_text(const std::vector<CheckRow>& rows);

// Shortest decimal that round-trips.
std::string format_double(double v);

}  // namespace nilzeta::cli
