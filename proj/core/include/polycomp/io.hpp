#pragma once

#include <string>

#include <json.hpp>

#include "polycomp/completion.hpp"
#include "polycomp/oracle.hpp"

// UTF-8 JSON documents with coefficients carried as strings, so
// arbitrary-precision rationals survive the round trip exactly.
namespace polycomp::io {

using json = nlohmann::json;

json parse_document(const std::string& text);  // wraps parse errors
json load_document(const std::string& path);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json poly_to_json(const Poly& p);  // coefficient strings, low degree first
Poly poly_from_json(const json& j, const Field& f);

json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json target_to_json(const PrescribedData& t, const Field& f);
PrescribedData target_from_json(const json& j, const Field& f);

json structure_to_json(const StructuralData& d);
StructuralData structure_from_json(const json& j);
std::string structure_to_text(const StructuralData& d);

json verdict_to_json(const Verdict& v, Mode mode, Ring ring);
Verdict verdict_from_json(const json& j);
std::string verdict_to_text(const Verdict& v, Mode mode, Ring ring, bool explain);

json report_to_json(const OracleReport& r);
std::string report_to_text(const OracleReport& r);

}  // namespace polycomp::io
