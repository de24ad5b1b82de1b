#pragma once

// JSON schemas for matrices, certificates and analysis reports, plus a
// deterministic dumper (stable key order, fixed 15-significant-digit float
// formatting) so identical inputs produce byte-identical files.

#include "sepscope/certificates.hpp"
#include "sepscope/report.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace sepscope {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"shape": [2,2,2], "matrix": [[[re,im], ...], ...]}
Json matrix_to_json(const Matrix& m, const SystemShape& shape);
std::pair<Matrix, SystemShape> matrix_from_json(const Json& j);

Json certificate_to_json(const SeparableDecomposition& cert);
SeparableDecomposition certificate_from_json(const Json& j);

Json verdict_to_json(const CriterionVerdict& verdict);
Json report_to_json(const AnalysisReport& report, bool include_timing = false);
Json threshold_to_json(const ThresholdResult& result, const std::string& state);

Json load_json_file(const std::string& path);

// Deterministic serialization: ordered keys, doubles via "%.15g".
std::string dump_json(const Json& j, int indent = 2);

}  // namespace sepscope
