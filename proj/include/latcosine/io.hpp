#pragma once

#include <string>

#include "json.hpp"
#include "latcosine/approx.hpp"
#include "latcosine/cbc.hpp"
#include "latcosine/wce.hpp"

namespace latcosine {

/// One point per row, 17-significant-digit decimals, header "x1,...,xd".
std::string points_to_csv(const PointSet& ps);
PointSet points_from_csv(const std::string& csv);

/// One frequency vector per row, header "k1,...,kd".
std::string index_set_to_csv(const IndexSet& set);

/// {squared_error, method, truncation_bound, n, d, alpha, weights_spec}.
nlohmann::json wce_report_to_json(const WceReport& report, const SpaceParams& params,
                                  long long n);
WceReport wce_report_from_json(const nlohmann::json& j);

/// {n, z: [...], criterion: [...], engine}.
nlohmann::json cbc_result_to_json(const CbcResult& result);

/// Plain-text generating vector, one integer per line.
std::string cbc_zfile(const CbcResult& result);

/// JSON lines {"k": [...], "re": ..., "im": ...}.
std::string coefficients_to_jsonl(const CoefficientMap& coeffs);
CoefficientMap coefficients_from_jsonl(const std::string& text);

/// Config block { "alpha": a, "weights": [g1, ...] } or
/// { "alpha": a, "weights": {"c": c, "eta": eta} } expanded to d weights.
SpaceParams space_params_from_json(const nlohmann::json& j, int d);
nlohmann::json space_params_to_json(const SpaceParams& params);

std::string format_g17(double v);

}  // namespace latcosine
