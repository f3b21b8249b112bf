#include "latcosine/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace latcosine {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string points_to_csv(const PointSet& ps) {
  std::ostringstream out;
  const int d = ps.dim();
  for (int j = 0; j < d; ++j) out << (j ? "," : "") << "x" << (j + 1);
  out << "\n";
  for (const auto& p : ps.points) {
    for (int j = 0; j < d; ++j) out << (j ? "," : "") << format_g17(p[static_cast<std::size_t>(j)]);
    out << "\n";
  }
  return out.str();
}

PointSet points_from_csv(const std::string& csv) {
  PointSet ps;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> p;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) p.push_back(std::stod(cell));
    ps.points.push_back(std::move(p));
  }
  return ps;
}

std::string index_set_to_csv(const IndexSet& set) {
  std::ostringstream out;
  const int d = set.dim();
  for (int j = 0; j < d; ++j) out << (j ? "," : "") << "k" << (j + 1);
  out << "\n";
  for (const auto& k : set.indices) {
    for (int j = 0; j < d; ++j) out << (j ? "," : "") << k[static_cast<std::size_t>(j)];
    out << "\n";
  }
  return out.str();
}

namespace {

const char* method_name(WceMethod m) {
  switch (m) {
    case WceMethod::kernel_form: return "kernel_form";
    case WceMethod::dual_sum: return "dual_sum";
    default: return "closed_form";
  }
}

WceMethod method_from_name(const std::string& s) {
  if (s == "kernel_form") return WceMethod::kernel_form;
  if (s == "dual_sum") return WceMethod::dual_sum;
  if (s == "closed_form") return WceMethod::closed_form;
  throw std::invalid_argument("unknown wce method: " + s);
}

}  // namespace

nlohmann::json wce_report_to_json(const WceReport& report, const SpaceParams& params,
                                  long long n) {
  nlohmann::json j{{"squared_error", report.squared_error},
                   {"method", method_name(report.method)},
                   {"truncation_bound", report.truncation_bound},
                   {"n", n},
                   {"d", params.dim()},
                   {"alpha", params.alpha},
                   {"weights_spec", params.gamma}};
  if (report.clamped) j["clamped"] = true;
  return j;
}

WceReport wce_report_from_json(const nlohmann::json& j) {
  WceReport r{j.at("squared_error").get<double>(),
              method_from_name(j.at("method").get<std::string>()),
              j.at("truncation_bound").get<double>(),
              j.value("clamped", false)};
  return r;
}

nlohmann::json cbc_result_to_json(const CbcResult& result) {
  return nlohmann::json{{"n", result.gen.n},
                        {"z", result.gen.z},
                        {"criterion", result.criterion_values},
                        {"engine", result.engine == CbcEngine::fast ? "fast" : "plain"}};
}

std::string cbc_zfile(const CbcResult& result) {
  std::ostringstream out;
  for (long long c : result.gen.z) out << c << "\n";
  return out.str();
}

std::string coefficients_to_jsonl(const CoefficientMap& coeffs) {
  std::ostringstream out;
  for (const auto& [k, c] : coeffs.entries) {
    nlohmann::json j{{"k", k}, {"re", c.real()}, {"im", c.imag()}};
    out << j.dump() << "\n";
  }
  return out.str();
}

CoefficientMap coefficients_from_jsonl(const std::string& text) {
  CoefficientMap coeffs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    coeffs.entries[j.at("k").get<IntVec>()] = {j.at("re").get<double>(),
                                               j.at("im").get<double>()};
  }
  return coeffs;
}

SpaceParams space_params_from_json(const nlohmann::json& j, int d) {
  const double alpha = j.at("alpha").get<double>();
  const auto& w = j.at("weights");
  if (w.is_array()) {
    auto g = w.get<std::vector<double>>();
    if (static_cast<int>(g.size()) < d)
      throw std::invalid_argument("space_params_from_json: fewer weights than dimensions");
    g.resize(static_cast<std::size_t>(d));
    return SpaceParams(alpha, std::move(g));
  }
  return SpaceParams::power_law(alpha, d, w.at("c").get<double>(), w.at("eta").get<double>());
}

nlohmann::json space_params_to_json(const SpaceParams& params) {
  return nlohmann::json{{"alpha", params.alpha}, {"weights", params.gamma}};
}

}  // namespace latcosine
