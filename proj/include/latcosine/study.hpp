#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "latcosine/spaces.hpp"

namespace latcosine {

enum class StudyMode {
  integration_convergence,
  approximation_convergence,
  error_tables,
  equality_checks
};

/// M as a function of n: M(n) = c * n^exponent (approximation studies).
struct MRule {
  double c = 1.0;
  double exponent = 0.0;
  double operator()(long long n) const;
};

struct StudySpec {
  StudyMode mode = StudyMode::integration_convergence;
  std::vector<long long> n_list;  // strictly increasing primes
  int d = 1;
  SpaceParams params;
  MRule m_rule;
  double lambda = 1.0;  // bound parameter reported alongside the measurements
  std::uint64_t seed = 0;
  std::string out_path;  // optional base path; "<base>.csv" and "<base>.json"
};

struct StudyArtifact {
  std::string csv;
  nlohmann::json summary;  // schema "latcosine/1"
  bool all_passed = true;  // equality_checks mode
};

/// Runs the study rows (in parallel across n, emitted in spec order) and the
/// log-log slope fits; writes the artifacts when out_path is set.
StudyArtifact run_study(const StudySpec& spec);

/// Least-squares slope of log y against log x; *residual receives the RMS
/// deviation of the fit.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y,
                        double* residual = nullptr);

}  // namespace latcosine
