#include "latcosine/study.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "latcosine/approx.hpp"
#include "latcosine/cbc.hpp"
#include "latcosine/checks.hpp"
#include "latcosine/io.hpp"
#include "latcosine/wce.hpp"

namespace latcosine {

double MRule::operator()(long long n) const {
  return c * std::pow(static_cast<double>(n), exponent);
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y,
                        double* residual) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two samples");
  const std::size_t m = x.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = num / den;
  if (residual) {
    const double icpt = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = ly[i] - (icpt + slope * lx[i]);
      rss += r * r;
    }
    *residual = std::sqrt(rss / static_cast<double>(m));
  }
  return slope;
}

namespace {

std::string join_z(const std::vector<long long>& z) {
  std::ostringstream out;
  for (std::size_t j = 0; j < z.size(); ++j) out << (j ? ";" : "") << z[j];
  return out.str();
}

struct IntegrationRow {
  long long n;
  std::string z;
  double criterion;
  double e2_korobov;
  double e2_tented;
  double e2_rms;
  double bound;
};

IntegrationRow integration_row(const StudySpec& spec, long long n) {
  CbcConfig cfg{n, spec.d, spec.params, CbcCriterion::korobov_integration, CbcEngine::fast};
  const CbcResult res = cbc_construct(cfg);
  IntegrationRow row;
  row.n = n;
  row.z = join_z(res.gen.z);
  row.criterion = res.criterion_values.back();
  row.e2_korobov = wce_korobov_lattice(spec.params, res.gen).squared_error;
  row.e2_tented = wce_tented_cosine_lattice(spec.params, res.gen).squared_error;
  row.e2_rms = wce_korobov_lattice(spec.params.halved(), res.gen).squared_error;
  row.bound = cbc_error_bound(spec.params, n, spec.lambda, false);
  return row;
}

struct ApproximationRow {
  long long n;
  double M;
  std::string z;
  bool feasible;
  double criterion;
  double bound_sq;        // 1/M + E
  double error_bound;     // sqrt of the above
  double corollary_bound;
};

ApproximationRow approximation_row(const StudySpec& spec, long long n) {
  ApproximationRow row;
  row.n = n;
  row.M = spec.m_rule(n);
  CbcConfig cfg{n,     spec.d, spec.params, CbcCriterion::approximation_E,
                CbcEngine::plain, row.M, 1.0 + 1e-9};
  try {
    const CbcResult res = cbc_construct(cfg);
    row.feasible = true;
    row.z = join_z(res.gen.z);
    row.criterion = res.criterion_values.back();
    row.bound_sq = 1.0 / row.M + row.criterion;
    row.error_bound = std::sqrt(row.bound_sq);
    const double alpha = spec.params.alpha;
    const double kappa = static_cast<double>(n) * std::pow(row.M, -1.0 / (2.0 * alpha));
    const double mu = std::pow(1.0 - 1.0 / kappa, 2.0 * alpha);
    row.corollary_bound =
        approx_error_bound_formula(spec.params, n, row.M, spec.lambda, spec.lambda, mu);
  } catch (const std::invalid_argument&) {
    row.feasible = false;
    row.z = "";
    row.criterion = row.bound_sq = row.error_bound = row.corollary_bound = 0.0;
  }
  return row;
}

struct ErrorTableRow {
  long long n;
  std::string z;
  double e2_korobov_closed;
  double e2_korobov_dual;
  double dual_bound;
  double e2_tented_closed;
  double e2_tented_dual;
  double e2_rms;
  bool dual_computed;
};

ErrorTableRow error_table_row(const StudySpec& spec, long long n) {
  CbcConfig cfg{n, spec.d, spec.params, CbcCriterion::korobov_integration, CbcEngine::fast};
  const CbcResult res = cbc_construct(cfg);
  ErrorTableRow row;
  row.n = n;
  row.z = join_z(res.gen.z);
  row.e2_korobov_closed = wce_korobov_lattice(spec.params, res.gen).squared_error;
  row.e2_tented_closed = wce_tented_cosine_lattice(spec.params, res.gen).squared_error;
  row.e2_rms = wce_korobov_lattice(spec.params.halved(), res.gen).squared_error;
  const int H = default_box_bound(n);
  const double scan = std::pow(2.0 * H + 1.0, spec.d);
  row.dual_computed = scan <= 2.5e8;
  if (row.dual_computed) {
    const WceReport kor = wce_korobov_dual(spec.params, res.gen, H);
    const WceReport ten = wce_cosine_tented(spec.params, res.gen, H);
    row.e2_korobov_dual = kor.squared_error;
    row.dual_bound = kor.truncation_bound;
    row.e2_tented_dual = ten.squared_error;
  } else {
    row.e2_korobov_dual = row.dual_bound = row.e2_tented_dual = 0.0;
  }
  return row;
}

void validate(const StudySpec& spec) {
  if (spec.mode == StudyMode::equality_checks) return;
  if (spec.n_list.size() < 1) throw std::invalid_argument("study: empty n list");
  long long prev = 0;
  for (long long n : spec.n_list) {
    if (n <= prev) throw std::invalid_argument("study: n list must be strictly increasing");
    if (!is_prime(n)) throw std::invalid_argument("study: n list must contain primes");
    prev = n;
  }
}

}  // namespace

StudyArtifact run_study(const StudySpec& spec) {
  validate(spec);
  StudyArtifact art;
  nlohmann::json& summary = art.summary;
  summary["schema"] = "latcosine/1";
  summary["seed"] = spec.seed;
  summary["d"] = spec.d;
  summary["params"] = space_params_to_json(spec.params);
  std::ostringstream csv;

  if (spec.mode == StudyMode::equality_checks) {
    summary["mode"] = "equality_checks";
    csv << "check,passed,soft,detail\n";
    bool all = true;
    auto results = run_invariant_checks(false);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) {
      csv << r.name << "," << (r.pass ? 1 : 0) << "," << (r.soft ? 1 : 0) << ",\"" << r.detail
          << "\"\n";
      rows.push_back({{"name", r.name}, {"pass", r.pass}, {"soft", r.soft}});
      if (!r.pass && !r.soft) all = false;
    }
    summary["checks"] = rows;
    summary["all_passed"] = all;
    art.all_passed = all;
  } else if (spec.mode == StudyMode::integration_convergence ||
             spec.mode == StudyMode::error_tables) {
    const bool tables = spec.mode == StudyMode::error_tables;
    summary["mode"] = tables ? "error_tables" : "integration_convergence";
    std::vector<std::future<IntegrationRow>> futs;
    std::vector<std::future<ErrorTableRow>> tfuts;
    for (long long n : spec.n_list) {
      if (tables)
        tfuts.push_back(std::async(std::launch::async, error_table_row, std::cref(spec), n));
      else
        futs.push_back(std::async(std::launch::async, integration_row, std::cref(spec), n));
    }
    if (tables) {
      csv << "n,z,e2_korobov_closed,e2_korobov_dual,dual_truncation_bound,e2_tented_closed,"
             "e2_tented_dual,e2_rms\n";
      for (auto& f : tfuts) {
        const ErrorTableRow r = f.get();
        csv << r.n << "," << r.z << "," << format_g17(r.e2_korobov_closed) << ",";
        if (r.dual_computed)
          csv << format_g17(r.e2_korobov_dual) << "," << format_g17(r.dual_bound);
        else
          csv << ",";
        csv << "," << format_g17(r.e2_tented_closed) << ",";
        if (r.dual_computed) csv << format_g17(r.e2_tented_dual);
        csv << "," << format_g17(r.e2_rms) << "\n";
      }
    } else {
      csv << "n,z,criterion,e2_korobov,e2_tented_cosine,e2_rms,error_bound_lambda\n";
      std::vector<double> ns, e_kor, e_ten, e_rms;
      nlohmann::json rows = nlohmann::json::array();
      for (auto& f : futs) {
        const IntegrationRow r = f.get();
        csv << r.n << "," << r.z << "," << format_g17(r.criterion) << ","
            << format_g17(r.e2_korobov) << "," << format_g17(r.e2_tented) << ","
            << format_g17(r.e2_rms) << "," << format_g17(r.bound) << "\n";
        ns.push_back(static_cast<double>(r.n));
        e_kor.push_back(std::sqrt(std::max(r.e2_korobov, 1e-300)));
        e_ten.push_back(std::sqrt(std::max(r.e2_tented, 1e-300)));
        e_rms.push_back(std::sqrt(std::max(r.e2_rms, 1e-300)));
        rows.push_back({{"n", r.n}, {"z", r.z}, {"e2_korobov", r.e2_korobov},
                        {"e2_tented_cosine", r.e2_tented}, {"e2_rms", r.e2_rms}});
      }
      summary["rows"] = rows;
      if (ns.size() >= 2) {
        double res_kor = 0.0, res_ten = 0.0, res_rms = 0.0;
        summary["slope_korobov"] = fit_loglog_slope(ns, e_kor, &res_kor);
        summary["slope_tented_cosine"] = fit_loglog_slope(ns, e_ten, &res_ten);
        summary["slope_rms"] = fit_loglog_slope(ns, e_rms, &res_rms);
        summary["residual_korobov"] = res_kor;
        summary["residual_tented_cosine"] = res_ten;
        summary["residual_rms"] = res_rms;
      }
    }
  } else {
    summary["mode"] = "approximation_convergence";
    std::vector<std::future<ApproximationRow>> futs;
    for (long long n : spec.n_list)
      futs.push_back(std::async(std::launch::async, approximation_row, std::cref(spec), n));
    csv << "n,M,z,feasible,E_criterion,wce_bound_sq,error_bound,corollary_bound\n";
    std::vector<double> ns, bounds;
    nlohmann::json rows = nlohmann::json::array();
    for (auto& f : futs) {
      const ApproximationRow r = f.get();
      csv << r.n << "," << format_g17(r.M) << "," << r.z << "," << (r.feasible ? 1 : 0) << ","
          << format_g17(r.criterion) << "," << format_g17(r.bound_sq) << ","
          << format_g17(r.error_bound) << "," << format_g17(r.corollary_bound) << "\n";
      if (r.feasible) {
        ns.push_back(static_cast<double>(r.n));
        bounds.push_back(r.error_bound);
      }
      rows.push_back({{"n", r.n}, {"M", r.M}, {"feasible", r.feasible},
                      {"error_bound", r.error_bound}});
    }
    summary["rows"] = rows;
    if (ns.size() >= 2) {
      double res = 0.0;
      summary["slope_error_bound"] = fit_loglog_slope(ns, bounds, &res);
      summary["residual_error_bound"] = res;
    }
  }

  art.csv = csv.str();
  if (!spec.out_path.empty()) {
    std::ofstream c(spec.out_path + ".csv");
    c << art.csv;
    std::ofstream j(spec.out_path + ".json");
    j << summary.dump(2) << "\n";
  }
  return art;
}

}  // namespace latcosine
