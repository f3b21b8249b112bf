#include "latcosine/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latcosine/approx.hpp"
#include "latcosine/cbc.hpp"
#include "latcosine/checks.hpp"
#include "latcosine/errors.hpp"
#include "latcosine/hypercross.hpp"
#include "latcosine/io.hpp"
#include "latcosine/study.hpp"
#include "latcosine/wce.hpp"

namespace latcosine {

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::istringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stoll(cell));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

// "--weights 1,0.5,0.25" or "--weights c=0.9,eta=2"
SpaceParams parse_params(double alpha, const std::string& wspec, int d) {
  if (wspec.find('=') != std::string::npos) {
    double c = 1.0, eta = 0.0;
    std::istringstream in(wspec);
    std::string cell;
    while (std::getline(in, cell, ',')) {
      const auto pos = cell.find('=');
      if (pos == std::string::npos) throw CLI::ValidationError("--weights", "bad weight spec");
      const std::string key = cell.substr(0, pos);
      const double val = std::stod(cell.substr(pos + 1));
      if (key == "c")
        c = val;
      else if (key == "eta")
        eta = val;
      else
        throw CLI::ValidationError("--weights", "unknown key " + key);
    }
    return SpaceParams::power_law(alpha, d, c, eta);
  }
  auto g = parse_double_list(wspec);
  if (static_cast<int>(g.size()) < d)
    throw CLI::ValidationError("--weights", "fewer weights than dimensions");
  g.resize(static_cast<std::size_t>(d));
  return SpaceParams(alpha, std::move(g));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

struct CommonSpace {
  double alpha = 1.0;
  std::string weights = "1";
};

void add_space_flags(CLI::App* cmd, CommonSpace& cs) {
  cmd->add_option("--alpha", cs.alpha, "smoothness parameter, > 1/2");
  cmd->add_option("--weights", cs.weights,
                  "explicit list g1,g2,... or power law c=<c>,eta=<eta>");
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"tent-transformed lattice rules: integration, CBC search, approximation"};
  app.require_subcommand(1);

  // points
  auto* points = app.add_subcommand("points", "emit a (transformed) lattice point set as CSV");
  long long p_n = 1;
  std::string p_z = "0", p_shift, p_out;
  bool p_tent = false;
  points->add_option("--n", p_n, "number of points")->required();
  points->add_option("--z", p_z, "generating vector, comma-separated")->required();
  points->add_option("--shift", p_shift, "shift in [0,1)^d, comma-separated");
  points->add_flag("--tent", p_tent, "apply the tent transform (after any shift)");
  points->add_option("--out", p_out, "output file (default stdout)");

  // cbc
  auto* cbc = app.add_subcommand("cbc", "component-by-component generating-vector search");
  long long c_n = 2;
  int c_d = 1;
  CommonSpace c_space;
  std::string c_engine = "fast", c_criterion = "korobov", c_out, c_zfile;
  double c_M = 0.0, c_kappa = 1.1;
  cbc->add_option("--n", c_n, "prime number of points")->required();
  cbc->add_option("--d", c_d, "dimension")->required();
  add_space_flags(cbc, c_space);
  cbc->add_option("--engine", c_engine, "fast | plain")
      ->check(CLI::IsMember({"fast", "plain"}));
  cbc->add_option("--criterion", c_criterion, "korobov | korobov-halved | approx-E")
      ->check(CLI::IsMember({"korobov", "korobov-halved", "approx-E"}));
  cbc->add_option("--M", c_M, "hyperbolic-cross bound (approx-E criterion)");
  cbc->add_option("--kappa", c_kappa, "feasibility factor for approx-E");
  cbc->add_option("--out", c_out, "JSON output file (default stdout)");
  cbc->add_option("--zfile", c_zfile, "also write the plain-text z-file here");

  // wce
  auto* wce = app.add_subcommand("wce", "worst-case integration errors for a given rule");
  long long w_n = 2;
  std::string w_z, w_variant = "all", w_out;
  CommonSpace w_space;
  int w_H = 0;
  wce->add_option("--n", w_n, "number of points")->required();
  wce->add_option("--z", w_z, "generating vector, comma-separated")->required();
  add_space_flags(wce, w_space);
  wce->add_option("--variant", w_variant, "korobov | tented | rms | all")
      ->check(CLI::IsMember({"korobov", "tented", "rms", "all"}));
  wce->add_option("--H", w_H, "dual truncation box (default max(32, 4n))");
  wce->add_option("--out", w_out, "output file (default stdout)");

  // hypercross
  auto* hc = app.add_subcommand("hypercross", "enumerate weighted hyperbolic crosses");
  int h_d = 1;
  double h_M = 1.0;
  bool h_signed = false;
  CommonSpace h_space;
  std::string h_out, h_bound_q;
  hc->add_option("--d", h_d, "dimension")->required();
  hc->add_option("--M", h_M, "cross bound, >= 1")->required();
  add_space_flags(hc, h_space);
  hc->add_flag("--signed", h_signed, "enumerate over Z^d instead of Z_+^d");
  hc->add_option("--bound-q", h_bound_q,
                 "report the cardinality bound at these q values instead of the CSV");
  hc->add_option("--out", h_out, "output file (default stdout)");

  // approx
  auto* ap = app.add_subcommand(
      "approx", "approximate a seeded random cosine polynomial and report its errors");
  long long a_n = 2;
  std::string a_z, a_out;
  CommonSpace a_space;
  double a_M = 1.0, a_support = 0.0;
  int a_terms = 8, a_quad = 64;
  std::uint64_t a_seed = 1;
  ap->add_option("--n", a_n, "number of points")->required();
  ap->add_option("--z", a_z, "generating vector, comma-separated")->required();
  add_space_flags(ap, a_space);
  ap->add_option("--M", a_M, "hyperbolic-cross truncation bound")->required();
  ap->add_option("--support-M", a_support, "support cross for the test polynomial (default 4M)");
  ap->add_option("--terms", a_terms, "number of support terms");
  ap->add_option("--quad-level", a_quad, "trapezoid subintervals per axis");
  ap->add_option("--seed", a_seed, "test-function seed");
  ap->add_option("--out", a_out, "coefficient JSONL file; summary then goes to stdout");

  // study
  auto* st = app.add_subcommand("study", "convergence studies and equality checks");
  std::string s_mode = "integration_convergence", s_nlist, s_out;
  int s_d = 1;
  CommonSpace s_space;
  double s_mc = 1.0, s_mp = 0.0, s_lambda = 1.0;
  std::uint64_t s_seed = 0;
  st->add_option("--mode", s_mode,
                 "integration_convergence | approximation_convergence | error_tables | "
                 "equality_checks")
      ->check(CLI::IsMember({"integration_convergence", "approximation_convergence",
                             "error_tables", "equality_checks"}));
  st->add_option("--n-list", s_nlist, "strictly increasing primes, comma-separated");
  st->add_option("--d", s_d, "dimension");
  add_space_flags(st, s_space);
  st->add_option("--M-c", s_mc, "M rule coefficient: M = c n^p");
  st->add_option("--M-p", s_mp, "M rule exponent");
  st->add_option("--lambda", s_lambda, "bound parameter reported per row");
  st->add_option("--seed", s_seed, "study seed");
  st->add_option("--out", s_out, "artifact base path (writes <base>.csv and <base>.json)");

  // check
  auto* ck = app.add_subcommand("check", "run the invariant suite");
  bool k_slow = false;
  ck->add_flag("--slow", k_slow, "include the large sweeps and scaling observation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : 2;
  }

  if (points->parsed()) {
    const GeneratingVector gen(p_n, parse_int_list(p_z));
    PointSet ps = lattice_points(gen);
    std::optional<Shift> shift;
    if (!p_shift.empty()) shift = Shift(parse_double_list(p_shift));
    if (shift || p_tent) ps = transform_points(ps, shift, p_tent);
    emit(points_to_csv(ps), p_out);
    return 0;
  }

  if (cbc->parsed()) {
    CbcConfig cfg{c_n, c_d, parse_params(c_space.alpha, c_space.weights, c_d)};
    cfg.engine = c_engine == "plain" ? CbcEngine::plain : CbcEngine::fast;
    if (c_criterion == "korobov-halved") cfg.criterion = CbcCriterion::korobov_integration_halved;
    if (c_criterion == "approx-E") {
      cfg.criterion = CbcCriterion::approximation_E;
      cfg.engine = CbcEngine::plain;
      cfg.M = c_M;
      cfg.kappa = c_kappa;
    }
    const CbcResult res = cbc_construct(cfg);
    if (!c_zfile.empty()) {
      std::ofstream f(c_zfile);
      f << cbc_zfile(res);
    }
    emit(cbc_result_to_json(res).dump(2) + "\n", c_out);
    return 0;
  }

  if (wce->parsed()) {
    const GeneratingVector gen(w_n, parse_int_list(w_z));
    const SpaceParams params = parse_params(w_space.alpha, w_space.weights, gen.dim());
    const int H = w_H > 0 ? w_H : default_box_bound(w_n);
    nlohmann::json out = nlohmann::json::array();
    auto push = [&](const std::string& name, const WceReport& r) {
      nlohmann::json j = wce_report_to_json(r, params, w_n);
      j["variant"] = name;
      out.push_back(j);
    };
    if (w_variant == "korobov" || w_variant == "all")
      push("korobov", wce_korobov_dual(params, gen, H));
    if (w_variant == "tented" || w_variant == "all")
      push("tented_cosine", wce_cosine_tented(params, gen, H));
    if (w_variant == "rms" || w_variant == "all") push("rms", wce_rms_shifted(params, gen, H));
    if (w_variant == "all") {
      const double kor = out[0]["squared_error"].get<double>();
      const double ten = out[1]["squared_error"].get<double>();
      nlohmann::json extra{{"variant", "tented_to_korobov_ratio"},
                           {"ratio", kor > 0.0 ? ten / kor : 1.0}};
      out.push_back(extra);
    }
    emit(out.dump(2) + "\n", w_out);
    return 0;
  }

  if (hc->parsed()) {
    const SpaceParams params = parse_params(h_space.alpha, h_space.weights, h_d);
    if (!h_bound_q.empty()) {
      const IndexSet sg = enumerate_H(params, h_M, true);
      nlohmann::json j{{"M", h_M}, {"signed_cardinality", sg.size()}};
      nlohmann::json bounds;
      double best = 0.0;
      bool first = true;
      for (double q : parse_double_list(h_bound_q)) {
        const double b = cardinality_bound(params, h_M, q);
        bounds[format_g17(q)] = b;
        if (first || b < best) best = b, first = false;
      }
      j["bounds"] = bounds;
      j["min_bound"] = best;
      emit(j.dump(2) + "\n", h_out);
      return 0;
    }
    emit(index_set_to_csv(enumerate_H(params, h_M, h_signed)), h_out);
    return 0;
  }

  if (ap->parsed()) {
    const GeneratingVector gen(a_n, parse_int_list(a_z));
    const SpaceParams params = parse_params(a_space.alpha, a_space.weights, gen.dim());
    if (a_support <= 0.0) a_support = 4.0 * a_M;
    CounterRng rng(a_seed);
    const CoefficientMap f = random_cosine_polynomial(params, a_support, a_terms, rng);
    const ApproxResult res = approximate(to_function(f), gen, params, a_M);
    const double exact = exact_l2_error(f, gen, params, a_M);
    const double emp = empirical_l2_error(to_function(f), res, a_quad);
    double tb = 0.0;
    const double bound = wce_upper_bound(params, gen, a_M, default_box_bound(a_n), &tb);
    nlohmann::json summary{{"n", a_n},          {"M", a_M},
                           {"seed", a_seed},    {"exact_l2_error_sq", exact},
                           {"empirical_l2_error_sq", emp}, {"wce_upper_bound_sq", bound},
                           {"bound_truncation", tb}};
    if (!a_out.empty()) {
      std::ofstream fcoef(a_out);
      fcoef << coefficients_to_jsonl(res.coeffs);
      std::cout << summary.dump(2) << "\n";
    } else {
      std::cout << coefficients_to_jsonl(res.coeffs) << summary.dump(2) << "\n";
    }
    return 0;
  }

  if (st->parsed()) {
    StudySpec spec{StudyMode::integration_convergence,
                   parse_int_list(s_nlist.empty() ? std::string() : s_nlist),
                   s_d,
                   parse_params(s_space.alpha, s_space.weights, s_d),
                   MRule{s_mc, s_mp},
                   s_lambda,
                   s_seed,
                   s_out};
    if (s_mode == "approximation_convergence") spec.mode = StudyMode::approximation_convergence;
    if (s_mode == "error_tables") spec.mode = StudyMode::error_tables;
    if (s_mode == "equality_checks") spec.mode = StudyMode::equality_checks;
    const StudyArtifact art = run_study(spec);
    std::cout << art.summary.dump(2) << "\n";
    if (spec.mode == StudyMode::equality_checks && !art.all_passed) return 1;
    return 0;
  }

  if (ck->parsed()) {
    bool all = true;
    for (const CheckResult& r : run_invariant_checks(k_slow)) {
      std::cout << (r.pass ? "[ok]   " : (r.soft ? "[soft] " : "[FAIL] ")) << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
      if (!r.pass && !r.soft) all = false;
    }
    return all ? 0 : 1;
  }

  return 2;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const numerical_contract_error& e) {
    std::cerr << "numerical contract failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace latcosine
