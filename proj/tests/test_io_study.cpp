#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "latcosine/cli.hpp"
#include "latcosine/io.hpp"
#include "latcosine/study.hpp"

using namespace latcosine;

TEST_SUITE_BEGIN("io_study");

TEST_CASE("points CSV round-trips bit-exactly") {
  const PointSet ps = transform_points(lattice_points(GeneratingVector(7, {1, 3})),
                                       Shift(std::vector<double>{0.1234567890123456, 0.5}), true);
  const std::string csv = points_to_csv(ps);
  const PointSet back = points_from_csv(csv);
  REQUIRE(back.size() == ps.size());
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(back.points[i][j] == ps.points[i][j]);
}

TEST_CASE("wce report JSON round-trip") {
  const SpaceParams p(1.5, {1.0, 0.5});
  const WceReport r{0.12345678901234567, WceMethod::dual_sum, 1e-9, false};
  const nlohmann::json j = wce_report_to_json(r, p, 17);
  CHECK(j.at("n") == 17);
  CHECK(j.at("d") == 2);
  CHECK(j.at("alpha") == 1.5);
  const WceReport back = wce_report_from_json(j);
  CHECK(back.squared_error == r.squared_error);
  CHECK(back.method == r.method);
  CHECK(back.truncation_bound == r.truncation_bound);
}

TEST_CASE("coefficient JSONL round-trip") {
  CoefficientMap f;
  f.entries[IntVec{0, 2}] = {0.123456789012345678, -1.5};
  f.entries[IntVec{3, 1}] = {2.0, 0.0};
  const CoefficientMap back = coefficients_from_jsonl(coefficients_to_jsonl(f));
  REQUIRE(back.entries.size() == 2);
  CHECK(back.entries.at(IntVec{0, 2}) == f.entries.at(IntVec{0, 2}));
  CHECK(back.entries.at(IntVec{3, 1}) == f.entries.at(IntVec{3, 1}));
}

TEST_CASE("space params from config blocks") {
  const SpaceParams a = space_params_from_json(
      nlohmann::json{{"alpha", 2.0}, {"weights", {1.0, 0.5, 0.25, 0.125}}}, 3);
  CHECK(a.alpha == 2.0);
  CHECK(a.gamma == std::vector<double>{1.0, 0.5, 0.25});

  const SpaceParams b = space_params_from_json(
      nlohmann::json{{"alpha", 1.0}, {"weights", {{"c", 0.5}, {"eta", 2.0}}}}, 3);
  CHECK(b.gamma[0] == doctest::Approx(0.5));
  CHECK(b.gamma[2] == doctest::Approx(0.5 / 9.0));

  CHECK_THROWS(space_params_from_json(nlohmann::json{{"alpha", 1.0}, {"weights", {1.0}}}, 3));
}

TEST_CASE("z-file format") {
  CbcResult r{GeneratingVector(5, {1, 2}), {0.1, 0.2}, {0.0, 0.0}, CbcEngine::plain};
  CHECK(cbc_zfile(r) == "1\n2\n");
  const nlohmann::json j = cbc_result_to_json(r);
  CHECK(j.at("z") == std::vector<long long>{1, 2});
  CHECK(j.at("engine") == "plain");
}

TEST_CASE("slope fit recovers synthetic power laws") {
  std::vector<double> n, e;
  for (double x : {32.0, 64.0, 128.0, 256.0, 512.0}) {
    n.push_back(x);
    e.push_back(3.7 * std::pow(x, -2.0));
  }
  double residual = 1.0;
  const double slope = fit_loglog_slope(n, e, &residual);
  CHECK(slope == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(residual <= 1e-10);
  CHECK_THROWS_AS(fit_loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("study validation") {
  StudySpec spec{StudyMode::integration_convergence, {5, 3}, 2,
                 SpaceParams::all_ones(1.0, 2),      MRule{},  1.0,
                 0,                                  ""};
  CHECK_THROWS_AS(run_study(spec), std::invalid_argument);
  spec.n_list = {4, 8};
  CHECK_THROWS_AS(run_study(spec), std::invalid_argument);
}

TEST_CASE("integration study is deterministic and summarizes slopes") {
  StudySpec spec{StudyMode::integration_convergence,
                 {17, 31, 61, 127},
                 2,
                 SpaceParams::power_law(2.0, 2, 1.0, 3.0),
                 MRule{},
                 1.0,
                 42,
                 ""};
  const StudyArtifact a = run_study(spec);
  const StudyArtifact b = run_study(spec);
  CHECK(a.csv == b.csv);
  CHECK(a.summary.at("schema") == "latcosine/1");
  REQUIRE(a.summary.contains("slope_tented_cosine"));
  CHECK(a.summary.at("slope_tented_cosine").get<double>() < -1.0);
  CHECK(a.summary.at("rows").size() == 4);
}

TEST_CASE("approximation study flags infeasible rows") {
  StudySpec spec{StudyMode::approximation_convergence,
                 {11, 13},
                 2,
                 SpaceParams::power_law(2.0, 2, 1.0, 3.0),
                 MRule{1e6, 0.0},  // M so large that n >= kappa M^(1/4) fails
                 0.3,
                 1,
                 ""};
  const StudyArtifact art = run_study(spec);
  std::istringstream in(art.csv);
  std::string header, row;
  std::getline(in, header);
  int infeasible = 0;
  while (std::getline(in, row))
    if (row.find(",0,") != std::string::npos) ++infeasible;
  CHECK(infeasible == 2);
}

TEST_CASE("cli dispatch") {
  SUBCASE("points to a file") {
    const std::string path = "/tmp/latcosine_test_points.csv";
    CHECK(cli_dispatch({"points", "--n", "4", "--z", "1,3", "--out", path}) == 0);
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(line == "x1,x2");
    std::getline(f, line);
    CHECK(line == "0.25,0.75");
    std::remove(path.c_str());
  }
  SUBCASE("usage errors exit 2") {
    CHECK(cli_dispatch({"points", "--n", "4"}) == 2);
    CHECK(cli_dispatch({"nonsense"}) == 2);
    CHECK(cli_dispatch({"cbc", "--n", "6", "--d", "2"}) == 2);
  }
  SUBCASE("cbc writes JSON and the z-file") {
    const std::string zpath = "/tmp/latcosine_test.z";
    const std::string jpath = "/tmp/latcosine_test.json";
    CHECK(cli_dispatch({"cbc", "--n", "17", "--d", "3", "--alpha", "1", "--weights", "c=1,eta=2",
                        "--zfile", zpath, "--out", jpath}) == 0);
    std::ifstream zf(zpath);
    long long z1 = 0;
    zf >> z1;
    CHECK(z1 == 1);
    std::ifstream jf(jpath);
    nlohmann::json j;
    jf >> j;
    CHECK(j.at("n") == 17);
    CHECK(j.at("z").size() == 3);
    std::remove(zpath.c_str());
    std::remove(jpath.c_str());
  }
  SUBCASE("hypercross CSV") {
    CHECK(cli_dispatch({"hypercross", "--d", "1", "--M", "4", "--alpha", "1", "--weights", "1",
                        "--out", "/tmp/latcosine_test_hc.csv"}) == 0);
    std::ifstream f("/tmp/latcosine_test_hc.csv");
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(all == "k1\n0\n1\n2\n");
    std::remove("/tmp/latcosine_test_hc.csv");
  }
}

TEST_SUITE_END();
