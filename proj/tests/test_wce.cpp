#include <stdexcept>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "latcosine/lattice.hpp"
#include "latcosine/wce.hpp"

using namespace latcosine;

namespace {
constexpr double kPi = std::numbers::pi;

KernelSpec spec_of(Space s, const SpaceParams& p) { return KernelSpec{s, p, 1000, 1e100}; }
}  // namespace

TEST_SUITE_BEGIN("wce");

TEST_CASE("kernel form closed cases") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);

  SUBCASE("single point at the origin in the Korobov space") {
    const WceReport r =
        wce_kernel_form(spec_of(Space::korobov, p), lattice_points(GeneratingVector(1, {0})));
    CHECK(r.squared_error == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-14));
    CHECK(r.method == WceMethod::kernel_form);
    CHECK(r.truncation_bound == 0.0);
  }
  SUBCASE("degenerate multiset of equal points") {
    PointSet ps;
    ps.points = {{0.3}, {0.3}, {0.3}};
    const WceReport r = wce_kernel_form(spec_of(Space::korobov, p), ps);
    const double ktt = 1.0 + 2.0 * one_dim_series(1.0, 0.0).value;
    CHECK(r.squared_error == doctest::Approx(ktt - 1.0).epsilon(1e-14));
  }
  SUBCASE("two-point rule recovers pi^2/12") {
    const WceReport r =
        wce_kernel_form(spec_of(Space::korobov, p), lattice_points(GeneratingVector(2, {1})));
    CHECK(r.squared_error == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-12));
  }
}

TEST_CASE("cosine kernel on tented points equals tented kernel on plain points") {
  const SpaceParams p(1.0, {1.0, 0.5});
  const GeneratingVector gen(8, {1, 5});
  const PointSet plain = lattice_points(gen);
  const PointSet tented = transform_points(plain, std::nullopt, true);
  const WceReport a = wce_kernel_form(spec_of(Space::cosine, p), tented);
  const WceReport b = wce_kernel_form(spec_of(Space::tented_cosine, p), plain);
  CHECK(a.squared_error == doctest::Approx(b.squared_error).epsilon(1e-13));
}

TEST_CASE("korobov dual sum") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);

  SUBCASE("even-frequency sum approaches pi^2/12") {
    const GeneratingVector gen(2, {1});
    const WceReport dual = wce_korobov_dual(p, gen, 4096);
    CHECK(std::fabs(dual.squared_error - kPi * kPi / 12.0) <= dual.truncation_bound);
    CHECK(dual.truncation_bound < 1e-3);
  }
  SUBCASE("n = 1: every frequency aliases") {
    const SpaceParams p2(2.0, {1.0, 0.5});
    const GeneratingVector gen(1, {0, 0});
    const WceReport dual = wce_korobov_dual(p2, gen, 64);
    const double full =
        (1.0 + 2.0 * zeta(4.0)) * (1.0 + 2.0 * 0.5 * zeta(4.0)) - 1.0;
    CHECK(std::fabs(dual.squared_error - full) <= dual.truncation_bound);
  }
  SUBCASE("agrees with the kernel form") {
    const SpaceParams p2(2.0, {1.0, 1.0});
    const GeneratingVector gen(4, {1, 3});
    const WceReport dual = wce_korobov_dual(p2, gen, default_box_bound(4));
    const WceReport kern = wce_kernel_form(spec_of(Space::korobov, p2), lattice_points(gen));
    CHECK(std::fabs(dual.squared_error - kern.squared_error) <=
          dual.truncation_bound + kern.truncation_bound + 1e-12);
  }
}

TEST_CASE("tent-transformed cosine dual sum") {
  SUBCASE("one dimension: the sign factor is always 1") {
    const SpaceParams p = SpaceParams::all_ones(1.0, 1);
    const GeneratingVector gen(5, {2});
    const WceReport t = wce_cosine_tented(p, gen, 200);
    const WceReport k = wce_korobov_dual(p, gen, 200);
    CHECK(t.squared_error == doctest::Approx(k.squared_error).epsilon(1e-15));
  }
  SUBCASE("never exceeds the Korobov error") {
    for (long long n : {3LL, 4LL, 8LL, 13LL}) {
      const SpaceParams p(1.0, {1.0, 1.0});
      const GeneratingVector gen(n, {1, (n > 2 ? n - 1 : 1)});
      const WceReport t = wce_cosine_tented(p, gen, 64);
      const WceReport k = wce_korobov_dual(p, gen, 64);
      CHECK(t.squared_error <= k.squared_error + 1e-12);
    }
  }
  SUBCASE("agrees with the tented kernel form") {
    const SpaceParams p(1.0, {1.0, 1.0});
    const GeneratingVector gen(4, {1, 3});
    const WceReport dual = wce_cosine_tented(p, gen, 32);
    const WceReport kern = wce_kernel_form(spec_of(Space::tented_cosine, p), lattice_points(gen));
    CHECK(std::fabs(dual.squared_error - kern.squared_error) <=
          dual.truncation_bound + kern.truncation_bound + 1e-12);
  }
  SUBCASE("strictly smaller for n = 4, z = (1,3)") {
    const SpaceParams p(1.0, {1.0, 1.0});
    const GeneratingVector gen(4, {1, 3});
    const WceReport t = wce_cosine_tented(p, gen, 64);
    const WceReport k = wce_korobov_dual(p, gen, 64);
    CHECK(k.squared_error - t.squared_error > 1e-6);
  }
  SUBCASE("dimension cap") {
    const SpaceParams p = SpaceParams::power_law(1.0, 21, 1.0, 2.0);
    std::vector<long long> z(21, 1);
    CHECK_THROWS_AS(wce_cosine_tented(p, GeneratingVector(3, std::move(z)), 2),
                    std::invalid_argument);
  }
}

TEST_CASE("rms shifted error") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  const GeneratingVector gen(2, {1});

  SUBCASE("closed value pi^2/24 through the exact kernel route") {
    const WceReport r = wce_rms_shifted(p, gen);
    CHECK(r.squared_error == doctest::Approx(kPi * kPi / 24.0).epsilon(1e-12));
    CHECK(r.truncation_bound == 0.0);
  }
  SUBCASE("dual route is the halved-weight Korobov sum") {
    const WceReport halved = wce_korobov_dual(p.halved(), gen, default_box_bound(2));
    const WceReport rms = wce_rms_shifted(p, gen);
    CHECK(std::fabs(rms.squared_error - halved.squared_error) <=
          halved.truncation_bound + 1e-12);
  }
}

TEST_CASE("cbc error bound") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  CHECK(cbc_error_bound(p, 2, 1.0, false) ==
        doctest::Approx(std::sqrt(kPi * kPi / 3.0)).epsilon(1e-15));
  CHECK(cbc_error_bound(p, 2, 1.0, true) ==
        doctest::Approx(std::sqrt(zeta(2.0))).epsilon(1e-15));
  double prev = cbc_error_bound(p, 2, 1.0, false);
  for (long long n : {3LL, 5LL, 17LL, 101LL}) {
    const double b = cbc_error_bound(p, n, 1.0, false);
    CHECK(b < prev);
    prev = b;
  }
  CHECK_THROWS_AS(cbc_error_bound(p, 2, 0.4, false), std::invalid_argument);
  CHECK_THROWS_AS(cbc_error_bound(p, 2, 1.2, false), std::invalid_argument);
  CHECK_THROWS_AS(cbc_error_bound(p, 1, 1.0, false), std::invalid_argument);
}

TEST_CASE("lattice closed forms match the generic routes") {
  const SpaceParams p(2.0, {1.0, 0.5, 0.25});
  const GeneratingVector gen(13, {1, 5, 8});

  const WceReport fast_kor = wce_korobov_lattice(p, gen);
  const WceReport kern_kor = wce_kernel_form(spec_of(Space::korobov, p), lattice_points(gen));
  CHECK(fast_kor.squared_error == doctest::Approx(kern_kor.squared_error).epsilon(1e-12));

  const WceReport fast_ten = wce_tented_cosine_lattice(p, gen);
  const WceReport kern_ten =
      wce_kernel_form(spec_of(Space::tented_cosine, p), lattice_points(gen));
  CHECK(fast_ten.squared_error == doctest::Approx(kern_ten.squared_error).epsilon(1e-12));
}

TEST_SUITE_END();
