#include <cmath>
#include <numbers>

#include "doctest.h"
#include "latcosine/errors.hpp"
#include "latcosine/lattice.hpp"
#include "latcosine/rng.hpp"
#include "latcosine/spaces.hpp"

using namespace latcosine;

namespace {
constexpr double kPi = std::numbers::pi;

// Raw double series of the cosine kernel factor, the brute-force oracle the
// product-to-sum reduction is checked against.
double cosine_factor_brute(double alpha, double gamma, double x, double y, long K) {
  double s = 0.0;
  for (long k = K; k >= 1; --k)
    s += std::cos(kPi * k * x) * std::cos(kPi * k * y) / std::pow(static_cast<double>(k), 2.0 * alpha);
  return 1.0 + 2.0 * gamma * s;
}
}  // namespace

TEST_SUITE_BEGIN("spaces");

TEST_CASE("space params validation") {
  CHECK_THROWS_AS(SpaceParams(0.5, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SpaceParams(1.0, {1.0, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(SpaceParams(1.0, {0.5, 0.7}), std::invalid_argument);
  CHECK_THROWS_AS(SpaceParams(1.0, {1.0, 0.0}), std::invalid_argument);
  const SpaceParams p = SpaceParams::power_law(1.5, 4, 0.5, 2.0);
  CHECK(p.gamma[0] == doctest::Approx(0.5));
  CHECK(p.gamma[3] == doctest::Approx(0.5 / 16.0));
  const SpaceParams h = p.halved();
  CHECK(h.gamma[0] == 0.25);
  CHECK(h.alpha == 1.5);
}

TEST_CASE("r_weight") {
  const SpaceParams one(1.0, {0.5});
  CHECK(r_weight(one, IntVec{0}) == 1.0);
  CHECK(r_weight(one, IntVec{2}) == doctest::Approx(8.0).epsilon(1e-15));

  const SpaceParams two(2.0, {1.0, 0.25});
  CHECK(r_weight(two, IntVec{1, -2}) == doctest::Approx(64.0).epsilon(1e-15));

  // sign invariance over all patterns
  CounterRng rng(31);
  const SpaceParams p = SpaceParams::power_law(1.5, 3, 0.9, 1.0);
  for (int t = 0; t < 25; ++t) {
    IntVec k{static_cast<int>(rng.next_below(7)) - 3, static_cast<int>(rng.next_below(7)) - 3,
             static_cast<int>(rng.next_below(7)) - 3};
    const double base = r_weight(p, k);
    for (unsigned mask = 0; mask < 8; ++mask) {
      IntVec f(k);
      for (int j = 0; j < 3; ++j)
        if ((mask >> j) & 1u) f[static_cast<std::size_t>(j)] = -f[static_cast<std::size_t>(j)];
      CHECK(r_weight(p, f) == base);
    }
  }
}

TEST_CASE("cosine basis") {
  CHECK(cosine_basis(IntVec{0, 0}, std::vector<double>{0.3, 0.9}) == 1.0);
  CHECK(cosine_basis(IntVec{1}, std::vector<double>{0.0}) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(cosine_basis(IntVec{1, 2}, std::vector<double>{1.0, 0.5}) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("one_dim_series closed forms") {
  CHECK(one_dim_series(1.0, 0.0).value == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(one_dim_series(1.0, 0.5).value == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-15));
  CHECK(one_dim_series(2.0, 0.0).value ==
        doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-15));
  CHECK(one_dim_series(3.0, 0.0).value ==
        doctest::Approx(std::pow(kPi, 6) / 945.0).epsilon(1e-15));
  CHECK(one_dim_series(1.0, 0.0).tail_bound == 0.0);

  // closed form against a long partial sum
  for (double x : {0.1, 0.37, 0.62, 0.99}) {
    double partial = 0.0;
    for (long h = 100000; h >= 1; --h)
      partial += std::cos(2.0 * kPi * std::fmod(h * x, 1.0)) / (static_cast<double>(h) * h);
    CHECK(one_dim_series(1.0, x).value == doctest::Approx(partial).epsilon(1e-9));
  }
}

TEST_CASE("one_dim_series truncated path reports its tail") {
  const SeriesValue coarse = one_dim_series(0.75, 0.3, 2000);
  const SeriesValue fine = one_dim_series(0.75, 0.3, 400000);
  CHECK(coarse.tail_bound > 0.0);
  CHECK(std::fabs(coarse.value - fine.value) <= coarse.tail_bound);
  CHECK(fine.tail_bound < coarse.tail_bound);
  CHECK_THROWS_AS(one_dim_series(0.4, 0.1), std::invalid_argument);
}

TEST_CASE("zeta") {
  CHECK(zeta(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(zeta(4.0) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-15));
  CHECK_THROWS_AS(zeta(1.0), std::invalid_argument);
}

TEST_CASE("kernel_eval closed cases") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  const std::vector<double> zero{0.0};
  KernelSpec korobov{Space::korobov, p, 1000, 1e-6};
  CHECK(kernel_eval(korobov, zero, zero).value ==
        doctest::Approx(1.0 + kPi * kPi / 3.0).epsilon(1e-15));
  KernelSpec cosine{Space::cosine, p, 1000, 1e-6};
  CHECK(kernel_eval(cosine, zero, zero).value ==
        doctest::Approx(1.0 + kPi * kPi / 3.0).epsilon(1e-15));
}

TEST_CASE("shift-invariant tented kernel is the halved-weight Korobov kernel") {
  const SpaceParams p(1.0, {1.0, 0.5});
  KernelSpec inv{Space::shift_invariant_tented, p, 1000, 1e-6};
  KernelSpec halved{Space::korobov, p.halved(), 1000, 1e-6};
  CounterRng rng(7);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x{rng.next_double(), rng.next_double()};
    const std::vector<double> y{rng.next_double(), rng.next_double()};
    CHECK(kernel_eval(inv, x, y).value == kernel_eval(halved, x, y).value);
  }
}

TEST_CASE("tented cosine kernel evaluates the cosine kernel at tented arguments") {
  const SpaceParams p(2.0, {1.0, 0.5});
  KernelSpec tented{Space::tented_cosine, p, 1000, 1e-6};
  KernelSpec cosine{Space::cosine, p, 1000, 1e-6};
  CounterRng rng(8);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x{rng.next_double(), rng.next_double()};
    const std::vector<double> y{rng.next_double(), rng.next_double()};
    const std::vector<double> px{tent(x[0]), tent(x[1])};
    const std::vector<double> py{tent(y[0]), tent(y[1])};
    CHECK(kernel_eval(tented, x, y).value ==
          doctest::Approx(kernel_eval(cosine, px, py).value).epsilon(1e-15));
  }
}

TEST_CASE("cosine kernel against the raw double series") {
  const double x = 0.3, y = 0.7, gamma = 0.5;
  for (double alpha : {1.0, 2.0}) {
    const SpaceParams p(alpha, {gamma});
    KernelSpec spec{Space::cosine, p, 1000, 1e-6};
    const double brute = cosine_factor_brute(alpha, gamma, x, y, 200000);
    const double tail = 2.0 * gamma * (zeta(2.0 * alpha) * std::pow(200000.0, 1.0 - 2.0 * alpha));
    CHECK(std::fabs(kernel_eval(spec, std::vector<double>{x}, std::vector<double>{y}).value -
                    brute) <= std::max(tail, 1e-9));
  }
}

TEST_CASE("kernel symmetry is exact") {
  CounterRng rng(9);
  for (int t = 0; t < 30; ++t) {
    const SpaceParams p = SpaceParams::power_law(1.0 + (t % 2), 3, 1.0, 1.0);
    std::vector<double> x{rng.next_double(), rng.next_double(), rng.next_double()};
    std::vector<double> y{rng.next_double(), rng.next_double(), rng.next_double()};
    for (Space s :
         {Space::cosine, Space::korobov, Space::tented_cosine, Space::shift_invariant_tented}) {
      KernelSpec spec{s, p, 500, 1e100};
      CHECK(kernel_eval(spec, x, y).value == kernel_eval(spec, y, x).value);
    }
  }
}

TEST_CASE("series tolerance is enforced for non-integer smoothness") {
  const SpaceParams p(0.8, {1.0});
  KernelSpec strict{Space::korobov, p, 50, 1e-12};
  const std::vector<double> x{0.2}, y{0.9};
  CHECK_THROWS_AS(kernel_eval(strict, x, y), numerical_contract_error);
  KernelSpec loose{Space::korobov, p, 50, 1.0};
  const KernelValue kv = kernel_eval(loose, x, y);
  CHECK(kv.truncation_bound > 1e-12);
  CHECK(kv.truncation_bound <= 1.0);
}

TEST_CASE("sobolev kernel closed values") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  CHECK(sobolev_kernel_eval(p, std::vector<double>{0.0}, std::vector<double>{0.0}) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(sobolev_kernel_eval(p, std::vector<double>{0.0}, std::vector<double>{1.0}) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  const SpaceParams bad(2.0, {1.0});
  CHECK_THROWS_AS(
      sobolev_kernel_eval(bad, std::vector<double>{0.0}, std::vector<double>{0.0}),
      std::invalid_argument);
}

TEST_CASE("alpha = 1 cosine kernel coincides with the Sobolev kernel under the pi^2 rescale") {
  // The norm identification between the two spaces rescales each weight by
  // pi^2: the cosine kernel with weights gamma / pi^2 equals the Bernoulli
  // product with weights gamma.
  const double g = 1.0;
  const SpaceParams cosine_params(1.0, {g / (kPi * kPi)});
  const SpaceParams sobolev_params(1.0, {g});
  KernelSpec spec{Space::cosine, cosine_params, 1000, 1e-6};
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      const std::vector<double> x{a / 20.0}, y{b / 20.0};
      CHECK(kernel_eval(spec, x, y).value ==
            doctest::Approx(sobolev_kernel_eval(sobolev_params, x, y)).epsilon(1e-13));
    }
  }
}

TEST_SUITE_END();
