#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "doctest.h"
#include "latcosine/lattice.hpp"
#include "latcosine/rng.hpp"

using namespace latcosine;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("lattice points in index order") {
  const PointSet ps = lattice_points(GeneratingVector(4, {1, 3}));
  REQUIRE(ps.size() == 4);
  CHECK(ps.points[0] == std::vector<double>{0.25, 0.75});
  CHECK(ps.points[1] == std::vector<double>{0.5, 0.5});
  CHECK(ps.points[2] == std::vector<double>{0.75, 0.25});
  CHECK(ps.points[3] == std::vector<double>{0.0, 0.0});
  CHECK(ps.kind == PointKind::plain);

  const PointSet single = lattice_points(GeneratingVector(1, {0, 0, 0}));
  REQUIRE(single.size() == 1);
  CHECK(single.points[0] == std::vector<double>{0.0, 0.0, 0.0});

  const PointSet five = lattice_points(GeneratingVector(5, {1, 2}));
  CHECK(five.points[0] == std::vector<double>{0.2, 0.4});
  CHECK(five.points[1] == std::vector<double>{0.4, 0.8});
  CHECK(five.points[2] == std::vector<double>{0.6, 0.2});
  CHECK(five.points[3] == std::vector<double>{0.8, 0.6});
  CHECK(five.points[4] == std::vector<double>{0.0, 0.0});
}

TEST_CASE("generating vector reduces mod n") {
  const GeneratingVector gen(4, {5, -1});
  CHECK(gen.z == std::vector<long long>{1, 3});
  CHECK_THROWS_AS(GeneratingVector(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratingVector(3, {}), std::invalid_argument);
}

TEST_CASE("tent transform") {
  CHECK(tent(0.0) == 0.0);
  CHECK(tent(0.5) == 1.0);
  CHECK(tent(0.25) == 0.5);
  CHECK(tent(0.75) == 0.5);
  CHECK(tent(1.0) == 0.0);
  for (int i = 0; i <= 64; ++i) {
    const double x = static_cast<double>(i) / 64.0;
    CHECK(tent(x) == tent(1.0 - x));
    CHECK(tent(x) >= 0.0);
    CHECK(tent(x) <= 1.0);
  }
  CHECK_THROWS_AS(tent(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(tent(1.1), std::invalid_argument);
}

TEST_CASE("transform_points") {
  const PointSet plain = lattice_points(GeneratingVector(4, {1, 3}));

  SUBCASE("tent only") {
    const PointSet t = transform_points(plain, std::nullopt, true);
    CHECK(t.kind == PointKind::tented);
    CHECK(t.points[0] == std::vector<double>{0.5, 0.5});
    CHECK(t.points[1] == std::vector<double>{1.0, 1.0});
    CHECK(t.points[2] == std::vector<double>{0.5, 0.5});
    CHECK(t.points[3] == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("zero shift, no tent is the identity") {
    const PointSet s = transform_points(plain, Shift(std::vector<double>{0.0, 0.0}), false);
    CHECK(s.points == plain.points);
    CHECK(s.kind == PointKind::shifted);
  }
  SUBCASE("shift then tent, collisions kept") {
    const PointSet base = lattice_points(GeneratingVector(2, {1}));
    const PointSet st = transform_points(base, Shift(std::vector<double>{0.25}), true);
    CHECK(st.kind == PointKind::shifted_tented);
    REQUIRE(st.size() == 2);
    CHECK(st.points[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(st.points[1][0] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("tented input rejected") {
    const PointSet t = transform_points(plain, std::nullopt, true);
    CHECK_THROWS_AS(transform_points(t, std::nullopt, true), std::invalid_argument);
  }
}

TEST_CASE("in_dual") {
  const GeneratingVector gen(4, {1, 3});
  CHECK(in_dual(std::vector<int>{1, 1}, gen));
  CHECK(in_dual(std::vector<int>{0, 0}, gen));
  CHECK_FALSE(in_dual(std::vector<int>{1, 0}, gen));
  CHECK(in_dual(std::vector<int>{-1, -1}, gen));
  CHECK_THROWS_AS(in_dual(std::vector<int>{1}, gen), std::invalid_argument);
}

TEST_CASE("enumerate_dual") {
  SUBCASE("even integers for n = 2") {
    const IndexSet dual = enumerate_dual(GeneratingVector(2, {1}), 4);
    REQUIRE(dual.size() == 5);
    CHECK(dual.indices[0] == IntVec{-4});
    CHECK(dual.indices[1] == IntVec{-2});
    CHECK(dual.indices[2] == IntVec{0});
    CHECK(dual.indices[3] == IntVec{2});
    CHECK(dual.indices[4] == IntVec{4});
  }
  SUBCASE("trivial lattice dual is the full box") {
    const IndexSet dual = enumerate_dual(GeneratingVector(1, {0, 0}), 1);
    CHECK(dual.size() == 9);
  }
  SUBCASE("n = 4, z = (1,3), unit box") {
    // exhaustive scan of the 9 candidates: only 0 and +-(1,1) satisfy
    // h1 + 3 h2 = 0 mod 4
    const IndexSet dual = enumerate_dual(GeneratingVector(4, {1, 3}), 1);
    REQUIRE(dual.size() == 3);
    CHECK(dual.indices[0] == IntVec{-1, -1});
    CHECK(dual.indices[1] == IntVec{0, 0});
    CHECK(dual.indices[2] == IntVec{1, 1});
  }
  SUBCASE("negation symmetry and lexicographic order") {
    const IndexSet dual = enumerate_dual(GeneratingVector(7, {1, 3, 5}), 4);
    std::map<IntVec, bool> members;
    for (const auto& h : dual.indices) members[h] = true;
    for (const auto& h : dual.indices) {
      IntVec neg(h);
      for (int& v : neg) v = -v;
      CHECK(members.count(neg) == 1);
    }
    for (std::size_t i = 1; i < dual.size(); ++i) CHECK(dual.indices[i - 1] < dual.indices[i]);
  }
}

TEST_CASE("character sums match dual membership") {
  CounterRng rng(5);
  for (long long n : {3LL, 8LL, 12LL}) {
    const GeneratingVector gen(
        n, {1, static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(n)))});
    const PointSet pts = lattice_points(gen);
    for (int h1 = -5; h1 <= 5; ++h1) {
      for (int h2 = -5; h2 <= 5; ++h2) {
        const IntVec h{h1, h2};
        std::complex<double> s = 0.0;
        for (const auto& t : pts.points)
          s += std::exp(
              std::complex<double>(0.0, 2.0 * std::numbers::pi * (h1 * t[0] + h2 * t[1])));
        s /= static_cast<double>(n);
        const double expected = in_dual(h, gen) ? 1.0 : 0.0;
        CHECK(std::abs(s - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("points form a group under addition mod 1") {
  const GeneratingVector gen(8, {1, 5});
  const PointSet pts = lattice_points(gen);
  for (long long a = 1; a <= 8; ++a) {
    for (long long b = 1; b <= 8; ++b) {
      long long c = (a + b) % 8;
      if (c == 0) c = 8;
      for (std::size_t j = 0; j < 2; ++j) {
        double s = pts.points[static_cast<std::size_t>(a - 1)][j] +
                   pts.points[static_cast<std::size_t>(b - 1)][j];
        if (s >= 1.0) s -= 1.0;
        CHECK(s == doctest::Approx(pts.points[static_cast<std::size_t>(c - 1)][j]).epsilon(1e-14));
      }
    }
  }
}

TEST_SUITE_END();
