#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "latcosine/hypercross.hpp"

using namespace latcosine;

TEST_SUITE_BEGIN("hypercross");

TEST_CASE("one-dimensional crosses") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  const IndexSet us = enumerate_H(p, 4.0, false);
  REQUIRE(us.size() == 3);
  CHECK(us.indices[0] == IntVec{0});
  CHECK(us.indices[1] == IntVec{1});
  CHECK(us.indices[2] == IntVec{2});

  const IndexSet sg = enumerate_H(p, 4.0, true);
  REQUIRE(sg.size() == 5);
  CHECK(sg.indices.front() == IntVec{-2});
  CHECK(sg.indices.back() == IntVec{2});

  CHECK_THROWS_AS(enumerate_H(p, 0.5, false), std::invalid_argument);
}

TEST_CASE("two-dimensional cross, M = 4") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 2);
  const IndexSet us = enumerate_H(p, 4.0, false);
  // exhaustive scan over {0..2}^2: (1,2) has r = 4 <= 4, (2,2) has r = 16
  const std::vector<IntVec> expected{{0, 0}, {0, 1}, {0, 2}, {1, 0},
                                     {1, 1}, {1, 2}, {2, 0}, {2, 1}};
  CHECK(us.indices == expected);
}

TEST_CASE("membership matches an exhaustive box scan") {
  for (int d = 1; d <= 3; ++d) {
    const SpaceParams p = SpaceParams::power_law(1.0, d, 1.0, 1.0);
    for (double M : {1.0, 7.0, 30.0, 100.0}) {
      const IndexSet cross = enumerate_H(p, M, true);
      std::map<IntVec, bool> members;
      for (const auto& k : cross.indices) {
        CHECK(r_weight(p, k) <= M * (1.0 + 1e-9));
        members[k] = true;
      }
      const int B = static_cast<int>(std::floor(std::sqrt(M))) + 1;
      IntVec k(static_cast<std::size_t>(d), -B);
      while (true) {
        const bool expected = r_weight(p, k) <= M;
        CHECK(expected == (members.count(k) > 0));
        int j = d - 1;
        while (j >= 0 && k[static_cast<std::size_t>(j)] == B) {
          k[static_cast<std::size_t>(j)] = -B;
          --j;
        }
        if (j < 0) break;
        ++k[static_cast<std::size_t>(j)];
      }
    }
  }
}

TEST_CASE("signed cardinality counts sign assignments of the unsigned cross") {
  for (int d = 1; d <= 3; ++d) {
    const SpaceParams p = SpaceParams::power_law(1.0, d, 1.0, 0.5);
    for (double M : {1.0, 4.0, 25.0}) {
      const IndexSet us = enumerate_H(p, M, false);
      const IndexSet sg = enumerate_H(p, M, true);
      double expected = 0.0;
      for (const auto& k : us.indices) expected += std::pow(2.0, nonzero_count(k));
      CHECK(static_cast<double>(sg.size()) == expected);
    }
  }
}

TEST_CASE("output is sorted and duplicate-free") {
  const SpaceParams p = SpaceParams::power_law(2.0, 3, 1.0, 2.0);
  const IndexSet cross = enumerate_H(p, 60.0, true);
  for (std::size_t i = 1; i < cross.size(); ++i) CHECK(cross.indices[i - 1] < cross.indices[i]);
}

TEST_CASE("nesting in M") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 2);
  const IndexSet small = enumerate_H(p, 6.0, false);
  const IndexSet big = enumerate_H(p, 14.0, false);
  for (const auto& k : small.indices)
    CHECK(std::binary_search(big.indices.begin(), big.indices.end(), k));
}

TEST_CASE("cardinality bound") {
  const SpaceParams p = SpaceParams::all_ones(1.0, 1);
  const double b = cardinality_bound(p, 4.0, 1.0);
  CHECK(b == doctest::Approx(4.0 * (1.0 + 2.0 * zeta(2.0))).epsilon(1e-14));
  CHECK(b >= 5.0);  // |H~_4| = 5 in one dimension

  for (int d = 1; d <= 3; ++d) {
    const SpaceParams pp = SpaceParams::power_law(1.0, d, 1.0, 1.0);
    for (double M : {1.0, 16.0, 64.0}) {
      const double card = static_cast<double>(enumerate_H(pp, M, true).size());
      for (double q : {0.75, 1.0, 1.5}) CHECK(card <= cardinality_bound(pp, M, q));
    }
  }
  CHECK(cardinality_bound(p, 1.0, 1.0) >= 1.0);
  CHECK_THROWS_AS(cardinality_bound(p, 4.0, 0.5), std::invalid_argument);
}

TEST_SUITE_END();
