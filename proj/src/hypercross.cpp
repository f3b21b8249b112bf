#include "latcosine/hypercross.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace latcosine {

namespace {

constexpr double kSlack = 1e-12;
constexpr std::size_t kMaxIndices = 100000000;  // 1e8 hard cap

double coord_factor(double t, double two_alpha, double gamma) {
  double p;
  if (two_alpha == std::floor(two_alpha)) {
    p = 1.0;
    for (int i = 0; i < static_cast<int>(two_alpha); ++i) p *= t;
  } else {
    p = std::pow(t, two_alpha);
  }
  return p / gamma;
}

// Largest t with t^(2 alpha) / gamma <= budget, 0 when even t = 1 fails.
// The pow estimate is corrected by direct comparison to absorb rounding.
int coord_radius(double budget, double two_alpha, double gamma) {
  if (budget <= 0.0) return 0;
  int t = static_cast<int>(std::floor(std::pow(budget * gamma, 1.0 / two_alpha)));
  if (t < 0) t = 0;
  while (t > 0 && coord_factor(t, two_alpha, gamma) > budget * (1.0 + kSlack)) --t;
  while (coord_factor(t + 1, two_alpha, gamma) <= budget * (1.0 + kSlack)) ++t;
  return t;
}

}  // namespace

IndexSet enumerate_H(const SpaceParams& params, double M, bool signed_set) {
  if (!(M >= 1.0)) throw std::invalid_argument("enumerate_H: M >= 1 required");
  const int d = params.dim();
  const double two_alpha = 2.0 * params.alpha;

  IndexSet out;
  out.M = M;
  out.signed_set = signed_set;

  IntVec k(static_cast<std::size_t>(d), 0);
  // r_partial is the product of the factors fixed so far; each nonzero
  // coordinate multiplies it by at least 1/gamma_1 >= 1, which is what makes
  // the radius pruning output-sensitive.
  std::function<void(int, double)> rec = [&](int j, double r_partial) {
    if (j == d) {
      if (out.indices.size() >= kMaxIndices)
        throw std::length_error("enumerate_H: index set exceeds 1e8 entries");
      out.indices.push_back(k);
      return;
    }
    const double g = params.gamma[static_cast<std::size_t>(j)];
    const double budget = M / r_partial;
    const int radius = coord_radius(budget, two_alpha, g);
    const int lo = signed_set ? -radius : 0;
    for (int t = lo; t <= radius; ++t) {
      k[static_cast<std::size_t>(j)] = t;
      const double f = t == 0 ? 1.0 : coord_factor(std::abs(t), two_alpha, g);
      rec(j + 1, r_partial * f);
    }
    k[static_cast<std::size_t>(j)] = 0;
  };
  rec(0, 1.0);
  return out;
}

double cardinality_bound(const SpaceParams& params, double M, double q) {
  if (!(q > 1.0 / (2.0 * params.alpha)))
    throw std::invalid_argument("cardinality_bound: need q > 1/(2 alpha)");
  double prod = 1.0;
  for (double g : params.gamma) prod *= 1.0 + 2.0 * zeta(2.0 * params.alpha * q) * std::pow(g, q);
  return std::pow(M, q) * prod;
}

}  // namespace latcosine
