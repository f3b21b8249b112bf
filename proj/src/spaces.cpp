#include "latcosine/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latcosine/errors.hpp"
#include "latcosine/lattice.hpp"

namespace latcosine {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Even-degree Bernoulli polynomials on [0, 1].
double bernoulli_even(int degree, double t) {
  switch (degree) {
    case 2:
      return (t - 1.0) * t + 1.0 / 6.0;
    case 4:
      return ((t - 2.0) * t + 1.0) * t * t - 1.0 / 30.0;
    case 6:
      return ((((t - 3.0) * t + 2.5) * t * t) - 0.5) * t * t + 1.0 / 42.0;
    default:
      throw std::invalid_argument("bernoulli_even: degree not hard-coded");
  }
}

double frac(double x) {
  double f = x - std::floor(x);
  return f == 1.0 ? 0.0 : f;
}

}  // namespace

SpaceParams::SpaceParams(double alpha_, std::vector<double> gamma_)
    : alpha(alpha_), gamma(std::move(gamma_)) {
  if (!(alpha > 0.5)) throw std::invalid_argument("SpaceParams: alpha must exceed 1/2");
  if (gamma.empty()) throw std::invalid_argument("SpaceParams: at least one weight");
  double prev = 1.0;
  for (double g : gamma) {
    if (!(g > 0.0) || g > prev)
      throw std::invalid_argument("SpaceParams: weights must satisfy 1 >= g1 >= g2 >= ... > 0");
    prev = g;
  }
}

SpaceParams SpaceParams::halved() const {
  std::vector<double> g(gamma);
  for (double& v : g) v *= 0.5;
  return SpaceParams(alpha, std::move(g));
}

SpaceParams SpaceParams::all_ones(double alpha, int d) {
  return SpaceParams(alpha, std::vector<double>(static_cast<std::size_t>(d), 1.0));
}

SpaceParams SpaceParams::power_law(double alpha, int d, double c, double eta) {
  if (!(c > 0.0) || c > 1.0) throw std::invalid_argument("power_law: need 0 < c <= 1");
  if (eta < 0.0) throw std::invalid_argument("power_law: need eta >= 0");
  std::vector<double> g(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) g[j] = c * std::pow(static_cast<double>(j + 1), -eta);
  return SpaceParams(alpha, std::move(g));
}

double r_weight(const SpaceParams& params, std::span<const int> k) {
  if (static_cast<int>(k.size()) != params.dim())
    throw std::invalid_argument("r_weight: dimension mismatch");
  const double two_alpha = 2.0 * params.alpha;
  const bool integral = two_alpha == std::floor(two_alpha);
  double r = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    const double a = std::abs(static_cast<double>(k[j]));
    const double p = integral ? ipow(a, static_cast<int>(two_alpha)) : std::pow(a, two_alpha);
    r *= p / params.gamma[j];
  }
  return r;
}

int nonzero_count(std::span<const int> k) {
  int c = 0;
  for (int v : k)
    if (v != 0) ++c;
  return c;
}

double cosine_basis(std::span<const int> k, std::span<const double> x) {
  if (k.size() != x.size()) throw std::invalid_argument("cosine_basis: dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    v *= std::numbers::sqrt2 * std::cos(kPi * k[j] * x[j]);
  }
  return v;
}

bool has_closed_form_series(double alpha) {
  return alpha == 1.0 || alpha == 2.0 || alpha == 3.0;
}

double zeta(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: need s > 1");
  return std::riemann_zeta(s);
}

SeriesValue one_dim_series(double alpha, double x, long kmax) {
  if (!(alpha > 0.5)) throw std::invalid_argument("one_dim_series: alpha must exceed 1/2");
  const double t = frac(x);
  if (has_closed_form_series(alpha)) {
    const int a = static_cast<int>(alpha);
    // S_alpha(x) = (-1)^(alpha+1) (2 pi)^(2 alpha) / (2 (2 alpha)!) B_{2 alpha}(x)
    double scale;
    switch (a) {
      case 1: scale = kPi * kPi; break;
      case 2: scale = -ipow(kPi, 4) / 3.0; break;
      default: scale = 2.0 * ipow(kPi, 6) / 45.0; break;
    }
    return {scale * bernoulli_even(2 * a, t), 0.0};
  }
  if (kmax < 1) throw std::invalid_argument("one_dim_series: kmax >= 1");
  const double two_alpha = 2.0 * alpha;
  double sum = 0.0, partial = 0.0;
  for (long h = 1; h <= kmax; ++h) {
    const double w = std::pow(static_cast<double>(h), -two_alpha);
    sum += w * std::cos(2.0 * kPi * frac(static_cast<double>(h) * t));
    partial += w;
  }
  double tail = zeta(two_alpha) - partial;
  if (tail < 0.0) tail = 0.0;
  return {sum, tail};
}

namespace {

// One Korobov-kernel factor: 1 + 2 gamma S_alpha(|u|), u = x - y.
SeriesValue korobov_factor(double alpha, double gamma, double x, double y, long kmax) {
  SeriesValue s = one_dim_series(alpha, std::fabs(x - y), kmax);
  return {1.0 + 2.0 * gamma * s.value, 2.0 * gamma * s.tail_bound};
}

// One cosine-kernel factor via the product-to-sum split:
// 1 + gamma (S_alpha(|x - y| / 2) + S_alpha((x + y) / 2)).
SeriesValue cosine_factor(double alpha, double gamma, double x, double y, long kmax) {
  SeriesValue sd = one_dim_series(alpha, 0.5 * std::fabs(x - y), kmax);
  SeriesValue ss = one_dim_series(alpha, 0.5 * (x + y), kmax);
  return {1.0 + gamma * (sd.value + ss.value), gamma * (sd.tail_bound + ss.tail_bound)};
}

}  // namespace

KernelValue kernel_eval(const KernelSpec& spec, std::span<const double> x,
                        std::span<const double> y) {
  const SpaceParams& p = spec.params;
  if (static_cast<int>(x.size()) != p.dim() || x.size() != y.size())
    throw std::invalid_argument("kernel_eval: dimension mismatch");

  if (spec.space == Space::shift_invariant_tented) {
    KernelSpec halved{Space::korobov, p.halved(), spec.series_truncation, spec.tolerance};
    return kernel_eval(halved, x, y);
  }

  double value = 1.0;
  double mag = 1.0;       // product of |factor| + bound, for the error estimate
  double mag_exact = 1.0; // product of |factor|
  for (std::size_t j = 0; j < x.size(); ++j) {
    double xj = x[j], yj = y[j];
    if (spec.space == Space::tented_cosine) {
      xj = tent(xj);
      yj = tent(yj);
    }
    SeriesValue f = (spec.space == Space::korobov)
                        ? korobov_factor(p.alpha, p.gamma[j], xj, yj, spec.series_truncation)
                        : cosine_factor(p.alpha, p.gamma[j], xj, yj, spec.series_truncation);
    value *= f.value;
    mag *= std::fabs(f.value) + f.tail_bound;
    mag_exact *= std::fabs(f.value);
  }
  const double bound = mag - mag_exact;
  if (bound > spec.tolerance)
    throw numerical_contract_error("kernel_eval: series tail bound exceeds tolerance");
  return {value, bound};
}

double sobolev_kernel_eval(const SpaceParams& params, std::span<const double> x,
                           std::span<const double> y) {
  if (params.alpha != 1.0)
    throw std::invalid_argument("sobolev_kernel_eval: requires alpha == 1");
  if (static_cast<int>(x.size()) != params.dim() || x.size() != y.size())
    throw std::invalid_argument("sobolev_kernel_eval: dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double b1x = x[j] - 0.5;
    const double b1y = y[j] - 0.5;
    const double u = std::fabs(x[j] - y[j]);
    const double b2 = (u - 1.0) * u + 1.0 / 6.0;
    v *= 1.0 + params.gamma[j] * (b1x * b1y + 0.5 * b2);
  }
  return v;
}

}  // namespace latcosine
