#include "latcosine/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "detail.hpp"
#include "latcosine/cbc.hpp"
#include "latcosine/errors.hpp"
#include "latcosine/hypercross.hpp"

namespace latcosine {

namespace {

using detail::Kahan;

double sqrt2_pow(int e) { return std::pow(std::numbers::sqrt2, static_cast<double>(e)); }

// All sign assignments of the nonzero components of l.
void for_each_signing(const IntVec& l, const std::function<void(const IntVec&)>& fn) {
  std::vector<int> nz;
  for (std::size_t j = 0; j < l.size(); ++j)
    if (l[j] != 0) nz.push_back(static_cast<int>(j));
  IntVec w = l;
  const unsigned combos = 1u << nz.size();
  for (unsigned mask = 0; mask < combos; ++mask) {
    for (std::size_t b = 0; b < nz.size(); ++b)
      w[static_cast<std::size_t>(nz[b])] =
          ((mask >> b) & 1u) ? -l[static_cast<std::size_t>(nz[b])] : l[static_cast<std::size_t>(nz[b])];
    fn(w);
  }
}

}  // namespace

std::complex<double> ApproxResult::evaluate(std::span<const double> x) const {
  std::complex<double> v = 0.0;
  for (const auto& [k, c] : coeffs.entries) v += c * cosine_basis(k, x);
  return v;
}

ApproxResult approximate(const ComplexFn& f, const GeneratingVector& gen,
                         const SpaceParams& params, double M) {
  const int d = gen.dim();
  if (params.dim() < d) throw std::invalid_argument("approximate: not enough weights");
  const SpaceParams sp(params.alpha,
                       std::vector<double>(params.gamma.begin(), params.gamma.begin() + d));

  const PointSet pts = transform_points(lattice_points(gen), std::nullopt, /*apply_tent=*/true);
  const long long n = gen.n;
  std::vector<std::complex<double>> fv(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    fv[static_cast<std::size_t>(i)] = f(pts.points[static_cast<std::size_t>(i)]);

  const IndexSet cross = enumerate_H(sp, M, /*signed_set=*/false);
  ApproxResult out{CoefficientMap{}, gen, M};
  for (const IntVec& k : cross.indices) {
    std::complex<double> acc = 0.0;
    for (long long i = 0; i < n; ++i)
      acc += fv[static_cast<std::size_t>(i)] *
             cosine_basis(k, pts.points[static_cast<std::size_t>(i)]);
    out.coeffs.entries[k] = acc / static_cast<double>(n);
  }
  return out;
}

double exact_l2_error(const CoefficientMap& f_coeffs, const GeneratingVector& gen,
                      const SpaceParams& params, double M) {
  const int d = gen.dim();
  const SpaceParams sp(params.alpha,
                       std::vector<double>(params.gamma.begin(), params.gamma.begin() + d));
  for (const auto& [k, c] : f_coeffs.entries) {
    if (static_cast<int>(k.size()) != d)
      throw std::invalid_argument("exact_l2_error: coefficient dimension mismatch");
    for (int v : k)
      if (v < 0) throw std::invalid_argument("exact_l2_error: cosine indices are nonnegative");
    (void)c;
  }

  const IndexSet cross = enumerate_H(sp, M, /*signed_set=*/false);
  auto in_cross = [&](const IntVec& k) {
    return std::binary_search(cross.indices.begin(), cross.indices.end(), k);
  };

  Kahan truncation;
  for (const auto& [l, c] : f_coeffs.entries)
    if (!in_cross(l)) truncation.add(std::norm(c));

  const unsigned combos = 1u << d;
  Kahan aliasing;
  IntVec diff(static_cast<std::size_t>(d)), sdiff(static_cast<std::size_t>(d));
  for (const IntVec& k : cross.indices) {
    std::complex<double> alias = 0.0;
    const int k0 = nonzero_count(k);
    for (const auto& [l, c] : f_coeffs.entries) {
      if (c == std::complex<double>(0.0)) continue;
      const double scale = sqrt2_pow(k0 - nonzero_count(l)) / static_cast<double>(combos);
      for_each_signing(l, [&](const IntVec& w) {
        if (w == k) return;  // sigma(h) = 0 is excluded from the dual sum
        for (int j = 0; j < d; ++j)
          diff[static_cast<std::size_t>(j)] =
              w[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(j)];
        unsigned hits = 0;
        for (unsigned mask = 0; mask < combos; ++mask) {
          for (int j = 0; j < d; ++j)
            sdiff[static_cast<std::size_t>(j)] = ((mask >> j) & 1u)
                                                     ? -diff[static_cast<std::size_t>(j)]
                                                     : diff[static_cast<std::size_t>(j)];
          if (in_dual(sdiff, gen)) ++hits;
        }
        if (hits > 0) alias += c * scale * static_cast<double>(hits);
      });
    }
    aliasing.add(std::norm(alias));
  }
  return truncation.sum + aliasing.sum;
}

double empirical_l2_error(const ComplexFn& f, const ApproxResult& approx, int quad_level) {
  const int d = approx.gen.dim();
  if (d > 3) throw std::invalid_argument("empirical_l2_error: tensor grid limited to d <= 3");
  if (quad_level < 1) throw std::invalid_argument("empirical_l2_error: quad_level >= 1");
  const int m = quad_level;

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  Kahan acc;
  while (true) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      const int t = idx[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(j)] = static_cast<double>(t) / m;
      w *= (t == 0 || t == m) ? 0.5 / m : 1.0 / m;
    }
    acc.add(w * std::norm(f(x) - approx.evaluate(x)));
    int j = d - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == m) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
  }
  return acc.sum;
}

namespace {

// Cosine-side sign-pattern triple sum over H_M and the truncated dual.
double cosine_side_term(const SpaceParams& sp, const GeneratingVector& gen, double M,
                        int box_bound, double* truncation_bound) {
  const int d = gen.dim();
  const IndexSet cross = enumerate_H(sp, M, /*signed_set=*/false);
  const IndexSet dual = enumerate_dual(gen, box_bound);
  const unsigned combos = 1u << d;

  Kahan acc;
  IntVec w(static_cast<std::size_t>(d));
  double signed_count = 0.0;
  std::vector<int> kmax(static_cast<std::size_t>(d), 0);
  for (const IntVec& k : cross.indices) {
    const double pw = std::pow(2.0, nonzero_count(k));
    signed_count += pw;
    for (int j = 0; j < d; ++j)
      kmax[static_cast<std::size_t>(j)] =
          std::max(kmax[static_cast<std::size_t>(j)], std::abs(k[static_cast<std::size_t>(j)]));
    for (const IntVec& h : dual.indices) {
      if (nonzero_count(h) == 0) continue;
      for (unsigned mask = 0; mask < combos; ++mask) {
        for (int j = 0; j < d; ++j) {
          const int hj = ((mask >> j) & 1u) ? -h[static_cast<std::size_t>(j)]
                                            : h[static_cast<std::size_t>(j)];
          w[static_cast<std::size_t>(j)] = hj + k[static_cast<std::size_t>(j)];
        }
        acc.add(pw / (static_cast<double>(combos) * r_weight(sp, w)));
      }
    }
  }

  if (truncation_bound) {
    const double two_alpha = 2.0 * sp.alpha;
    double full = 1.0, part = 1.0;
    for (int j = 0; j < d; ++j) {
      const int Hj = box_bound - kmax[static_cast<std::size_t>(j)];
      if (Hj < 1) throw std::invalid_argument("wce_upper_bound: box bound too small for H_M");
      double partial = 0.0;
      for (int h = 1; h <= Hj; ++h) partial += std::pow(static_cast<double>(h), -two_alpha);
      const double g = sp.gamma[static_cast<std::size_t>(j)];
      full *= 1.0 + 2.0 * g * zeta(two_alpha);
      part *= 1.0 + 2.0 * g * partial;
    }
    *truncation_bound = std::max(0.0, full - part) * signed_count;
  }
  return acc.sum;
}

}  // namespace

double wce_upper_bound(const SpaceParams& params, const GeneratingVector& gen, double M,
                       int box_bound, double* truncation_bound) {
  const int d = gen.dim();
  const SpaceParams sp(params.alpha,
                       std::vector<double>(params.gamma.begin(), params.gamma.begin() + d));
  return 1.0 / M + cosine_side_term(sp, gen, M, box_bound, truncation_bound);
}

std::pair<double, double> aliasing_bound_equality(const SpaceParams& params,
                                                  const GeneratingVector& gen, double M,
                                                  int box_bound) {
  const int d = gen.dim();
  const SpaceParams sp(params.alpha,
                       std::vector<double>(params.gamma.begin(), params.gamma.begin() + d));
  const double lhs = cosine_side_term(sp, gen, M, box_bound, nullptr);
  const double rhs = approximation_criterion(sp, gen, M, box_bound, nullptr);
  return {lhs, rhs};
}

double approx_error_bound_formula(const SpaceParams& params, long long n, double M,
                                  double tau, double lambda, double mu) {
  const double alpha = params.alpha;
  if (!is_prime(n)) throw std::invalid_argument("approx_error_bound_formula: n must be prime");
  if (!(tau > 1.0 / (2.0 * alpha)))
    throw std::invalid_argument("approx_error_bound_formula: tau > 1/(2 alpha)");
  if (!(lambda > 1.0 / (2.0 * alpha)) || lambda > 1.0)
    throw std::invalid_argument("approx_error_bound_formula: 1/(2 alpha) < lambda <= 1");
  const double kappa = static_cast<double>(n) * std::pow(M, -1.0 / (2.0 * alpha));
  if (!(kappa > 1.0))
    throw std::invalid_argument("approx_error_bound_formula: n >= kappa M^(1/(2 alpha)) fails");
  const double mu_max = std::pow(1.0 - 1.0 / kappa, 2.0 * alpha);
  if (!(mu > 0.0) || mu > mu_max)
    throw std::invalid_argument("approx_error_bound_formula: 0 < mu <= (1 - 1/kappa)^(2 alpha)");

  double prod = 1.0;
  for (double g : params.gamma) {
    const double a = 1.0 + 2.0 * zeta(2.0 * alpha * tau) * std::pow(g, tau);
    const double b =
        1.0 + 2.0 * (1.0 + std::pow(mu, lambda)) * zeta(2.0 * alpha * lambda) * std::pow(g, lambda);
    prod *= std::pow(a * b, 1.0 / lambda);
  }
  return 1.0 / M + std::pow(M, tau / lambda) /
                       std::pow(static_cast<double>(n - 1), 1.0 / lambda) / mu * prod;
}

double norm_sq(const SpaceParams& params, const CoefficientMap& coeffs) {
  Kahan acc;
  for (const auto& [k, c] : coeffs.entries) acc.add(std::norm(c) * r_weight(params, k));
  return acc.sum;
}

ComplexFn to_function(const CoefficientMap& coeffs) {
  return [coeffs](std::span<const double> x) {
    std::complex<double> v = 0.0;
    for (const auto& [k, c] : coeffs.entries) v += c * cosine_basis(k, x);
    return v;
  };
}

CoefficientMap random_cosine_polynomial(const SpaceParams& params, double support_M,
                                        int terms, CounterRng& rng) {
  const IndexSet cross = enumerate_H(params, support_M, /*signed_set=*/false);
  if (terms < 1 || static_cast<std::size_t>(terms) > cross.size())
    throw std::invalid_argument("random_cosine_polynomial: bad term count");

  std::vector<std::size_t> pool(cross.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  CoefficientMap f;
  for (int t = 0; t < terms; ++t) {
    const std::size_t pick = static_cast<std::size_t>(rng.next_below(pool.size()));
    f.entries[cross.indices[pool[pick]]] = rng.uniform(-1.0, 1.0);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  const double nrm = std::sqrt(norm_sq(params, f));
  for (auto& [k, c] : f.entries) c /= nrm;
  return f;
}

CoefficientMap kernel_representer(const SpaceParams& params, std::span<const double> y,
                                  double support_M) {
  const IndexSet cross = enumerate_H(params, support_M, /*signed_set=*/false);
  CoefficientMap f;
  for (const IntVec& k : cross.indices)
    f.entries[k] = cosine_basis(k, y) / r_weight(params, k);
  const double nrm = std::sqrt(norm_sq(params, f));
  for (auto& [k, c] : f.entries) c /= nrm;
  return f;
}

}  // namespace latcosine
