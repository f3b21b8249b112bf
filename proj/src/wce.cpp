#include "latcosine/wce.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"
#include "latcosine/errors.hpp"

namespace latcosine {

namespace {

using detail::Kahan;

WceReport finish(double sq, WceMethod method, double bound) {
  WceReport r{sq, method, bound, false};
  if (sq < 0.0) {
    if (sq < -std::max(1e-12, bound))
      throw numerical_contract_error("worst-case error: squared error below clamp tolerance");
    r.squared_error = 0.0;
    r.clamped = true;
  }
  return r;
}

// Mass of 1/r over Z^d outside the box [-H, H]^d.
double box_tail_bound(const SpaceParams& params, int H) {
  const double two_alpha = 2.0 * params.alpha;
  double partial = 0.0;
  for (int h = 1; h <= H; ++h) partial += std::pow(static_cast<double>(h), -two_alpha);
  const double full_term = zeta(two_alpha);
  double full = 1.0, part = 1.0;
  for (double g : params.gamma) {
    full *= 1.0 + 2.0 * g * full_term;
    part *= 1.0 + 2.0 * g * partial;
  }
  double b = full - part;
  return b < 0.0 ? 0.0 : b;
}

}  // namespace

int default_box_bound(long long n) {
  long long h = 4 * n;
  if (h < 32) h = 32;
  return static_cast<int>(h);
}

WceReport wce_kernel_form(const KernelSpec& spec, const PointSet& ps) {
  if (ps.dim() != spec.params.dim())
    throw std::invalid_argument("wce_kernel_form: dimension mismatch");
  const long long n = ps.size();
  if (n < 1) throw std::invalid_argument("wce_kernel_form: empty point set");

  Kahan acc;
  double bound = 0.0;
  for (long long i = 0; i < n; ++i) {
    for (long long j = i; j < n; ++j) {
      KernelValue kv = kernel_eval(spec, ps.points[static_cast<std::size_t>(i)],
                                   ps.points[static_cast<std::size_t>(j)]);
      const double w = (i == j) ? 1.0 : 2.0;  // kernel is bitwise symmetric
      acc.add(w * kv.value);
      bound += w * kv.truncation_bound;
    }
  }
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return finish(acc.sum / nn - 1.0, WceMethod::kernel_form, bound / nn);
}

WceReport wce_korobov_dual(const SpaceParams& params, const GeneratingVector& gen,
                           int box_bound) {
  if (params.dim() != gen.dim())
    throw std::invalid_argument("wce_korobov_dual: dimension mismatch");
  Kahan acc;
  for_each_dual(gen, box_bound, [&](std::span<const int> h) {
    if (nonzero_count(h) == 0) return;
    acc.add(1.0 / r_weight(params, h));
  });
  return finish(acc.sum, WceMethod::dual_sum, box_tail_bound(params, box_bound));
}

WceReport wce_cosine_tented(const SpaceParams& params, const GeneratingVector& gen,
                            int box_bound) {
  const int d = gen.dim();
  if (params.dim() != d) throw std::invalid_argument("wce_cosine_tented: dimension mismatch");
  if (d > 20) throw std::invalid_argument("wce_cosine_tented: 2^d sign loop capped at d = 20");
  const long long n = gen.n;
  const unsigned combos = 1u << d;

  Kahan acc;
  std::vector<long long> m(static_cast<std::size_t>(d));
  for_each_dual(gen, box_bound, [&](std::span<const int> h) {
    if (nonzero_count(h) == 0) return;
    for (int j = 0; j < d; ++j) {
      long long v = (static_cast<long long>(h[static_cast<std::size_t>(j)]) %
                     n) * gen.z[static_cast<std::size_t>(j)] % n;
      if (v < 0) v += n;
      m[static_cast<std::size_t>(j)] = v;
    }
    unsigned hits = 0;
    for (unsigned mask = 0; mask < combos; ++mask) {
      long long s = 0;
      for (int j = 0; j < d; ++j) {
        const long long mj = m[static_cast<std::size_t>(j)];
        s += (mask >> j) & 1u ? (mj == 0 ? 0 : n - mj) : mj;
      }
      if (s % n == 0) ++hits;
    }
    acc.add(static_cast<double>(hits) / static_cast<double>(combos) / r_weight(params, h));
  });
  return finish(acc.sum, WceMethod::dual_sum, box_tail_bound(params, box_bound));
}

WceReport wce_rms_shifted(const SpaceParams& params, const GeneratingVector& gen,
                          int box_bound) {
  if (box_bound == 0) box_bound = default_box_bound(gen.n);
  WceReport dual = wce_korobov_dual(params.halved(), gen, box_bound);

  KernelSpec spec{Space::shift_invariant_tented, params, 100000,
                  std::numeric_limits<double>::infinity()};
  WceReport kern = wce_kernel_form(spec, lattice_points(gen));

  const double tol = dual.truncation_bound + kern.truncation_bound + 1e-12;
  if (std::fabs(dual.squared_error - kern.squared_error) > tol)
    throw numerical_contract_error("wce_rms_shifted: dual sum and kernel form disagree");
  return kern.truncation_bound <= dual.truncation_bound ? kern : dual;
}

double cbc_error_bound(const SpaceParams& params, long long n, double lambda,
                       bool halve_weights) {
  if (n < 2) throw std::invalid_argument("cbc_error_bound: n >= 2");
  if (!(lambda > 1.0 / (2.0 * params.alpha)) || lambda > 1.0)
    throw std::invalid_argument("cbc_error_bound: need 1/(2 alpha) < lambda <= 1");
  const double c = halve_weights ? std::pow(2.0, 1.0 - lambda) : 2.0;
  const double zl = zeta(2.0 * params.alpha * lambda);
  double prod = 1.0;
  for (double g : params.gamma) prod *= 1.0 + c * zl * std::pow(g, lambda);
  return std::pow((prod - 1.0) / static_cast<double>(n - 1), 1.0 / (2.0 * lambda));
}

WceReport wce_korobov_lattice(const SpaceParams& params, const GeneratingVector& gen,
                              long kmax) {
  const int d = gen.dim();
  if (params.dim() != d)
    throw std::invalid_argument("wce_korobov_lattice: dimension mismatch");
  const long long n = gen.n;

  double bound_lo = 1.0, bound_hi = 1.0;
  std::vector<std::vector<double>> w(static_cast<std::size_t>(d));
  std::vector<double> wmax(static_cast<std::size_t>(d), 0.0);
  for (int j = 0; j < d; ++j) {
    double tb = 0.0;
    w[static_cast<std::size_t>(j)] =
        detail::omega_table(params.alpha, params.gamma[static_cast<std::size_t>(j)], n, kmax, &tb);
    double mx = 0.0;
    for (double v : w[static_cast<std::size_t>(j)]) mx = std::max(mx, std::fabs(v));
    bound_lo *= mx;
    bound_hi *= mx + tb;
  }

  Kahan acc;
  for (long long i = 1; i <= n; ++i) {
    double prod = 1.0;
    for (int j = 0; j < d; ++j)
      prod *= w[static_cast<std::size_t>(j)][static_cast<std::size_t>(
          (i * gen.z[static_cast<std::size_t>(j)]) % n)];
    acc.add(prod);
  }
  return finish(acc.sum / static_cast<double>(n) - 1.0, WceMethod::closed_form,
                bound_hi - bound_lo);
}

WceReport wce_tented_cosine_lattice(const SpaceParams& params, const GeneratingVector& gen,
                                    long kmax) {
  const int d = gen.dim();
  if (params.dim() != d)
    throw std::invalid_argument("wce_tented_cosine_lattice: dimension mismatch");
  const long long n = gen.n;

  double table_tail = 0.0;
  std::vector<double> s2;
  {
    double tb = 0.0;
    s2 = detail::half_grid_series_table(params.alpha, n, kmax, &tb);
    table_tail = tb;
  }

  // Tent numerators: psi(q/n) = (n - |2q - n|) / n per coordinate.
  std::vector<std::vector<long long>> p(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i) {
    auto& row = p[static_cast<std::size_t>(i - 1)];
    row.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const long long q = (i * gen.z[static_cast<std::size_t>(j)]) % n;
      row[static_cast<std::size_t>(j)] = n - std::llabs(2 * q - n);
    }
  }

  double factor_mag = 1.0, factor_mag_tail = 1.0;
  for (int j = 0; j < d; ++j) {
    double smax = 0.0;
    for (double v : s2) smax = std::max(smax, std::fabs(v));
    const double g = params.gamma[static_cast<std::size_t>(j)];
    factor_mag *= 1.0 + 2.0 * g * smax;
    factor_mag_tail *= 1.0 + 2.0 * g * (smax + table_tail);
  }

  Kahan acc;
  for (long long a = 0; a < n; ++a) {
    const auto& pa = p[static_cast<std::size_t>(a)];
    for (long long b = a; b < n; ++b) {
      const auto& pb = p[static_cast<std::size_t>(b)];
      double prod = 1.0;
      for (int j = 0; j < d; ++j) {
        const long long pj = pa[static_cast<std::size_t>(j)];
        const long long qj = pb[static_cast<std::size_t>(j)];
        const double sd = s2[static_cast<std::size_t>(std::llabs(pj - qj))];
        const double ss = s2[static_cast<std::size_t>(pj + qj)];
        prod *= 1.0 + params.gamma[static_cast<std::size_t>(j)] * (sd + ss);
      }
      acc.add(a == b ? prod : 2.0 * prod);
    }
  }
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return finish(acc.sum / nn - 1.0, WceMethod::closed_form, factor_mag_tail - factor_mag);
}

}  // namespace latcosine
