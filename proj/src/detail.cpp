#include "detail.hpp"

#include <cmath>
#include <numbers>

namespace latcosine::detail {

std::vector<double> omega_table(double alpha, double gamma, long long n, long kmax,
                                double* tail_bound) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double tb = 0.0;
  for (long long q = 0; q <= n / 2; ++q) {
    SeriesValue s = one_dim_series(alpha, static_cast<double>(q) / static_cast<double>(n), kmax);
    w[static_cast<std::size_t>(q)] = 1.0 + 2.0 * gamma * s.value;
    tb = std::max(tb, 2.0 * gamma * s.tail_bound);
  }
  for (long long q = n / 2 + 1; q < n; ++q)
    w[static_cast<std::size_t>(q)] = w[static_cast<std::size_t>(n - q)];
  if (tail_bound) *tail_bound = tb;
  return w;
}

std::vector<double> half_grid_series_table(double alpha, long long n, long kmax,
                                           double* tail_bound) {
  std::vector<double> s(static_cast<std::size_t>(2 * n + 1));
  double tb = 0.0;
  for (long long r = 0; r <= n; ++r) {
    SeriesValue v =
        one_dim_series(alpha, static_cast<double>(r) / static_cast<double>(2 * n), kmax);
    s[static_cast<std::size_t>(r)] = v.value;
    tb = std::max(tb, v.tail_bound);
  }
  for (long long r = n + 1; r <= 2 * n; ++r)
    s[static_cast<std::size_t>(r)] = s[static_cast<std::size_t>(2 * n - r)];
  if (tail_bound) *tail_bound = tb;
  return s;
}

std::vector<double> cosine_table(long long n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (long long q = 0; q <= n / 2; ++q)
    t[static_cast<std::size_t>(q)] =
        std::cos(2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n));
  for (long long q = n / 2 + 1; q < n; ++q)
    t[static_cast<std::size_t>(q)] = t[static_cast<std::size_t>(n - q)];
  return t;
}

}  // namespace latcosine::detail
