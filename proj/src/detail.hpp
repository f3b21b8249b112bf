#pragma once

#include <vector>

#include "latcosine/spaces.hpp"

namespace latcosine::detail {

/// Compensated accumulator; keeps long reductions deterministic and tight.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

/// w[q] = 1 + 2 gamma S_alpha(q / n), mirrored so that w[q] == w[n - q]
/// bitwise.  The mirroring makes criterion values for candidates c and n - c
/// agree exactly, so ties resolve by index as intended.
std::vector<double> omega_table(double alpha, double gamma, long long n, long kmax,
                                double* tail_bound);

/// s[r] = S_alpha(r / (2n)) for r = 0..2n, mirrored about r = n.
std::vector<double> half_grid_series_table(double alpha, long long n, long kmax,
                                           double* tail_bound);

/// cos(2 pi q / n) for q = 0..n-1, mirrored about n/2.
std::vector<double> cosine_table(long long n);

}  // namespace latcosine::detail
