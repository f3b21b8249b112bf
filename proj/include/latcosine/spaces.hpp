#pragma once

#include <span>
#include <vector>

namespace latcosine {

/// Parameters of a weighted space: smoothness alpha > 1/2 and product
/// weights 1 >= gamma_1 >= gamma_2 >= ... > 0, one weight per coordinate.
struct SpaceParams {
  double alpha;
  std::vector<double> gamma;

  SpaceParams(double alpha_, std::vector<double> gamma_);

  int dim() const { return static_cast<int>(gamma.size()); }

  /// Same smoothness with every weight halved.
  SpaceParams halved() const;

  static SpaceParams all_ones(double alpha, int d);

  /// gamma_j = c * j^(-eta) with c <= 1, eta >= 0.
  static SpaceParams power_law(double alpha, int d, double c, double eta);
};

/// r_{alpha,gamma}(k) = prod_j (1 if k_j == 0, else |k_j|^(2 alpha) / gamma_j).
/// Sign-invariant and >= 1 for admissible weights.
double r_weight(const SpaceParams& params, std::span<const int> k);

/// Number of nonzero components |k|_0.
int nonzero_count(std::span<const int> k);

/// phi_k(x) = sqrt(2)^{|k|_0} prod_j cos(pi k_j x_j).
double cosine_basis(std::span<const int> k, std::span<const double> x);

/// A truncated series value together with a bound on the discarded tail.
struct SeriesValue {
  double value;
  double tail_bound;  // 0 when the value is exact
};

/// True when S_alpha has an exact Bernoulli closed form (alpha in {1,2,3}).
bool has_closed_form_series(double alpha);

/// S_alpha(x) = sum_{h>=1} cos(2 pi h x) / h^(2 alpha) for alpha > 1/2.
/// Exact for alpha in {1,2,3}; otherwise the series is truncated at kmax and
/// the tail bound zeta(2 alpha) - sum_{h<=kmax} h^(-2 alpha) is attached.
SeriesValue one_dim_series(double alpha, double x, long kmax = 1000000);

/// Riemann zeta for s > 1.
double zeta(double s);

enum class Space { cosine, korobov, tented_cosine, shift_invariant_tented };

struct KernelSpec {
  Space space;
  SpaceParams params;
  long series_truncation = 100000;
  double tolerance = 1e-6;
};

struct KernelValue {
  double value;
  double truncation_bound;
};

/// Reproducing kernel of the selected space at (x, y).  The cosine kernel is
/// reduced to one-dimensional series via cos A cos B = (cos(A-B)+cos(A+B))/2,
/// the tented variant evaluates the cosine kernel at tent-transformed
/// arguments, and the shift-invariant tented kernel is the Korobov kernel
/// with halved weights.  Bitwise symmetric in (x, y).  Throws
/// numerical_contract_error when the series tail exceeds spec.tolerance.
KernelValue kernel_eval(const KernelSpec& spec, std::span<const double> x,
                        std::span<const double> y);

/// Unanchored Sobolev kernel of dominating mixed smoothness 1,
/// prod_j (1 + gamma_j B1(x_j) B1(y_j) + gamma_j B2(|x_j - y_j|) / 2).
/// Requires params.alpha == 1.
double sobolev_kernel_eval(const SpaceParams& params, std::span<const double> x,
                           std::span<const double> y);

}  // namespace latcosine
