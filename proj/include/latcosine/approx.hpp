#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <utility>

#include "latcosine/lattice.hpp"
#include "latcosine/rng.hpp"
#include "latcosine/spaces.hpp"

namespace latcosine {

/// Sparse map from nonnegative frequency vectors to cosine coefficients.
struct CoefficientMap {
  std::map<IntVec, std::complex<double>> entries;
};

using ComplexFn = std::function<std::complex<double>(std::span<const double>)>;

/// Approximated coefficients over H_M together with the rule that produced
/// them; evaluate() reconstructs sum_{k in H_M} f_a(k) phi_k(x) directly.
struct ApproxResult {
  CoefficientMap coeffs;
  GeneratingVector gen;
  double M;

  std::complex<double> evaluate(std::span<const double> x) const;
};

/// Sample f at the tent-transformed lattice points and approximate every
/// cosine coefficient with k in H_M by the equal-weight rule
/// f_a(k) = (1/n) sum_t f(t) phi_k(t).
ApproxResult approximate(const ComplexFn& f, const GeneratingVector& gen,
                         const SpaceParams& params, double M);

/// Exact squared L2 error of the algorithm for an f with finitely many exact
/// cosine coefficients: truncation mass outside H_M plus the aliasing terms,
/// with aliases located by inverting sigma(h) + k over the support (no dual
/// truncation involved).
double exact_l2_error(const CoefficientMap& f_coeffs, const GeneratingVector& gen,
                      const SpaceParams& params, double M);

/// Tensor-trapezoid estimate of ||f - A(f)||^2 with quad_level subintervals
/// per axis; exact for cosine polynomials once quad_level exceeds half of
/// every frequency present.  d <= 3.
double empirical_l2_error(const ComplexFn& f, const ApproxResult& approx, int quad_level);

/// Worst-case bound 1/M + sum_{k in H_M} sum_{0 != h in dual} sum_sigma
/// 2^{|k|_0} / (2^d r(sigma(h) + k)) with the dual truncated to the box and
/// the discarded tail bounded on request.
double wce_upper_bound(const SpaceParams& params, const GeneratingVector& gen, double M,
                       int box_bound, double* truncation_bound = nullptr);

/// (cosine-side sign-pattern triple sum, Korobov-side double sum over H~_M),
/// computed by independent code paths over the same dual box.
std::pair<double, double> aliasing_bound_equality(const SpaceParams& params,
                                                  const GeneratingVector& gen, double M,
                                                  int box_bound);

/// Closed-form bound 1/M + (M^(tau/lambda) / (n-1)^(1/lambda)) (1/mu)
/// prod_j [(1 + 2 zeta(2 alpha tau) gamma_j^tau)
///         (1 + 2 (1 + mu^lambda) zeta(2 alpha lambda) gamma_j^lambda)]^(1/lambda)
/// for tau > 1/(2 alpha), 1/(2 alpha) < lambda <= 1,
/// 0 < mu <= (1 - 1/kappa)^(2 alpha) with kappa = n M^(-1/(2 alpha)), n prime.
double approx_error_bound_formula(const SpaceParams& params, long long n, double M,
                                  double tau, double lambda, double mu);

/// sum_k |f_hat(k)|^2 r(k).
double norm_sq(const SpaceParams& params, const CoefficientMap& coeffs);

/// Cosine polynomial as an evaluable function.
ComplexFn to_function(const CoefficientMap& coeffs);

/// Random real cosine polynomial supported on `terms` indices drawn from
/// H_{support_M}, scaled to the unit ball of the space.
CoefficientMap random_cosine_polynomial(const SpaceParams& params, double support_M,
                                        int terms, CounterRng& rng);

/// Kernel representer K(., y) truncated to H_{support_M} and scaled to the
/// unit ball: coefficients phi_k(y) / r(k).
CoefficientMap kernel_representer(const SpaceParams& params, std::span<const double> y,
                                  double support_M);

}  // namespace latcosine
