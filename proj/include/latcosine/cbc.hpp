#pragma once

#include <span>
#include <vector>

#include "latcosine/lattice.hpp"
#include "latcosine/spaces.hpp"

namespace latcosine {

enum class CbcCriterion { korobov_integration, korobov_integration_halved, approximation_E };
enum class CbcEngine { plain, fast };

struct CbcConfig {
  long long n;  // prime
  int d;
  SpaceParams params;
  CbcCriterion criterion = CbcCriterion::korobov_integration;
  CbcEngine engine = CbcEngine::fast;
  double M = 0.0;      // approximation_E only
  double kappa = 1.1;  // approximation_E feasibility: n >= kappa M^(1/(2 alpha)), kappa > 1
  long series_truncation = 100000;
};

struct CbcResult {
  GeneratingVector gen;
  std::vector<double> criterion_values;  // criterion after each component
  std::vector<double> elapsed_seconds;   // per-component timings
  CbcEngine engine;
};

bool is_prime(long long n);

/// Smallest primitive root modulo a prime p >= 3.
long long primitive_root_mod_prime(long long p);

/// Greedy component-by-component search: for s = 1..d the component z_s
/// minimizes the criterion with the earlier components frozen, ties broken
/// by the smallest candidate.  The plain and fast engines return identical
/// vectors: the fast engine ranks candidates with an FFT over the
/// multiplicative group (Rader ordering by a primitive root) and then
/// re-evaluates the few front-runners exactly, in the plain engine's
/// summation order.
CbcResult cbc_construct(const CbcConfig& cfg);

/// Criterion values of all n-1 candidates for component s = frozen_z.size()+1.
/// The plain engine evaluates the exact per-point product form in O(n^2); the
/// fast engine returns the FFT-computed values (round-off level differences).
std::vector<double> korobov_criterion_all_candidates(const SpaceParams& params, long long n,
                                                     std::span<const long long> frozen_z,
                                                     bool halve_weights, CbcEngine engine,
                                                     long series_truncation = 100000);

/// Truncated approximation search criterion
/// sum_{k in H~_M} sum_{0 != h in dual, |h_j| <= box_bound} 1 / r(h + k),
/// with a bound on the discarded inner tails attached when requested.
double approximation_criterion(const SpaceParams& params, const GeneratingVector& gen,
                               double M, int box_bound, double* truncation_bound = nullptr);

/// Same quantity without dual truncation, via the exact character-sum
/// identity; requires a closed-form smoothness (alpha in {1,2,3}).
double approximation_criterion_exact(const SpaceParams& params, const GeneratingVector& gen,
                                     double M);

}  // namespace latcosine
