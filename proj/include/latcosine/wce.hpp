#pragma once

#include "latcosine/lattice.hpp"
#include "latcosine/spaces.hpp"

namespace latcosine {

enum class WceMethod { kernel_form, dual_sum, closed_form };

/// Squared worst-case integration error with its computation route and the
/// truncation bound still unaccounted for (0 when exact).  Tiny negative
/// round-off below 1e-12 is clamped to zero and flagged.
struct WceReport {
  double squared_error;
  WceMethod method;
  double truncation_bound;
  bool clamped = false;
};

/// Default dual-lattice truncation box, max(32, 4n).
int default_box_bound(long long n);

/// Generic kernel quadratic form with equal weights 1/n.  All four kernels
/// here integrate to one in each argument, so the squared error reduces to
/// -1 + (1/n^2) sum_{i,i'} K(t_i, t_{i'}).
WceReport wce_kernel_form(const KernelSpec& spec, const PointSet& ps);

/// Korobov-space error of the lattice rule: sum over nonzero dual vectors in
/// the box [-H, H]^d of 1 / r(h), with the box tail bound attached.
WceReport wce_korobov_dual(const SpaceParams& params, const GeneratingVector& gen,
                           int box_bound);

/// Cosine-space error of the tent-transformed rule: the Korobov dual sum with
/// the per-index factor 2^-d |{sigma : sigma(k) in dual}|.  The 2^d sign loop
/// caps d at 20.
WceReport wce_cosine_tented(const SpaceParams& params, const GeneratingVector& gen,
                            int box_bound);

/// Mean squared error over uniform shifts of the shifted-then-tented rule.
/// Equals the Korobov error with halved weights; computed both as that dual
/// sum and as the shift-invariant kernel form, cross-checked against each
/// other, returning the route with the smaller truncation bound.
/// box_bound 0 selects the default.
WceReport wce_rms_shifted(const SpaceParams& params, const GeneratingVector& gen,
                          int box_bound = 0);

/// Component-by-component guarantee ((prod_j (1 + c zeta(2 alpha lambda)
/// gamma_j^lambda) - 1) / (n - 1))^(1/(2 lambda)) with c = 2, or c =
/// 2^(1-lambda) for the shifted variant.  Bounds the error, not its square.
double cbc_error_bound(const SpaceParams& params, long long n, double lambda,
                       bool halve_weights);

/// Exact closed form of the Korobov-space squared error of a lattice rule,
/// -1 + (1/n) sum_i prod_j (1 + 2 gamma_j S_alpha({i z_j / n})), O(n d) after
/// tabulation.  Exact for alpha in {1,2,3}.
WceReport wce_korobov_lattice(const SpaceParams& params, const GeneratingVector& gen,
                              long kmax = 100000);

/// Cosine-space squared error of the tent-transformed rule through the kernel
/// quadratic form on the lattice structure, O(n^2 d) with table lookups.
WceReport wce_tented_cosine_lattice(const SpaceParams& params, const GeneratingVector& gen,
                                    long kmax = 100000);

}  // namespace latcosine
