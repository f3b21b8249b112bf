#pragma once

#include "latcosine/index_set.hpp"
#include "latcosine/spaces.hpp"

namespace latcosine {

/// Weighted hyperbolic cross { k : r_{alpha,gamma}(k) <= M } over Z_+^d
/// (signed_set = false) or Z^d (signed_set = true), for M >= 1.
/// Depth-first enumeration with per-coordinate radius (gamma_j * budget)^(1/(2 alpha));
/// every emitted index passes the membership test with a relative slack of
/// 1e-12.  Output is lexicographically sorted.  Throws when the set would
/// exceed 1e8 indices.
IndexSet enumerate_H(const SpaceParams& params, double M, bool signed_set);

/// Bound |H~_M| <= M^q prod_j (1 + 2 zeta(2 alpha q) gamma_j^q), q > 1/(2 alpha).
double cardinality_bound(const SpaceParams& params, double M, double q);

}  // namespace latcosine
