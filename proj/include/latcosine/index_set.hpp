#pragma once

#include <cstddef>
#include <vector>

namespace latcosine {

/// Integer frequency vector; components are kept within 32 bits.
using IntVec = std::vector<int>;

/// Finite set of frequency vectors in lexicographic order, duplicate-free.
/// For hyperbolic crosses, M records the membership bound r(k) <= M and
/// signed_set distinguishes Z^d from the nonnegative hyperoctant Z_+^d.
struct IndexSet {
  std::vector<IntVec> indices;
  double M = 0.0;
  bool signed_set = true;

  std::size_t size() const { return indices.size(); }
  int dim() const { return indices.empty() ? 0 : static_cast<int>(indices.front().size()); }
};

}  // namespace latcosine
