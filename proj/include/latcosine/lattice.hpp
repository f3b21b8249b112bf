#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latcosine/index_set.hpp"

namespace latcosine {

/// Rank-1 lattice description: n points and a generating vector with
/// components reduced mod n.
struct GeneratingVector {
  long long n;
  std::vector<long long> z;

  GeneratingVector(long long n_, std::vector<long long> z_);
  int dim() const { return static_cast<int>(z.size()); }
};

/// Componentwise shift in [0, 1)^d.
struct Shift {
  std::vector<double> delta;
  explicit Shift(std::vector<double> d);
};

enum class PointKind { plain, shifted, tented, shifted_tented };

/// Ordered point multiset in [0, 1]^d; collisions after tenting are kept so
/// that the cubature weights stay 1/n each.
struct PointSet {
  std::vector<std::vector<double>> points;
  PointKind kind = PointKind::plain;

  long long size() const { return static_cast<long long>(points.size()); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

/// {i z / n mod 1 : i = 1..n} in index order; point i = n is the origin.
/// i z_j mod n is carried in integer arithmetic, so coordinates are exact
/// multiples of 1/n.
PointSet lattice_points(const GeneratingVector& gen);

/// psi(x) = 1 - |2x - 1| for x in [0, 1].
double tent(double x);

/// Shift (mod 1) first, then optionally tent-transform, preserving order.
/// Input must be a plain point set.
PointSet transform_points(const PointSet& ps, const std::optional<Shift>& shift,
                          bool apply_tent);

/// h . z == 0 (mod n), accumulated mod n so overflow cannot occur.
bool in_dual(std::span<const int> h, const GeneratingVector& gen);

/// All dual vectors with |h_j| <= box_bound, lexicographically ordered.
IndexSet enumerate_dual(const GeneratingVector& gen, int box_bound);

/// Streaming form of enumerate_dual for boxes too large to materialize.
/// Visits dual vectors in the same lexicographic order.
void for_each_dual(const GeneratingVector& gen, int box_bound,
                   const std::function<void(std::span<const int>)>& fn);

}  // namespace latcosine
