#include "latcosine/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace latcosine {

GeneratingVector::GeneratingVector(long long n_, std::vector<long long> z_)
    : n(n_), z(std::move(z_)) {
  if (n < 1) throw std::invalid_argument("GeneratingVector: n >= 1");
  if (z.empty()) throw std::invalid_argument("GeneratingVector: d >= 1");
  for (long long& c : z) {
    c %= n;
    if (c < 0) c += n;
  }
}

Shift::Shift(std::vector<double> d) : delta(std::move(d)) {
  for (double v : delta)
    if (!(v >= 0.0) || v >= 1.0)
      throw std::invalid_argument("Shift: components must lie in [0, 1)");
}

PointSet lattice_points(const GeneratingVector& gen) {
  PointSet ps;
  ps.kind = PointKind::plain;
  ps.points.resize(static_cast<std::size_t>(gen.n));
  const int d = gen.dim();
  for (long long i = 1; i <= gen.n; ++i) {
    std::vector<double>& p = ps.points[static_cast<std::size_t>(i - 1)];
    p.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const long long q = (i * gen.z[static_cast<std::size_t>(j)]) % gen.n;
      p[static_cast<std::size_t>(j)] = static_cast<double>(q) / static_cast<double>(gen.n);
    }
  }
  return ps;
}

double tent(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("tent: x must lie in [0, 1]");
  return 1.0 - std::fabs(2.0 * x - 1.0);
}

PointSet transform_points(const PointSet& ps, const std::optional<Shift>& shift,
                          bool apply_tent) {
  if (ps.kind != PointKind::plain)
    throw std::invalid_argument("transform_points: input must be a plain point set");
  if (shift && static_cast<int>(shift->delta.size()) != ps.dim())
    throw std::invalid_argument("transform_points: shift dimension mismatch");

  PointSet out;
  out.points = ps.points;
  for (auto& p : out.points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      double v = p[j];
      if (shift) {
        v += shift->delta[j];
        if (v >= 1.0) v -= 1.0;
      }
      if (apply_tent) v = tent(v);
      p[j] = v;
    }
  }
  if (shift && apply_tent)
    out.kind = PointKind::shifted_tented;
  else if (shift)
    out.kind = PointKind::shifted;
  else if (apply_tent)
    out.kind = PointKind::tented;
  else
    out.kind = PointKind::plain;
  return out;
}

bool in_dual(std::span<const int> h, const GeneratingVector& gen) {
  if (static_cast<int>(h.size()) != gen.dim())
    throw std::invalid_argument("in_dual: dimension mismatch");
  long long acc = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    long long hj = h[j] % gen.n;
    if (hj < 0) hj += gen.n;
    acc = (acc + hj * gen.z[j]) % gen.n;
  }
  return acc == 0;
}

void for_each_dual(const GeneratingVector& gen, int box_bound,
                   const std::function<void(std::span<const int>)>& fn) {
  if (box_bound < 1) throw std::invalid_argument("for_each_dual: box_bound >= 1");
  const int d = gen.dim();
  const int H = box_bound;
  const long long n = gen.n;
  std::vector<int> h(static_cast<std::size_t>(d));
  std::vector<long long> step(gen.z);
  for (long long& s : step) s %= n;

  // Per level, walk h_level from -H to H keeping the partial inner product
  // mod n; only the residue ever enters arithmetic, so no overflow.
  std::function<void(int, long long)> rec = [&](int level, long long ip_in) {
    const long long s = step[static_cast<std::size_t>(level)];
    long long r = (ip_in + s * ((n - (H % n)) % n)) % n;  // ip + (-H) s mod n
    if (level == d - 1) {
      for (int v = -H; v <= H; ++v) {
        h[static_cast<std::size_t>(level)] = v;
        if (r == 0) fn(h);
        r += s;
        if (r >= n) r -= n;
      }
    } else {
      for (int v = -H; v <= H; ++v) {
        h[static_cast<std::size_t>(level)] = v;
        rec(level + 1, r);
        r += s;
        if (r >= n) r -= n;
      }
    }
  };
  rec(0, 0);
}

IndexSet enumerate_dual(const GeneratingVector& gen, int box_bound) {
  IndexSet out;
  out.signed_set = true;
  out.M = 0.0;
  for_each_dual(gen, box_bound, [&](std::span<const int> h) {
    out.indices.emplace_back(h.begin(), h.end());
  });
  return out;
}

}  // namespace latcosine
