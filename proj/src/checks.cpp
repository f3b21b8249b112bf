#include "latcosine/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "latcosine/approx.hpp"
#include "latcosine/cbc.hpp"
#include "latcosine/hypercross.hpp"
#include "latcosine/lattice.hpp"
#include "latcosine/rng.hpp"
#include "latcosine/spaces.hpp"
#include "latcosine/wce.hpp"

namespace latcosine {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic non-trivial generating vector for test sweeps.
GeneratingVector test_vector(long long n, int d) {
  std::vector<long long> z(static_cast<std::size_t>(d));
  const long long q = std::max<long long>(1, n / 3);
  for (int j = 0; j < d; ++j)
    z[static_cast<std::size_t>(j)] = n == 1 ? 0 : 1 + (static_cast<long long>(j) * q) % (n - 1);
  return GeneratingVector(n, z);
}

struct Harness {
  std::vector<CheckResult> results;
  void record(const std::string& name, bool pass, const std::string& detail = "",
              bool soft = false) {
    results.push_back({name, pass, soft, detail});
  }
};

void check_character_orthogonality(Harness& h, bool full) {
  double worst = 0.0;
  std::vector<long long> ns;
  if (full)
    for (long long n = 1; n <= 64; ++n) ns.push_back(n);
  else
    ns = {1, 2, 3, 4, 5, 8, 13, 16, 31, 64};
  for (long long n : ns) {
    for (int d = 1; d <= 3; ++d) {
      const GeneratingVector gen = test_vector(n, d);
      const PointSet pts = lattice_points(gen);
      const int H = 8;
      std::vector<int> k(static_cast<std::size_t>(d), -H);
      while (true) {
        double re = 0.0, im = 0.0;
        for (const auto& t : pts.points) {
          double phase = 0.0;
          for (int j = 0; j < d; ++j)
            phase += k[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j)];
          re += std::cos(2.0 * kPi * phase);
          im += std::sin(2.0 * kPi * phase);
        }
        re /= static_cast<double>(n);
        im /= static_cast<double>(n);
        const double expected = in_dual(k, gen) ? 1.0 : 0.0;
        worst = std::max(worst, std::hypot(re - expected, im));
        int j = d - 1;
        while (j >= 0 && k[static_cast<std::size_t>(j)] == H) {
          k[static_cast<std::size_t>(j)] = -H;
          --j;
        }
        if (j < 0) break;
        ++k[static_cast<std::size_t>(j)];
      }
    }
  }
  std::ostringstream det;
  det << "max deviation " << worst;
  h.record("lattice.character_orthogonality", worst <= 1e-12, det.str());
}

void check_tent_and_group(Harness& h) {
  bool ok = true;
  for (int i = 0; i <= 1000; ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    const double v = tent(x);
    if (!(v >= 0.0 && v <= 1.0)) ok = false;
    if (tent(1.0 - x) != v) ok = false;
  }
  h.record("lattice.tent_range_symmetry", ok);

  bool closed = true;
  for (long long n : {4LL, 5LL, 13LL}) {
    const GeneratingVector gen = test_vector(n, 2);
    const PointSet pts = lattice_points(gen);
    for (long long a = 1; a <= n; ++a) {
      for (long long b = 1; b <= n; ++b) {
        long long c = (a + b) % n;
        if (c == 0) c = n;
        for (int j = 0; j < 2; ++j) {
          double s = pts.points[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(j)] +
                     pts.points[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j)];
          if (s >= 1.0) s -= 1.0;
          if (std::fabs(s - pts.points[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(j)]) >
              1e-12)
            closed = false;
        }
      }
    }
  }
  h.record("lattice.group_closure", closed);

  bool sym = true;
  for (long long n : {2LL, 4LL, 7LL}) {
    const GeneratingVector gen = test_vector(n, 2);
    const IndexSet dual = enumerate_dual(gen, 6);
    std::map<IntVec, bool> members;
    for (const auto& v : dual.indices) members[v] = true;
    for (const auto& v : dual.indices) {
      IntVec neg(v);
      for (int& c : neg) c = -c;
      if (!members.count(neg)) sym = false;
    }
  }
  h.record("lattice.dual_negation_symmetry", sym);
}

void check_kernels(Harness& h) {
  CounterRng rng(2024);
  bool sym = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    std::vector<double> x(static_cast<std::size_t>(d)), y(static_cast<std::size_t>(d));
    for (auto& v : x) v = rng.next_double();
    for (auto& v : y) v = rng.next_double();
    const SpaceParams p = SpaceParams::power_law(1.0 + static_cast<double>(rng.next_below(2)), d,
                                                 1.0, 1.5);
    for (Space s : {Space::cosine, Space::korobov, Space::tented_cosine,
                    Space::shift_invariant_tented}) {
      KernelSpec spec{s, p, 1000, 1e100};
      if (kernel_eval(spec, x, y).value != kernel_eval(spec, y, x).value) sym = false;
    }
  }
  h.record("spaces.kernel_symmetry", sym);

  // alpha = 1 coincidence with the unanchored Sobolev space: the cosine
  // kernel with weights gamma / pi^2 is exactly the Bernoulli product with
  // weights gamma (the norm identification rescales each weight by pi^2).
  double worst = 0.0;
  {
    const double g = 0.8;
    const SpaceParams cos_params(1.0, {g / (kPi * kPi)});
    const SpaceParams sob_params(1.0, {g});
    KernelSpec spec{Space::cosine, cos_params, 1000, 1e100};
    for (int a = 0; a <= 20; ++a)
      for (int b = 0; b <= 20; ++b) {
        const double x = a / 20.0, y = b / 20.0;
        const double kc = kernel_eval(spec, std::span(&x, 1), std::span(&y, 1)).value;
        const double ks = sobolev_kernel_eval(sob_params, std::span(&x, 1), std::span(&y, 1));
        worst = std::max(worst, std::fabs(kc - ks));
      }
    CounterRng r3 = rng.stream(7);
    std::vector<double> gv{1.0, 0.5, 0.25};
    std::vector<double> gc(gv);
    for (double& v : gc) v /= kPi * kPi;
    const SpaceParams cp(1.0, gc), sp(1.0, gv);
    KernelSpec spec3{Space::cosine, cp, 1000, 1e100};
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(3), y(3);
      for (auto& v : x) v = r3.next_double();
      for (auto& v : y) v = r3.next_double();
      worst = std::max(worst,
                       std::fabs(kernel_eval(spec3, x, y).value - sobolev_kernel_eval(sp, x, y)));
    }
  }
  {
    std::ostringstream det;
    det << "max |cosine(gamma/pi^2) - sobolev(gamma)| = " << worst;
    h.record("spaces.sobolev_coincidence", worst <= 1e-8, det.str());
  }

  // positive-semidefiniteness witness for K_per - K_psi
  double qmin = 0.0;
  {
    CounterRng r = rng.stream(11);
    for (int rep = 0; rep < 6; ++rep) {
      const int d = 1 + static_cast<int>(r.next_below(2));
      const SpaceParams p = SpaceParams::power_law(1.0, d, 1.0, 1.0);
      std::vector<std::vector<double>> pts;
      if (rep % 2 == 0) {
        pts = lattice_points(test_vector(5 + 2 * rep, d)).points;
      } else {
        for (int i = 0; i < 12; ++i) {
          std::vector<double> x(static_cast<std::size_t>(d));
          for (auto& v : x) v = r.next_double();
          pts.push_back(x);
        }
      }
      KernelSpec per{Space::korobov, p, 1000, 1e100};
      KernelSpec psi{Space::tented_cosine, p, 1000, 1e100};
      double q = 0.0;
      for (const auto& a : pts)
        for (const auto& b : pts)
          q += kernel_eval(per, a, b).value - kernel_eval(psi, a, b).value;
      q /= static_cast<double>(pts.size() * pts.size());
      qmin = std::min(qmin, q);
    }
  }
  h.record("spaces.kernel_dominance", qmin >= -1e-10);

  // closed forms against raw partial sums
  bool bern = true;
  for (double alpha : {1.0, 2.0}) {
    std::vector<double> inv_pow(100001);
    double partial_zeta = 0.0;
    for (long hh = 1; hh <= 100000; ++hh) {
      inv_pow[static_cast<std::size_t>(hh)] = std::pow(static_cast<double>(hh), -2.0 * alpha);
      partial_zeta += inv_pow[static_cast<std::size_t>(hh)];
    }
    const double tail = zeta(2.0 * alpha) - partial_zeta;
    for (int i = 0; i <= 100; ++i) {
      const double x = static_cast<double>(i) / 100.0;
      const SeriesValue exact = one_dim_series(alpha, x);
      double partial = 0.0;
      for (long hh = 1; hh <= 100000; ++hh)
        partial += std::cos(2.0 * kPi * std::fmod(static_cast<double>(hh) * x, 1.0)) *
                   inv_pow[static_cast<std::size_t>(hh)];
      if (std::fabs(exact.value - partial) > tail + 1e-10) bern = false;
    }
  }
  h.record("spaces.bernoulli_vs_partial_sum", bern);

  bool rsign = true;
  CounterRng rs = rng.stream(13);
  for (int t = 0; t < 50; ++t) {
    const int d = 1 + static_cast<int>(rs.next_below(4));
    const SpaceParams p = SpaceParams::power_law(1.5, d, 0.9, 1.0);
    IntVec k(static_cast<std::size_t>(d));
    for (int& v : k) v = static_cast<int>(rs.next_below(9)) - 4;
    const double base = r_weight(p, k);
    IntVec flipped(k);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      for (int j = 0; j < d; ++j)
        flipped[static_cast<std::size_t>(j)] = ((mask >> j) & 1u)
                                                   ? -k[static_cast<std::size_t>(j)]
                                                   : k[static_cast<std::size_t>(j)];
      if (r_weight(p, flipped) != base) rsign = false;
    }
  }
  h.record("spaces.r_weight_sign_invariance", rsign);
}

void check_wce(Harness& h) {
  bool equiv = true, ordering = true;
  double worst_gap = 0.0;
  for (int d : {1, 2}) {
    for (long long n : {2LL, 3LL, 5LL, 8LL}) {
      for (double alpha : {1.0, 2.0}) {
        const SpaceParams p = SpaceParams::power_law(alpha, d, 1.0, 0.0);
        const GeneratingVector gen = test_vector(n, d);
        const int H = default_box_bound(n);
        const WceReport kor_d = wce_korobov_dual(p, gen, H);
        const WceReport kor_k =
            wce_kernel_form(KernelSpec{Space::korobov, p, 1000, 1e100}, lattice_points(gen));
        if (std::fabs(kor_d.squared_error - kor_k.squared_error) >
            kor_d.truncation_bound + kor_k.truncation_bound + 1e-12)
          equiv = false;

        const WceReport ten_d = wce_cosine_tented(p, gen, H);
        const WceReport ten_k = wce_kernel_form(
            KernelSpec{Space::cosine, p, 1000, 1e100},
            transform_points(lattice_points(gen), std::nullopt, true));
        if (std::fabs(ten_d.squared_error - ten_k.squared_error) >
            ten_d.truncation_bound + ten_k.truncation_bound + 1e-12)
          equiv = false;

        const WceReport rms = wce_rms_shifted(p, gen);
        const WceReport rms_dual = wce_korobov_dual(p.halved(), gen, H);
        if (std::fabs(rms.squared_error - rms_dual.squared_error) >
            rms.truncation_bound + rms_dual.truncation_bound + 1e-12)
          equiv = false;

        if (ten_k.squared_error > kor_k.squared_error + 1e-12) ordering = false;
        worst_gap = std::max(worst_gap, kor_k.squared_error - ten_k.squared_error);
      }
    }
  }
  h.record("wce.oracle_equivalence", equiv);
  {
    std::ostringstream det;
    det << "max korobov - tented gap " << worst_gap;
    h.record("wce.tented_below_korobov", ordering, det.str());
  }

  // shift-averaged tented kernel equals the halved-weight Korobov kernel
  double worst = 0.0;
  {
    const SpaceParams p = SpaceParams::all_ones(1.0, 1);
    KernelSpec cosine{Space::cosine, p, 1000, 1e100};
    KernelSpec inv{Space::shift_invariant_tented, p, 1000, 1e100};
    const double pairs[5][2] = {{0.0, 0.3}, {0.1, 0.9}, {0.5, 0.5}, {0.25, 0.7}, {0.62, 0.05}};
    const int m = 1 << 16;
    for (const auto& pr : pairs) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        const double delta = (static_cast<double>(i) + 0.5) / m;
        double xs = pr[0] + delta;
        if (xs >= 1.0) xs -= 1.0;
        double ys = pr[1] + delta;
        if (ys >= 1.0) ys -= 1.0;
        const double xt = tent(xs), yt = tent(ys);
        acc += kernel_eval(cosine, std::span(&xt, 1), std::span(&yt, 1)).value;
      }
      acc /= m;
      const double closed = kernel_eval(inv, std::span(&pr[0], 1), std::span(&pr[1], 1)).value;
      worst = std::max(worst, std::fabs(acc - closed));
    }
  }
  {
    std::ostringstream det;
    det << "max quadrature deviation " << worst;
    h.record("wce.shift_averaging_identity", worst <= 1e-6, det.str());
  }
}

void check_cbc(Harness& h, bool full) {
  bool identical = true;
  std::vector<long long> primes = {2, 3, 5, 13, 31, 127};
  if (full) primes = {2, 3, 5, 7, 13, 31, 61, 127, 251, 257};
  for (long long n : primes) {
    for (double alpha : {1.0, 2.0}) {
      const int d = full ? 8 : 4;
      const SpaceParams p = SpaceParams::power_law(alpha, d, 1.0, 2.0);
      CbcConfig plain{n, d, p, CbcCriterion::korobov_integration, CbcEngine::plain};
      CbcConfig fast{n, d, p, CbcCriterion::korobov_integration, CbcEngine::fast};
      const CbcResult a = cbc_construct(plain);
      const CbcResult b = cbc_construct(fast);
      if (a.gen.z != b.gen.z) identical = false;
      for (std::size_t s = 0; s < a.criterion_values.size(); ++s)
        if (a.criterion_values[s] != b.criterion_values[s]) identical = false;
    }
  }
  h.record("cbc.engine_equivalence", identical);

  const SpaceParams p = SpaceParams::power_law(1.0, 4, 1.0, 2.0);
  CbcConfig cfg{127, 4, p, CbcCriterion::korobov_integration, CbcEngine::fast};
  const CbcResult r1 = cbc_construct(cfg);
  const CbcResult r2 = cbc_construct(cfg);
  h.record("cbc.determinism", r1.gen.z == r2.gen.z &&
                                  r1.criterion_values == r2.criterion_values);

  // final criterion against an independent recomputation and the bound
  bool agree = true, bounded = true;
  for (long long n : {31LL, 127LL}) {
    const CbcResult res =
        cbc_construct(CbcConfig{n, 4, p, CbcCriterion::korobov_integration, CbcEngine::fast});
    const double recomputed = wce_korobov_lattice(p, res.gen).squared_error;
    if (std::fabs(res.criterion_values.back() - recomputed) >
        1e-10 * std::max(1.0, std::fabs(recomputed)))
      agree = false;
    for (double lambda : {0.6, 0.75, 1.0}) {
      const double bound = cbc_error_bound(p, n, lambda, false);
      if (std::sqrt(std::max(0.0, res.criterion_values.back())) > bound) bounded = false;
    }
  }
  h.record("cbc.final_criterion_recomputation", agree);
  h.record("cbc.error_bound_guarantee", bounded);

  bool consistent = true;
  {
    const SpaceParams p2 = SpaceParams::all_ones(1.0, 3);
    const auto plain_vals =
        korobov_criterion_all_candidates(p2, 13, std::vector<long long>{1, 5}, false,
                                         CbcEngine::plain);
    const auto fast_vals =
        korobov_criterion_all_candidates(p2, 13, std::vector<long long>{1, 5}, false,
                                         CbcEngine::fast);
    for (std::size_t i = 0; i < plain_vals.size(); ++i)
      if (std::fabs(plain_vals[i] - fast_vals[i]) > 1e-9) consistent = false;
    const auto first = korobov_criterion_all_candidates(p2, 7, {}, false, CbcEngine::plain);
    for (double v : first)
      if (v != first.front()) consistent = false;
  }
  h.record("cbc.candidate_values_cross_engine", consistent);
}

void check_hypercross(Harness& h) {
  bool member = true;
  for (int d = 1; d <= 3; ++d) {
    const SpaceParams p = SpaceParams::power_law(1.0, d, 1.0, 1.0);
    for (double M : {1.0, 4.0, 20.0, 100.0}) {
      const IndexSet cross = enumerate_H(p, M, true);
      std::map<IntVec, bool> in;
      for (const auto& k : cross.indices) {
        in[k] = true;
        if (r_weight(p, k) > M * (1.0 + 1e-9)) member = false;
      }
      const int B = static_cast<int>(std::floor(std::pow(M, 1.0 / (2.0 * p.alpha)))) + 1;
      IntVec k(static_cast<std::size_t>(d), -B);
      while (true) {
        const bool inside = r_weight(p, k) <= M;
        if (inside != (in.count(k) > 0)) {
          if (std::fabs(r_weight(p, k) - M) > 1e-9 * M) member = false;
        }
        int j = d - 1;
        while (j >= 0 && k[static_cast<std::size_t>(j)] == B) {
          k[static_cast<std::size_t>(j)] = -B;
          --j;
        }
        if (j < 0) break;
        ++k[static_cast<std::size_t>(j)];
      }
    }
  }
  h.record("hypercross.membership_box_scan", member);

  bool counts = true, bound_ok = true, nested = true;
  for (int d = 1; d <= 3; ++d) {
    const SpaceParams p = SpaceParams::power_law(1.0, d, 1.0, 1.0);
    IndexSet prev;
    for (double M : {1.0, 4.0, 16.0, 64.0}) {
      const IndexSet us = enumerate_H(p, M, false);
      const IndexSet sg = enumerate_H(p, M, true);
      double expected = 0.0;
      for (const auto& k : us.indices) expected += std::pow(2.0, nonzero_count(k));
      if (static_cast<double>(sg.size()) != expected) counts = false;
      for (double q : {0.75, 1.0, 1.5})
        if (static_cast<double>(sg.size()) > cardinality_bound(p, M, q)) bound_ok = false;
      if (!prev.indices.empty()) {
        for (const auto& k : prev.indices)
          if (!std::binary_search(us.indices.begin(), us.indices.end(), k)) nested = false;
      }
      prev = us;
    }
  }
  h.record("hypercross.signed_unsigned_count", counts);
  h.record("hypercross.cardinality_bound", bound_ok);
  h.record("hypercross.nesting", nested);
}

void check_approx(Harness& h) {
  // tent-composed basis identities
  CounterRng rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng.next_below(6));
    IntVec k(static_cast<std::size_t>(d));
    for (int& v : k) v = static_cast<int>(rng.next_below(6));
    std::vector<double> x(static_cast<std::size_t>(d));
    for (auto& v : x) v = rng.next_double();
    std::vector<double> psix(x);
    for (auto& v : psix) v = tent(v);
    const double lhs = cosine_basis(k, psix);
    double prod = std::pow(std::numbers::sqrt2, nonzero_count(k));
    for (int j = 0; j < d; ++j)
      prod *= std::cos(2.0 * kPi * k[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]);
    std::complex<double> avg = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      double phase = 0.0;
      for (int j = 0; j < d; ++j) {
        const double s = ((mask >> j) & 1u) ? -1.0 : 1.0;
        phase += s * k[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      }
      avg += std::exp(std::complex<double>(0.0, 2.0 * kPi * phase));
    }
    avg *= std::pow(std::numbers::sqrt2, nonzero_count(k)) / std::pow(2.0, d);
    worst = std::max(worst, std::fabs(lhs - prod));
    worst = std::max(worst, std::abs(std::complex<double>(lhs, 0.0) - avg));
  }
  h.record("approx.tent_basis_identity", worst <= 1e-12);

  // sign-folding resummation identity on random finite supports
  double worst2 = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    CounterRng r = rng.stream(200 + static_cast<std::uint64_t>(trial));
    const int d = 1 + static_cast<int>(r.next_below(4));
    const int B = 2;
    std::map<IntVec, std::complex<double>> g1, g2;
    {
      IntVec k(static_cast<std::size_t>(d), 0);
      std::function<void(int)> fill = [&](int j) {
        if (j == d) {
          g1[k] = {r.uniform(-1, 1), r.uniform(-1, 1)};
          return;
        }
        for (int t = 0; t <= B; ++t) {
          k[static_cast<std::size_t>(j)] = t;
          fill(j + 1);
        }
      };
      fill(0);
    }
    {
      IntVec k(static_cast<std::size_t>(d), 0);
      std::function<void(int)> fill = [&](int j) {
        if (j == d) {
          g2[k] = {r.uniform(-1, 1), r.uniform(-1, 1)};
          return;
        }
        for (int t = -B; t <= B; ++t) {
          k[static_cast<std::size_t>(j)] = t;
          fill(j + 1);
        }
      };
      fill(0);
    }
    std::complex<double> lhs = 0.0;
    for (const auto& [k, a] : g1) {
      std::complex<double> inner = 0.0;
      IntVec sk(k);
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        for (int j = 0; j < d; ++j)
          sk[static_cast<std::size_t>(j)] = ((mask >> j) & 1u) ? -k[static_cast<std::size_t>(j)]
                                                               : k[static_cast<std::size_t>(j)];
        auto it = g2.find(sk);
        if (it != g2.end()) inner += it->second;
      }
      lhs += a * inner;
    }
    std::complex<double> rhs = 0.0;
    for (const auto& [k, b] : g2) {
      IntVec ak(k);
      for (int& v : ak) v = std::abs(v);
      auto it = g1.find(ak);
      if (it != g1.end())
        rhs += it->second * b * std::pow(2.0, d - nonzero_count(k));
    }
    worst2 = std::max(worst2, std::abs(lhs - rhs));
  }
  h.record("approx.sign_folding_identity", worst2 <= 1e-12);

  // alias-free polynomials are reproduced exactly: the smallest dual vectors
  // of (1,5) mod 13 lie outside the reachable difference box of H_2
  bool proj = true;
  {
    const SpaceParams p = SpaceParams::all_ones(1.0, 2);
    const GeneratingVector gen(13, {1, 5});
    CoefficientMap f;
    f.entries[{1, 0}] = 0.7;
    f.entries[{0, 1}] = -0.3;
    f.entries[{0, 0}] = 1.1;
    const double M = 2.0;
    const ApproxResult res = approximate(to_function(f), gen, p, M);
    if (exact_l2_error(f, gen, p, M) > 1e-24) proj = false;
    for (const auto& [k, c] : f.entries) {
      auto it = res.coeffs.entries.find(k);
      if (it == res.coeffs.entries.end() || std::abs(it->second - c) > 1e-12) proj = false;
    }
  }
  h.record("approx.aliasing_free_projection", proj);

  // oracle pair on a few random polynomials
  double worst3 = 0.0;
  {
    CounterRng r = rng.stream(400);
    const SpaceParams p = SpaceParams::power_law(1.0, 2, 1.0, 1.0);
    const GeneratingVector gen(7, {1, 3});
    for (int t = 0; t < 4; ++t) {
      CoefficientMap f = random_cosine_polynomial(p, 36.0, 5, r);
      const double M = 4.0;
      const ApproxResult res = approximate(to_function(f), gen, p, M);
      const double exact = exact_l2_error(f, gen, p, M);
      const double emp = empirical_l2_error(to_function(f), res, 32);
      worst3 = std::max(worst3, std::fabs(exact - emp));
    }
  }
  {
    std::ostringstream det;
    det << "max |exact - quadrature| = " << worst3;
    h.record("approx.error_oracle_pair", worst3 <= 1e-9, det.str());
  }

  // bound equality across independent routes
  bool eq = true;
  {
    const SpaceParams p = SpaceParams::all_ones(1.0, 2);
    const GeneratingVector gen(5, {1, 2});
    const auto [lhs, rhs] = aliasing_bound_equality(p, gen, 4.0, 48);
    if (std::fabs(lhs - rhs) > 1e-10 * std::max(1.0, std::fabs(rhs))) eq = false;
    double bound = 0.0;
    const double wub = wce_upper_bound(p, gen, 4.0, 48, &bound);
    const double crit = approximation_criterion(p, gen, 4.0, 48);
    if (std::fabs((wub - 1.0 / 4.0) - crit) > 1e-10 * std::max(1.0, crit)) eq = false;
  }
  h.record("approx.bound_equality", eq);
}

void check_scaling(Harness& h) {
  const SpaceParams p = SpaceParams::power_law(2.0, 3, 1.0, 2.0);
  std::vector<long long> ns = {1009, 4001, 16001, 65003};
  std::vector<double> secs;
  for (long long n : ns) {
    const auto t0 = std::chrono::steady_clock::now();
    cbc_construct(CbcConfig{n, 3, p, CbcCriterion::korobov_integration, CbcEngine::fast});
    secs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::ostringstream det;
  det << "seconds:";
  for (double s : secs) det << " " << s;
  const double ratio = secs.back() / std::max(secs.front(), 1e-9);
  const double quad = std::pow(static_cast<double>(ns.back()) / static_cast<double>(ns.front()), 2.0);
  det << "; t(" << ns.back() << ")/t(" << ns.front() << ") = " << ratio << " vs quadratic "
      << quad;
  h.record("cbc.scaling_subquadratic", ratio < quad, det.str(), /*soft=*/true);
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(bool include_slow) {
  Harness h;
  check_character_orthogonality(h, include_slow);
  check_tent_and_group(h);
  check_kernels(h);
  check_wce(h);
  check_cbc(h, include_slow);
  check_hypercross(h);
  check_approx(h);
  if (include_slow) check_scaling(h);
  return h.results;
}

}  // namespace latcosine
