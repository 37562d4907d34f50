// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "circle_sobolev/bohr_pal.hpp"
#include "circle_sobolev/experiments.hpp"
#include "circle_sobolev/families.hpp"
#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"
#include "circle_sobolev/pairing.hpp"
#include "circle_sobolev/random.hpp"
#include "circle_sobolev/seminorm.hpp"

using namespace circle_sobolev;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  std::function<Outcome()> body;
};

// 1. Seminorm exactness.
Outcome seminorm_exactness() {
  double worst = 0.0;
  for (int n = -100; n <= 100; ++n) {
    const double v = seminorm_fourier(FourierSeries::monomial(n)).value;
    worst = std::max(worst, std::abs(v - std::sqrt(std::abs(static_cast<double>(n)))));
  }
  double worst_lac = 0.0;
  for (int m = 1; m <= 16; ++m) {
    worst_lac = std::max(worst_lac, std::abs(seminorm_fourier(lacunary_series(m)).squared() - m));
  }
  return {worst <= 1e-12 && worst_lac <= 1e-12,
          fmt::format("max |value - sqrt|n|| = {:.2e}, max |lacunary^2 - M| = {:.2e}", worst, worst_lac)};
}

// 2. Stieltjes pairing against the spectral sum, and the bound.
Outcome pairing_identity() {
  Rng rng(2);
  std::uniform_int_distribution<int> degree(0, 32);
  constexpr std::size_t n = 4096;
  double worst = 0.0;
  int bound_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const FourierSeries cx = random_trig_series(rng, degree(rng));
    const FourierSeries cy = random_trig_series(rng, degree(rng));
    const Complex b = pairing(synthesize(cx, n), BVFunction(synthesize(cy, n)));
    worst = std::max(worst, std::abs(b - pairing_spectral(cx, cy)));
    const auto [lhs, rhs] = pairing_bound_check(cx, cy);
    if (lhs > rhs * (1.0 + 1e-12)) ++bound_failures;
  }
  return {worst <= 1e-6 && bound_failures == 0,
          fmt::format("max |B - spectral| = {:.2e}, bound failures = {}", worst, bound_failures)};
}

// 3. Invariance of the pairing under homeomorphisms.
Outcome pairing_invariance() {
  Rng rng(3);
  constexpr std::size_t n = 8192;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 512);
    const GridFunction x = random_trig_polynomial(rng, 6, n);
    const GridFunction y = random_trig_polynomial(rng, 6, n);
    const auto [moved, base] = invariance_check(x, BVFunction(y), h);
    worst = std::max(worst, std::abs(moved - base));
  }
  return {worst <= 1e-4, fmt::format("max |B(x o h, y o h) - B(x, y)| = {:.2e}", worst)};
}

// 4. Translation-average identity.
Outcome translation_average() {
  Rng rng(4);
  std::uniform_int_distribution<int> degree(1, 8);
  constexpr std::size_t n = 1024;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const CircleHomeomorphism phi = random_smooth_homeomorphism(rng, 256);
    const GridFunction x = random_trig_polynomial(rng, degree(rng), n);
    for (int nu : {0, 1, -1, 5, -5}) {
      worst = std::max(worst, std::abs(lemma2_identity_check(x, phi, nu, 512).residual()));
    }
  }
  return {worst <= 1e-6, fmt::format("max |LHS - RHS| = {:.2e}", worst)};
}

// 5. Exponential lower bound.
Outcome exponential_bound() {
  constexpr std::size_t n_small = 256;
  double exact_err = 0.0;
  std::vector<CircleHomeomorphism> rigid = {CircleHomeomorphism::identity(),
                                            CircleHomeomorphism::rotation(0.7),
                                            CircleHomeomorphism::rotation(-2.3)};
  for (const auto& h : rigid) {
    for (int k = -32; k <= 32; ++k) {
      const double s = seminorm_fourier(analyze(exp_of_homeomorphism(h, k, n_small))).squared();
      exact_err = std::max(exact_err, std::abs(s - std::abs(k)));
    }
  }
  Rng rng(5);
  constexpr std::size_t n = 8192;
  double worst_ratio = 1e300;
  for (int i = 0; i < 20; ++i) {
    const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 512);
    for (int k = -32; k <= 32; ++k) {
      if (k == 0) continue;
      const ExpBoundCheck c = exp_lower_bound_check(h, k, n);
      worst_ratio = std::min(worst_ratio, c.seminorm_sq / std::abs(k));
    }
  }
  return {exact_err <= 1e-12 && worst_ratio >= 0.999,
          fmt::format("rigid max error = {:.2e}, random min ||e^(ikh)||^2/|k| = {:.6f}", exact_err,
                      worst_ratio)};
}

// 6. Mollification scan.
Outcome mollification_limit() {
  const std::vector<double> deltas = halving_grid(1.0, 1e-5);
  const MollificationScan lac = mollification_scan(lacunary_series(8), deltas, 256);
  const double last = lac.values.back();
  double harmonic_err = 0.0;
  for (int k : {1, 2, 5, 16}) {
    const MollificationScan s = mollification_scan(FourierSeries::monomial(k), deltas, 256);
    harmonic_err = std::max(harmonic_err, std::abs(s.values.back() - k));
    harmonic_err = std::max(harmonic_err, std::abs(s.limit - k));
  }
  return {last >= 8.0 * (1.0 - 1e-3) && harmonic_err <= 1e-6,
          fmt::format("lacunary S(delta={:.3g}, 256) = {:.9f}, harmonic max error = {:.2e}",
                      deltas.back(), last, harmonic_err)};
}

// 7. Tail mass and the average inequality.
Outcome tail_mass_and_average() {
  int mismatches = 0;
  for (int k = -64; k <= 64; ++k) {
    if (k == 0) continue;
    if (tail_mass_search(CircleHomeomorphism::identity(), k, 256) != std::abs(k)) ++mismatches;
  }
  Rng rng(7);
  const FourierSeries f = lacunary_series(8);
  double worst = 1e300;
  for (int i = 0; i < 5; ++i) {
    const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 512);
    const IdentityCheck c = theorem2_average_inequality(f, h, 128, 512, 1023, 2048);
    worst = std::min(worst, c.lhs / c.rhs);
  }
  return {mismatches == 0 && worst >= 1.0 - 1e-4,
          fmt::format("identity m(k) mismatches = {}, min LHS/RHS = {:.9f}", mismatches, worst)};
}

// Polygon area through vertices of rho(t) e^{it}, rho = 2 + cos t.
double shoelace_two_plus_cos(std::size_t vertices) {
  double twice = 0.0;
  auto point = [&](std::size_t j) {
    const double t = kTwoPi * static_cast<double>(j % vertices) / static_cast<double>(vertices);
    const double r = 2.0 + std::cos(t);
    return std::pair{r * std::cos(t), r * std::sin(t)};
  };
  for (std::size_t j = 0; j < vertices; ++j) {
    const auto [x0, y0] = point(j);
    const auto [x1, y1] = point(j + 1);
    twice += x0 * y1 - x1 * y0;
  }
  return 0.5 * twice;
}

// 8. Conformal-map construction on 2 + cos t.
Outcome bohr_pal_construction() {
  constexpr std::size_t n = 2048;
  const GridFunction f = GridFunction::from_function(n, [](double t) { return std::cos(t); });
  const BohrPalResult r = bohr_pal(f);
  const BoundaryCorrespondence& bc = r.correspondence;
  const double oracle = shoelace_two_plus_cos(100000);
  const double analytic = 4.5 * kPi;
  const double vs_shoelace = std::abs(r.area.spectral - oracle) / oracle;
  const double vs_analytic = std::abs(r.area.spectral - analytic) / analytic;
  bool monotone = bc.h.min_gap() > 0.0;
  for (std::size_t j = 1; j < bc.angles.size(); ++j) monotone = monotone && bc.angles[j] > bc.angles[j - 1];
  monotone = monotone && bc.angles.front() + kTwoPi > bc.angles.back();
  const bool ok = bc.analytic_residual() <= 1e-6 && vs_shoelace <= 1e-4 && vs_analytic <= 1e-3 &&
                  monotone && r.improvement.pointwise_error <= 1e-10;
  return {ok, fmt::format("method = {}, analytic residual = {:.2e}, area rel err vs shoelace = {:.2e}, "
                          "vs 9pi/2 = {:.2e}, monotone = {}, |f+ o h - |g|| = {:.2e}",
                          to_string(bc.method_used), bc.analytic_residual(), vs_shoelace, vs_analytic,
                          monotone, r.improvement.pointwise_error)};
}

// 9. Improvement of the top-window slope.
Outcome improvement_profile() {
  constexpr std::size_t n = 2048;
  constexpr double mollify_width = 0.05;
  const GridFunction f = lacunary_witness(8, n).real_part();
  const SeminormReport own = seminorm_fourier(analyze(f));
  const BohrPalResult r = bohr_pal(f, {}, mollify_width);
  const ImprovementReport& imp = r.improvement;
  const double slope_f = window_slope(own, imp.window_lo, imp.window_hi);
  const double ratio = imp.slope_after / slope_f;
  return {ratio < 0.1,
          fmt::format("window ({}, {}], slope(f) = {:.4f}, slope(f o h) = {:.4f}, ratio = {:.4f} "
                      "(mollified half-width {}, method = {})",
                      imp.window_lo, imp.window_hi, slope_f, imp.slope_after, ratio, mollify_width,
                      to_string(r.correspondence.method_used))};
}

// 10. Modulus closure and the equivalence ratio.
Outcome modulus_closure() {
  Rng rng(10);
  std::uniform_int_distribution<int> degree(1, 16);
  constexpr std::size_t n = 64;
  constexpr std::size_t q = 1024;
  int failures = 0;
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < 50; ++i) {
    const FourierSeries c = random_trig_series(rng, degree(rng));
    const GridFunction f = synthesize(c, n);
    const auto [modulus, plain] = abs_contraction_check(f, q);
    if (modulus > plain + 1e-9) ++failures;
    const double ratio = plain / seminorm_fourier(c).value;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {failures == 0 && hi / lo < 10.0,
          fmt::format("contraction failures = {}, double-integral/Fourier ratio in [{:.4f}, {:.4f}], "
                      "spread {:.4f}",
                      failures, lo, hi, hi / lo)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "seminorm exactness", 1.0, seminorm_exactness},
      {2, "pairing identity and bound", 30.0, pairing_identity},
      {3, "pairing invariance", 60.0, pairing_invariance},
      {4, "translation-average identity", 60.0, translation_average},
      {5, "exponential lower bound", 60.0, exponential_bound},
      {6, "mollification scan", 10.0, mollification_limit},
      {7, "tail mass and average inequality", 120.0, tail_mass_and_average},
      {8, "conformal construction", 120.0, bohr_pal_construction},
      {9, "improvement profile", 300.0, improvement_profile},
      {10, "modulus closure", 300.0, modulus_closure},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.ok && secs < c.time_limit;
    if (!pass) ++failed;
    std::printf("criterion %d %s: %s  %s  [%.2f s, limit %.0f s]\n", c.id, c.name, pass ? "PASS" : "FAIL",
                out.detail.c_str(), secs, c.time_limit);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
