#include <doctest.h>

#include <cmath>

#include "circle_sobolev/pairing.hpp"
#include "circle_sobolev/random.hpp"
#include "support.hpp"

using namespace circle_sobolev;
using oracle::error_of;

namespace {

GridFunction harmonic(int k, std::size_t n) {
  return GridFunction::from_function(n, [k](double t) { return std::polar(1.0, k * t); });
}

}  // namespace

TEST_SUITE("pairing") {
  TEST_CASE("conjugate harmonics pair to in") {
    for (int n : {1, 2, 7, -3, 40}) {
      const Complex b = pairing(harmonic(-n, 1024), BVFunction(harmonic(n, 1024)));
      CHECK(std::abs(b - Complex(0.0, n)) <= 1e-8);
      const Complex same = pairing(harmonic(n, 1024), BVFunction(harmonic(n, 1024)));
      CHECK(std::abs(same) <= 1e-8);
    }
  }

  TEST_CASE("constant integrator gives exactly zero") {
    Rng rng(31);
    const GridFunction x = random_trig_polynomial(rng, 10, 64);
    const BVFunction y(GridFunction(std::vector<Complex>(64, Complex(1.5, -2.0))));
    CHECK(y.total_variation() == 0.0);
    CHECK(pairing(x, y) == Complex(0.0));
    CHECK(stieltjes_sum(x, y.base()) == Complex(0.0));
  }

  TEST_CASE("grids must match") {
    const GridFunction x(std::vector<Complex>(64, 1.0));
    const BVFunction y(harmonic(1, 128));
    CHECK(error_of([&] { pairing(x, y); }) == Errc::GridMismatch);
    CHECK(error_of([&] { stieltjes_sum(x, y.base()); }) == Errc::GridMismatch);
  }

  TEST_CASE("pairing agrees with a Simpson oracle of (1/2pi) int x y' dt") {
    auto x = [](double t) { return Complex(std::cos(t) + 0.3 * std::sin(4 * t), std::exp(std::sin(t)) - 1.0); };
    auto yp = [](double t) { return Complex(-2.0 * std::sin(2 * t), std::cos(t)); };
    auto y = [](double t) { return Complex(std::cos(2 * t), std::sin(t)); };
    const double re = oracle::simpson([&](double t) { return (x(t) * yp(t)).real(); }, 0, oracle::kTwoPi, 4000);
    const double im = oracle::simpson([&](double t) { return (x(t) * yp(t)).imag(); }, 0, oracle::kTwoPi, 4000);
    const Complex expected = Complex(re, im) / oracle::kTwoPi;
    const Complex b = pairing(GridFunction::from_function(256, x), BVFunction(GridFunction::from_function(256, y)));
    CHECK(std::abs(b - expected) <= 1e-10);
  }

  TEST_CASE("refinement improves on the raw Stieltjes sum") {
    const GridFunction x = harmonic(-5, 16);
    const GridFunction y = harmonic(5, 16);
    const Complex raw = stieltjes_sum(x, y);
    const Complex refined = pairing(x, BVFunction(y));
    CHECK(std::abs(refined - Complex(0.0, 5.0)) < std::abs(raw - Complex(0.0, 5.0)));
    CHECK(std::abs(refined - Complex(0.0, 5.0)) <= 1e-10);
    PairingOptions off;
    off.refine = false;
    CHECK(pairing(x, BVFunction(y), off) == raw);
  }

  TEST_CASE("spectral form examples") {
    for (int n : {-4, 1, 9}) {
      CHECK(std::abs(pairing_spectral(FourierSeries::monomial(-n), FourierSeries::monomial(n)) - Complex(0.0, n)) <= 1e-15);
      const auto [lhs, rhs] = pairing_bound_check(FourierSeries::monomial(-n), FourierSeries::monomial(n));
      CHECK(lhs == doctest::Approx(std::abs(n)));
      CHECK(rhs == doctest::Approx(std::abs(n)));
    }
    const FourierSeries d0 = FourierSeries::monomial(0);
    CHECK(pairing_spectral(d0, d0) == Complex(0.0));
    Rng rng(32);
    const auto [l0, r0] = pairing_bound_check(random_trig_series(rng, 5), FourierSeries::monomial(0, 3.0));
    CHECK(l0 == 0.0);
    CHECK(r0 == 0.0);
  }

  TEST_CASE("grid pairing matches the spectral sum and obeys the bound") {
    Rng rng(33);
    std::uniform_int_distribution<int> degree(0, 32);
    for (int trial = 0; trial < 25; ++trial) {
      const FourierSeries cx = random_trig_series(rng, degree(rng));
      const FourierSeries cy = random_trig_series(rng, degree(rng));
      const Complex b = pairing(synthesize(cx, 4096), BVFunction(synthesize(cy, 4096)));
      CHECK(std::abs(b - pairing_spectral(cx, cy)) <= 1e-6);
      const auto [lhs, rhs] = pairing_bound_check(cx, cy);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }

  TEST_CASE("pairing a series against its conjugate is imaginary") {
    Rng rng(34);
    for (int trial = 0; trial < 30; ++trial) {
      const FourierSeries c = random_trig_series(rng, 1 + trial);
      const Complex v = pairing_spectral(conjugate_flip(c), c);
      CHECK(std::abs(v.real()) <= 1e-10);
      // The imaginary part is the signed weighted energy.
      double signed_energy = 0.0;
      for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) signed_energy += std::norm(c[k]) * k;
      CHECK(v.imag() == doctest::Approx(signed_energy));
    }
  }

  TEST_CASE("bilinearity") {
    Rng rng(35);
    const GridFunction x1 = random_trig_polynomial(rng, 8, 128);
    const GridFunction x2 = random_trig_polynomial(rng, 8, 128);
    const GridFunction y1 = random_trig_polynomial(rng, 8, 128);
    const GridFunction y2 = random_trig_polynomial(rng, 8, 128);
    const Complex a(0.7, -0.2), b(-1.1, 2.0);
    const Complex left = pairing(a * x1 + b * x2, BVFunction(y1));
    CHECK(std::abs(left - (a * pairing(x1, BVFunction(y1)) + b * pairing(x2, BVFunction(y1)))) <= 1e-12);
    const Complex right = pairing(x1, BVFunction(a * y1 + b * y2));
    CHECK(std::abs(right - (a * pairing(x1, BVFunction(y1)) + b * pairing(x1, BVFunction(y2)))) <= 1e-12);
  }

  TEST_CASE("invariance under homeomorphisms") {
    const GridFunction x = GridFunction::from_function(8192, [](double t) { return std::cos(t); });
    const GridFunction y = GridFunction::from_function(8192, [](double t) { return std::sin(t); });
    const BVFunction by(y);

    const auto [same, base] = invariance_check(x, by, CircleHomeomorphism::identity());
    CHECK(same == base);
    CHECK(std::abs(base - 0.5) <= 1e-12);

    const auto [rot, base2] = invariance_check(x, by, CircleHomeomorphism::rotation(1.234));
    CHECK(std::abs(rot - base2) <= 1e-10);

    Rng rng(36);
    for (int trial = 0; trial < 3; ++trial) {
      // Monotone knot map with random gaps, linear between knots.
      std::uniform_real_distribution<double> gap(0.5, 1.5);
      std::vector<double> in, out;
      double s = 0.0;
      for (int i = 0; i < 24; ++i) {
        in.push_back(oracle::kTwoPi * i / 24.0);
        out.push_back(s);
        s += gap(rng);
      }
      for (double& v : out) v *= oracle::kTwoPi / s;
      const CircleHomeomorphism h(in, out);
      const auto [moved, orig] = invariance_check(x, by, h);
      CHECK(std::abs(moved - orig) <= 1e-4);
    }
  }

  TEST_CASE("total variation") {
    CHECK(total_variation(GridFunction(std::vector<Complex>(16, 2.0))) == 0.0);
    // Sampled cos t on a grid containing 0 and pi has variation exactly 4.
    CHECK(total_variation(GridFunction::from_function(64, [](double t) { return std::cos(t); })) ==
          doctest::Approx(4.0).epsilon(1e-14));
  }
}
