#include <doctest.h>

#include <cmath>

#include "circle_sobolev/experiments.hpp"
#include "circle_sobolev/random.hpp"
#include "circle_sobolev/seminorm.hpp"
#include "support.hpp"

using namespace circle_sobolev;
using oracle::error_of;
using oracle::kPi;

TEST_SUITE("experiments") {
  TEST_CASE("lacunary witness") {
    const GridFunction one = lacunary_witness(1, 16);
    for (std::size_t j = 0; j < 16; ++j) CHECK(std::abs(one[j] - std::polar(1.0, oracle::node(j, 16))) <= 1e-14);
    CHECK(std::abs(seminorm_fourier(analyze(lacunary_witness(10, 2048))).squared() - 10.0) <= 1e-12);
    CHECK(error_of([] { lacunary_witness(8, 256); }) == Errc::BandExceedsGrid);
    CHECK_FALSE(error_of([] { lacunary_witness(8, 512); }));
    CHECK(error_of([] { lacunary_series(0); }) == Errc::InvalidArgument);
    const LacunaryWitness w{6};
    CHECK(w.band() == 32);
    const FourierSeries c = w.coefficients();
    for (int n = 0; n < 6; ++n) CHECK(c[1 << n].real() == doctest::Approx(std::pow(2.0, -n / 2.0)));
  }

  TEST_CASE("Holder profile matches a pairwise modulus") {
    const GridFunction f = lacunary_witness(5, 128);
    const HolderProfile p = holder_profile(f, 0.5);
    REQUIRE(p.deltas.size() == p.moduli.size());
    for (std::size_t i = 0; i < p.deltas.size(); ++i) {
      const auto shift = static_cast<std::size_t>(std::llround(p.deltas[i] / f.spacing()));
      CHECK(p.moduli[i] == doctest::Approx(oracle::brute_modulus(f.samples(), shift)).epsilon(1e-14));
      CHECK(p.ratios[i] == doctest::Approx(p.moduli[i] / std::sqrt(p.deltas[i])));
    }
    CHECK(p.deltas.front() == doctest::Approx(kPi));
    CHECK(p.deltas.back() == doctest::Approx(f.spacing()));
  }

  TEST_CASE("lacunary witness: bounded Holder constant, linear seminorm growth") {
    std::vector<double> constants;
    for (int m = 4; m <= 12; ++m) {
      const GridFunction f = lacunary_witness(m, 16384);
      constants.push_back(holder_profile(f).constant);
      CHECK(std::abs(seminorm_fourier(analyze(f)).squared() - m) <= 1e-9);
    }
    const auto [lo, hi] = std::minmax_element(constants.begin(), constants.end());
    MESSAGE("Holder constants for M = 4..12 lie in [" << *lo << ", " << *hi << "]");
    CHECK(*hi / *lo < 1.5);
    // Later terms barely move the constant.
    CHECK(std::abs(constants.back() - constants[constants.size() - 2]) / constants.back() < 0.02);
  }

  TEST_CASE("translation-average identity") {
    const GridFunction e = GridFunction::from_function(64, [](double t) { return std::polar(1.0, t); });
    const auto id = CircleHomeomorphism::identity();
    const IdentityCheck one = lemma2_identity_check(e, id, 1, 64);
    CHECK(one.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.rhs == doctest::Approx(1.0).epsilon(1e-12));
    const IdentityCheck two = lemma2_identity_check(e, id, 2, 64);
    CHECK(std::abs(two.lhs) <= 1e-12);
    CHECK(std::abs(two.rhs) <= 1e-12);

    Rng rng(61);
    for (int trial = 0; trial < 3; ++trial) {
      const GridFunction x = random_trig_polynomial(rng, 8, 1024);
      const CircleHomeomorphism phi = random_smooth_homeomorphism(rng, 256);
      for (int nu : {0, 1, -1, 5, -5}) CHECK(std::abs(lemma2_identity_check(x, phi, nu, 512).residual()) <= 1e-6);
    }
  }

  TEST_CASE("translation-average identity for a continuous non-injective map") {
    Rng rng(62);
    const GridFunction x = random_trig_polynomial(rng, 6, 512);
    std::vector<double> phi(512);
    for (std::size_t j = 0; j < 512; ++j) phi[j] = 2.0 * std::sin(oracle::node(j, 512));
    for (int nu : {0, 3, -2}) CHECK(std::abs(lemma2_identity_check(x, phi, nu, 256).residual()) <= 1e-6);
    CHECK(error_of([&] { lemma2_identity_check(x, std::span<const double>(phi).first(256), 0, 256); }) ==
          Errc::GridMismatch);
    CHECK(error_of([&] { lemma2_identity_check(x, phi, 0, 16); }) == Errc::InvalidArgument);
    CHECK(error_of([&] { lemma2_identity_check(x, phi, 400, 256); }) == Errc::BandExceedsGrid);
  }

  TEST_CASE("mollification scan") {
    const std::vector<double> deltas = halving_grid(1.0, 1e-5);
    CHECK(deltas.back() <= 1e-5);
    for (std::size_t i = 1; i < deltas.size(); ++i) CHECK(deltas[i] == deltas[i - 1] / 2);

    const MollificationScan h = mollification_scan(FourierSeries::monomial(5), deltas, 64);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double m = std::sin(5 * deltas[i]) / (5 * deltas[i]);
      CHECK(h.values[i] == doctest::Approx(m * m * 5).epsilon(1e-14));
    }
    CHECK(h.limit == 5.0);

    const MollificationScan lac = mollification_scan(lacunary_series(8), deltas, 256);
    CHECK(lac.limit == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(std::abs(lac.values.back() - 8.0) <= 1e-3);
    CHECK(lac.values.back() > lac.values.front());
    for (double v : lac.values) CHECK(v <= lac.limit + 1e-12);
    CHECK(lac.negative_energy == 0.0);

    // S(delta, N) is nondecreasing in the cutoff.
    const MollificationScan low = mollification_scan(lacunary_series(8), deltas, 16);
    for (std::size_t i = 0; i < deltas.size(); ++i) CHECK(low.values[i] <= lac.values[i]);
    CHECK(low.limit == doctest::Approx(5.0));
  }

  TEST_CASE("mollification scan flags a violated bound") {
    const std::vector<double> deltas = halving_grid(1.0, 1e-4);
    const MollificationScan s = mollification_scan(lacunary_series(8), deltas, 256, 2.0);
    REQUIRE(s.first_violation.has_value());
    CHECK(s.values[*s.first_violation] > 4.0);
    if (*s.first_violation > 0) CHECK(s.values[*s.first_violation - 1] <= 4.0);
    const MollificationScan ok = mollification_scan(lacunary_series(8), deltas, 256, 3.0);
    CHECK_FALSE(ok.first_violation.has_value());
  }

  TEST_CASE("mollification scan input errors") {
    const std::vector<double> empty;
    const std::vector<double> rising = {0.1, 0.2};
    const std::vector<double> big = {4.0};
    const FourierSeries c = lacunary_series(3);
    CHECK(error_of([&] { mollification_scan(c, empty, 8); }) == Errc::InvalidArgument);
    CHECK(error_of([&] { mollification_scan(c, rising, 8); }) == Errc::InvalidArgument);
    CHECK(error_of([&] { mollification_scan(c, big, 8); }) == Errc::InvalidArgument);
    CHECK(error_of([&] { halving_grid(1.0, 2.0); }) == Errc::InvalidArgument);
  }

  TEST_CASE("tail mass") {
    for (int k = -64; k <= 64; ++k) {
      if (k == 0) continue;
      CHECK(tail_mass_search(CircleHomeomorphism::identity(), k, 256) == std::abs(k));
      CHECK(tail_mass_search(CircleHomeomorphism::rotation(1.9), k, 256) == std::abs(k));
    }
    CHECK(error_of([] { tail_mass_search(CircleHomeomorphism::identity(), 0, 64); }) == Errc::InvalidArgument);
    // e^{60it} on 64 points aliases to e^{-4it}: mass 4 < 30.
    CHECK(error_of([] { tail_mass_search(CircleHomeomorphism::identity(), 60, 64); }) ==
          Errc::NotReachedAtTruncation);

    Rng rng(63);
    const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 512);
    const TailMassTable t = tail_mass_table(h, 16, 8192);
    CHECK(t.ks.size() == 32u);
    for (std::size_t i = 0; i < t.ks.size(); ++i) CHECK(t.masses[i] >= 1);
    CHECK(t.max_mass == *std::max_element(t.masses.begin(), t.masses.end()));
    MESSAGE("M(16) for a random smooth map: " << t.max_mass);
  }

  TEST_CASE("average inequality") {
    const auto id = CircleHomeomorphism::identity();
    const IdentityCheck e = theorem2_average_inequality(FourierSeries::monomial(1), id, 1, 64, 10, 64);
    CHECK(e.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.rhs == doctest::Approx(1.0).epsilon(1e-12));
    const IdentityCheck c = theorem2_average_inequality(FourierSeries::monomial(0, 2.0), id, 4, 64, 10, 64);
    CHECK(std::abs(c.lhs) <= 1e-12);
    CHECK(std::abs(c.rhs) <= 1e-12);

    Rng rng(64);
    for (int trial = 0; trial < 2; ++trial) {
      const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 256);
      const IdentityCheck r = theorem2_average_inequality(lacunary_series(6), h, 32, 128, 511, 1024);
      CHECK(r.lhs >= r.rhs * (1.0 - 1e-4));
    }
  }

  TEST_CASE("translation scan") {
    const FourierSeries f = lacunary_series(5);
    const std::vector<double> thetas = {0.0, 0.5, 2.0, 4.0};
    for (const TranslationRow& row : translation_scan(f, CircleHomeomorphism::identity(), thetas, 256)) {
      CHECK(row.seminorm_sq == doctest::Approx(5.0).epsilon(1e-12));
    }
    Rng rng(65);
    const auto rows = translation_scan(f, random_smooth_homeomorphism(rng, 256), thetas, 1024);
    REQUIRE(rows.size() == 4u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].theta == thetas[i]);
      CHECK(rows[i].seminorm_sq > 0.0);
    }
  }
}
