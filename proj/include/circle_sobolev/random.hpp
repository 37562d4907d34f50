#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"

namespace circle_sobolev {

/// The single PRNG stream used for every randomized input.
using Rng = std::mt19937_64;

/// Coefficients uniform in the unit square for |k| <= degree. Real-valued
/// series get Hermitian symmetry and a real constant term.
FourierSeries random_trig_series(Rng& rng, int degree, bool real_valued = false);

GridFunction random_trig_polynomial(Rng& rng, int degree, std::size_t n, bool real_valued = false);

/// Lift t + sum_j a_j sin(j t + phi_j) with sum_j j |a_j| = budget < 1, which
/// keeps the derivative above 1 - budget.
struct SmoothLift {
  std::vector<double> amplitudes;  // a_1, a_2, ...
  std::vector<double> phases;

  double operator()(double t) const;
  double slope(double t) const;
};

SmoothLift random_smooth_lift(Rng& rng, int modes = 3);

/// Monotone cubic knot map sampling a random smooth lift at `knots` uniform
/// points with exact slopes.
CircleHomeomorphism random_smooth_homeomorphism(Rng& rng, std::size_t knots, int modes = 3);

}  // namespace circle_sobolev
