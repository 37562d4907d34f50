#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "circle_sobolev/fourier.hpp"

namespace circle_sobolev {

/// Fourier W_2^{1/2} seminorm with its profile of partial sums.
struct SeminormReport {
  double value = 0.0;
  int truncation = 0;
  /// partials[m-1] = sum_{|k|<=m} |c(k)|^2 |k|, m = 1..K.
  std::vector<double> partials;

  double squared() const { return partials.empty() ? 0.0 : partials.back(); }
  /// Partial sum at frequency m (0 for m <= 0, saturates past K).
  double partial(int m) const;
};

/// (sum |c(k)|^2 |k|)^{1/2} over the whole band of c.
SeminormReport seminorm_fourier(const FourierSeries& c);

/// (int int_{[0,2pi]^2} |f(x)-f(y)|^2 / |x-y|^2 dx dy)^{1/2} by the midpoint
/// rule on a Q x Q grid. |x-y| is the plain distance on the square, and the
/// diagonal cells are omitted. ResolutionTooLow when Q < N.
double seminorm_double_integral(const GridFunction& f, std::size_t resolution);

/// Same quadrature applied to explicit values at the Q cell midpoints
/// x_a = (a + 1/2) 2pi/Q.
double double_integral_from_midpoints(std::span<const Complex> midpoint_values);

/// Midpoint values of the trigonometric interpolant of f on a Q-cell grid.
std::vector<Complex> midpoint_samples(const GridFunction& f, std::size_t resolution);

/// (sum |c(k)|^2 (|k| + 1))^{1/2}.
double banach_norm(const FourierSeries& c);

/// (seminorm_double_integral(|f|), seminorm_double_integral(f)). The modulus
/// is taken at the quadrature nodes, so the first entry never exceeds the
/// second beyond rounding.
std::pair<double, double> abs_contraction_check(const GridFunction& f, std::size_t resolution);

/// Growth of the partial sums across the frequency window [lo, hi], per
/// octave: (P(hi) - P(lo)) / log2(hi / lo).
double window_slope(const SeminormReport& report, int lo, int hi);

/// Per-octave slopes over the dyadic windows [2^j, 2^{j+1}] inside the band.
std::vector<double> dyadic_slopes(const SeminormReport& report);

}  // namespace circle_sobolev
