#pragma once

#include <utility>

#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"

namespace circle_sobolev {

/// A grid function viewed as an integrator of bounded variation.
class BVFunction {
 public:
  explicit BVFunction(GridFunction base);

  const GridFunction& base() const { return base_; }
  /// sum_j |y(t_{j+1}) - y(t_j)| with wraparound; zero iff the samples are constant.
  double total_variation() const { return total_variation_; }

 private:
  GridFunction base_;
  double total_variation_;
};

double total_variation(const GridFunction& f);

struct PairingOptions {
  /// Refine by trigonometric upsampling and Romberg extrapolation. Off means
  /// a single Stieltjes sum on the native grid.
  bool refine = true;
  /// Grid doublings allowed beyond the native grid.
  int max_levels = 5;
  /// Stop once successive extrapolated values differ by less than
  /// tolerance * max(1, |value|).
  double tolerance = 1e-13;
};

/// (1/2pi) sum_j x(mid_j) (y(t_{j+1}) - y(t_j)) with x at the cell midpoint by
/// linear interpolation; the plain Riemann-Stieltjes sum on the native grid.
Complex stieltjes_sum(const GridFunction& x, const GridFunction& y);

/// B(x, y) = (1/2pi) int x dy. GridMismatch when the grids differ.
Complex pairing(const GridFunction& x, const BVFunction& y, const PairingOptions& options = {});

/// sum_k cx(-k) ik cy(k) over the shared band.
Complex pairing_spectral(const FourierSeries& cx, const FourierSeries& cy);

/// (|pairing_spectral(cx, cy)|, ||cx|| ||cy||) in the Fourier seminorm.
std::pair<double, double> pairing_bound_check(const FourierSeries& cx, const FourierSeries& cy);

/// Coefficients of the complex conjugate function: c(k) -> conj(c(-k)).
FourierSeries conjugate_flip(const FourierSeries& c);

/// (B(x o h, y o h), B(x, y)).
std::pair<Complex, Complex> invariance_check(const GridFunction& x, const BVFunction& y,
                                             const CircleHomeomorphism& h,
                                             const PairingOptions& options = {});

}  // namespace circle_sobolev
