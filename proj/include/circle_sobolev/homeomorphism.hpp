#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/seminorm.hpp"

namespace circle_sobolev {

enum class Interpolation {
  Linear,         ///< piecewise linear between knots
  MonotoneCubic,  ///< cubic Hermite with Fritsch-Carlson limited slopes
};

/// Orientation-preserving, degree-one self-homeomorphism of the circle,
/// stored through its lift: knots t_0 < ... < t_{m-1} in [0, 2pi) and
/// strictly increasing images with h(t_0 + 2pi) = h(t_0) + 2pi.
///
/// Between knots the lift is either piecewise linear or a monotone cubic
/// Hermite spline. The cubic form keeps composition accurate to O(gap^4)
/// for smooth maps, which the linear form cannot (O(gap^2)).
class CircleHomeomorphism {
 public:
  /// Any lift-consistent knot set is accepted; knots are wrapped into
  /// [0, 2pi) and rotated into order. Cubic slopes are estimated.
  CircleHomeomorphism(std::vector<double> knots_in, std::vector<double> knots_out,
                      Interpolation interpolation = Interpolation::Linear);
  /// Cubic Hermite with caller-supplied positive slopes.
  CircleHomeomorphism(std::vector<double> knots_in, std::vector<double> knots_out,
                      std::vector<double> slopes);

  static CircleHomeomorphism identity();
  static CircleHomeomorphism rotation(double angle);

  /// Samples a smooth increasing lift (with derivative) at m uniform knots.
  template <class Lift, class Slope>
  static CircleHomeomorphism from_lift(std::size_t m, Lift&& lift, Slope&& slope) {
    std::vector<double> in(m), out(m), d(m);
    for (std::size_t i = 0; i < m; ++i) {
      in[i] = GridFunction::node(i, m);
      out[i] = lift(in[i]);
      d[i] = slope(in[i]);
    }
    return CircleHomeomorphism(std::move(in), std::move(out), std::move(d));
  }

  /// Lift value at any real t.
  double operator()(double t) const;
  std::vector<double> operator()(std::span<const double> points) const;
  /// Derivative of the lift (right derivative at knots).
  double slope_at(double t) const;
  /// Lift of the inverse map at any real x.
  double inverse_at(double x) const;

  /// Values h(t_j) on the uniform n-point grid.
  std::vector<double> on_grid(std::size_t n) const;

  std::span<const double> knots_in() const { return in_; }
  std::span<const double> knots_out() const { return out_; }
  std::span<const double> slopes() const { return slopes_; }
  Interpolation interpolation() const { return interpolation_; }
  std::size_t knot_count() const { return in_.size(); }
  /// Smallest gap between consecutive images, including the wrap segment.
  double min_gap() const;

 private:
  struct Segment {
    double t0, t1, y0, y1, d0, d1;
  };
  CircleHomeomorphism() = default;
  void canonicalize_and_validate();
  void estimate_slopes();
  void limit_slopes();
  Segment segment(std::size_t i) const;
  std::size_t locate(double s) const;

  std::vector<double> in_, out_, slopes_;
  Interpolation interpolation_ = Interpolation::Linear;
};

/// Samples f(h(t_j)), with f read through its trigonometric interpolant.
GridFunction compose(const GridFunction& f, const CircleHomeomorphism& h);

/// The map t -> outer(inner(t)).
CircleHomeomorphism compose(const CircleHomeomorphism& outer, const CircleHomeomorphism& inner);

/// h + angle.
CircleHomeomorphism rotate(const CircleHomeomorphism& h, double angle);

CircleHomeomorphism invert(const CircleHomeomorphism& h);

/// Number of turns of e^{i h} around the origin, from the argument increments
/// on an n-point grid.
double winding_number(const CircleHomeomorphism& h, std::size_t n);

/// Samples e^{i k h(t_j)}.
GridFunction exp_of_homeomorphism(const CircleHomeomorphism& h, int k, std::size_t n);

struct ExpBoundCheck {
  double seminorm_sq = 0.0;    ///< ||e^{ikh}||^2 at the grid truncation
  double bound = 0.0;          ///< |k|
  double tail_estimate = 0.0;  ///< weighted mass in the top octave, relative to |k|
  bool violated = false;
};

/// Compares ||e^{ikh}||^2 against |k|. A violation is flagged only if the
/// deficit exceeds the estimated truncation tail.
ExpBoundCheck exp_lower_bound_check(const CircleHomeomorphism& h, int k, std::size_t n);

}  // namespace circle_sobolev
