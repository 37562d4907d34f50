#pragma once

#include <vector>

#include "circle_sobolev/fourier.hpp"

namespace circle_sobolev {

struct Atom {
  double position;  ///< theta in [0, 2pi)
  double weight;
};

/// Finite atomic measure on the circle. Probability measures have nonnegative
/// weights summing to one; signed measures are arbitrary real combinations.
class DiscreteMeasure {
 public:
  static DiscreteMeasure probability(std::vector<Atom> atoms);
  static DiscreteMeasure signed_measure(std::vector<Atom> atoms);
  static DiscreteMeasure unit_mass(double position);

  std::span<const Atom> atoms() const { return atoms_; }
  bool is_probability() const { return probability_; }
  /// sum |w_i|.
  double total_variation() const;

 private:
  DiscreteMeasure(std::vector<Atom> atoms, bool probability);

  std::vector<Atom> atoms_;
  bool probability_;
};

/// Moving average over (-delta, delta); multiplier sin(k delta)/(k delta).
class Mollifier {
 public:
  explicit Mollifier(double half_width);

  double half_width() const { return half_width_; }
  double multiplier(int k) const;

 private:
  double half_width_;
};

/// F_theta(t) = F(t + theta): c(k) -> c(k) e^{ik theta}.
FourierSeries translate(const FourierSeries& f, double theta);

/// lambda^(k) = sum_i w_i e^{-ik theta_i}, |k| <= K.
FourierSeries measure_fourier(const DiscreteMeasure& measure, int max_frequency);

/// (F * lambda)(t) = int F(t + s) dlambda(s), so that F * delta_theta = F_theta.
/// Coefficient-wise F^(k) lambda^(-k).
FourierSeries convolve(const FourierSeries& f, const DiscreteMeasure& measure);

/// F^delta(t) = (1/2delta) int_{-delta}^{delta} F(t + theta) dtheta.
FourierSeries mollify(const FourierSeries& f, double half_width);

}  // namespace circle_sobolev
