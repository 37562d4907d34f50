#include "circle_sobolev/random.hpp"

#include <cmath>

#include "circle_sobolev/error.hpp"

namespace circle_sobolev {

FourierSeries random_trig_series(Rng& rng, int degree, bool real_valued) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  FourierSeries c(degree);
  if (real_valued) {
    c.at(0) = unit(rng);
    for (int k = 1; k <= degree; ++k) {
      const double re = unit(rng);
      const double im = unit(rng);
      c.at(k) = Complex(re, im);
      c.at(-k) = Complex(re, -im);
    }
  } else {
    for (int k = -degree; k <= degree; ++k) {
      const double re = unit(rng);
      const double im = unit(rng);
      c.at(k) = Complex(re, im);
    }
  }
  return c;
}

GridFunction random_trig_polynomial(Rng& rng, int degree, std::size_t n, bool real_valued) {
  GridFunction f = synthesize(random_trig_series(rng, degree, real_valued), n);
  return real_valued ? f.real_part() : f;
}

double SmoothLift::operator()(double t) const {
  double y = t;
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    y += amplitudes[j] * std::sin(static_cast<double>(j + 1) * t + phases[j]);
  }
  return y;
}

double SmoothLift::slope(double t) const {
  double d = 1.0;
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    const double freq = static_cast<double>(j + 1);
    d += amplitudes[j] * freq * std::cos(freq * t + phases[j]);
  }
  return d;
}

SmoothLift random_smooth_lift(Rng& rng, int modes) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_real_distribution<double> budget(0.3, 0.9);
  SmoothLift lift;
  double weighted = 0.0;
  for (int j = 1; j <= modes; ++j) {
    lift.amplitudes.push_back(unit(rng));
    lift.phases.push_back(phase(rng));
    weighted += j * std::abs(lift.amplitudes.back());
  }
  const double scale = weighted > 0.0 ? budget(rng) / weighted : 0.0;
  for (double& a : lift.amplitudes) a *= scale;
  return lift;
}

CircleHomeomorphism random_smooth_homeomorphism(Rng& rng, std::size_t knots, int modes) {
  const SmoothLift lift = random_smooth_lift(rng, modes);
  return CircleHomeomorphism::from_lift(
      knots, [&](double t) { return lift(t); }, [&](double t) { return lift.slope(t); });
}

}  // namespace circle_sobolev
