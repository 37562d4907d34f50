#include "circle_sobolev/families.hpp"

#include <cmath>
#include <numbers>

#include "circle_sobolev/error.hpp"

namespace circle_sobolev {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, bool probability)
    : atoms_(std::move(atoms)), probability_(probability) {
  for (Atom& a : atoms_) {
    if (!std::isfinite(a.position) || !std::isfinite(a.weight)) {
      throw Error(Errc::InvalidArgument, "measure atoms must be finite");
    }
    a.position -= std::floor(a.position / kTwoPi) * kTwoPi;
    if (a.position >= kTwoPi) a.position -= kTwoPi;
  }
}

DiscreteMeasure DiscreteMeasure::probability(std::vector<Atom> atoms) {
  if (atoms.empty()) throw Error(Errc::InvalidArgument, "probability measure needs an atom");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (a.weight < 0.0) throw Error(Errc::InvalidArgument, "probability weights must be nonnegative");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(Errc::InvalidArgument, "probability weights must sum to 1");
  }
  return DiscreteMeasure(std::move(atoms), true);
}

DiscreteMeasure DiscreteMeasure::signed_measure(std::vector<Atom> atoms) {
  return DiscreteMeasure(std::move(atoms), false);
}

DiscreteMeasure DiscreteMeasure::unit_mass(double position) {
  return probability({Atom{position, 1.0}});
}

double DiscreteMeasure::total_variation() const {
  double tv = 0.0;
  for (const Atom& a : atoms_) tv += std::abs(a.weight);
  return tv;
}

Mollifier::Mollifier(double half_width) : half_width_(half_width) {
  if (!(half_width > 0.0) || half_width > std::numbers::pi) {
    throw Error(Errc::InvalidArgument, "mollifier half-width must lie in (0, pi]");
  }
}

double Mollifier::multiplier(int k) const {
  if (k == 0) return 1.0;
  const double x = k * half_width_;
  return std::sin(x) / x;
}

FourierSeries translate(const FourierSeries& f, double theta) {
  FourierSeries out(f.max_frequency());
  for (int k = -f.max_frequency(); k <= f.max_frequency(); ++k) {
    out.at(k) = f[k] * std::polar(1.0, k * theta);
  }
  return out;
}

FourierSeries measure_fourier(const DiscreteMeasure& measure, int max_frequency) {
  FourierSeries out(max_frequency);
  for (int k = -max_frequency; k <= max_frequency; ++k) {
    Complex s = 0.0;
    for (const Atom& a : measure.atoms()) s += a.weight * std::polar(1.0, -k * a.position);
    out.at(k) = s;
  }
  return out;
}

FourierSeries convolve(const FourierSeries& f, const DiscreteMeasure& measure) {
  const FourierSeries m = measure_fourier(measure, f.max_frequency());
  FourierSeries out(f.max_frequency());
  for (int k = -f.max_frequency(); k <= f.max_frequency(); ++k) out.at(k) = f[k] * m[-k];
  return out;
}

FourierSeries mollify(const FourierSeries& f, double half_width) {
  const Mollifier kernel(half_width);
  FourierSeries out(f.max_frequency());
  for (int k = -f.max_frequency(); k <= f.max_frequency(); ++k) {
    out.at(k) = f[k] * kernel.multiplier(k);
  }
  return out;
}

}  // namespace circle_sobolev
