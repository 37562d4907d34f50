#include "circle_sobolev/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/seminorm.hpp"

namespace circle_sobolev {

double total_variation(const GridFunction& f) {
  const std::size_t n = f.size();
  double tv = 0.0;
  for (std::size_t j = 0; j < n; ++j) tv += std::abs(f[(j + 1) % n] - f[j]);
  return tv;
}

BVFunction::BVFunction(GridFunction base)
    : base_(std::move(base)), total_variation_(circle_sobolev::total_variation(base_)) {}

Complex stieltjes_sum(const GridFunction& x, const GridFunction& y) {
  if (x.size() != y.size()) {
    throw Error(Errc::GridMismatch, "pairing grids " + std::to_string(x.size()) + " and " +
                                        std::to_string(y.size()) + " differ");
  }
  const std::size_t n = x.size();
  Complex sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t next = (j + 1) % n;
    sum += 0.5 * (x[j] + x[next]) * (y[next] - y[j]);
  }
  return sum / kTwoPi;
}

Complex pairing(const GridFunction& x, const BVFunction& y, const PairingOptions& options) {
  if (x.size() != y.base().size()) {
    throw Error(Errc::GridMismatch, "pairing grids " + std::to_string(x.size()) + " and " +
                                        std::to_string(y.base().size()) + " differ");
  }
  if (y.total_variation() == 0.0) return 0.0;
  if (!options.refine) return stieltjes_sum(x, y.base());

  // For smooth data the Stieltjes sum has an error expansion in even powers of
  // the spacing, so halving the spacing feeds a Romberg table.
  std::vector<std::vector<Complex>> table;
  const FourierSeries cx = analyze(x);
  const FourierSeries cy = analyze(y.base());
  std::size_t n = x.size();
  Complex best = 0.0;
  for (int level = 0; level <= options.max_levels; ++level, n *= 2) {
    const GridFunction xs = synthesize(cx, n);
    const GridFunction ys = synthesize(cy, n);
    std::vector<Complex> row{stieltjes_sum(xs, ys)};
    double factor = 4.0;
    for (int m = 1; m <= level; ++m, factor *= 4.0) {
      const Complex fine = row[static_cast<std::size_t>(m - 1)];
      const Complex coarse = table.back()[static_cast<std::size_t>(m - 1)];
      row.push_back(fine + (fine - coarse) / (factor - 1.0));
    }
    const Complex current = row.back();
    if (level > 0) {
      const double scale = std::max(1.0, std::abs(current));
      if (std::abs(current - best) < options.tolerance * scale) return current;
    }
    best = current;
    table.push_back(std::move(row));
  }
  return best;
}

Complex pairing_spectral(const FourierSeries& cx, const FourierSeries& cy) {
  const int band = std::min(cx.max_frequency(), cy.max_frequency());
  Complex sum = 0.0;
  for (int k = -band; k <= band; ++k) sum += cx[-k] * Complex(0.0, k) * cy[k];
  return sum;
}

std::pair<double, double> pairing_bound_check(const FourierSeries& cx, const FourierSeries& cy) {
  return {std::abs(pairing_spectral(cx, cy)), seminorm_fourier(cx).value * seminorm_fourier(cy).value};
}

FourierSeries conjugate_flip(const FourierSeries& c) {
  FourierSeries out(c.max_frequency());
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) out.at(k) = std::conj(c[-k]);
  return out;
}

std::pair<Complex, Complex> invariance_check(const GridFunction& x, const BVFunction& y,
                                             const CircleHomeomorphism& h,
                                             const PairingOptions& options) {
  if (x.size() != y.base().size()) {
    throw Error(Errc::GridMismatch, "pairing grids differ");
  }
  const GridFunction xh = compose(x, h);
  const BVFunction yh(compose(y.base(), h));
  return {pairing(xh, yh, options), pairing(x, y, options)};
}

}  // namespace circle_sobolev
