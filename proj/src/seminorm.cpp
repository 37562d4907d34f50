#include "circle_sobolev/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/parallel.hpp"

namespace circle_sobolev {

double SeminormReport::partial(int m) const {
  if (m <= 0 || partials.empty()) return 0.0;
  const auto idx = static_cast<std::size_t>(std::min<int>(m, static_cast<int>(partials.size())));
  return partials[idx - 1];
}

SeminormReport seminorm_fourier(const FourierSeries& c) {
  SeminormReport report;
  report.truncation = c.max_frequency();
  report.partials.reserve(static_cast<std::size_t>(c.max_frequency()));
  double running = 0.0;
  for (int m = 1; m <= c.max_frequency(); ++m) {
    running += (std::norm(c[m]) + std::norm(c[-m])) * m;
    report.partials.push_back(running);
  }
  report.value = std::sqrt(running);
  return report;
}

std::vector<Complex> midpoint_samples(const GridFunction& f, std::size_t resolution) {
  std::vector<double> points(resolution);
  const double h = kTwoPi / static_cast<double>(resolution);
  for (std::size_t a = 0; a < resolution; ++a) points[a] = (static_cast<double>(a) + 0.5) * h;
  return interpolate(f, points);
}

double double_integral_from_midpoints(std::span<const Complex> values) {
  // Cell area h^2 cancels against |x-y|^2 = (d h)^2, leaving |df|^2 / d^2.
  // Each offset d is summed in index order, then offsets are combined by
  // pairwise reduction, so the result is independent of the block split.
  const std::size_t q = values.size();
  if (q < 2) return 0.0;
  std::vector<double> by_offset(q, 0.0);
  parallel_blocks(q - 1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t d = i + 1;
      double s = 0.0;
      for (std::size_t a = 0; a + d < q; ++a) s += std::norm(values[a] - values[a + d]);
      by_offset[d] = 2.0 * s / (static_cast<double>(d) * static_cast<double>(d));
    }
  });
  for (std::size_t width = 1; width < q; width *= 2) {
    for (std::size_t i = 0; i + width < q; i += 2 * width) by_offset[i] += by_offset[i + width];
  }
  return std::sqrt(by_offset[0]);
}

double seminorm_double_integral(const GridFunction& f, std::size_t resolution) {
  if (resolution < f.size()) {
    throw Error(Errc::ResolutionTooLow, "quadrature resolution " + std::to_string(resolution) +
                                            " below grid size " + std::to_string(f.size()));
  }
  return double_integral_from_midpoints(midpoint_samples(f, resolution));
}

double banach_norm(const FourierSeries& c) {
  double s = 0.0;
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) {
    s += std::norm(c[k]) * (std::abs(k) + 1.0);
  }
  return std::sqrt(s);
}

std::pair<double, double> abs_contraction_check(const GridFunction& f, std::size_t resolution) {
  if (resolution < f.size()) {
    throw Error(Errc::ResolutionTooLow, "quadrature resolution " + std::to_string(resolution) +
                                            " below grid size " + std::to_string(f.size()));
  }
  const auto values = midpoint_samples(f, resolution);
  std::vector<Complex> moduli(values.size());
  std::transform(values.begin(), values.end(), moduli.begin(),
                 [](const Complex& v) { return Complex(std::abs(v)); });
  return {double_integral_from_midpoints(moduli), double_integral_from_midpoints(values)};
}

double window_slope(const SeminormReport& report, int lo, int hi) {
  if (lo < 1 || hi <= lo) throw Error(Errc::InvalidArgument, "window needs 1 <= lo < hi");
  return (report.partial(hi) - report.partial(lo)) / std::log2(static_cast<double>(hi) / lo);
}

std::vector<double> dyadic_slopes(const SeminormReport& report) {
  std::vector<double> out;
  for (int lo = 1; 2 * lo <= report.truncation; lo *= 2) out.push_back(window_slope(report, lo, 2 * lo));
  return out;
}

}  // namespace circle_sobolev
