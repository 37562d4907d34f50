#include "circle_sobolev/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/parallel.hpp"
#include "fft.hpp"

namespace circle_sobolev {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// ---------------------------------------------------------------- GridFunction

GridFunction::GridFunction(std::vector<Complex> samples) : samples_(std::move(samples)) {
  const std::size_t n = samples_.size();
  if (n < 8 || !is_power_of_two(n)) {
    throw Error(Errc::InvalidArgument,
                "grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  for (const auto& s : samples_) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw Error(Errc::InvalidArgument, "grid function has a non-finite sample");
    }
  }
}

bool GridFunction::is_real(double tol) const {
  const double scale = std::max(1.0, sup_norm());
  return std::all_of(samples_.begin(), samples_.end(),
                     [&](const Complex& s) { return std::abs(s.imag()) <= tol * scale; });
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s));
  return m;
}

double GridFunction::min_real() const {
  double m = samples_.front().real();
  for (const auto& s : samples_) m = std::min(m, s.real());
  return m;
}

GridFunction GridFunction::modulus() const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const Complex& s) { return Complex(std::abs(s)); });
  return GridFunction(std::move(out));
}

GridFunction GridFunction::real_part() const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const Complex& s) { return Complex(s.real()); });
  return GridFunction(std::move(out));
}

GridFunction GridFunction::conj() const {
  std::vector<Complex> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const Complex& s) { return std::conj(s); });
  return GridFunction(std::move(out));
}

namespace {
void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::GridMismatch, "grid sizes " + std::to_string(a.size()) + " and " +
                                        std::to_string(b.size()) + " differ");
  }
}
}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return GridFunction(std::move(out));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return GridFunction(std::move(out));
}

GridFunction operator*(Complex s, const GridFunction& a) {
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = s * a[j];
  return GridFunction(std::move(out));
}

// --------------------------------------------------------------- FourierSeries

FourierSeries::FourierSeries(int max_frequency)
    : max_frequency_(max_frequency),
      coeffs_(static_cast<std::size_t>(2 * std::max(max_frequency, 0) + 1)) {
  if (max_frequency < 0) throw Error(Errc::InvalidArgument, "negative max frequency");
}

FourierSeries::FourierSeries(int max_frequency, std::vector<Complex> coeffs)
    : max_frequency_(max_frequency), coeffs_(std::move(coeffs)) {
  if (max_frequency < 0) throw Error(Errc::InvalidArgument, "negative max frequency");
  if (coeffs_.size() != static_cast<std::size_t>(2 * max_frequency + 1)) {
    throw Error(Errc::InvalidArgument, "coefficient vector length must be 2K+1");
  }
}

FourierSeries FourierSeries::monomial(int k, Complex amplitude) {
  FourierSeries s(std::abs(k));
  s.at(k) = amplitude;
  return s;
}

Complex& FourierSeries::at(int k) {
  if (k < -max_frequency_ || k > max_frequency_) {
    throw Error(Errc::InvalidArgument, "frequency " + std::to_string(k) + " outside band " +
                                           std::to_string(max_frequency_));
  }
  return coeffs_[static_cast<std::size_t>(k + max_frequency_)];
}

FourierSeries FourierSeries::with_band(int max_frequency) const {
  FourierSeries out(max_frequency);
  const int common = std::min(max_frequency, max_frequency_);
  for (int k = -common; k <= common; ++k) out.at(k) = (*this)[k];
  return out;
}

int FourierSeries::effective_band(double rel_tol) const {
  double peak = 0.0;
  for (const auto& c : coeffs_) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0;
  const double floor = rel_tol * peak;
  for (int k = max_frequency_; k > 0; --k) {
    if (std::abs((*this)[k]) > floor || std::abs((*this)[-k]) > floor) return k;
  }
  return 0;
}

FourierSeries FourierSeries::trimmed(double rel_tol) const {
  return with_band(effective_band(rel_tol));
}

double FourierSeries::energy() const {
  double e = 0.0;
  for (const auto& c : coeffs_) e += std::norm(c);
  return e;
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
  const int band = std::max(a.max_frequency(), b.max_frequency());
  FourierSeries out(band);
  for (int k = -band; k <= band; ++k) out.at(k) = a[k] + b[k];
  return out;
}

FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) {
  return a + Complex(-1.0) * b;
}

FourierSeries operator*(Complex s, const FourierSeries& a) {
  FourierSeries out(a.max_frequency());
  for (int k = -a.max_frequency(); k <= a.max_frequency(); ++k) out.at(k) = s * a[k];
  return out;
}

// ------------------------------------------------------------------ transforms

FourierSeries analyze(const GridFunction& f) {
  const std::size_t n = f.size();
  std::vector<Complex> buf(f.samples().begin(), f.samples().end());
  detail::fft_forward(buf);
  const int band = static_cast<int>(n / 2) - 1;
  FourierSeries out(band);
  const double scale = 1.0 / static_cast<double>(n);
  for (int k = -band; k <= band; ++k) {
    const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k);
    out.at(k) = buf[idx] * scale;
  }
  return out;
}

GridFunction synthesize(const FourierSeries& c, std::size_t n) {
  const int band = c.max_frequency();
  if (static_cast<std::size_t>(2 * band + 1) > n) {
    throw Error(Errc::BandExceedsGrid, "band " + std::to_string(band) + " does not fit grid " +
                                           std::to_string(n));
  }
  if (n < 8 || !is_power_of_two(n)) {
    throw Error(Errc::InvalidArgument, "grid size must be a power of two >= 8");
  }
  std::vector<Complex> buf(n);
  for (int k = -band; k <= band; ++k) {
    const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k);
    buf[idx] = c[k];
  }
  detail::fft_backward(buf);
  return GridFunction(std::move(buf));
}

FourierSeries fejer_sum(const FourierSeries& c, int order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "Fejer order must be >= 1");
  FourierSeries out(c.max_frequency());
  const int reach = std::min(order - 1, c.max_frequency());
  for (int k = -reach; k <= reach; ++k) {
    out.at(k) = c[k] * (1.0 - std::abs(k) / static_cast<double>(order));
  }
  return out;
}

FourierSeries derivative(const FourierSeries& c) {
  FourierSeries out(c.max_frequency());
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) {
    out.at(k) = Complex(0.0, k) * c[k];
  }
  return out;
}

Complex evaluate(const FourierSeries& c, double t) {
  // Horner in z = e^{it} on the shifted polynomial, then undo the shift.
  const int band = c.max_frequency();
  const auto coeffs = c.coefficients();
  const Complex z = std::polar(1.0, t);
  Complex acc = coeffs.back();
  for (std::size_t m = coeffs.size() - 1; m-- > 0;) acc = acc * z + coeffs[m];
  return acc * std::polar(1.0, -static_cast<double>(band) * t);
}

std::vector<Complex> evaluate(const FourierSeries& c, std::span<const double> points) {
  std::vector<Complex> out(points.size());
  parallel_blocks(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = evaluate(c, points[i]);
  });
  return out;
}

std::vector<Complex> interpolate(const GridFunction& f, std::span<const double> points) {
  return evaluate(analyze(f).trimmed(), points);
}

GridFunction resample(const GridFunction& f, std::size_t n) {
  if (n == f.size()) return f;
  FourierSeries c = analyze(f);
  const int target = static_cast<int>(n / 2) - 1;
  if (c.max_frequency() > target) c = c.with_band(target);
  return synthesize(c, n);
}

}  // namespace circle_sobolev
