#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace circle_sobolev {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Coefficients below this fraction of the largest one are treated as
/// round-off when a grid function is interpolated off-grid.
inline constexpr double kTrimTolerance = 1e-15;

bool is_power_of_two(std::size_t n);

/// Samples of a function on the uniform periodic grid t_j = 2*pi*j/N.
/// N is a power of two, at least 8, and every sample is finite.
class GridFunction {
 public:
  explicit GridFunction(std::vector<Complex> samples);

  template <class F>
  static GridFunction from_function(std::size_t n, F&& f) {
    std::vector<Complex> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = Complex(f(node(j, n)));
    return GridFunction(std::move(s));
  }

  static double node(std::size_t j, std::size_t n) {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(n);
  }

  std::size_t size() const { return samples_.size(); }
  double node(std::size_t j) const { return node(j, size()); }
  double spacing() const { return kTwoPi / static_cast<double>(size()); }
  std::span<const Complex> samples() const { return samples_; }
  const Complex& operator[](std::size_t j) const { return samples_[j]; }

  bool is_real(double tol = 1e-12) const;
  double sup_norm() const;
  double min_real() const;
  GridFunction modulus() const;
  GridFunction real_part() const;
  GridFunction conj() const;

  friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator*(Complex s, const GridFunction& a);

 private:
  std::vector<Complex> samples_;
};

/// Coefficients c(k), k = -K..K, under c(k) = (1/2pi) int f(t) e^{-ikt} dt.
/// Reading outside the band yields zero.
class FourierSeries {
 public:
  FourierSeries() : FourierSeries(0) {}
  explicit FourierSeries(int max_frequency);
  FourierSeries(int max_frequency, std::vector<Complex> coeffs);

  /// A single harmonic amplitude * e^{ikt} in the smallest band holding it.
  static FourierSeries monomial(int k, Complex amplitude = 1.0);

  int max_frequency() const { return max_frequency_; }
  std::span<const Complex> coefficients() const { return coeffs_; }

  Complex operator[](int k) const {
    if (k < -max_frequency_ || k > max_frequency_) return 0.0;
    return coeffs_[static_cast<std::size_t>(k + max_frequency_)];
  }
  /// Mutable access; throws InvalidArgument outside the band.
  Complex& at(int k);

  /// Zero-extends or truncates to band K.
  FourierSeries with_band(int max_frequency) const;
  /// Largest |k| with |c(k)| > rel_tol * max|c|; 0 for the zero series.
  int effective_band(double rel_tol = kTrimTolerance) const;
  FourierSeries trimmed(double rel_tol = kTrimTolerance) const;
  /// Sum of |c(k)|^2.
  double energy() const;

  friend FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
  friend FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);
  friend FourierSeries operator*(Complex s, const FourierSeries& a);

 private:
  int max_frequency_;
  std::vector<Complex> coeffs_;
};

/// Discrete transform normalized to the (1/2pi) integral convention, band
/// k = -N/2+1 .. N/2-1 (the Nyquist bin is dropped).
FourierSeries analyze(const GridFunction& f);

/// Evaluates sum c(k) e^{ik t_j} on an N-point grid; BandExceedsGrid when
/// 2K+1 > N.
GridFunction synthesize(const FourierSeries& c, std::size_t n);

/// Fejer mean of order M: c(k) (1 - |k|/M) for |k| < M, zero elsewhere.
FourierSeries fejer_sum(const FourierSeries& c, int order);

/// Coefficients of the derivative, ik c(k).
FourierSeries derivative(const FourierSeries& c);

Complex evaluate(const FourierSeries& c, double t);
std::vector<Complex> evaluate(const FourierSeries& c, std::span<const double> points);

/// Trigonometric interpolant of f evaluated at arbitrary points.
std::vector<Complex> interpolate(const GridFunction& f, std::span<const double> points);

/// Trigonometric interpolation onto an n-point grid (exact for band-limited f).
GridFunction resample(const GridFunction& f, std::size_t n);

}  // namespace circle_sobolev
