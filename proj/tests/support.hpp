#pragma once

// Test helpers and independent reference computations. Nothing here calls
// into the library's transforms or quadratures.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/fourier.hpp"

namespace oracle {

using circle_sobolev::Complex;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Error tag thrown by f, or nullopt if it returns normally.
inline std::optional<circle_sobolev::Errc> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const circle_sobolev::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline double node(std::size_t j, std::size_t n) { return kTwoPi * static_cast<double>(j) / static_cast<double>(n); }

// (1/N) sum_j f_j e^{-ik t_j}, term by term.
inline Complex dft(std::span<const Complex> f, int k) {
  Complex s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) s += f[j] * std::polar(1.0, -k * node(j, f.size()));
  return s / static_cast<double>(f.size());
}

inline Complex trig_sum(const std::map<int, Complex>& c, double t) {
  Complex s = 0.0;
  for (const auto& [k, v] : c) s += v * std::polar(1.0, k * t);
  return s;
}

inline std::map<int, Complex> as_map(const circle_sobolev::FourierSeries& c) {
  std::map<int, Complex> m;
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) {
    if (c[k] != Complex(0.0)) m[k] = c[k];
  }
  return m;
}

inline double seminorm_sq(const std::map<int, Complex>& c) {
  double s = 0.0;
  for (const auto& [k, v] : c) s += std::norm(v) * std::abs(k);
  return s;
}

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& g, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = g(a) + g(b);
  for (int i = 1; i < panels; ++i) s += g(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Square of the double-integral seminorm of e^{it} over [0, 2pi]^2 with plain
// |x - y|: integrate along u = x - y, (2pi - |u|) |e^{iu} - 1|^2 / u^2.
inline double exp_it_double_integral_sq() {
  auto g = [](double u) {
    if (u == 0.0) return kTwoPi;
    const double s = 2.0 * std::sin(0.5 * u);
    return (kTwoPi - u) * s * s / (u * u);
  };
  return 2.0 * simpson(g, 0.0, kTwoPi, 200000);
}

// Cell-midpoint quadrature of the double integral, every off-diagonal pair
// visited explicitly.
inline double brute_double_integral(std::span<const Complex> v) {
  const std::size_t q = v.size();
  const double h = kTwoPi / static_cast<double>(q);
  double s = 0.0;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      const double d = (static_cast<double>(a) - static_cast<double>(b)) * h;
      s += std::norm(v[a] - v[b]) / (d * d);
    }
  }
  return std::sqrt(s * h * h);
}

// Shoelace area of the closed polygon through the given points.
inline double shoelace(std::span<const Complex> p) {
  double twice = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Complex a = p[j];
    const Complex b = p[(j + 1) % p.size()];
    twice += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice;
}

// Largest |f_i - f_j| over grid pairs at circular index distance <= d.
inline double brute_modulus(std::span<const Complex> f, std::size_t d) {
  const std::size_t n = f.size();
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (std::min(gap, n - gap) <= d) m = std::max(m, std::abs(f[i] - f[j]));
    }
  }
  return m;
}

}  // namespace oracle
