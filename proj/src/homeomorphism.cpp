#include "circle_sobolev/homeomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "circle_sobolev/error.hpp"

namespace circle_sobolev {

CircleHomeomorphism::CircleHomeomorphism(std::vector<double> knots_in, std::vector<double> knots_out,
                                         Interpolation interpolation)
    : in_(std::move(knots_in)), out_(std::move(knots_out)), interpolation_(interpolation) {
  canonicalize_and_validate();
  if (interpolation_ == Interpolation::MonotoneCubic) {
    estimate_slopes();
    limit_slopes();
  }
}

CircleHomeomorphism::CircleHomeomorphism(std::vector<double> knots_in, std::vector<double> knots_out,
                                         std::vector<double> slopes)
    : in_(std::move(knots_in)),
      out_(std::move(knots_out)),
      slopes_(std::move(slopes)),
      interpolation_(Interpolation::MonotoneCubic) {
  if (slopes_.size() != in_.size()) {
    throw Error(Errc::InvalidArgument, "one slope per knot is required");
  }
  for (double d : slopes_) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw Error(Errc::InvalidArgument, "homeomorphism slopes must be positive and finite");
    }
  }
  canonicalize_and_validate();
  limit_slopes();
}

CircleHomeomorphism CircleHomeomorphism::identity() { return rotation(0.0); }

CircleHomeomorphism CircleHomeomorphism::rotation(double angle) {
  return CircleHomeomorphism({0.0}, {angle}, Interpolation::Linear);
}

void CircleHomeomorphism::canonicalize_and_validate() {
  const std::size_t m = in_.size();
  if (m == 0 || out_.size() != m) {
    throw Error(Errc::InvalidArgument, "homeomorphism needs matching, nonempty knot arrays");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(in_[i]) || !std::isfinite(out_[i])) {
      throw Error(Errc::InvalidArgument, "non-finite homeomorphism knot");
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(in_[i] > in_[i - 1]) || !(out_[i] > out_[i - 1])) {
      throw Error(Errc::InvalidArgument, "homeomorphism knots must be strictly increasing (index " +
                                             std::to_string(i) + ")");
    }
  }
  if (!(in_.back() - in_.front() < kTwoPi) || !(out_.back() - out_.front() < kTwoPi)) {
    throw Error(Errc::InvalidArgument, "homeomorphism knots must span less than one turn");
  }
  // Wrap inputs into [0, 2pi), shifting images by the same turns (lift rule),
  // then rotate the arrays so the inputs are sorted again.
  for (std::size_t i = 0; i < m; ++i) {
    double turns = std::floor(in_[i] / kTwoPi);
    double t = in_[i] - turns * kTwoPi;
    if (t >= kTwoPi) {
      t -= kTwoPi;
      turns += 1.0;
    }
    in_[i] = t;
    out_[i] -= turns * kTwoPi;
  }
  const auto first = static_cast<std::size_t>(std::min_element(in_.begin(), in_.end()) - in_.begin());
  std::rotate(in_.begin(), in_.begin() + static_cast<std::ptrdiff_t>(first), in_.end());
  std::rotate(out_.begin(), out_.begin() + static_cast<std::ptrdiff_t>(first), out_.end());
  if (!slopes_.empty()) {
    std::rotate(slopes_.begin(), slopes_.begin() + static_cast<std::ptrdiff_t>(first), slopes_.end());
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(in_[i] > in_[i - 1]) || !(out_[i] > out_[i - 1])) {
      throw Error(Errc::InvalidArgument, "homeomorphism knots are not monotone around the circle");
    }
  }
  if (!(min_gap() > 0.0)) {
    throw Error(Errc::InvalidArgument, "homeomorphism images must be strictly increasing");
  }
}

double CircleHomeomorphism::min_gap() const {
  const std::size_t m = out_.size();
  double gap = out_.front() + kTwoPi - out_.back();
  for (std::size_t i = 1; i < m; ++i) gap = std::min(gap, out_[i] - out_[i - 1]);
  return gap;
}

CircleHomeomorphism::Segment CircleHomeomorphism::segment(std::size_t i) const {
  const std::size_t m = in_.size();
  const std::size_t next = (i + 1) % m;
  Segment s{};
  s.t0 = in_[i];
  s.y0 = out_[i];
  s.t1 = next == 0 ? in_[0] + kTwoPi : in_[next];
  s.y1 = next == 0 ? out_[0] + kTwoPi : out_[next];
  if (!slopes_.empty()) {
    s.d0 = slopes_[i];
    s.d1 = slopes_[next];
  }
  return s;
}

void CircleHomeomorphism::estimate_slopes() {
  // Periodic PCHIP: weighted harmonic mean of neighbouring secants.
  const std::size_t m = in_.size();
  slopes_.assign(m, 1.0);
  std::vector<double> width(m), secant(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Segment s = segment(i);
    width[i] = s.t1 - s.t0;
    secant[i] = (s.y1 - s.y0) / width[i];
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m;
    const double w1 = 2.0 * width[i] + width[prev];
    const double w2 = width[i] + 2.0 * width[prev];
    slopes_[i] = (w1 + w2) / (w1 / secant[prev] + w2 / secant[i]);
  }
}

void CircleHomeomorphism::limit_slopes() {
  // Fritsch-Carlson: alpha^2 + beta^2 <= 9 keeps each cubic piece monotone.
  const std::size_t m = in_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Segment s = segment(i);
    const double secant = (s.y1 - s.y0) / (s.t1 - s.t0);
    const double alpha = slopes_[i] / secant;
    const double beta = slopes_[(i + 1) % m] / secant;
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      slopes_[i] = tau * alpha * secant;
      slopes_[(i + 1) % m] = tau * beta * secant;
    }
  }
}

std::size_t CircleHomeomorphism::locate(double s) const {
  const auto it = std::upper_bound(in_.begin(), in_.end(), s);
  return it == in_.begin() ? 0 : static_cast<std::size_t>(it - in_.begin()) - 1;
}

namespace {

struct Hermite {
  double y0, y1, m0, m1;  // m = slope * width

  double value(double u) const {
    const double a = 1.0 - u;
    return (1.0 + 2.0 * u) * a * a * y0 + u * a * a * m0 + u * u * (3.0 - 2.0 * u) * y1 +
           u * u * (u - 1.0) * m1;
  }
  double diff(double u) const {  // d/du
    return (6.0 * u * u - 6.0 * u) * (y0 - y1) + (3.0 * u * u - 4.0 * u + 1.0) * m0 +
           (3.0 * u * u - 2.0 * u) * m1;
  }
};

// Splits a real coordinate into a base period [origin, origin + 2pi) and turns.
std::pair<double, double> reduce(double x, double origin) {
  double turns = std::floor((x - origin) / kTwoPi);
  double s = x - turns * kTwoPi;
  if (s >= origin + kTwoPi) {
    s -= kTwoPi;
    turns += 1.0;
  } else if (s < origin) {
    s += kTwoPi;
    turns -= 1.0;
  }
  return {s, turns};
}

}  // namespace

double CircleHomeomorphism::operator()(double t) const {
  const auto [s, turns] = reduce(t, in_.front());
  const Segment seg = segment(locate(s));
  const double width = seg.t1 - seg.t0;
  const double u = (s - seg.t0) / width;
  double y = 0.0;
  if (interpolation_ == Interpolation::Linear) {
    y = seg.y0 + u * (seg.y1 - seg.y0);
  } else {
    y = Hermite{seg.y0, seg.y1, seg.d0 * width, seg.d1 * width}.value(u);
  }
  return y + turns * kTwoPi;
}

std::vector<double> CircleHomeomorphism::operator()(std::span<const double> points) const {
  std::vector<double> out(points.size());
  std::transform(points.begin(), points.end(), out.begin(), [this](double t) { return (*this)(t); });
  return out;
}

double CircleHomeomorphism::slope_at(double t) const {
  const auto [s, turns] = reduce(t, in_.front());
  const Segment seg = segment(locate(s));
  const double width = seg.t1 - seg.t0;
  if (interpolation_ == Interpolation::Linear) return (seg.y1 - seg.y0) / width;
  const double u = (s - seg.t0) / width;
  return Hermite{seg.y0, seg.y1, seg.d0 * width, seg.d1 * width}.diff(u) / width;
}

double CircleHomeomorphism::inverse_at(double x) const {
  const auto [s, turns] = reduce(x, out_.front());
  const auto it = std::upper_bound(out_.begin(), out_.end(), s);
  const std::size_t i = it == out_.begin() ? 0 : static_cast<std::size_t>(it - out_.begin()) - 1;
  const Segment seg = segment(i);
  const double width = seg.t1 - seg.t0;
  double u = (s - seg.y0) / (seg.y1 - seg.y0);
  if (interpolation_ == Interpolation::MonotoneCubic) {
    // Safeguarded Newton on the monotone cubic piece.
    const Hermite p{seg.y0, seg.y1, seg.d0 * width, seg.d1 * width};
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double r = p.value(u) - s;
      if (r > 0.0) hi = u; else lo = u;
      const double dp = p.diff(u);
      double next = dp > 0.0 ? u - r / dp : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - u) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        u = next;
        break;
      }
      u = next;
    }
  }
  return seg.t0 + u * width + turns * kTwoPi;
}

std::vector<double> CircleHomeomorphism::on_grid(std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = (*this)(GridFunction::node(j, n));
  return out;
}

GridFunction compose(const GridFunction& f, const CircleHomeomorphism& h) {
  const auto points = h.on_grid(f.size());
  bool on_nodes = true;
  for (std::size_t j = 0; j < points.size() && on_nodes; ++j) on_nodes = points[j] == f.node(j);
  if (on_nodes) return f;
  return GridFunction(interpolate(f, points));
}

CircleHomeomorphism compose(const CircleHomeomorphism& outer, const CircleHomeomorphism& inner) {
  // Breakpoints of the composite: inner knots plus preimages of outer knots.
  std::vector<double> knots(inner.knots_in().begin(), inner.knots_in().end());
  for (double o : outer.knots_in()) {
    const double t = inner.inverse_at(o);
    knots.push_back(t - std::floor(t / kTwoPi) * kTwoPi);
  }
  for (double& t : knots) {
    if (t >= kTwoPi) t -= kTwoPi;
  }
  std::sort(knots.begin(), knots.end());
  std::vector<double> unique;
  for (double t : knots) {
    if (unique.empty() || t - unique.back() > 1e-13) unique.push_back(t);
  }
  if (unique.size() > 1 && unique.front() + kTwoPi - unique.back() <= 1e-13) unique.pop_back();

  std::vector<double> values(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) values[i] = outer(inner(unique[i]));
  if (outer.interpolation() == Interpolation::Linear && inner.interpolation() == Interpolation::Linear) {
    return CircleHomeomorphism(std::move(unique), std::move(values), Interpolation::Linear);
  }
  std::vector<double> slopes(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    slopes[i] = outer.slope_at(inner(unique[i])) * inner.slope_at(unique[i]);
  }
  return CircleHomeomorphism(std::move(unique), std::move(values), std::move(slopes));
}

CircleHomeomorphism rotate(const CircleHomeomorphism& h, double angle) {
  std::vector<double> in(h.knots_in().begin(), h.knots_in().end());
  std::vector<double> out(h.knots_out().begin(), h.knots_out().end());
  for (double& y : out) y += angle;
  if (h.interpolation() == Interpolation::Linear) {
    return CircleHomeomorphism(std::move(in), std::move(out), Interpolation::Linear);
  }
  return CircleHomeomorphism(std::move(in), std::move(out),
                             std::vector<double>(h.slopes().begin(), h.slopes().end()));
}

CircleHomeomorphism invert(const CircleHomeomorphism& h) {
  std::vector<double> in(h.knots_out().begin(), h.knots_out().end());
  std::vector<double> out(h.knots_in().begin(), h.knots_in().end());
  if (h.interpolation() == Interpolation::Linear) {
    return CircleHomeomorphism(std::move(in), std::move(out), Interpolation::Linear);
  }
  std::vector<double> slopes(h.slopes().size());
  std::transform(h.slopes().begin(), h.slopes().end(), slopes.begin(), [](double d) { return 1.0 / d; });
  return CircleHomeomorphism(std::move(in), std::move(out), std::move(slopes));
}

double winding_number(const CircleHomeomorphism& h, std::size_t n) {
  const auto values = h.on_grid(n);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex a = std::polar(1.0, values[j]);
    const Complex b = std::polar(1.0, values[(j + 1) % n]);
    total += std::arg(b / a);
  }
  return total / kTwoPi;
}

GridFunction exp_of_homeomorphism(const CircleHomeomorphism& h, int k, std::size_t n) {
  const auto values = h.on_grid(n);
  std::vector<Complex> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = std::polar(1.0, k * values[j]);
  return GridFunction(std::move(s));
}

ExpBoundCheck exp_lower_bound_check(const CircleHomeomorphism& h, int k, std::size_t n) {
  if (k == 0) throw Error(Errc::InvalidArgument, "exponent k must be nonzero");
  const FourierSeries c = analyze(exp_of_homeomorphism(h, k, n));
  const SeminormReport report = seminorm_fourier(c);
  ExpBoundCheck out;
  out.seminorm_sq = report.squared();
  out.bound = std::abs(k);
  const int band = c.max_frequency();
  out.tail_estimate = (report.partial(band) - report.partial(band / 2)) / out.bound;
  out.violated = out.seminorm_sq < out.bound * (1.0 - out.tail_estimate) - 1e-12 * out.bound;
  return out;
}

}  // namespace circle_sobolev
