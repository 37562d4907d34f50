#include "circle_sobolev/bohr_pal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <optional>
#include <string>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/families.hpp"
#include "fft.hpp"

namespace circle_sobolev {

Positivized positivize(const GridFunction& f) {
  if (!f.is_real()) throw Error(Errc::NotRealValued, "positivize needs a real-valued function");
  const GridFunction real = f.real_part();
  const double offset = std::max(0.0, 1.0 - real.min_real());
  std::vector<Complex> shifted(real.samples().begin(), real.samples().end());
  for (auto& v : shifted) v += offset;
  return {GridFunction(std::move(shifted)), offset};
}

// ------------------------------------------------------------------ StarCurve

StarCurve::StarCurve(GridFunction radius) : radius_(std::move(radius)) {
  if (!radius_.is_real()) throw Error(Errc::NotRealValued, "star curve radius must be real");
  if (!(radius_.min_real() > 0.0)) {
    throw Error(Errc::StarConditionViolated, "star curve radius must be strictly positive");
  }
  series_ = analyze(radius_.real_part()).trimmed();
}

std::vector<Complex> StarCurve::samples() const {
  std::vector<Complex> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = radius_[j].real() * std::polar(1.0, radius_.node(j));
  return out;
}

double StarCurve::polygon_area(std::size_t vertices) const {
  if (vertices < 3) throw Error(Errc::InvalidArgument, "polygon needs at least 3 vertices");
  std::vector<double> s(vertices);
  for (std::size_t i = 0; i < vertices; ++i) s[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(vertices);
  const auto rho = evaluate(series_, s);
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices; ++i) {
    const std::size_t next = (i + 1) % vertices;
    const Complex a = rho[i].real() * std::polar(1.0, s[i]);
    const Complex b = rho[next].real() * std::polar(1.0, s[next]);
    twice += a.real() * b.imag() - a.imag() * b.real();
  }
  return 0.5 * twice;
}

std::string_view to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::Theodorsen: return "theodorsen";
    case SolverMethod::Newton: return "newton";
    case SolverMethod::SzegoKernel: return "szego";
    case SolverMethod::Automatic: return "automatic";
  }
  return "unknown";
}

double BoundaryCorrespondence::negative_energy() const {
  double e = 0.0;
  for (int n = 1; n <= g_coeffs.max_frequency(); ++n) e += std::norm(g_coeffs[-n]);
  return e;
}

double BoundaryCorrespondence::analytic_residual() const {
  const double total = g_coeffs.energy();
  return total > 0.0 ? negative_energy() / total : 0.0;
}

double AreaCheck::relative_difference() const {
  return std::abs(spectral - shoelace) / std::abs(shoelace);
}

// ------------------------------------------------------------------- solver

namespace {

/// Periodic conjugation K: e^{ikt} -> -i sgn(k) e^{ikt}, Nyquist bin dropped.
std::vector<double> conjugate(std::span<const double> u) {
  const std::size_t n = u.size();
  std::vector<Complex> buf(u.begin(), u.end());
  detail::fft_forward(buf);
  buf[0] = 0.0;
  buf[n / 2] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    buf[k] *= Complex(0.0, -1.0);
    buf[n - k] *= Complex(0.0, 1.0);
  }
  detail::fft_backward(buf);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real() / static_cast<double>(n);
  return out;
}

/// Derivative of a periodic real sequence via its spectrum.
std::vector<double> spectral_derivative(std::span<const double> u) {
  const std::size_t n = u.size();
  std::vector<Complex> buf(u.begin(), u.end());
  detail::fft_forward(buf);
  buf[n / 2] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    buf[k] *= Complex(0.0, static_cast<double>(k));
    buf[n - k] *= Complex(0.0, -static_cast<double>(k));
  }
  buf[0] = 0.0;
  detail::fft_backward(buf);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real() / static_cast<double>(n);
  return out;
}

bool strictly_increasing(std::span<const double> theta) {
  for (std::size_t j = 1; j < theta.size(); ++j) {
    if (!(theta[j] > theta[j - 1])) return false;
  }
  return theta.back() < theta.front() + kTwoPi;
}

class TheodorsenEquation {
 public:
  explicit TheodorsenEquation(const StarCurve& curve)
      : n_(curve.size()), rho_(curve.radius_series()), drho_(derivative(rho_)), nodes_(n_) {
    for (std::size_t j = 0; j < n_; ++j) nodes_[j] = GridFunction::node(j, n_);
  }

  std::size_t size() const { return n_; }
  std::span<const double> nodes() const { return nodes_; }

  /// log rho(theta_j); StarConditionViolated where the interpolant is not positive.
  std::vector<double> log_radius(std::span<const double> theta) const {
    const auto rho = evaluate(rho_, theta);
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(rho[j].real() > 0.0)) {
        throw Error(Errc::StarConditionViolated, "interpolated radius is not positive");
      }
      out[j] = std::log(rho[j].real());
    }
    return out;
  }

  /// rho'(theta_j) / rho(theta_j).
  std::vector<double> log_slope(std::span<const double> theta) const {
    const auto rho = evaluate(rho_, theta);
    const auto drho = evaluate(drho_, theta);
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = drho[j].real() / rho[j].real();
    return out;
  }

  /// theta - t - s K[log rho(theta)].
  std::vector<double> residual(std::span<const double> theta, double s) const {
    const auto k_log = conjugate(log_radius(theta));
    std::vector<double> r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = theta[j] - nodes_[j] - s * k_log[j];
    return r;
  }

  const FourierSeries& radius() const { return rho_; }

 private:
  std::size_t n_;
  FourierSeries rho_, drho_;
  std::vector<double> nodes_;
};

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct SolveState {
  std::vector<double> theta;
  int iterations = 0;
  double residual = 0.0;
};

std::optional<SolveState> run_theodorsen(const TheodorsenEquation& eq, const SolverOptions& options) {
  SolveState st;
  st.theta.assign(eq.nodes().begin(), eq.nodes().end());
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const auto r = eq.residual(st.theta, 1.0);
    st.residual = sup_norm(r);
    st.iterations = it;
    if (!std::isfinite(st.residual)) return std::nullopt;
    if (st.residual < options.tolerance) return st;
    if (st.residual < best) {
      best = st.residual;
      since_best = 0;
    } else if (++since_best > 25 || st.residual > 1e3 * best) {
      return std::nullopt;
    }
    for (std::size_t j = 0; j < st.theta.size(); ++j) st.theta[j] -= options.damping * r[j];
    if (!strictly_increasing(st.theta)) return std::nullopt;
  }
  return std::nullopt;
}

/// Dense matrix of K on the grid: (K u)_j = sum_l kernel[(j - l) mod n] u_l.
std::vector<double> conjugation_kernel(std::size_t n) {
  std::vector<double> delta(n, 0.0);
  delta[0] = 1.0;
  return conjugate(delta);
}

/// Newton iterations on residual(theta, s) from the given start. Returns the
/// converged state or nothing if a step cannot reduce the residual.
std::optional<SolveState> newton(const TheodorsenEquation& eq, std::vector<double> theta, double s,
                                 double tolerance, int max_steps, const std::vector<double>& kernel) {
  const std::size_t n = eq.size();
  SolveState st;
  auto r = eq.residual(theta, s);
  double res = sup_norm(r);
  for (int step = 0; step < max_steps; ++step) {
    st.iterations = step;
    if (res < tolerance) {
      st.theta = std::move(theta);
      st.residual = res;
      return st;
    }
    // Jacobian I - s K diag(rho'/rho).
    const auto q = eq.log_slope(theta);
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j) {
        jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
            -s * kernel[(j + n - l) % n] * q[l];
      }
      jac(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l)) += 1.0;
    }
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) rhs(static_cast<Eigen::Index>(j)) = -r[j];
    const Eigen::VectorXd delta = jac.partialPivLu().solve(rhs);
    if (!delta.allFinite()) return std::nullopt;

    bool accepted = false;
    for (double alpha = 1.0; alpha >= 1.0 / 64.0; alpha *= 0.5) {
      std::vector<double> trial(theta);
      for (std::size_t j = 0; j < n; ++j) trial[j] += alpha * delta(static_cast<Eigen::Index>(j));
      if (!strictly_increasing(trial)) continue;
      std::vector<double> trial_r;
      try {
        trial_r = eq.residual(trial, s);
      } catch (const Error&) {
        continue;
      }
      const double trial_res = sup_norm(trial_r);
      if (trial_res < (1.0 - 1e-4 * alpha) * res) {
        theta = std::move(trial);
        r = std::move(trial_r);
        res = trial_res;
        accepted = true;
        break;
      }
    }
    if (!accepted) return std::nullopt;
  }
  if (res < tolerance) {
    st.theta = std::move(theta);
    st.residual = res;
    st.iterations = max_steps;
    return st;
  }
  return std::nullopt;
}

std::optional<SolveState> run_newton(const TheodorsenEquation& eq, const SolverOptions& options) {
  const auto kernel = conjugation_kernel(eq.size());
  const std::vector<double> start(eq.nodes().begin(), eq.nodes().end());
  if (auto direct = newton(eq, start, 1.0, options.tolerance, 50, kernel)) return direct;

  // Continuation: scale log rho by s in (0, 1], warm-starting each stage.
  std::vector<double> theta = start;
  double s = 0.0;
  double step = 0.25;
  int total = 0;
  while (s < 1.0) {
    if (step < 1e-4 || total > options.max_iterations) return std::nullopt;
    const double target = std::min(1.0, s + step);
    const double tol = target < 1.0 ? std::max(options.tolerance, 1e-8) : options.tolerance;
    auto stage = newton(eq, theta, target, tol, 30, kernel);
    if (!stage) {
      step *= 0.5;
      continue;
    }
    total += stage->iterations + 1;
    theta = std::move(stage->theta);
    s = target;
    step = std::min(2.0 * step, 0.5);
    if (s >= 1.0) {
      stage->theta = std::move(theta);
      stage->iterations = total;
      return stage;
    }
  }
  return std::nullopt;
}

struct KnotMap {
  std::vector<double> t, theta, slope;
  double residual = 0.0;
};

/// Boundary values of the Szego kernel S(., 0) from the Kerzman-Stein equation
/// (I + A) s = conj(C(0, .)) on equispaced curve angles. The inverse map F
/// satisfies F = -i s^2 T / |s|^2 on the curve, so t = arg F needs no
/// iteration, and dt/dtheta is proportional to |s|^2 |gamma'|.
std::optional<KnotMap> szego_knots(const StarCurve& curve) {
  const std::size_t n = curve.size();
  const auto& rho_series = curve.radius_series();
  std::vector<double> theta(n);
  for (std::size_t j = 0; j < n; ++j) theta[j] = GridFunction::node(j, n);
  const auto rho = evaluate(rho_series, theta);
  const auto drho = evaluate(derivative(rho_series), theta);

  const Complex two_pi_i(0.0, kTwoPi);
  std::vector<Complex> z(n), tangent(n);
  std::vector<double> speed(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex e = std::polar(1.0, theta[j]);
    z[j] = rho[j].real() * e;
    const Complex dz = Complex(drho[j].real(), rho[j].real()) * e;
    speed[j] = std::abs(dz);
    tangent[j] = dz / speed[j];
  }
  const double step = kTwoPi / static_cast<double>(n);
  const auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  Eigen::MatrixXcd system(idx(n), idx(n));
  Eigen::VectorXcd rhs(idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        system(idx(i), idx(j)) = 1.0;  // the kernel vanishes on the diagonal
        continue;
      }
      const Complex cauchy_ij = tangent[j] / (two_pi_i * (z[j] - z[i]));
      const Complex cauchy_ji = tangent[i] / (two_pi_i * (z[i] - z[j]));
      system(idx(i), idx(j)) = (std::conj(cauchy_ji) - cauchy_ij) * speed[j] * step;
    }
    rhs(idx(i)) = std::conj(tangent[i] / (two_pi_i * z[i]));
  }
  const Eigen::VectorXcd s = system.partialPivLu().solve(rhs);
  if (!s.allFinite()) return std::nullopt;

  KnotMap out;
  out.theta = theta;
  out.t.resize(n);
  out.slope.resize(n);
  Complex center = 0.0;
  double mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex sj = s(idx(j));
    const double m2 = std::norm(sj);
    if (!(m2 > 0.0)) return std::nullopt;
    const Complex f = Complex(0.0, -1.0) * sj * sj * tangent[j] / m2;
    out.t[j] = std::arg(f);
    out.slope[j] = m2 * speed[j];
    mass += out.slope[j];
    center += f / z[j] * tangent[j] * speed[j] * step;
  }
  out.residual = std::abs(center / two_pi_i);
  // Unwrap, normalize dt/dtheta to mean one and pick the branch nearest theta.
  for (std::size_t j = 1; j < n; ++j) {
    out.t[j] -= kTwoPi * std::round((out.t[j] - out.t[j - 1]) / kTwoPi);
  }
  double shift = 0.0;
  for (std::size_t j = 0; j < n; ++j) shift += out.t[j] - theta[j];
  shift = kTwoPi * std::round(shift / static_cast<double>(n) / kTwoPi);
  for (std::size_t j = 0; j < n; ++j) {
    out.t[j] -= shift;
    out.slope[j] = mass / static_cast<double>(n) / out.slope[j];  // dtheta/dt
  }
  if (!strictly_increasing(out.t)) return std::nullopt;
  return out;
}

}  // namespace

BoundaryCorrespondence solve_correspondence(const StarCurve& curve, const SolverOptions& options) {
  if (!(options.tolerance > 0.0) || options.max_iterations < 1 || !(options.damping > 0.0) ||
      options.damping > 1.0) {
    throw Error(Errc::InvalidArgument, "solver needs tolerance > 0, max_iterations >= 1, damping in (0, 1]");
  }
  const std::size_t n = curve.size();
  const TheodorsenEquation eq(curve);
  std::optional<SolveState> state;
  SolverMethod used = options.method;
  if (options.method == SolverMethod::Theodorsen || options.method == SolverMethod::Automatic) {
    try {
      state = run_theodorsen(eq, options);
    } catch (const Error& e) {
      if (e.code() != Errc::StarConditionViolated || options.method == SolverMethod::Theodorsen) throw;
    }
    used = SolverMethod::Theodorsen;
  } else if (options.method == SolverMethod::Newton) {
    state = run_newton(eq, options);
  }

  std::optional<CircleHomeomorphism> h;
  int iterations = 0;
  double residual = 0.0;
  if (state) {
    if (!strictly_increasing(state->theta)) {
      throw Error(Errc::StarConditionViolated, "boundary angle is not increasing");
    }
    std::vector<double> periodic(n);
    for (std::size_t j = 0; j < n; ++j) periodic[j] = state->theta[j] - GridFunction::node(j, n);
    auto slopes = spectral_derivative(periodic);
    bool positive = true;
    for (double& d : slopes) {
      d += 1.0;
      positive = positive && d > 0.0;
    }
    std::vector<double> knots(eq.nodes().begin(), eq.nodes().end());
    h = positive ? CircleHomeomorphism(knots, state->theta, std::move(slopes))
                 : CircleHomeomorphism(knots, state->theta, Interpolation::MonotoneCubic);
    iterations = state->iterations;
    residual = state->residual;
  } else if (options.method == SolverMethod::SzegoKernel || options.method == SolverMethod::Automatic) {
    auto knots = szego_knots(curve);
    if (!knots) {
      throw Error(Errc::NoConvergence, "boundary correspondence is not resolved by " + std::to_string(n) +
                                           " boundary nodes");
    }
    h = CircleHomeomorphism(std::move(knots->t), std::move(knots->theta), std::move(knots->slope));
    residual = knots->residual;
    used = SolverMethod::SzegoKernel;
  }
  if (!h) {
    throw Error(Errc::NoConvergence, "boundary correspondence did not converge within " +
                                         std::to_string(options.max_iterations) + " iterations");
  }

  std::vector<double> theta = h->on_grid(n);
  const auto rho = evaluate(eq.radius(), theta);
  std::vector<Complex> g(n);
  for (std::size_t j = 0; j < n; ++j) g[j] = rho[j].real() * std::polar(1.0, theta[j]);
  GridFunction boundary(std::move(g));
  FourierSeries coeffs = analyze(boundary);
  return BoundaryCorrespondence{std::move(*h), std::move(theta), std::move(boundary), std::move(coeffs),
                                iterations, residual, used};
}

AreaCheck area_identity_check(const BoundaryCorrespondence& bc, const StarCurve& curve,
                              std::size_t polygon_vertices) {
  AreaCheck out;
  for (int n = 1; n <= bc.g_coeffs.max_frequency(); ++n) out.spectral += n * std::norm(bc.g_coeffs[n]);
  out.spectral *= std::numbers::pi;
  out.shoelace = curve.polygon_area(polygon_vertices);
  return out;
}

ImprovementReport verify_improvement(const GridFunction& f, const BoundaryCorrespondence& bc) {
  const Positivized pos = positivize(f);
  if (pos.function.size() != bc.boundary.size()) {
    throw Error(Errc::GridMismatch, "function and correspondence grids differ");
  }
  ImprovementReport report;
  report.offset = pos.offset;

  const GridFunction composed = compose(pos.function, bc.h);
  for (std::size_t j = 0; j < composed.size(); ++j) {
    report.pointwise_error =
        std::max(report.pointwise_error, std::abs(composed[j].real() - std::abs(bc.boundary[j])));
  }
  const FourierSeries before = analyze(pos.function);
  report.before = seminorm_fourier(before);
  report.after = seminorm_fourier(analyze(composed));
  report.boundary = seminorm_fourier(bc.g_coeffs);
  report.modulus_contraction = abs_contraction_check(bc.boundary, bc.boundary.size());

  // Top dyadic window of the input's own band.
  const int band = std::max(2, before.effective_band(1e-12));
  report.window_hi = 1 << static_cast<int>(std::floor(std::log2(band)));
  report.window_lo = report.window_hi / 2;
  report.slope_before = window_slope(report.before, report.window_lo, report.window_hi);
  report.slope_after = window_slope(report.after, report.window_lo, report.window_hi);
  return report;
}

BohrPalResult bohr_pal(const GridFunction& f, const SolverOptions& options, double mollify_half_width) {
  if (!f.is_real()) throw Error(Errc::NotRealValued, "Bohr-Pal construction needs a real function");
  GridFunction input = f.real_part();
  if (mollify_half_width > 0.0) {
    input = synthesize(mollify(analyze(input), mollify_half_width), input.size()).real_part();
  }
  StarCurve curve(positivize(input).function);
  BoundaryCorrespondence bc = solve_correspondence(curve, options);
  AreaCheck area = area_identity_check(bc, curve);
  ImprovementReport improvement = verify_improvement(input, bc);
  return BohrPalResult{std::move(input), mollify_half_width, std::move(curve), std::move(bc), area,
                       std::move(improvement)};
}

}  // namespace circle_sobolev
