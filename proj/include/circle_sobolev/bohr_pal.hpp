#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"
#include "circle_sobolev/seminorm.hpp"

namespace circle_sobolev {

struct Positivized {
  GridFunction function;
  double offset;
};

/// f + c with c = max(0, 1 - min f), so the result is >= 1 on the grid.
/// NotRealValued for complex input.
Positivized positivize(const GridFunction& f);

/// Star-shaped Jordan curve gamma(t) = rho(t) e^{it} with rho > 0.
class StarCurve {
 public:
  explicit StarCurve(GridFunction radius);

  const GridFunction& radius() const { return radius_; }
  std::size_t size() const { return radius_.size(); }
  /// Trigonometric interpolant of rho.
  const FourierSeries& radius_series() const { return series_; }
  /// gamma(t_j) on the grid of rho.
  std::vector<Complex> samples() const;
  /// Shoelace area of the polygon through `vertices` equispaced points of the
  /// interpolated curve.
  double polygon_area(std::size_t vertices) const;

 private:
  GridFunction radius_;
  FourierSeries series_;
};

enum class SolverMethod {
  Theodorsen,  ///< damped fixed-point iteration
  Newton,      ///< Newton on the same equation, with continuation in log rho
  SzegoKernel, ///< Kerzman-Stein integral equation, no iteration; handles crowding
  Automatic,   ///< Theodorsen, falling back to SzegoKernel if it stalls or diverges
};

std::string_view to_string(SolverMethod method);

struct SolverOptions {
  double tolerance = 1e-10;  ///< sup-norm of the equation residual
  int max_iterations = 500;
  double damping = 0.5;
  SolverMethod method = SolverMethod::Automatic;
};

/// Boundary correspondence of the conformal map G of the disc onto the
/// interior of a star curve, normalized by G(0) = 0 and G'(0) > 0.
/// g(t) = G(e^{it}) = gamma(h(t)).
struct BoundaryCorrespondence {
  CircleHomeomorphism h;
  std::vector<double> angles;  ///< h(t_j)
  GridFunction boundary;       ///< g(t_j)
  FourierSeries g_coeffs;
  int iterations = 0;
  /// Equation residual for the iterative methods; |G^{-1}(0)| by boundary
  /// quadrature for SzegoKernel.
  double residual = 0.0;
  SolverMethod method_used = SolverMethod::Theodorsen;

  /// sum_{n<0} |g^(n)|^2.
  double negative_energy() const;
  /// negative_energy / sum_n |g^(n)|^2.
  double analytic_residual() const;
};

/// Solves theta(t) - t = K[log rho(theta)](t) for the boundary angle, K the
/// periodic conjugation operator. NoConvergence when the iteration budget is
/// exhausted or the boundary nodes do not resolve the map; StarConditionViolated
/// if theta stops being increasing.
BoundaryCorrespondence solve_correspondence(const StarCurve& curve, const SolverOptions& options = {});

struct AreaCheck {
  double spectral = 0.0;  ///< pi sum_{n>=1} n |g^(n)|^2
  double shoelace = 0.0;
  double relative_difference() const;
};

AreaCheck area_identity_check(const BoundaryCorrespondence& bc, const StarCurve& curve,
                              std::size_t polygon_vertices = std::size_t{1} << 17);

struct ImprovementReport {
  double offset = 0.0;
  /// max_j | f+(h(t_j)) - |g(t_j)| |.
  double pointwise_error = 0.0;
  SeminormReport before;    ///< f+ (same as f away from k = 0)
  SeminormReport after;     ///< f+ o h = |g|
  SeminormReport boundary;  ///< g
  /// (seminorm_double_integral(|g|), seminorm_double_integral(g)).
  std::pair<double, double> modulus_contraction{};
  int window_lo = 1;
  int window_hi = 2;
  double slope_before = 0.0;
  double slope_after = 0.0;
};

/// Checks f+ o h = |g| and compares the seminorm profiles before and after
/// the change of variable. bc must come from positivize(f).
ImprovementReport verify_improvement(const GridFunction& f, const BoundaryCorrespondence& bc);

/// The whole construction: positivize, optionally mollify with half-width
/// `mollify_half_width` (0 disables), solve, verify.
struct BohrPalResult {
  GridFunction input;  ///< f actually used (after optional mollification)
  double mollify_half_width = 0.0;
  StarCurve curve;
  BoundaryCorrespondence correspondence;
  AreaCheck area;
  ImprovementReport improvement;
};

BohrPalResult bohr_pal(const GridFunction& f, const SolverOptions& options = {},
                       double mollify_half_width = 0.0);

}  // namespace circle_sobolev
