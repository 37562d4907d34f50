#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"

namespace circle_sobolev {

// ------------------------------------------------------------ lacunary witness

/// sum_{n=0}^{M-1} 2^{-n/2} e^{i 2^n t}: each term contributes exactly one to
/// the squared Fourier seminorm.
struct LacunaryWitness {
  int terms;

  int band() const { return 1 << (terms - 1); }
  FourierSeries coefficients() const;
};

FourierSeries lacunary_series(int terms);

/// Samples of the witness; BandExceedsGrid unless 2^{M-1} < N/2.
GridFunction lacunary_witness(int terms, std::size_t n);

struct HolderProfile {
  std::vector<double> deltas;  ///< pi 2^{-m}, down to one grid step
  std::vector<double> moduli;  ///< omega(f, delta) on the grid
  std::vector<double> ratios;  ///< omega / delta^exponent
  double constant = 0.0;       ///< max ratio
};

/// Grid modulus of continuity sup_{|t1 - t2| <= delta} |f(t1) - f(t2)| at
/// dyadic delta, scaled by delta^exponent.
HolderProfile holder_profile(const GridFunction& f, double exponent = 0.5);

// ------------------------------------------------------ translation averages

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const { return lhs - rhs; }
};

/// Average over translations of |(x_theta o phi)^(nu)|^2 by a uniform
/// theta rule with `theta_nodes` points, against
/// sum_k |x^(k)|^2 |(e^{ik phi})^(nu)|^2. phi_samples holds phi(t_j) on the
/// grid of x; phi need only be a continuous self-map.
IdentityCheck lemma2_identity_check(const GridFunction& x, std::span<const double> phi_samples, int nu,
                                    int theta_nodes);
IdentityCheck lemma2_identity_check(const GridFunction& x, const CircleHomeomorphism& phi, int nu,
                                    int theta_nodes);

/// LHS: theta-average of sum_{|nu|<=nu_cap} |(F_theta o h)^(nu)|^2 |nu|.
/// RHS: sum_{|k|<=band} |F^(k)|^2 sum_{|nu|<=nu_cap} |(e^{ikh})^(nu)|^2 |nu|.
/// Compositions are sampled on an n_grid-point grid.
IdentityCheck theorem2_average_inequality(const FourierSeries& f, const CircleHomeomorphism& h, int band,
                                          int theta_nodes, int nu_cap, std::size_t n_grid);

struct TranslationRow {
  double theta;
  double seminorm_sq;  ///< ||F_theta o h||^2 at the grid truncation
};

/// ||F_theta o h||^2 across a theta sweep.
std::vector<TranslationRow> translation_scan(const FourierSeries& f, const CircleHomeomorphism& h,
                                             std::span<const double> thetas, std::size_t n_grid);

// ------------------------------------------------------------ mollification

struct MollificationScan {
  std::vector<double> deltas;  ///< strictly decreasing
  int cutoff = 0;
  /// S(delta, N) = sum_{n=1}^N |c_n|^2 (sin(n delta)/(n delta))^2 n.
  std::vector<double> values;
  /// sum_{n=1}^N |c_n|^2 n, the delta -> 0 limit.
  double limit = 0.0;
  /// sum_{n<0} |c_n|^2; zero for analytic-type input.
  double negative_energy = 0.0;
  /// Hypothesized uniform bound c on ||F^delta o h||; S <= c^2 is implied.
  std::optional<double> uniform_bound;
  /// First row where S(delta, N) > c^2, if any.
  std::optional<std::size_t> first_violation;
};

MollificationScan mollification_scan(const FourierSeries& c, std::span<const double> deltas, int cutoff,
                                     std::optional<double> uniform_bound = std::nullopt);

/// start, start/2, ... down to (and including the first value <=) stop.
std::vector<double> halving_grid(double start, double stop);

// ----------------------------------------------------------------- tail mass

/// Smallest m with sum_{|nu|<=m} |(e^{ikh})^(nu)|^2 |nu| >= |k|/2 on an
/// n_grid-point grid. NotReachedAtTruncation if the band runs out first.
int tail_mass_search(const CircleHomeomorphism& h, int k, std::size_t n_grid);

struct TailMassTable {
  std::vector<int> ks;
  std::vector<int> masses;  ///< m(k) per row
  int max_mass = 0;         ///< M(N) = max_{1<=|k|<=N} m(k)
};

TailMassTable tail_mass_table(const CircleHomeomorphism& h, int max_k, std::size_t n_grid);

}  // namespace circle_sobolev
