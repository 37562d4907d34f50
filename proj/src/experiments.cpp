#include "circle_sobolev/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "circle_sobolev/error.hpp"
#include "circle_sobolev/families.hpp"
#include "circle_sobolev/parallel.hpp"
#include "circle_sobolev/seminorm.hpp"

namespace circle_sobolev {

FourierSeries LacunaryWitness::coefficients() const { return lacunary_series(terms); }

FourierSeries lacunary_series(int terms) {
  if (terms < 1 || terms > 30) throw Error(Errc::InvalidArgument, "lacunary terms must be in [1, 30]");
  FourierSeries c(1 << (terms - 1));
  for (int n = 0; n < terms; ++n) c.at(1 << n) = std::pow(2.0, -0.5 * n);
  return c;
}

GridFunction lacunary_witness(int terms, std::size_t n) {
  if (terms >= 1 && terms <= 30 && static_cast<std::size_t>(1) << (terms - 1) >= n / 2) {
    throw Error(Errc::BandExceedsGrid, "lacunary band 2^" + std::to_string(terms - 1) +
                                           " needs a grid larger than " + std::to_string(n));
  }
  return synthesize(lacunary_series(terms), n);
}

HolderProfile holder_profile(const GridFunction& f, double exponent) {
  const std::size_t n = f.size();
  const double step = f.spacing();
  HolderProfile out;
  // Running maximum over shifts d, read off at the dyadic shifts.
  double modulus = 0.0;
  std::size_t d = 0;
  for (int m = 0;; ++m) {
    const double delta = std::numbers::pi / std::ldexp(1.0, m);
    if (delta < step * (1.0 - 1e-12)) break;
    out.deltas.push_back(delta);
  }
  std::vector<double> sorted = out.deltas;
  std::reverse(sorted.begin(), sorted.end());
  std::vector<double> moduli;
  for (double delta : sorted) {
    const auto shift = static_cast<std::size_t>(std::llround(delta / step));
    for (; d < shift; ) {
      ++d;
      for (std::size_t j = 0; j < n; ++j) modulus = std::max(modulus, std::abs(f[(j + d) % n] - f[j]));
    }
    moduli.push_back(modulus);
  }
  std::reverse(moduli.begin(), moduli.end());
  out.moduli = moduli;
  for (std::size_t i = 0; i < out.deltas.size(); ++i) {
    out.ratios.push_back(out.moduli[i] / std::pow(out.deltas[i], exponent));
    out.constant = std::max(out.constant, out.ratios.back());
  }
  return out;
}

namespace {

void require_band(int nu, std::size_t n) {
  if (std::abs(nu) > static_cast<int>(n / 2) - 1) {
    throw Error(Errc::BandExceedsGrid, "frequency " + std::to_string(nu) + " outside grid band");
  }
}

std::vector<double> theta_rule(int nodes) {
  std::vector<double> thetas(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) thetas[static_cast<std::size_t>(m)] = kTwoPi * m / nodes;
  return thetas;
}

// Samples of F(phi_j + theta) for a fixed theta.
GridFunction shifted_composition(const FourierSeries& f, std::span<const double> phi, double theta) {
  std::vector<double> points(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) points[j] = phi[j] + theta;
  return GridFunction(evaluate(f, points));
}

GridFunction exp_samples(std::span<const double> phi, int k) {
  std::vector<Complex> s(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) s[j] = std::polar(1.0, k * phi[j]);
  return GridFunction(std::move(s));
}

}  // namespace

IdentityCheck lemma2_identity_check(const GridFunction& x, std::span<const double> phi, int nu,
                                    int theta_nodes) {
  if (theta_nodes < 64) throw Error(Errc::InvalidArgument, "theta quadrature needs at least 64 nodes");
  if (phi.size() != x.size()) throw Error(Errc::GridMismatch, "phi samples must match the grid of x");
  require_band(nu, x.size());
  const FourierSeries cx = analyze(x).trimmed();

  // Left side: average of |(x_theta o phi)^(nu)|^2 over the theta rule.
  const auto thetas = theta_rule(theta_nodes);
  std::vector<double> per_theta(thetas.size());
  for (std::size_t m = 0; m < thetas.size(); ++m) {
    per_theta[m] = std::norm(analyze(shifted_composition(cx, phi, thetas[m]))[nu]);
  }
  IdentityCheck out;
  for (double v : per_theta) out.lhs += v;
  out.lhs /= theta_nodes;

  // Right side: spectral sum over the band of x.
  for (int k = -cx.max_frequency(); k <= cx.max_frequency(); ++k) {
    if (cx[k] == 0.0) continue;
    out.rhs += std::norm(cx[k]) * std::norm(analyze(exp_samples(phi, k))[nu]);
  }
  return out;
}

IdentityCheck lemma2_identity_check(const GridFunction& x, const CircleHomeomorphism& phi, int nu,
                                    int theta_nodes) {
  const auto samples = phi.on_grid(x.size());
  return lemma2_identity_check(x, samples, nu, theta_nodes);
}

IdentityCheck theorem2_average_inequality(const FourierSeries& f, const CircleHomeomorphism& h, int band,
                                          int theta_nodes, int nu_cap, std::size_t n_grid) {
  if (theta_nodes < 1 || nu_cap < 0 || band < 0) {
    throw Error(Errc::InvalidArgument, "theta nodes, band and nu cap must be positive");
  }
  require_band(nu_cap, n_grid);
  const FourierSeries cf = f.trimmed();
  const auto phi = h.on_grid(n_grid);

  auto weighted_mass = [nu_cap](const FourierSeries& c) {
    double s = 0.0;
    for (int nu = 1; nu <= nu_cap; ++nu) s += (std::norm(c[nu]) + std::norm(c[-nu])) * nu;
    return s;
  };

  IdentityCheck out;
  const auto thetas = theta_rule(theta_nodes);
  for (double theta : thetas) out.lhs += weighted_mass(analyze(shifted_composition(cf, phi, theta)));
  out.lhs /= theta_nodes;

  for (int k = -std::min(band, cf.max_frequency()); k <= std::min(band, cf.max_frequency()); ++k) {
    if (k == 0 || cf[k] == 0.0) continue;
    out.rhs += std::norm(cf[k]) * weighted_mass(analyze(exp_samples(phi, k)));
  }
  return out;
}

std::vector<TranslationRow> translation_scan(const FourierSeries& f, const CircleHomeomorphism& h,
                                             std::span<const double> thetas, std::size_t n_grid) {
  const FourierSeries cf = f.trimmed();
  const auto phi = h.on_grid(n_grid);
  std::vector<TranslationRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const GridFunction shifted(evaluate(translate(cf, theta), phi));
    rows.push_back({theta, seminorm_fourier(analyze(shifted)).squared()});
  }
  return rows;
}

MollificationScan mollification_scan(const FourierSeries& c, std::span<const double> deltas, int cutoff,
                                     std::optional<double> uniform_bound) {
  if (deltas.empty()) throw Error(Errc::InvalidArgument, "delta grid is empty");
  if (cutoff < 1) throw Error(Errc::InvalidArgument, "cutoff must be >= 1");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || deltas[i] > std::numbers::pi) {
      throw Error(Errc::InvalidArgument, "delta values must lie in (0, pi]");
    }
    if (i > 0 && !(deltas[i] < deltas[i - 1])) {
      throw Error(Errc::InvalidArgument, "delta grid must be strictly decreasing");
    }
  }
  MollificationScan scan;
  scan.deltas.assign(deltas.begin(), deltas.end());
  scan.cutoff = cutoff;
  scan.uniform_bound = uniform_bound;
  const int top = std::min(cutoff, c.max_frequency());
  for (int n = 1; n <= top; ++n) scan.limit += std::norm(c[n]) * n;
  for (int n = 1; n <= c.max_frequency(); ++n) scan.negative_energy += std::norm(c[-n]);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const Mollifier kernel(deltas[i]);
    double s = 0.0;
    for (int n = 1; n <= top; ++n) {
      const double m = kernel.multiplier(n);
      s += std::norm(c[n]) * m * m * n;
    }
    scan.values.push_back(s);
    if (uniform_bound && !scan.first_violation && s > *uniform_bound * *uniform_bound) {
      scan.first_violation = i;
    }
  }
  return scan;
}

std::vector<double> halving_grid(double start, double stop) {
  if (!(start > 0.0) || !(stop > 0.0) || stop > start) {
    throw Error(Errc::InvalidArgument, "halving grid needs 0 < stop <= start");
  }
  std::vector<double> out;
  for (double d = start;; d *= 0.5) {
    out.push_back(d);
    if (d <= stop) break;
  }
  return out;
}

int tail_mass_search(const CircleHomeomorphism& h, int k, std::size_t n_grid) {
  if (k == 0) throw Error(Errc::InvalidArgument, "tail mass needs k != 0");
  const FourierSeries c = analyze(exp_of_homeomorphism(h, k, n_grid));
  const double target = 0.5 * std::abs(k);
  double running = 0.0;
  for (int m = 1; m <= c.max_frequency(); ++m) {
    running += (std::norm(c[m]) + std::norm(c[-m])) * m;
    if (running >= target) return m;
  }
  throw Error(Errc::NotReachedAtTruncation,
              "weighted mass of e^{ikh} stays below |k|/2 within band " + std::to_string(c.max_frequency()) +
                  " (k = " + std::to_string(k) + ")");
}

TailMassTable tail_mass_table(const CircleHomeomorphism& h, int max_k, std::size_t n_grid) {
  if (max_k < 1) throw Error(Errc::InvalidArgument, "max k must be >= 1");
  TailMassTable table;
  for (int k = -max_k; k <= max_k; ++k) {
    if (k == 0) continue;
    table.ks.push_back(k);
    table.masses.push_back(tail_mass_search(h, k, n_grid));
    table.max_mass = std::max(table.max_mass, table.masses.back());
  }
  return table;
}

}  // namespace circle_sobolev
