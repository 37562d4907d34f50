#include "circle_sobolev/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "circle_sobolev/bohr_pal.hpp"
#include "circle_sobolev/error.hpp"
#include "circle_sobolev/experiments.hpp"
#include "circle_sobolev/families.hpp"
#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"
#include "circle_sobolev/io.hpp"
#include "circle_sobolev/pairing.hpp"
#include "circle_sobolev/random.hpp"
#include "circle_sobolev/seminorm.hpp"

namespace circle_sobolev::cli {

namespace {

using Json = nlohmann::ordered_json;

// Every emitted real goes through the 12-digit formatter first, so JSON and
// CSV agree digit for digit.
double rounded(double x) { return std::stod(io::format_real(x)); }

Json real_array(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(rounded(v));
  return a;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::ConfigInvalid, what); }

// ------------------------------------------------------------------ inputs

struct FunctionSpec {
  std::string builtin;
  std::string coeffs_path;
  std::string grid_path;
  int terms = 8;
  int harmonic = 1;
  double amplitude = 0.3;
  int degree = 8;
  bool real_valued = false;
  bool real_part = false;
};

struct Source {
  std::string name;
  FourierSeries series;
  std::optional<GridFunction> grid;

  GridFunction on_grid(std::size_t n) const { return grid ? *grid : synthesize(series, n); }
};

void add_function_options(CLI::App* app, FunctionSpec& spec) {
  app->add_option("--builtin", spec.builtin,
                  "lacunary | single-harmonic | cos-plus-2 | exp-cos | random-trig");
  app->add_option("--coeffs", spec.coeffs_path, "coefficient file (k,re,im)");
  app->add_option("--input", spec.grid_path, "grid function file (N=<n>, j,re,im)");
  app->add_option("--terms", spec.terms, "lacunary terms M");
  app->add_option("--k", spec.harmonic, "single-harmonic frequency");
  app->add_option("--a", spec.amplitude, "exp-cos amplitude");
  app->add_option("--degree", spec.degree, "random-trig degree");
  app->add_flag("--real", spec.real_valued, "random-trig draws a real-valued polynomial");
  app->add_flag("--real-part", spec.real_part, "use the real part of the function");
}

FourierSeries real_part_series(const FourierSeries& c) {
  FourierSeries out(c.max_frequency());
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) {
    out.at(k) = 0.5 * (c[k] + std::conj(c[-k]));
  }
  return out;
}

Source load_source(const FunctionSpec& spec, std::size_t n, Rng& rng) {
  const int given = !spec.builtin.empty() + !spec.coeffs_path.empty() + !spec.grid_path.empty();
  if (given != 1) invalid("give exactly one of --builtin, --coeffs, --input");
  Source src;
  if (!spec.coeffs_path.empty()) {
    src.name = spec.coeffs_path;
    src.series = io::load_coefficients(spec.coeffs_path);
  } else if (!spec.grid_path.empty()) {
    src.name = spec.grid_path;
    src.grid = io::load_grid(spec.grid_path);
    src.series = analyze(*src.grid);
  } else if (spec.builtin == "lacunary") {
    if (spec.terms < 1 || spec.terms > 30) invalid("--terms must be in [1, 30]");
    src.name = "lacunary";
    src.series = lacunary_series(spec.terms);
  } else if (spec.builtin == "single-harmonic") {
    src.name = "single-harmonic";
    src.series = FourierSeries::monomial(spec.harmonic);
  } else if (spec.builtin == "cos-plus-2") {
    src.name = "cos-plus-2";
    src.series = FourierSeries(1, {0.5, 2.0, 0.5});
  } else if (spec.builtin == "exp-cos") {
    src.name = "exp-cos";
    const double a = spec.amplitude;
    src.grid = GridFunction::from_function(n, [a](double t) { return std::exp(a * std::cos(t)); });
    src.series = analyze(*src.grid);
  } else if (spec.builtin == "random-trig") {
    if (spec.degree < 0) invalid("--degree must be >= 0");
    src.name = "random-trig";
    src.series = random_trig_series(rng, spec.degree, spec.real_valued);
  } else {
    invalid("unknown builtin '" + spec.builtin + "'");
  }
  if (spec.real_part) {
    src.series = real_part_series(src.series);
    if (src.grid) src.grid = src.grid->real_part();
  }
  return src;
}

struct HomeoSpec {
  std::string path;
  bool cubic = false;
  bool random = false;
  std::size_t knots = 256;
  double rotation = 0.0;
  bool inverse = false;
};

void add_homeo_options(CLI::App* app, HomeoSpec& spec) {
  app->add_option("--homeo", spec.path, "homeomorphism knot file (t,h)");
  app->add_flag("--cubic", spec.cubic, "read the knot file with monotone cubic interpolation");
  app->add_flag("--random-homeo", spec.random, "seeded random smooth homeomorphism");
  app->add_option("--homeo-knots", spec.knots, "knots of the random homeomorphism");
  app->add_option("--rotate", spec.rotation, "post-rotate the homeomorphism by this angle");
  app->add_flag("--invert", spec.inverse, "use the inverse homeomorphism");
}

CircleHomeomorphism load_homeo(const HomeoSpec& spec, Rng& rng) {
  if (!spec.path.empty() && spec.random) invalid("--homeo and --random-homeo are exclusive");
  if (spec.knots < 2) invalid("--homeo-knots must be >= 2");
  CircleHomeomorphism h = CircleHomeomorphism::identity();
  if (!spec.path.empty()) {
    h = io::load_homeomorphism(spec.path, spec.cubic ? Interpolation::MonotoneCubic : Interpolation::Linear);
  } else if (spec.random) {
    h = random_smooth_homeomorphism(rng, spec.knots);
  }
  if (spec.inverse) h = invert(h);
  if (spec.rotation != 0.0) h = rotate(h, spec.rotation);
  return h;
}

void check_grid(std::size_t n) {
  if (n < 8 || !is_power_of_two(n)) invalid("--n must be a power of two >= 8");
}

void check_positive(double v, const std::string& name) {
  if (!(v > 0.0)) invalid(name + " must be > 0");
}

// Primary output: a file when a path is given, the caller's stream otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) invalid("cannot write " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  *sink << j.dump(2) << '\n';
}

// ------------------------------------------------------------- subcommands

struct Common {
  std::uint64_t seed = 42;
  std::size_t n = 1024;
  std::string out_path;
};

struct SeminormCmd {
  FunctionSpec fn;
  int truncation = 0;
  int fejer = 0;
  double translate_by = 0.0;
  double mollify_by = 0.0;
  std::string measure_path;
  std::size_t quadrature = 0;
};

Json run_seminorm(const Common& common, const SeminormCmd& cmd, Rng& rng) {
  check_grid(common.n);
  if (cmd.truncation < 0) invalid("--truncation must be >= 0");
  if (cmd.fejer < 0) invalid("--fejer must be >= 0");
  if (cmd.mollify_by < 0.0) invalid("--mollify must be >= 0");
  const Source src = load_source(cmd.fn, common.n, rng);
  FourierSeries c = src.series;
  if (cmd.truncation > 0) c = c.with_band(cmd.truncation);
  if (cmd.fejer > 0) c = fejer_sum(c, cmd.fejer);
  if (cmd.translate_by != 0.0) c = translate(c, cmd.translate_by);
  if (cmd.mollify_by > 0.0) c = mollify(c, cmd.mollify_by);
  if (!cmd.measure_path.empty()) c = convolve(c, io::load_measure(cmd.measure_path, false));

  const SeminormReport report = seminorm_fourier(c);
  Json j;
  j["function"] = src.name;
  j["K"] = report.truncation;
  j["value"] = rounded(report.value);
  j["value_squared"] = rounded(report.squared());
  j["banach_norm"] = rounded(banach_norm(c));
  j["partials"] = real_array(report.partials);
  if (cmd.quadrature > 0) {
    const GridFunction f = synthesize(c, common.n);
    const auto [modulus, direct] = abs_contraction_check(f, cmd.quadrature);
    j["n"] = common.n;
    j["quadrature"] = cmd.quadrature;
    j["double_integral"] = rounded(direct);
    j["modulus_double_integral"] = rounded(modulus);
  }
  return j;
}

struct LemmaCmd {
  int cases = 10;
  int degree = 16;
  int theta_nodes = 128;
};

struct LemmaCheck {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

Json run_verify_lemmas(const Common& common, const LemmaCmd& cmd, Rng& rng) {
  check_grid(common.n);
  if (cmd.cases < 1) invalid("--cases must be >= 1");
  if (cmd.degree < 1 || 2 * cmd.degree + 1 > static_cast<int>(common.n)) {
    invalid("--degree must be in [1, n/2)");
  }
  if (cmd.theta_nodes < 64) invalid("--theta-nodes must be >= 64");
  const std::size_t n = common.n;

  LemmaCheck spectral{"pairing_spectral", 0.0, 1e-6};
  LemmaCheck bound{"pairing_bound", 0.0, 0.0};
  LemmaCheck invariance{"pairing_invariance", 0.0, 1e-4};
  LemmaCheck identity{"translation_identity", 0.0, 1e-6};
  LemmaCheck exp_bound{"exp_lower_bound", 0.0, 1e-3};
  LemmaCheck translation{"convolution_translation", 0.0, 1e-12};

  for (int c = 0; c < cmd.cases; ++c) {
    const FourierSeries cx = random_trig_series(rng, cmd.degree);
    const FourierSeries cy = random_trig_series(rng, cmd.degree);
    const GridFunction x = synthesize(cx, n);
    const GridFunction y = synthesize(cy, n);
    const BVFunction by(y);
    spectral.worst = std::max(spectral.worst, std::abs(pairing(x, by) - pairing_spectral(cx, cy)));
    const auto [value, product] = pairing_bound_check(cx, cy);
    bound.worst = std::max(bound.worst, value - product);

    const CircleHomeomorphism h = random_smooth_homeomorphism(rng, 256);
    const FourierSeries sx = random_trig_series(rng, 4);
    const FourierSeries sy = random_trig_series(rng, 4);
    const auto [moved, plain] = invariance_check(synthesize(sx, n), BVFunction(synthesize(sy, n)), h);
    invariance.worst = std::max(invariance.worst, std::abs(moved - plain));

    const GridFunction small = synthesize(sx, n);
    for (int nu : {0, 1, -1, 5, -5}) {
      const IdentityCheck check = lemma2_identity_check(small, h, nu, cmd.theta_nodes);
      identity.worst = std::max(identity.worst, std::abs(check.residual()));
    }
    for (int k = 1; k <= 8; ++k) {
      const ExpBoundCheck e = exp_lower_bound_check(h, c % 2 == 0 ? k : -k, n);
      exp_bound.worst = std::max(exp_bound.worst, 1.0 - e.seminorm_sq / e.bound);
    }
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const double theta = angle(rng);
    const FourierSeries via_measure = convolve(cx, DiscreteMeasure::unit_mass(theta));
    const FourierSeries direct = translate(cx, theta);
    for (int k = -cx.max_frequency(); k <= cx.max_frequency(); ++k) {
      translation.worst = std::max(translation.worst, std::abs(via_measure[k] - direct[k]));
    }
  }
  spectral.passed = spectral.worst <= spectral.tolerance;
  bound.passed = bound.worst <= 1e-12 * std::max(1.0, bound.worst);
  invariance.passed = invariance.worst <= invariance.tolerance;
  identity.passed = identity.worst <= identity.tolerance;
  exp_bound.passed = exp_bound.worst <= exp_bound.tolerance;
  translation.passed = translation.worst <= translation.tolerance;

  Json j;
  j["seed"] = common.seed;
  j["cases"] = cmd.cases;
  j["n"] = n;
  Json checks = Json::array();
  bool all = true;
  for (const LemmaCheck* c : {&spectral, &bound, &invariance, &identity, &exp_bound, &translation}) {
    checks.push_back({{"name", c->name},
                      {"worst", rounded(c->worst)},
                      {"tolerance", rounded(c->tolerance)},
                      {"passed", c->passed}});
    all = all && c->passed;
  }
  j["checks"] = checks;
  j["passed"] = all;
  return j;
}

struct MollifyCmd {
  FunctionSpec fn;
  std::vector<double> deltas;
  double delta_start = 1.0;
  double delta_stop = 1e-5;
  int cutoff = 256;
  std::optional<double> bound;
};

void run_scan_mollify(const Common& common, const MollifyCmd& cmd, Rng& rng, std::ostream& out) {
  check_grid(common.n);
  if (cmd.cutoff < 1) invalid("--cutoff must be >= 1");
  std::vector<double> deltas = cmd.deltas;
  if (deltas.empty()) {
    check_positive(cmd.delta_start, "--delta-start");
    check_positive(cmd.delta_stop, "--delta-stop");
    if (cmd.delta_stop > cmd.delta_start) invalid("--delta-stop must not exceed --delta-start");
    deltas = halving_grid(cmd.delta_start, cmd.delta_stop);
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || (i > 0 && !(deltas[i] < deltas[i - 1]))) {
      invalid("--deltas must be positive and strictly decreasing");
    }
  }
  if (cmd.bound) check_positive(*cmd.bound, "--bound");
  const Source src = load_source(cmd.fn, common.n, rng);
  const MollificationScan scan = mollification_scan(src.series, deltas, cmd.cutoff, cmd.bound);

  Sink sink(common.out_path, out);
  *sink << "delta,value,limit" << (cmd.bound ? ",exceeds_bound" : "") << '\n';
  for (std::size_t i = 0; i < scan.values.size(); ++i) {
    *sink << io::format_real(scan.deltas[i]) << ',' << io::format_real(scan.values[i]) << ','
          << io::format_real(scan.limit);
    if (cmd.bound) *sink << ',' << (scan.values[i] > *cmd.bound * *cmd.bound ? 1 : 0);
    *sink << '\n';
  }
}

struct TranslationCmd {
  FunctionSpec fn;
  HomeoSpec homeo;
  int thetas = 16;
};

void run_scan_translations(const Common& common, const TranslationCmd& cmd, Rng& rng, std::ostream& out) {
  check_grid(common.n);
  if (cmd.thetas < 1) invalid("--thetas must be >= 1");
  const Source src = load_source(cmd.fn, common.n, rng);
  const CircleHomeomorphism h = load_homeo(cmd.homeo, rng);
  std::vector<double> thetas(static_cast<std::size_t>(cmd.thetas));
  for (int m = 0; m < cmd.thetas; ++m) thetas[static_cast<std::size_t>(m)] = kTwoPi * m / cmd.thetas;
  const auto rows = translation_scan(src.series, h, thetas, common.n);

  Sink sink(common.out_path, out);
  *sink << "theta,seminorm_sq\n";
  for (const TranslationRow& r : rows) {
    *sink << io::format_real(r.theta) << ',' << io::format_real(r.seminorm_sq) << '\n';
  }
}

struct TailCmd {
  HomeoSpec homeo;
  int max_k = 16;
};

void run_tail_mass(const Common& common, const TailCmd& cmd, Rng& rng, std::ostream& out) {
  check_grid(common.n);
  if (cmd.max_k < 1) invalid("--max-k must be >= 1");
  const CircleHomeomorphism h = load_homeo(cmd.homeo, rng);
  const TailMassTable table = tail_mass_table(h, cmd.max_k, common.n);

  Sink sink(common.out_path, out);
  *sink << "k,tail_mass,seminorm_sq,bound,violated\n";
  for (std::size_t i = 0; i < table.ks.size(); ++i) {
    const ExpBoundCheck e = exp_lower_bound_check(h, table.ks[i], common.n);
    *sink << table.ks[i] << ',' << table.masses[i] << ',' << io::format_real(e.seminorm_sq) << ','
          << io::format_real(e.bound) << ',' << (e.violated ? 1 : 0) << '\n';
  }
}

struct WitnessCmd {
  int terms = 8;
  double exponent = 0.5;
  std::string grid_out;
};

Json run_witness(const Common& common, const WitnessCmd& cmd) {
  check_grid(common.n);
  if (cmd.terms < 1 || cmd.terms > 30) invalid("--terms must be in [1, 30]");
  check_positive(cmd.exponent, "--holder-exponent");
  const GridFunction f = lacunary_witness(cmd.terms, common.n);
  const SeminormReport report = seminorm_fourier(analyze(f));
  const HolderProfile holder = holder_profile(f, cmd.exponent);
  if (!cmd.grid_out.empty()) {
    std::ofstream file(cmd.grid_out);
    if (!file) invalid("cannot write " + cmd.grid_out);
    io::write_grid(file, f);
  }
  Json j;
  j["terms"] = cmd.terms;
  j["n"] = common.n;
  j["seminorm_squared"] = rounded(report.squared());
  j["partials"] = real_array(report.partials);
  j["holder_exponent"] = rounded(cmd.exponent);
  j["holder_deltas"] = real_array(holder.deltas);
  j["holder_ratios"] = real_array(holder.ratios);
  j["holder_constant"] = rounded(holder.constant);
  return j;
}

struct BohrPalCmd {
  FunctionSpec fn;
  SolverOptions solver;
  std::string method = "automatic";
  double mollify_by = 0.0;
  std::string report_path;
};

SolverMethod parse_method(const std::string& name) {
  if (name == "automatic") return SolverMethod::Automatic;
  if (name == "theodorsen") return SolverMethod::Theodorsen;
  if (name == "newton") return SolverMethod::Newton;
  if (name == "szego") return SolverMethod::SzegoKernel;
  invalid("unknown --method '" + name + "'");
}

Json run_bohrpal(const Common& common, const BohrPalCmd& cmd, Rng& rng, std::ostream& out) {
  check_grid(common.n);
  check_positive(cmd.solver.tolerance, "--tol");
  if (cmd.solver.max_iterations < 1) invalid("--max-iter must be >= 1");
  if (!(cmd.solver.damping > 0.0) || cmd.solver.damping > 1.0) invalid("--damping must lie in (0, 1]");
  if (cmd.mollify_by < 0.0) invalid("--mollify must be >= 0");
  SolverOptions options = cmd.solver;
  options.method = parse_method(cmd.method);
  const Source src = load_source(cmd.fn, common.n, rng);
  const BohrPalResult r = bohr_pal(src.on_grid(common.n), options, cmd.mollify_by);

  if (!common.out_path.empty()) {
    Sink sink(common.out_path, out);
    io::write_homeomorphism(*sink, r.correspondence.h);
  }
  const ImprovementReport& imp = r.improvement;
  Json j;
  j["function"] = src.name;
  j["n"] = r.input.size();
  j["mollify_half_width"] = rounded(r.mollify_half_width);
  j["offset"] = rounded(imp.offset);
  j["method"] = std::string(to_string(r.correspondence.method_used));
  j["iterations"] = r.correspondence.iterations;
  j["residual"] = rounded(r.correspondence.residual);
  j["area_spectral"] = rounded(r.area.spectral);
  j["area_shoelace"] = rounded(r.area.shoelace);
  j["analytic_residual"] = rounded(r.correspondence.analytic_residual());
  j["min_gap"] = rounded(r.correspondence.h.min_gap());
  j["pointwise_error"] = rounded(imp.pointwise_error);
  j["seminorm_before"] = rounded(imp.before.value);
  j["seminorm_after"] = rounded(imp.after.value);
  j["seminorm_boundary"] = rounded(imp.boundary.value);
  j["modulus_double_integral"] = rounded(imp.modulus_contraction.first);
  j["boundary_double_integral"] = rounded(imp.modulus_contraction.second);
  j["window"] = Json::array({imp.window_lo, imp.window_hi});
  j["slope_before"] = rounded(imp.slope_before);
  j["slope_after"] = rounded(imp.slope_after);
  j["seminorm_before_partials"] = real_array(imp.before.partials);
  j["seminorm_after_partials"] = real_array(imp.after.partials);
  return j;
}

}  // namespace

std::vector<std::string> subcommands() {
  return {"seminorm", "verify-lemmas", "scan-mollify", "scan-translations", "tail-mass", "witness-lacunary",
          "bohrpal"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier seminorms, circle homeomorphisms and the Bohr-Pal change of variable"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.fallthrough();
  app.require_subcommand(1);

  Common common;

  SeminormCmd seminorm;
  auto* s_sem = app.add_subcommand("seminorm", "Fourier seminorm and partial sums of a function");
  add_function_options(s_sem, seminorm.fn);
  s_sem->add_option("--n", common.n, "grid size (power of two)");
  s_sem->add_option("--truncation", seminorm.truncation, "band K (0 keeps the input band)");
  s_sem->add_option("--fejer", seminorm.fejer, "replace by the Fejer sum of this order");
  s_sem->add_option("--translate", seminorm.translate_by, "translate by this angle");
  s_sem->add_option("--mollify", seminorm.mollify_by, "mollify with this half-width");
  s_sem->add_option("--measure", seminorm.measure_path, "convolve with the measure in this file");
  s_sem->add_option("--quadrature", seminorm.quadrature, "also report the double-integral seminorm");
  s_sem->add_option("--out", common.out_path, "write the report here");
  s_sem->add_option("--seed", common.seed, "PRNG seed");

  LemmaCmd lemmas;
  auto* s_lem = app.add_subcommand("verify-lemmas", "randomized checks of the pairing and translation identities");
  s_lem->add_option("--n", common.n, "grid size (power of two)");
  s_lem->add_option("--seed", common.seed, "PRNG seed");
  s_lem->add_option("--cases", lemmas.cases, "random cases per check");
  s_lem->add_option("--degree", lemmas.degree, "degree of the random pairs");
  s_lem->add_option("--theta-nodes", lemmas.theta_nodes, "translation quadrature size");
  s_lem->add_option("--out", common.out_path, "write the report here");

  MollifyCmd mollify_cmd;
  double bound = 0.0;
  auto* s_mol = app.add_subcommand("scan-mollify", "S(delta, N) across a decreasing delta grid (CSV)");
  add_function_options(s_mol, mollify_cmd.fn);
  s_mol->add_option("--n", common.n, "grid size for sampled inputs");
  s_mol->add_option("--seed", common.seed, "PRNG seed");
  s_mol->add_option("--deltas", mollify_cmd.deltas, "explicit delta grid")->delimiter(',');
  s_mol->add_option("--delta-start", mollify_cmd.delta_start, "first delta of the halving grid");
  s_mol->add_option("--delta-stop", mollify_cmd.delta_stop, "last delta of the halving grid");
  s_mol->add_option("--cutoff", mollify_cmd.cutoff, "frequency cutoff N");
  auto* bound_opt = s_mol->add_option("--bound", bound, "flag rows with S > bound^2");
  s_mol->add_option("--out", common.out_path, "write the table here");

  TranslationCmd translation;
  auto* s_tr = app.add_subcommand("scan-translations", "seminorm of F_theta o h over a theta rule (CSV)");
  add_function_options(s_tr, translation.fn);
  add_homeo_options(s_tr, translation.homeo);
  s_tr->add_option("--n", common.n, "grid size (power of two)");
  s_tr->add_option("--seed", common.seed, "PRNG seed");
  s_tr->add_option("--thetas", translation.thetas, "uniform theta nodes");
  s_tr->add_option("--out", common.out_path, "write the table here");

  TailCmd tail;
  auto* s_tail = app.add_subcommand("tail-mass", "m(k) and the |k| lower bound for e^{ikh} (CSV)");
  add_homeo_options(s_tail, tail.homeo);
  s_tail->add_option("--n", common.n, "grid size (power of two)");
  s_tail->add_option("--seed", common.seed, "PRNG seed");
  s_tail->add_option("--max-k", tail.max_k, "largest |k|");
  s_tail->add_option("--out", common.out_path, "write the table here");

  WitnessCmd witness;
  auto* s_wit = app.add_subcommand("witness-lacunary", "lacunary witness: seminorm profile and Holder ratios");
  s_wit->add_option("--n", common.n, "grid size (power of two)");
  s_wit->add_option("--terms", witness.terms, "number of lacunary terms");
  s_wit->add_option("--holder-exponent", witness.exponent, "Holder exponent");
  s_wit->add_option("--grid-out", witness.grid_out, "also write the samples here");
  s_wit->add_option("--out", common.out_path, "write the report here");

  BohrPalCmd bohrpal;
  auto* s_bp = app.add_subcommand("bohrpal", "change of variable through the conformal map of a star domain");
  add_function_options(s_bp, bohrpal.fn);
  s_bp->add_option("--n", common.n, "grid size (power of two)");
  s_bp->add_option("--seed", common.seed, "PRNG seed");
  s_bp->add_option("--tol", bohrpal.solver.tolerance, "solver tolerance");
  s_bp->add_option("--max-iter", bohrpal.solver.max_iterations, "solver iteration budget");
  s_bp->add_option("--damping", bohrpal.solver.damping, "fixed-point damping");
  s_bp->add_option("--method", bohrpal.method, "automatic | theodorsen | newton | szego");
  s_bp->add_option("--mollify", bohrpal.mollify_by, "solve on the mollified function");
  s_bp->add_option("--out", common.out_path, "write the homeomorphism knots here");
  s_bp->add_option("--report", bohrpal.report_path, "write the JSON report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "ConfigInvalid: " << e.what() << '\n';
    return kConfigInvalid;
  }
  if (bound_opt->count() > 0) mollify_cmd.bound = bound;

  try {
    Rng rng(common.seed);
    if (s_sem->parsed()) {
      emit_json(run_seminorm(common, seminorm, rng), common.out_path, out);
    } else if (s_lem->parsed()) {
      const Json report = run_verify_lemmas(common, lemmas, rng);
      emit_json(report, common.out_path, out);
      if (!report["passed"].get<bool>()) {
        err << "ComputationFailed: a lemma check exceeded its tolerance\n";
        return kComputationFailed;
      }
    } else if (s_mol->parsed()) {
      run_scan_mollify(common, mollify_cmd, rng, out);
    } else if (s_tr->parsed()) {
      run_scan_translations(common, translation, rng, out);
    } else if (s_tail->parsed()) {
      run_tail_mass(common, tail, rng, out);
    } else if (s_wit->parsed()) {
      emit_json(run_witness(common, witness), common.out_path, out);
    } else if (s_bp->parsed()) {
      emit_json(run_bohrpal(common, bohrpal, rng, out), bohrpal.report_path, out);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::ConfigInvalid || e.code() == Errc::ParseError) {
      err << (e.code() == Errc::ConfigInvalid ? "" : "ConfigInvalid: ") << e.what() << '\n';
      return kConfigInvalid;
    }
    err << "ComputationFailed: " << e.what() << '\n';
    return kComputationFailed;
  }
  return kSuccess;
}

}  // namespace circle_sobolev::cli
