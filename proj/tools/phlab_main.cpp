// phlab: probability curves, parameter sweeps, spectral diagnostics and
// the verification suite for the three bundled non-self-adjoint models.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "phlab/dynamics.hpp"
#include "phlab/eqho.hpp"
#include "phlab/landau.hpp"
#include "phlab/stateexpr.hpp"
#include "phlab/swanson.hpp"
#include "phlab/verify.hpp"

namespace {

using namespace phlab;

struct ModelOpts {
  std::string model;
  double nu = 1.0;
  double theta = 0.19634954084936207;  // pi/16
  double k1 = 0.0, k2 = 0.0;
};

struct MethodOpts {
  std::string method = "closed";
  int nmax = 64;
  double tol = 1e-10;

  Method resolve() const {
    if (method == "closed") return Method::closed_form();
    if (method == "spectral") return Method::spectral(nmax);
    if (method == "oracle") return Method::oracle(tol);
    throw std::invalid_argument("unknown method '" + method + "'");
  }
};

void add_model_flags(CLI::App* cmd, ModelOpts& opts) {
  cmd->add_option("--model", opts.model, "model id: eqho, swanson, landau")
      ->required();
  cmd->add_option("--nu", opts.nu, "eqho parameter nu > 0");
  cmd->add_option("--theta", opts.theta,
                  "swanson parameter theta in (-pi/4, pi/4) \\ {0}, radians");
  cmd->add_option("--k1", opts.k1, "landau parameter k1 in (-1/2, 1/2)");
  cmd->add_option("--k2", opts.k2, "landau parameter k2 in (-1/2, 1/2)");
}

template <class Fn>
int with_model(const ModelOpts& opts, Fn&& fn) {
  if (opts.model == "eqho") return fn(EqhoModel{EqhoParams{opts.nu}});
  if (opts.model == "swanson")
    return fn(SwansonModel{SwansonParams{opts.theta}});
  if (opts.model == "landau")
    return fn(LandauModel{LandauParams{opts.k1, opts.k2}});
  throw std::invalid_argument("unknown model '" + opts.model +
                              "' (expected eqho, swanson or landau)");
}

std::vector<Metric> metric_list(const std::string& sel) {
  if (sel == "standard") return {Metric::standard};
  if (sel == "psi") return {Metric::psi};
  if (sel == "phi") return {Metric::phi};
  if (sel == "all") return {Metric::standard, Metric::psi, Metric::phi};
  throw std::invalid_argument("unknown metric '" + sel +
                              "' (expected standard, psi, phi or all)");
}

std::vector<double> linspace(double t0, double t1, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i)
    out[i] = t0 + (t1 - t0) * static_cast<double>(i) /
                      static_cast<double>(std::max(steps - 1, 1));
  return out;
}

std::string csv_header(const std::string& key,
                       const std::vector<Metric>& metrics) {
  std::string line = key;
  for (Metric m : metrics) line += std::string(",P_") + to_string(m);
  return line + "\n";
}

std::string render_cell(const std::optional<double>& v) {
  return v ? fmt_double(*v) : "divergent";
}

void emit(const std::string& csv, const std::string& gnuplot_base,
          const std::vector<Metric>& metrics, const std::string& xlabel) {
  std::fputs(csv.c_str(), stdout);
  if (gnuplot_base.empty()) return;
  std::ofstream data(gnuplot_base + ".csv");
  data << csv;
  std::ofstream script(gnuplot_base + ".gp");
  script << "set datafile separator ','\n"
         << "set datafile missing 'divergent'\n"
         << "set key autotitle columnhead\n"
         << "set xlabel '" << xlabel << "'\n"
         << "set ylabel 'probability'\n"
         << "plot";
  for (std::size_t i = 0; i < metrics.size(); ++i)
    script << (i ? "," : "") << " '" << gnuplot_base << ".csv' using 1:"
           << i + 2 << " with lines";
  script << "\n";
}

// ------------------------------------------------------------------ prob

struct ProbOpts {
  ModelOpts model;
  MethodOpts method;
  std::string initial, final_expr, metric = "all", gnuplot;
  double t0 = 0.0, t1 = 6.283185307179586;
  int steps = 100;
};

int run_prob(const ProbOpts& o) {
  const auto metrics = metric_list(o.metric);
  const auto times = linspace(o.t0, o.t1, o.steps);
  return with_model(o.model, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    const auto phi0 = to_expansion<Model>(parse_state_expr(o.initial));
    const auto phif = to_expansion<Model>(parse_state_expr(o.final_expr));
    std::vector<ProbabilityCurve> curves;
    for (Metric m : metrics)
      curves.push_back(
          compute_curve(model, phi0, phif, m, times, o.method.resolve()));
    std::string csv = csv_header("t", metrics);
    bool any_finite = false;
    for (std::size_t i = 0; i < times.size(); ++i) {
      csv += fmt_double(times[i]);
      for (const auto& curve : curves) {
        csv += "," + render_cell(curve.values[i]);
        any_finite |= curve.values[i].has_value();
      }
      csv += "\n";
    }
    emit(csv, o.gnuplot, metrics, "t");
    return any_finite ? 0 : 3;
  });
}

// ----------------------------------------------------------------- sweep

struct SweepOpts {
  ModelOpts model;
  MethodOpts method;
  std::string param, initial, final_expr, metric = "all", gnuplot;
  double from = 0.0, to = 1.0, t = 0.0;
  int steps = 20;
};

int run_sweep(const SweepOpts& o) {
  const auto metrics = metric_list(o.metric);
  const auto values = linspace(o.from, o.to, o.steps);
  std::string csv = csv_header(o.param, metrics);
  bool any_finite = false;
  for (double v : values) {
    ModelOpts opts = o.model;
    if (o.param == "nu")
      opts.nu = v;
    else if (o.param == "theta")
      opts.theta = v;
    else if (o.param == "k1")
      opts.k1 = v;
    else if (o.param == "k2")
      opts.k2 = v;
    else
      throw std::invalid_argument("unknown sweep parameter '" + o.param + "'");
    csv += fmt_double(v);
    with_model(opts, [&](const auto& model) {
      using Model = std::decay_t<decltype(model)>;
      const auto phi0 = to_expansion<Model>(parse_state_expr(o.initial));
      const auto phif = to_expansion<Model>(parse_state_expr(o.final_expr));
      for (Metric m : metrics) {
        const auto curve =
            compute_curve(model, phi0, phif, m, {o.t}, o.method.resolve());
        csv += "," + render_cell(curve.values[0]);
        any_finite |= curve.values[0].has_value();
      }
      return 0;
    });
    csv += "\n";
  }
  emit(csv, o.gnuplot, metrics, o.param);
  return any_finite ? 0 : 3;
}

// -------------------------------------------------------------- spectral

struct SpectralOpts {
  ModelOpts model;
  std::string state, family = "psi";
  int nmax = 64;
};

int run_spectral(const SpectralOpts& o) {
  if (o.family != "phi" && o.family != "psi")
    throw std::invalid_argument("family must be phi or psi");
  const Family fam = o.family == "phi" ? Family::phi : Family::psi;
  return with_model(o.model, [&](const auto& model) {
    using Model = std::decay_t<decltype(model)>;
    const auto f = to_expansion<Model>(parse_state_expr(o.state));
    const auto report = spectral_coefficients(model, f, fam, o.nmax);
    std::string csv = "n,re,im,partial_tail\n";
    for (const auto& row : report.rows)
      csv += std::to_string(row.ordinal) + "," + fmt_double(row.coeff.real()) +
             "," + fmt_double(row.coeff.imag()) + "," +
             fmt_double(row.partial_tail) + "\n";
    csv += std::string("# summary: ") +
           (report.tail_growth ? "tail-growth" : "convergent") +
           " (reconstruction residual " +
           fmt_double(report.reconstruction_residual) + ")\n";
    std::fputs(csv.c_str(), stdout);
    return 0;
  });
}

// ---------------------------------------------------------------- verify

int run_verify(std::optional<double> tol, const std::string& only) {
  VerifyOptions opts;
  if (tol)
    opts.tol_override = *tol;
  else if (const char* env = std::getenv("PHLAB_TOL"))
    opts.tol_override = std::atof(env);
  opts.only = only;
  const VerifyReport report = run_acceptance(opts);
  std::fputs(render_report(report).c_str(), stdout);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phlab: transition probabilities for non-self-adjoint Hamiltonians "
      "under three inequivalent inner products"};
  app.require_subcommand(1);

  ProbOpts prob;
  auto* cmd_prob = app.add_subcommand(
      "prob", "probability curves P(t) as CSV on standard output");
  add_model_flags(cmd_prob, prob.model);
  cmd_prob->add_option("--initial", prob.initial,
                       "initial state, e.g. \"phi:0+phi:1\"")
      ->required();
  cmd_prob->add_option("--final", prob.final_expr, "final state, e.g. \"psi:0\"")
      ->required();
  cmd_prob->add_option("--metric", prob.metric, "standard, psi, phi or all");
  cmd_prob->add_option("--t0", prob.t0, "start time");
  cmd_prob->add_option("--t1", prob.t1, "end time");
  cmd_prob->add_option("--steps", prob.steps, "number of rows");
  cmd_prob->add_option("--method", prob.method.method,
                       "closed, spectral or oracle");
  cmd_prob->add_option("--nmax", prob.method.nmax, "spectral truncation");
  cmd_prob->add_option("--gnuplot", prob.gnuplot,
                       "also write BASE.csv and a BASE.gp plotting script");

  SweepOpts sweep;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "probabilities against a swept model parameter, CSV");
  add_model_flags(cmd_sweep, sweep.model);
  cmd_sweep->add_option("--param", sweep.param, "nu, theta, k1 or k2")
      ->required();
  cmd_sweep->add_option("--from", sweep.from, "first parameter value")
      ->required();
  cmd_sweep->add_option("--to", sweep.to, "last parameter value")->required();
  cmd_sweep->add_option("--steps", sweep.steps, "number of rows");
  cmd_sweep->add_option("--initial", sweep.initial, "initial state")
      ->required();
  cmd_sweep->add_option("--final", sweep.final_expr, "final state")
      ->required();
  cmd_sweep->add_option("--metric", sweep.metric, "standard, psi, phi or all");
  cmd_sweep->add_option("--t", sweep.t, "evaluation time");
  cmd_sweep->add_option("--method", sweep.method.method,
                        "closed, spectral or oracle");
  cmd_sweep->add_option("--gnuplot", sweep.gnuplot,
                        "also write BASE.csv and a BASE.gp plotting script");

  SpectralOpts spectral;
  auto* cmd_spectral = app.add_subcommand(
      "spectral", "expansion coefficients and tail diagnostics, CSV");
  add_model_flags(cmd_spectral, spectral.model);
  cmd_spectral->add_option("--state", spectral.state, "state expression")
      ->required();
  cmd_spectral->add_option("--family", spectral.family,
                           "family to expand against: phi or psi");
  cmd_spectral->add_option("--nmax", spectral.nmax, "number of coefficients");

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the acceptance suite and print a PASS/FAIL table");
  double tol_value = 0.0;
  std::string only;
  auto* tol_opt = cmd_verify->add_option(
      "--tol", tol_value,
      "floor every comparison tolerance at this value (also via PHLAB_TOL)");
  cmd_verify->add_option(
      "--only", only, "restrict to checks whose id starts with this prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_prob) return run_prob(prob);
    if (*cmd_sweep) return run_sweep(sweep);
    if (*cmd_spectral) return run_spectral(spectral);
    if (*cmd_verify)
      return run_verify(*tol_opt ? std::optional<double>(tol_value)
                                 : std::nullopt,
                        only);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const phlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
