#include "charwave/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charwave/csv.hpp"
#include "charwave/errors.hpp"
#include "charwave/model.hpp"
#include "charwave/parallel.hpp"
#include "charwave/unichar.hpp"
#include "charwave/verify.hpp"
#include "charwave/wavechar.hpp"

namespace charwave {

namespace {

using json = nlohmann::ordered_json;

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions opts;
  opts.tol = cfg.tol;
  opts.max_iter = cfg.max_iter;
  opts.kappa = cfg.kappa;
  opts.exec = Exec::Par;
  return opts;
}

json history_json1(const ConvergenceHistory& h) {
  json rows = json::array();
  for (const auto& r : h.rows)
    rows.push_back(json{{"iter", r.iter}, {"weighted", r.weighted}, {"plain", r.plain}});
  return json{{"kappa", h.kappa},
              {"converged", h.converged},
              {"iterations", h.iterations},
              {"rows", std::move(rows)}};
}

json history_json2(const ConvergenceHistory2& h) {
  json rows = json::array();
  for (const auto& r : h.rows)
    rows.push_back(json{{"iter", r.iter},
                        {"weighted", r.weighted},
                        {"plain", r.plain},
                        {"p_min", r.p_min},
                        {"p_max", r.p_max},
                        {"q_min", r.q_min},
                        {"q_max", r.q_max}});
  json events = json::array();
  for (const auto& e : h.positivity_events)
    events.push_back(json{{"iter", e.iter},
                          {"field", std::string(1, e.field)},
                          {"X", e.X},
                          {"Y", e.Y},
                          {"value", e.value}});
  return json{{"kappa", h.kappa},
              {"converged", h.converged},
              {"iterations", h.iterations},
              {"positivity_events", std::move(events)},
              {"rows", std::move(rows)}};
}

json holder_json(const HolderReport& h) {
  return json{{"beta", h.beta},
              {"x_quotient", h.x_quotient},
              {"t_quotient", h.t_quotient},
              {"mixed_quotient", h.mixed_quotient},
              {"overall", h.overall},
              {"pairs", h.pairs},
              {"window_scale", h.window_scale}};
}

// ---------------------------------------------------------------- family 1

struct Solve1Artifacts {
  ModelSpec1 spec;
  Grid1 grid;
  SolveResult1 sol;
  InverseResult1 inv;
  std::vector<std::string> warnings;
};

Solve1Artifacts solve1_core(const RunConfig& cfg) {
  Solve1Artifacts art{builtin_model1(cfg.builtin, cfg.lambda, cfg.r), {}, {}, {}, {}};
  const auto val = validate_model1(art.spec);
  if (!val.ok) throw InvariantError("model validation failed: " + join_lines(val.errors));
  art.warnings = val.warnings;
  art.grid = make_grid1(art.spec, cfg.n);
  art.sol = solve_semilinear(art.spec, art.grid, solve_options(cfg));
  art.inv = inverse_transform(art.spec, art.grid, art.sol.state);
  return art;
}

json diagnostics_json1(const Solve1Artifacts& art) {
  const auto& grid = art.grid;
  const auto& state = art.sol.state;

  const auto blow = detect_blowup1(art.spec, grid, state);
  double xi_min = 1e300, xi_max = -1e300;
  const std::size_t n = grid.T.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (grid.inside(i, j)) {
        xi_min = std::min(xi_min, state.xi.at(i, j));
        xi_max = std::max(xi_max, state.xi.at(i, j));
      }

  const auto semi = sobolev_seminorm(art.spec, grid, state);
  double s_lo = semi.front(), s_hi = semi.front();
  for (double s : semi) {
    s_lo = std::min(s_lo, s);
    s_hi = std::max(s_hi, s);
  }

  double x_sup = 0.0;
  for (const auto& row : art.inv.samples.rows) x_sup = std::max(x_sup, row.x);
  BumpTestFn bump{0.45 * x_sup, 0.5 * grid.r, 0.4 * x_sup, 0.45 * grid.r};

  json diag;
  diag["blowup"] = json{{"detected", blow.detected}, {"variable", "v"},
                        {"T", blow.T},               {"Y", blow.Y},
                        {"x", blow.x},               {"t", blow.t},
                        {"v_extreme", blow.v_extreme}};
  diag["extrema"] = json{{"xi_min", xi_min}, {"xi_max", xi_max}};
  json residuals;
  residuals["path_mismatch"] = art.inv.path_mismatch;
  residuals["energy"] = energy_residual(art.spec, grid, state, art.inv);
  residuals["weak_form"] = weak_residual(art.spec, grid, state, art.inv, bump);
  if (state.S)
    residuals["cross_derivative"] = cross_derivative_residual(grid, state);
  else
    residuals["cross_derivative"] = nullptr;
  residuals["sobolev_drift"] = s_hi - s_lo;
  diag["residuals"] = std::move(residuals);
  diag["sobolev_seminorm"] = semi.front();

  try {
    diag["holder"] = holder_json(
        holder_quotient(art.inv.samples, 1.0 - art.spec.lambda.value, 400));
  } catch (const DegenerateSamplesError&) {
    diag["holder"] = nullptr;
  }
  return diag;
}

// ---------------------------------------------------------------- family 2

struct Solve2Artifacts {
  ModelSpec2 spec;
  InitialCurve curve;
  Grid2 grid;
  SolveResult2 sol;
  InverseResult2 inv;
  std::vector<std::string> warnings;
};

Solve2Artifacts solve2_core(const RunConfig& cfg) {
  Solve2Artifacts art{builtin_model2(cfg.builtin, cfg.lambda, cfg.r), {}, {}, {}, {}, {}};
  const auto val = validate_model2(art.spec);
  if (!val.ok) throw InvariantError("model validation failed: " + join_lines(val.errors));
  art.warnings = val.warnings;
  if (art.spec.lambda.value > 1.0 / 3.0 + 1e-15)
    art.warnings.push_back(
        "lambda > 1/3 runs outside the contraction theory (exploratory regime)");
  const double span = art.spec.r + 2.0;
  art.curve = build_initial_curve(art.spec, -span, span, 4097);
  art.grid = make_grid2(art.spec, art.curve, cfg.n);
  art.sol = picard_solve(art.spec, art.grid, solve_options(cfg));
  art.inv = inverse_transform2(art.spec, art.grid, art.sol.state);
  return art;
}

json blowup_json2(const BlowupReport2& b) {
  json j;
  j["detected"] = b.detected;
  j["variable"] = b.variable;
  j["X"] = b.X;
  j["Y"] = b.Y;
  if (b.mapped) {
    j["x"] = b.x;
    j["t"] = b.t;
  } else {
    j["x"] = nullptr;
    j["t"] = nullptr;
  }
  j["w_sup"] = b.w_sup;
  j["v_sup"] = b.v_sup;
  return j;
}

json diagnostics_json2(const Solve2Artifacts& art) {
  const auto blow = detect_blowup2(art.grid, art.sol.state,
                                   3.14159265358979323846 - 1e-3, &art.inv);
  json diag;
  diag["blowup"] = blowup_json2(blow);
  diag["extrema"] = json{{"p_min", blow.p_min},
                         {"p_max", blow.p_max},
                         {"q_min", blow.q_min},
                         {"q_max", blow.q_max}};
  diag["residuals"] =
      json{{"path_mismatch", art.inv.path_mismatch},
           {"balance", balance_residual(art.spec, art.grid, art.sol.state)}};
  // Inverse-mapped wave samples are not organized in constant-t lines, so the
  // Hölder measurement runs on the FD oracle instead (verify experiment).
  diag["holder"] = nullptr;
  return diag;
}

// ---------------------------------------------------------------- experiments

RunOutcome outcome_solve1(const RunConfig& cfg) {
  auto art = solve1_core(cfg);
  RunOutcome out;
  out.report["config"] = config_echo(cfg);
  out.report["regime"] = regime_name(art.spec.lambda.regime);
  out.report["model"] = json{{"flux", art.spec.flux.name},
                             {"data", art.spec.data.name},
                             {"r", art.spec.r}};
  out.report["warnings"] = art.warnings;
  const auto& h = art.sol.history;
  out.report["convergence"] = json{{"converged", h.converged},
                                   {"iterations", h.iterations},
                                   {"kappa", h.kappa},
                                   {"final_weighted", h.rows.empty() ? 0.0 : h.rows.back().weighted},
                                   {"final_plain", h.rows.empty() ? 0.0 : h.rows.back().plain}};
  const json diag = diagnostics_json1(art);
  for (auto it = diag.begin(); it != diag.end(); ++it) out.report[it.key()] = it.value();
  out.report["files"] =
      json{{"state", "fields/state.csv"}, {"samples", "fields/physical.csv"}};

  out.files.emplace_back("fields/state.csv", state1_csv(art.grid, art.sol.state));
  out.files.emplace_back("fields/physical.csv", samples_csv(art.inv.samples));
  out.files.emplace_back("history.json", dump_json(history_json1(art.sol.history)));
  return out;
}

RunOutcome outcome_solve2(const RunConfig& cfg) {
  auto art = solve2_core(cfg);
  RunOutcome out;
  out.report["config"] = config_echo(cfg);
  out.report["regime"] = wave_regime_label(art.spec.lambda);
  out.report["model"] = json{{"speed", art.spec.speed.name},
                             {"data", art.spec.data.name},
                             {"r", art.spec.r}};
  out.report["warnings"] = art.warnings;
  const auto& h = art.sol.history;
  out.report["convergence"] = json{{"converged", h.converged},
                                   {"iterations", h.iterations},
                                   {"kappa", h.kappa},
                                   {"final_weighted", h.rows.empty() ? 0.0 : h.rows.back().weighted},
                                   {"final_plain", h.rows.empty() ? 0.0 : h.rows.back().plain},
                                   {"positivity_events", h.positivity_events.size()}};
  const json diag = diagnostics_json2(art);
  for (auto it = diag.begin(); it != diag.end(); ++it) out.report[it.key()] = it.value();

  const bool reproduce = cfg.experiment == Experiment::ReproduceFigQuarter ||
                         cfg.experiment == Experiment::ReproduceFigThird;
  if (reproduce) {
    const double p_min = out.report["extrema"]["p_min"].get<double>();
    const double q_min = out.report["extrema"]["q_min"].get<double>();
    out.report["pq_verdict"] = json{{"p_min", p_min},
                                    {"q_min", q_min},
                                    {"uniformly_positive", p_min > 0.0 && q_min > 0.0}};
  }
  out.report["files"] =
      json{{"state", "fields/state.csv"}, {"samples", "fields/physical.csv"}};

  out.files.emplace_back("fields/state.csv", state2_csv(art.grid, art.sol.state));
  out.files.emplace_back("fields/physical.csv", samples_csv(art.inv.samples));
  out.files.emplace_back("history.json", dump_json(history_json2(art.sol.history)));
  return out;
}

RunOutcome outcome_verify1(const RunConfig& cfg) {
  const ModelSpec1 spec = builtin_model1(cfg.builtin, cfg.lambda, cfg.r);
  const auto val = validate_model1(spec);
  if (!val.ok) throw InvariantError("model validation failed: " + join_lines(val.errors));

  std::optional<double> t_star;
  try {
    t_star = riccati_blowup_time(spec);
  } catch (const NotApplicableError&) {
    t_star = std::nullopt;
  }
  const double t_compare = t_star ? 0.25 * *t_star : 0.5;

  std::vector<int> ns;
  for (int n : {cfg.n / 4, cfg.n / 2, cfg.n})
    if (n >= 16 && (ns.empty() || n != ns.back())) ns.push_back(n);

  struct Run {
    int n;
    double t_line;
    PhysicalSamples samples;
    double x_line;
  };
  std::vector<Run> runs;
  for (int n : ns) {
    RunConfig sub = cfg;
    sub.n = n;
    auto art = solve1_core(sub);
    int il = 0;
    double best = 1e300;
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(art.grid.T[static_cast<std::size_t>(i)] - t_compare);
      if (d < best) {
        best = d;
        il = i;
      }
    }
    const double t_line = art.grid.T[static_cast<std::size_t>(il)];
    double x_line = 0.0;
    for (const auto& row : art.inv.samples.rows)
      if (row.t == t_line) x_line = std::max(x_line, row.x);
    runs.push_back({n, t_line, std::move(art.inv.samples), x_line});
  }
  double x_common = 1e300;
  for (const auto& r : runs) x_common = std::min(x_common, r.x_line);

  json rows = json::array();
  std::vector<std::pair<double, double>> errs;
  std::string csv = "n,h,t,linf,l2\n";
  for (const auto& r : runs) {
    const FDLattice1 lat{x_common + 1.0, 2 * r.n, 0.5};
    const auto fd = fd_solve_uni(spec, lat, r.t_line);
    const Window w{r.t_line, r.t_line, 0.0, 0.85 * x_common};
    const auto d = compare_fields(r.samples, fd, w);
    const double h = spec.r / static_cast<double>(r.n - 1);
    rows.push_back(json{{"n", r.n}, {"h", h}, {"t", r.t_line}, {"linf", d.linf}, {"l2", d.l2}});
    errs.emplace_back(h, d.linf);
    csv += std::to_string(r.n) + "," + format_double(h) + "," + format_double(r.t_line) +
           "," + format_double(d.linf) + "," + format_double(d.l2) + "\n";
  }

  RunOutcome out;
  out.report["config"] = config_echo(cfg);
  out.report["regime"] = regime_name(spec.lambda.regime);
  if (t_star)
    out.report["t_star"] = *t_star;
  else
    out.report["t_star"] = nullptr;
  out.report["compare_t"] = t_compare;
  out.report["fd_comparison"] = std::move(rows);
  if (errs.size() >= 3)
    out.report["order"] = convergence_order(errs);
  else
    out.report["order"] = nullptr;
  out.report["files"] = json{{"table", "fields/verify.csv"}};
  out.files.emplace_back("fields/verify.csv", std::move(csv));
  return out;
}

RunOutcome outcome_verify2(const RunConfig& cfg) {
  const ModelSpec2 spec = builtin_model2(cfg.builtin, cfg.lambda, cfg.r);
  const auto val = validate_model2(spec);
  if (!val.ok) throw InvariantError("model validation failed: " + join_lines(val.errors));

  const double t_h = 0.75;  // fixed pre-blowup horizon for the wave family
  const double xw = spec.r;
  const FDLattice2 lat{xw, 2.0 * xw / 2048.0, 0.5};
  const auto fd = fd_solve_wave(spec, lat, t_h);

  std::vector<int> ns;
  for (int n : {cfg.n / 4, cfg.n / 2, cfg.n})
    if (n >= 16 && (ns.empty() || n != ns.back())) ns.push_back(n);

  json rows = json::array();
  std::vector<std::pair<double, double>> errs;
  std::string csv = "n,h,linf,l2\n";
  const Window w{0.7 * t_h, t_h, -0.8 * spec.r, 0.8 * spec.r};
  for (int n : ns) {
    RunConfig sub = cfg;
    sub.n = n;
    auto art = solve2_core(sub);
    const auto d = compare_fields(art.inv.samples, fd, w);
    const double h = 2.0 * spec.r / static_cast<double>(n - 1);
    rows.push_back(json{{"n", n}, {"h", h}, {"linf", d.linf}, {"l2", d.l2}});
    errs.emplace_back(h, d.linf);
    csv += std::to_string(n) + "," + format_double(h) + "," + format_double(d.linf) + "," +
           format_double(d.l2) + "\n";
  }

  RunOutcome out;
  out.report["config"] = config_echo(cfg);
  out.report["regime"] = wave_regime_label(spec.lambda);
  out.report["horizon_t"] = t_h;
  out.report["fd_comparison"] = std::move(rows);
  if (errs.size() >= 3)
    out.report["order"] = convergence_order(errs);
  else
    out.report["order"] = nullptr;

  // Constant speed admits the classical closed form as a second oracle.
  if (val.c_max - val.c_min <= 1e-12 * std::max(1.0, val.c_max)) {
    const double c0 = spec.speed.c(0.0);
    double worst = 0.0;
    const std::size_t it = fd.t.size() - 1;
    for (std::size_t k = 0; k < fd.x.size(); ++k) {
      if (std::abs(fd.x[k]) > 0.8 * spec.r) continue;
      const double ex = dalembert_exact(c0, spec.data.u0, spec.data.u1, fd.x[k], fd.t[it]);
      worst = std::max(worst, std::abs(fd.u.at(it, k) - ex));
    }
    out.report["dalembert_linf"] = worst;
  } else {
    out.report["dalembert_linf"] = nullptr;
  }
  out.report["files"] = json{{"table", "fields/verify.csv"}};
  out.files.emplace_back("fields/verify.csv", std::move(csv));
  return out;
}

RunOutcome outcome_sweep(const RunConfig& cfg) {
  if (cfg.lambdas.empty())
    throw ConfigError("/lambdas", "sweep requires a non-empty lambda list");

  RunOutcome out;
  out.report["config"] = config_echo(cfg);
  json rows = json::array();
  const bool uni = cfg.equation == Equation::Unidirectional;
  std::string csv = uni ? "lambda,regime,converged,iterations,blowup_detected,blowup_t,"
                          "xi_min,xi_max,path_mismatch\n"
                        : "lambda,regime,converged,iterations,blowup_detected,blowup_t,"
                          "p_min,p_max,q_min,q_max,path_mismatch\n";

  for (double lambda : cfg.lambdas) {
    RunConfig sub = cfg;
    sub.lambda = lambda;
    sub.experiment = Experiment::Solve;
    json row;
    row["lambda"] = lambda;
    const LambdaParam lp = LambdaParam::make(lambda);
    row["regime"] = uni ? regime_name(lp.regime) : wave_regime_label(lp);
    try {
      if (uni) {
        auto art = solve1_core(sub);
        const auto blow = detect_blowup1(art.spec, art.grid, art.sol.state);
        double xi_min = 1e300, xi_max = -1e300;
        const std::size_t n = art.grid.T.size();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (art.grid.inside(i, j)) {
              xi_min = std::min(xi_min, art.sol.state.xi.at(i, j));
              xi_max = std::max(xi_max, art.sol.state.xi.at(i, j));
            }
        row["converged"] = art.sol.history.converged;
        row["iterations"] = art.sol.history.iterations;
        row["blowup"] = json{{"detected", blow.detected}, {"t", blow.detected ? json(blow.t) : json(nullptr)}};
        row["xi_min"] = xi_min;
        row["xi_max"] = xi_max;
        row["path_mismatch"] = art.inv.path_mismatch;
        csv += format_double(lambda) + "," + row["regime"].get<std::string>() + "," +
               (art.sol.history.converged ? "1" : "0") + "," +
               std::to_string(art.sol.history.iterations) + "," +
               (blow.detected ? "1" : "0") + "," +
               (blow.detected ? format_double(blow.t) : "") + "," + format_double(xi_min) +
               "," + format_double(xi_max) + "," + format_double(art.inv.path_mismatch) +
               "\n";
      } else {
        auto art = solve2_core(sub);
        const auto blow =
            detect_blowup2(art.grid, art.sol.state, 3.14159265358979323846 - 1e-3, &art.inv);
        row["converged"] = art.sol.history.converged;
        row["iterations"] = art.sol.history.iterations;
        row["blowup"] = json{{"detected", blow.detected},
                             {"t", blow.detected && blow.mapped ? json(blow.t) : json(nullptr)}};
        row["p_min"] = blow.p_min;
        row["p_max"] = blow.p_max;
        row["q_min"] = blow.q_min;
        row["q_max"] = blow.q_max;
        row["path_mismatch"] = art.inv.path_mismatch;
        csv += format_double(lambda) + "," + row["regime"].get<std::string>() + "," +
               (art.sol.history.converged ? "1" : "0") + "," +
               std::to_string(art.sol.history.iterations) + "," +
               (blow.detected ? "1" : "0") + "," +
               (blow.detected && blow.mapped ? format_double(blow.t) : "") + "," +
               format_double(blow.p_min) + "," + format_double(blow.p_max) + "," +
               format_double(blow.q_min) + "," + format_double(blow.q_max) + "," +
               format_double(art.inv.path_mismatch) + "\n";
      }
    } catch (const Error& e) {
      row["error"] = e.what();
      csv += format_double(lambda) + "," + row["regime"].get<std::string>() +
             ",,,,,,,,\n";
    }
    rows.push_back(std::move(row));
  }

  out.report["rows"] = std::move(rows);
  out.report["files"] = json{{"table", "fields/sweep.csv"}};
  out.files.emplace_back("fields/sweep.csv", std::move(csv));
  return out;
}

}  // namespace

RunOutcome execute(const RunConfig& config) {
  RunConfig cfg = config;
  RunOutcome out;
  switch (cfg.experiment) {
    case Experiment::ReproduceFigQuarter:
    case Experiment::ReproduceFigThird: {
      // Frozen figure configs (only the output directory is caller-chosen).
      RunConfig frozen = reproduce_config(cfg.experiment);
      frozen.outputs = cfg.outputs;
      out = outcome_solve2(frozen);
      break;
    }
    case Experiment::Solve:
      out = cfg.equation == Equation::Unidirectional ? outcome_solve1(cfg)
                                                     : outcome_solve2(cfg);
      break;
    case Experiment::Verify:
      out = cfg.equation == Equation::Unidirectional ? outcome_verify1(cfg)
                                                     : outcome_verify2(cfg);
      break;
    case Experiment::Sweep:
      out = outcome_sweep(cfg);
      break;
  }
  out.files.emplace_back("report.json", dump_json(out.report));
  return out;
}

void write_outcome(const std::string& outdir, const RunOutcome& outcome) {
  for (const auto& [rel, content] : outcome.files)
    write_text_file((std::filesystem::path(outdir) / rel).string(), content);
}

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read failed for " + path);
  return ss.str();
}

std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw ConfigError("/lambdas", "not a number: \"" + tok + "\"");
    if (!(v > 0.0 && v < 1.0))
      throw ConfigError("/lambdas", "lambda must lie in (0, 1); got " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("/lambdas", "empty lambda list");
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"characteristic-coordinate solvers for two nonlinear wave families"};
  app.require_subcommand(1);

  std::string config_path, out_override, figure, lambdas_text;

  auto* cmd_run = app.add_subcommand("run", "execute the experiment described by a config");
  cmd_run->add_option("--config", config_path, "JSON config path")->required();
  cmd_run->add_option("--out", out_override, "output directory override");

  auto* cmd_rep = app.add_subcommand("reproduce", "run a frozen figure configuration");
  cmd_rep->add_option("figure", figure, "which figure")
      ->required()
      ->check(CLI::IsMember({"fig-quarter", "fig-third"}));
  cmd_rep->add_option("--out", out_override, "output directory override");

  auto* cmd_ver = app.add_subcommand("verify", "oracle cross-checks and convergence orders");
  cmd_ver->add_option("--config", config_path, "JSON config path")->required();
  cmd_ver->add_option("--out", out_override, "output directory override");

  auto* cmd_swp = app.add_subcommand("sweep", "repeat a solve over a lambda list");
  cmd_swp->add_option("--config", config_path, "JSON config path")->required();
  cmd_swp->add_option("--lambdas", lambdas_text, "comma-separated lambda list");
  cmd_swp->add_option("--out", out_override, "output directory override");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Config);
  }

  apply_thread_cap_from_env();

  try {
    RunConfig cfg;
    if (cmd_rep->parsed()) {
      cfg = reproduce_config(figure == "fig-quarter" ? Experiment::ReproduceFigQuarter
                                                     : Experiment::ReproduceFigThird);
    } else {
      cfg = parse_config(read_text_file(config_path));
      if (cmd_ver->parsed()) cfg.experiment = Experiment::Verify;
      if (cmd_swp->parsed()) {
        cfg.experiment = Experiment::Sweep;
        if (!lambdas_text.empty()) cfg.lambdas = parse_lambda_list(lambdas_text);
      }
    }
    if (!out_override.empty()) cfg.outputs = out_override;

    const auto t0 = std::chrono::steady_clock::now();
    const RunOutcome outcome = execute(cfg);
    write_outcome(cfg.outputs, outcome);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("experiment: %s\n", experiment_name(cfg.experiment).c_str());
    std::printf("outputs:    %s\n", cfg.outputs.c_str());
    if (outcome.report.contains("convergence")) {
      const auto& c = outcome.report["convergence"];
      std::printf("converged:  %s in %d iterations\n",
                  c["converged"].get<bool>() ? "yes" : "no", c["iterations"].get<int>());
    }
    if (outcome.report.contains("blowup"))
      std::printf("blowup:     %s\n",
                  outcome.report["blowup"]["detected"].get<bool>() ? "detected" : "none");
    // Wall-clock goes to the console only; emitted files stay byte-reproducible.
    std::printf("wall-clock: %.2fs\n", secs);
    return static_cast<int>(ExitCode::Ok);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(ExitCode::Invariant);
  }
}

}  // namespace charwave
