#include "charwave/config.hpp"

#include <cmath>
#include <set>

#include "charwave/errors.hpp"
#include "charwave/model.hpp"

namespace charwave {

std::string equation_name(Equation e) {
  return e == Equation::Unidirectional ? "unidirectional" : "wave";
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Solve: return "solve";
    case Experiment::Sweep: return "sweep";
    case Experiment::Verify: return "verify";
    case Experiment::ReproduceFigQuarter: return "reproduce-fig-quarter";
    case Experiment::ReproduceFigThird: return "reproduce-fig-third";
  }
  return "solve";
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw ConfigError(pointer, what);
}

void expect_keys(const json& obj, const std::string& base, const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail(base + "/" + it.key(), "unknown key");
}

double get_number(const json& obj, const std::string& base, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(base + "/" + key, "expected a number");
  return v.get<double>();
}

std::string get_string(const json& obj, const std::string& base, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) fail(base + "/" + key, "expected a string");
  return v.get<std::string>();
}

double check_lambda(double lambda, const std::string& pointer) {
  if (!(lambda > 0.0 && lambda < 1.0))
    fail(pointer, "lambda must lie in (0, 1); got " + std::to_string(lambda));
  return lambda;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "top level must be a JSON object");

  expect_keys(doc, "",
              {"equation", "experiment", "lambda", "model", "r", "n", "tol", "max_iter",
               "kappa", "outputs", "lambdas"});

  RunConfig cfg;

  if (!doc.contains("equation")) fail("/equation", "required key missing");
  {
    const std::string eq = get_string(doc, "", "equation");
    if (eq == "unidirectional") cfg.equation = Equation::Unidirectional;
    else if (eq == "wave") cfg.equation = Equation::Wave;
    else fail("/equation", "must be \"unidirectional\" or \"wave\"; got \"" + eq + "\"");
  }

  if (doc.contains("experiment")) {
    const std::string ex = get_string(doc, "", "experiment");
    if (ex == "solve") cfg.experiment = Experiment::Solve;
    else if (ex == "sweep") cfg.experiment = Experiment::Sweep;
    else if (ex == "verify") cfg.experiment = Experiment::Verify;
    else if (ex == "reproduce-fig-quarter") cfg.experiment = Experiment::ReproduceFigQuarter;
    else if (ex == "reproduce-fig-third") cfg.experiment = Experiment::ReproduceFigThird;
    else fail("/experiment", "unknown experiment \"" + ex + "\"");
  }

  if (!doc.contains("lambda")) fail("/lambda", "required key missing");
  cfg.lambda = check_lambda(get_number(doc, "", "lambda"), "/lambda");

  if (!doc.contains("model")) fail("/model", "required key missing");
  {
    const auto& m = doc.at("model");
    if (!m.is_object()) fail("/model", "expected an object");
    expect_keys(m, "/model", {"builtin"});
    if (!m.contains("builtin")) fail("/model/builtin", "required key missing");
    cfg.builtin = get_string(m, "/model", "builtin");
    const bool known = cfg.equation == Equation::Unidirectional ? is_builtin1(cfg.builtin)
                                                                : is_builtin2(cfg.builtin);
    if (!known)
      fail("/model/builtin", "unknown builtin model \"" + cfg.builtin + "\" for the " +
                                 equation_name(cfg.equation) + " family");
  }

  if (doc.contains("r")) {
    const double r = get_number(doc, "", "r");
    if (!(r > 0.0)) fail("/r", "domain parameter must be positive");
    cfg.r = r;
  }
  if (doc.contains("n")) {
    const auto& v = doc.at("n");
    if (!v.is_number_integer()) fail("/n", "expected an integer");
    cfg.n = v.get<int>();
    if (cfg.n < 16) fail("/n", "grid resolution must be at least 16");
  }
  if (doc.contains("tol")) {
    cfg.tol = get_number(doc, "", "tol");
    if (!(cfg.tol > 0.0 && cfg.tol <= 1e-4)) fail("/tol", "tolerance must lie in (0, 1e-4]");
  }
  if (doc.contains("max_iter")) {
    const auto& v = doc.at("max_iter");
    if (!v.is_number_integer()) fail("/max_iter", "expected an integer");
    cfg.max_iter = v.get<int>();
    if (cfg.max_iter < 1) fail("/max_iter", "must be at least 1");
  }
  if (doc.contains("kappa")) {
    const auto& v = doc.at("kappa");
    if (v.is_string()) {
      if (v.get<std::string>() != "auto") fail("/kappa", "must be a positive number or \"auto\"");
    } else if (v.is_number()) {
      const double k = v.get<double>();
      if (!(k > 0.0)) fail("/kappa", "weight exponent must be positive");
      cfg.kappa = k;
    } else {
      fail("/kappa", "must be a positive number or \"auto\"");
    }
  }
  if (doc.contains("outputs")) cfg.outputs = get_string(doc, "", "outputs");
  if (doc.contains("lambdas")) {
    const auto& v = doc.at("lambdas");
    if (!v.is_array()) fail("/lambdas", "expected an array of numbers");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail("/lambdas/" + std::to_string(i), "expected a number");
      cfg.lambdas.push_back(
          check_lambda(v[i].get<double>(), "/lambdas/" + std::to_string(i)));
    }
  }

  return cfg;
}

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["equation"] = equation_name(cfg.equation);
  j["experiment"] = experiment_name(cfg.experiment);
  j["lambda"] = cfg.lambda;
  j["model"] = nlohmann::ordered_json{{"builtin", cfg.builtin}};
  if (cfg.r) j["r"] = *cfg.r;
  j["n"] = cfg.n;
  j["tol"] = cfg.tol;
  j["max_iter"] = cfg.max_iter;
  if (cfg.kappa) j["kappa"] = *cfg.kappa;
  else j["kappa"] = "auto";
  // The output directory is execution metadata, not experiment identity; it is
  // omitted so reports stay byte-identical wherever the run lands.
  if (!cfg.lambdas.empty()) j["lambdas"] = cfg.lambdas;
  return j;
}

RunConfig reproduce_config(Experiment which) {
  if (which != Experiment::ReproduceFigQuarter && which != Experiment::ReproduceFigThird)
    throw InvariantError("reproduce_config expects a reproduce experiment");
  RunConfig cfg;
  cfg.equation = Equation::Wave;
  cfg.experiment = which;
  cfg.lambda = which == Experiment::ReproduceFigQuarter ? 0.25 : 1.0 / 3.0;
  cfg.builtin = "paper-fig";
  cfg.r = 3.0;
  cfg.n = 512;
  cfg.tol = 1e-10;
  cfg.max_iter = 200;
  cfg.outputs = which == Experiment::ReproduceFigQuarter ? "out/fig-quarter" : "out/fig-third";
  return cfg;
}

}  // namespace charwave
