#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace charwave {

enum class Equation { Unidirectional, Wave };
enum class Experiment { Solve, Sweep, Verify, ReproduceFigQuarter, ReproduceFigThird };

std::string equation_name(Equation e);
std::string experiment_name(Experiment e);

// One experiment description. Parsed strictly: unknown keys anywhere are
// rejected with a JSON-pointer path, as are out-of-range values.
struct RunConfig {
  Equation equation = Equation::Wave;
  Experiment experiment = Experiment::Solve;
  double lambda = 0.25;
  std::string builtin;               // model/builtin registry name
  std::optional<double> r;           // solve domain; registry default if absent
  int n = 256;                       // grid resolution per axis (>= 16)
  double tol = 1e-10;                // fixed-point tolerance, (0, 1e-4]
  int max_iter = 200;
  std::optional<double> kappa;       // weight exponent; absent = "auto"
  std::string outputs = "out";       // output directory
  std::vector<double> lambdas;       // sweep list (sweep experiment only)
};

RunConfig parse_config(const std::string& text);

// Canonical JSON echo of a config (insertion-ordered, normalized defaults);
// embedded in every report so outputs are self-describing.
nlohmann::ordered_json config_echo(const RunConfig& config);

// Frozen figure-reproduction configs (the source text pins no numerical
// parameters, so these are versioned here): wave family, reference pulse,
// lambda = 1/4 or 1/3, r = 3, n = 512.
RunConfig reproduce_config(Experiment which);

}  // namespace charwave
