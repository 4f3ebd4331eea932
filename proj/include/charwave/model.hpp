#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charwave/numerics.hpp"

namespace charwave {

// Regularity regime of the exponent parameter lambda:
//   Holder13    — lambda in (0, 1/3]: Hölder(1-lambda) continuity territory
//   Half        — lambda = 1/2: the classical energy/variational case
//   Sobolev12   — lambda in (1/3, 1/2): W^{1,1/lambda} territory
//   Unsupported — anything else (exploratory only)
enum class Regime { Holder13, Half, Sobolev12, Unsupported };

std::string regime_name(Regime r);

struct LambdaParam {
  double value = 0.0;
  Regime regime = Regime::Unsupported;

  // Exponent of the coordinate stretch (1+g^2)^{1/(2 lambda)}.
  double stretch_exponent() const { return 0.5 / value; }
  // Exponent appearing in the transformed right-hand sides: 1/(2 lambda) - 1.
  double rhs_exponent() const { return 0.5 / value - 1.0; }

  static LambdaParam make(double lambda);
};

// Unidirectional family: u_tx + f'(u) u_xx + lambda f''(u) (u_x)^2 = 0 on
// x >= 0 with u(0,t) = 0. The flux enters through f', f''.
struct FluxModel {
  std::string name;
  RealFn f, df, d2f;
};

// Wave family: u_tt - c(u)^2 u_xx - 2 lambda c(u) c'(u) (u_x)^2 = 0.
struct SpeedModel {
  std::string name;
  RealFn c, dc;
};

struct InitialData1 {
  std::string name;
  RealFn u0, du0;  // defined for x >= 0; compatibility: u0(0) = u0'(0) = 0
};

struct InitialData2 {
  std::string name;
  RealFn u0, du0, u1;  // u(x,0) = u0, u_t(x,0) = u1
};

struct ModelSpec1 {
  LambdaParam lambda;
  FluxModel flux;
  InitialData1 data;
  double r = 0.0;  // solve domain parameter
};

struct ModelSpec2 {
  LambdaParam lambda;
  SpeedModel speed;
  InitialData2 data;
  double r = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  // Measured on a 4096-sample lattice over the data window.
  double d2f_sup = 0.0;        // sup |f''|               (unidirectional)
  double d2f_lipschitz = 0.0;  // divided-difference Lipschitz estimate of f''
  double c_min = 0.0, c_max = 0.0, dc_sup = 0.0;  // wave speed bounds
  double tail_sup = 0.0;  // max data magnitude beyond r/2 (decay check)
};

// Checks the structural assumptions for each family: f'(0) >= 0, finite
// sup|f''| and Lipschitz estimate, boundary compatibility u0(0)=u0'(0)=0 for
// the unidirectional family; 0 < c_min <= c_max and finite sup|c'| for the
// wave family. Data decay beyond r/2 below 1e-4 is required only as a warning.
ValidationReport validate_model1(const ModelSpec1& spec);
ValidationReport validate_model2(const ModelSpec2& spec);

// Characteristic initial values for the wave family:
//   R0 = u1 + c(u0) u0',   S0 = u1 - c(u0) u0'.
struct RiemannData {
  double R0 = 0.0, S0 = 0.0;
};
RiemannData riemann_data(const ModelSpec2& spec, double x);

// Builtin registry. Unidirectional entries: "burgers-flux" (f = u^2/2 with the
// sine-well blowup data), "smooth-parabola" (f = u^2/2 with smooth decaying
// data), "linear-transport" (f = u). Wave entries: "paper-fig" (the reference
// pulse with speed sqrt(cos^2 u + 1)), "unit-speed" (c = 1, same pulse),
// "focusing-pulse" (exponential speed, engineered gradient blowup).
// default_r(name, lambda) gives each entry's pinned domain parameter.
std::vector<std::string> builtin_names1();
std::vector<std::string> builtin_names2();
bool is_builtin1(const std::string& name);
bool is_builtin2(const std::string& name);
ModelSpec1 builtin_model1(const std::string& name, double lambda,
                          std::optional<double> r = std::nullopt);
ModelSpec2 builtin_model2(const std::string& name, double lambda,
                          std::optional<double> r = std::nullopt);

}  // namespace charwave
