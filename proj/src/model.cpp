#include "charwave/model.hpp"

#include <algorithm>
#include <cmath>

#include "charwave/errors.hpp"

namespace charwave {
namespace {

constexpr double kPi = 3.14159265358979323846;

double sech(double x) { return 1.0 / std::cosh(x); }

// Sine-well data: u0'(x) = -sin^2(2x) on [0, pi/2], zero elsewhere, so
// min u0' = -1 (attained at x = pi/4) and the support is compact.
double sine_well_du0(double x) {
  if (x <= 0.0 || x >= kPi / 2.0) return 0.0;
  const double s = std::sin(2.0 * x);
  return -s * s;
}
double sine_well_u0(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= kPi / 2.0) return -kPi / 4.0;
  return -(x / 2.0 - std::sin(4.0 * x) / 8.0);
}

// Smooth rapidly decaying data for residual and stability studies.
double parabola_u0(double x) {
  if (x <= 0.0) return 0.0;
  return x * x * std::exp(-2.0 * x * x);
}
double parabola_du0(double x) {
  if (x <= 0.0) return 0.0;
  return 2.0 * x * (1.0 - 2.0 * x * x) * std::exp(-2.0 * x * x);
}

// Engineered wave-family blowup: exponential speed keeps c'/c constant so the
// focusing never shuts off, and u1 = c(u0) u0' launches a pure left-mover
// (S0 = 0). Parameters picked so the plain fixed-point iteration still
// converges on the pinned domain r = 4.5 while w crosses pi inside it.
constexpr double kFocusAlpha = 0.85;
constexpr double kFocusAmp = 0.7;
constexpr double kFocusWidth = 2.8;
double focus_u0(double x) { return kFocusAmp * sech(kFocusWidth * x); }
double focus_du0(double x) {
  return -kFocusAmp * kFocusWidth * std::tanh(kFocusWidth * x) * sech(kFocusWidth * x);
}
double focus_c(double u) { return std::exp(kFocusAlpha * u); }

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Holder13: return "Holder13";
    case Regime::Half: return "Half";
    case Regime::Sobolev12: return "Sobolev12";
    case Regime::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

LambdaParam LambdaParam::make(double lambda) {
  LambdaParam p;
  p.value = lambda;
  if (std::abs(lambda - 0.5) <= 1e-12)
    p.regime = Regime::Half;
  else if (lambda > 0.0 && lambda <= 1.0 / 3.0 + 1e-15)
    p.regime = Regime::Holder13;
  else if (lambda > 1.0 / 3.0 && lambda < 0.5)
    p.regime = Regime::Sobolev12;
  else
    p.regime = Regime::Unsupported;
  return p;
}

ValidationReport validate_model1(const ModelSpec1& spec) {
  ValidationReport rep;
  if (!(spec.lambda.value > 0.0) || spec.lambda.value > 0.5 + 1e-12) {
    rep.ok = false;
    rep.errors.push_back("unidirectional family requires lambda in (0, 1/2]");
  }
  if (!(spec.r > 0.0)) {
    rep.ok = false;
    rep.errors.push_back("domain parameter r must be positive");
  }
  const int kSamples = 4096;
  // Data window [0, r]; flux window spans the data range with margin.
  double umin = 0.0, umax = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = spec.r * (static_cast<double>(i) / (kSamples - 1));
    const double u = spec.data.u0(x);
    umin = std::min(umin, u);
    umax = std::max(umax, u);
  }
  const double pad = 0.5 * (umax - umin) + 0.5;
  umin -= pad;
  umax += pad;
  double prev_u = umin, prev_d2 = spec.flux.d2f(umin);
  rep.d2f_sup = std::abs(prev_d2);
  for (int i = 1; i < kSamples; ++i) {
    const double u = umin + (umax - umin) * (static_cast<double>(i) / (kSamples - 1));
    const double d2 = spec.flux.d2f(u);
    if (!std::isfinite(d2)) {
      rep.ok = false;
      rep.errors.push_back("f'' is not finite on the data range");
      break;
    }
    rep.d2f_sup = std::max(rep.d2f_sup, std::abs(d2));
    rep.d2f_lipschitz = std::max(rep.d2f_lipschitz, std::abs(d2 - prev_d2) / (u - prev_u));
    prev_u = u;
    prev_d2 = d2;
  }
  if (spec.flux.df(0.0) < -1e-12) {
    rep.ok = false;
    rep.errors.push_back("f'(0) must be nonnegative for the boundary-value problem");
  }
  if (std::abs(spec.data.u0(0.0)) > 1e-12 || std::abs(spec.data.du0(0.0)) > 1e-12) {
    rep.ok = false;
    rep.errors.push_back("initial data must satisfy u0(0) = u0'(0) = 0");
  }
  for (int i = 0; i < kSamples; ++i) {
    const double x = spec.r / 2.0 + (spec.r / 2.0) * (static_cast<double>(i) / (kSamples - 1));
    rep.tail_sup = std::max(rep.tail_sup,
                            std::max(std::abs(spec.data.u0(x)), std::abs(spec.data.du0(x))));
  }
  if (rep.tail_sup > 1e-4)
    rep.warnings.push_back("initial data is not negligible beyond r/2; truncation effects may be visible");
  return rep;
}

ValidationReport validate_model2(const ModelSpec2& spec) {
  ValidationReport rep;
  if (!(spec.lambda.value > 0.0) || !(spec.lambda.value < 1.0)) {
    rep.ok = false;
    rep.errors.push_back("wave family requires lambda in (0, 1)");
  } else if (spec.lambda.value > 1.0 / 3.0 + 1e-15) {
    rep.warnings.push_back("lambda above 1/3 is exploratory for the wave family (regime " +
                           regime_name(spec.lambda.regime) + ")");
  }
  if (!(spec.r > 0.0)) {
    rep.ok = false;
    rep.errors.push_back("domain parameter r must be positive");
  }
  const int kSamples = 4096;
  double umin = 0.0, umax = 0.0;
  const double xw = std::max(spec.r, 1.0) * 2.0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = -xw + 2.0 * xw * (static_cast<double>(i) / (kSamples - 1));
    const double u = spec.data.u0(x);
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    const double ax = std::abs(x);
    if (ax >= spec.r / 2.0)
      rep.tail_sup = std::max(rep.tail_sup,
                              std::max({std::abs(spec.data.u0(x)), std::abs(spec.data.du0(x)),
                                        std::abs(spec.data.u1(x))}));
  }
  const double pad = 0.5 * (umax - umin) + 0.5;
  umin -= pad;
  umax += pad;
  rep.c_min = rep.c_max = spec.speed.c(umin);
  for (int i = 0; i < kSamples; ++i) {
    const double u = umin + (umax - umin) * (static_cast<double>(i) / (kSamples - 1));
    const double c = spec.speed.c(u);
    const double dc = spec.speed.dc(u);
    if (!std::isfinite(c) || !std::isfinite(dc)) {
      rep.ok = false;
      rep.errors.push_back("speed or its derivative is not finite on the data range");
      break;
    }
    rep.c_min = std::min(rep.c_min, c);
    rep.c_max = std::max(rep.c_max, c);
    rep.dc_sup = std::max(rep.dc_sup, std::abs(dc));
  }
  if (!(rep.c_min > 0.0)) {
    rep.ok = false;
    rep.errors.push_back("wave speed must be strictly positive on the data range");
  }
  if (rep.tail_sup > 1e-4)
    rep.warnings.push_back("initial data is not negligible beyond r/2; truncation effects may be visible");
  return rep;
}

RiemannData riemann_data(const ModelSpec2& spec, double x) {
  const double cu = spec.speed.c(spec.data.u0(x));
  const double du = spec.data.du0(x);
  const double u1 = spec.data.u1(x);
  return {u1 + cu * du, u1 - cu * du};
}

std::vector<std::string> builtin_names1() {
  return {"burgers-flux", "smooth-parabola", "linear-transport"};
}
std::vector<std::string> builtin_names2() {
  return {"paper-fig", "unit-speed", "focusing-pulse"};
}
bool is_builtin1(const std::string& name) {
  const auto v = builtin_names1();
  return std::find(v.begin(), v.end(), name) != v.end();
}
bool is_builtin2(const std::string& name) {
  const auto v = builtin_names2();
  return std::find(v.begin(), v.end(), name) != v.end();
}

ModelSpec1 builtin_model1(const std::string& name, double lambda, std::optional<double> r) {
  ModelSpec1 spec;
  spec.lambda = LambdaParam::make(lambda);
  const FluxModel burgers{"quadratic", [](double u) { return 0.5 * u * u; },
                          [](double u) { return u; }, [](double) { return 1.0; }};
  if (name == "burgers-flux") {
    spec.flux = burgers;
    spec.data = {"sine-well", sine_well_u0, sine_well_du0};
    spec.r = r.value_or(1.0 / lambda + 2.5);
  } else if (name == "smooth-parabola") {
    spec.flux = burgers;
    spec.data = {"parabola-exp", parabola_u0, parabola_du0};
    spec.r = r.value_or(5.5);
  } else if (name == "linear-transport") {
    spec.flux = {"linear", [](double u) { return u; }, [](double) { return 1.0; },
                 [](double) { return 0.0; }};
    spec.data = {"sine-well", sine_well_u0, sine_well_du0};
    spec.r = r.value_or(4.0);
  } else {
    throw ConfigError("/model/builtin", "unknown unidirectional model '" + name + "'");
  }
  return spec;
}

ModelSpec2 builtin_model2(const std::string& name, double lambda, std::optional<double> r) {
  ModelSpec2 spec;
  spec.lambda = LambdaParam::make(lambda);
  if (name == "paper-fig") {
    spec.speed = {"sqrt-cos", [](double u) {
                    const double c = std::cos(u);
                    return std::sqrt(c * c + 1.0);
                  },
                  [](double u) {
                    const double c = std::cos(u);
                    return -std::sin(2.0 * u) / (2.0 * std::sqrt(c * c + 1.0));
                  }};
    spec.data = {"sech-pulse", [](double x) { return sech(x); },
                 [](double x) { return -std::tanh(x) * sech(x); },
                 [](double x) { return -std::tanh(x) * sech(x); }};
    spec.r = r.value_or(3.0);
  } else if (name == "unit-speed") {
    spec.speed = {"constant", [](double) { return 1.0; }, [](double) { return 0.0; }};
    spec.data = {"sech-pulse", [](double x) { return sech(x); },
                 [](double x) { return -std::tanh(x) * sech(x); },
                 [](double x) { return -std::tanh(x) * sech(x); }};
    spec.r = r.value_or(3.0);
  } else if (name == "focusing-pulse") {
    spec.speed = {"exponential", focus_c,
                  [](double u) { return kFocusAlpha * focus_c(u); }};
    spec.data = {"steep-pulse", focus_u0, focus_du0,
                 [](double x) { return focus_c(focus_u0(x)) * focus_du0(x); }};
    spec.r = r.value_or(4.5);
  } else {
    throw ConfigError("/model/builtin", "unknown wave model '" + name + "'");
  }
  return spec;
}

}  // namespace charwave
