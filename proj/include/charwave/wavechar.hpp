#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charwave/field.hpp"
#include "charwave/model.hpp"
#include "charwave/numerics.hpp"
#include "charwave/parallel.hpp"
#include "charwave/unichar.hpp"  // SolveOptions (shared iteration controls)

namespace charwave {

// Characteristic coordinates for the wave family. With R = u_t + c u_x and
// S = u_t - c u_x, the plane is re-parameterized by
//   X(x) = int_0^x (1 + R0^2)^{1/(2 lambda)} dx',
//   Y(x) = -int_0^x (1 + S0^2)^{1/(2 lambda)} dx',
// so the initial line t = 0 becomes a strictly decreasing curve Y = phi(X)
// through the origin, and p = q = 1 along it by construction.

// Parametric initial-curve samples with monotone lookups. p and q are
// identically 1 on the curve and are not stored.
struct InitialCurve {
  struct Point {
    double x = 0.0, X = 0.0, Y = 0.0, u = 0.0, w = 0.0, v = 0.0;
  };
  std::vector<double> x, X, Y, u, w, v;  // x ascending; X ascending; Y descending

  // Curve point with the given X (resp. Y), located by monotone bisection and
  // linear interpolation of the stored samples; clamps at the ends.
  Point at_X(double X) const;
  Point at_Y(double Y) const;
  double phi(double X) const { return at_X(X).Y; }      // Y on the curve
  double phi_inv(double Y) const { return at_Y(Y).X; }  // X on the curve
};

// Samples the curve on n uniform parameter values over [xmin, xmax]
// (xmin < 0 < xmax); throws QuadratureError if the coordinate integrals fail.
InitialCurve build_initial_curve(const ModelSpec2& spec, double xmin, double xmax, int n);

// Rectangular n-by-n lattice over the truncated domain
// {(X,Y): Y >= phi(X), X <= r, Y <= r}, masked to it. Layout: i indexes X,
// j indexes Y. Each masked node's backward integration paths (in X at fixed Y,
// in Y at fixed X) stay inside the mask; verified at construction.
struct Grid2 {
  int n = 0;
  double r = 0.0;
  double hX = 0.0, hY = 0.0;
  std::vector<double> X, Y;        // axes, sizes n
  std::vector<std::uint8_t> mask;  // n*n, 1 = inside

  std::vector<int> first_i;                    // per Y-column: first in-domain X index
  std::vector<InitialCurve::Point> col_start;  // per Y-column: curve point (phi^-1(Y), Y)
  std::vector<int> first_j;                    // per X-row: first in-domain Y index
  std::vector<InitialCurve::Point> row_start;  // per X-row: curve point (X, phi(X))

  bool inside(std::size_t i, std::size_t j) const { return mask[i * X.size() + j] != 0; }
};

// Requires the curve to span the domain (its Y range reaches r on the left and
// its X range reaches r on the right).
Grid2 make_grid2(const ModelSpec2& spec, const InitialCurve& curve, int n);

// Solved fields. w = 2 arctan R and v = 2 arctan S along characteristics;
// p, q are the characteristic dilation variables (positive is the
// experimental question, asserted only where the contract says so).
struct State2 {
  Field u, w, v, p, q;
};

// One node's right-hand sides of the transformed semi-linear system; powers
// use the continuous extension at cos = 0.
struct Rhs2 {
  double u_X = 0.0, u_Y = 0.0, w_Y = 0.0, v_X = 0.0, p_Y = 0.0, q_X = 0.0;
};
Rhs2 rhs_wave(double u, double w, double v, double p, double q, const ModelSpec2& spec);

// p or q reached zero or below at a node during iteration; recorded, never
// fatal — boundedness and positivity of p, q is the outcome variable.
struct PositivityLossEvent {
  int iter = 0;
  char field = 'p';  // 'p' or 'q'
  double X = 0.0, Y = 0.0, value = 0.0;
};

struct IterationRow2 {
  int iter = 0;
  double weighted = 0.0;  // sup-norm of the update under e^{-kappa (|X| + |Y|)}
  double plain = 0.0;     // unweighted sup-norm of the update
  double p_min = 0.0, p_max = 0.0, q_min = 0.0, q_max = 0.0;  // running extrema
};

struct ConvergenceHistory2 {
  std::vector<IterationRow2> rows;
  bool converged = false;
  int iterations = 0;
  double kappa = 0.0;
  std::vector<PositivityLossEvent> positivity_events;  // at most one per field per sweep
};

struct SolveResult2 {
  State2 state;
  ConvergenceHistory2 history;
};

// Fixed-point solve of the integral form: u, v, q by X-integration from the
// curve point (phi^-1(Y), Y); w, p by Y-integration from (X, phi(X));
// trapezoidal quadrature with a fractional first segment against the exact
// curve point; seeds extend curve data constant along integration directions
// with p = q = 1.
SolveResult2 picard_solve(const ModelSpec2& spec, const Grid2& grid, const SolveOptions& opts);

// Default weight exponent: 2 (c_max / c_min^2) sup|c'| r max(1, (1-lambda)/lambda).
double default_kappa2(const ModelSpec2& spec);

// Max-norm residual of the balance law
//   (cos^2(w/2))^{1/(2 lambda)-1} p_Y + (cos^2(v/2))^{1/(2 lambda)-1} q_X = 0
// with centered differences on interior masked nodes; first-order.
double balance_residual(const ModelSpec2& spec, const Grid2& grid, const State2& state);

// Physical coordinates from t_X = p Cw^{1/(2 lambda)}/(2c), x_X = c t_X and
// t_Y = q Cv^{1/(2 lambda)}/(2c), x_Y = -c t_Y, integrated from the curve
// (t = 0 and x = curve parameter there, exactly). The output fields follow the
// X-direction route; the max X-route/Y-route disagreement over the domain is
// the compatibility residual (throws CompatibilityError above ~50 h scale).
struct InverseResult2 {
  PhysicalSamples samples;
  Field t, x;
  double path_mismatch = 0.0;
};
InverseResult2 inverse_transform2(const ModelSpec2& spec, const Grid2& grid,
                                  const State2& state, bool throw_on_mismatch = true);

// detected iff max(|w|, |v|) >= threshold at some masked node. The reported
// node minimizes recovered time when an inverse map is supplied (then index
// order), plain index order otherwise. pq extrema always cover the domain.
struct BlowupReport2 {
  bool detected = false;
  std::string variable;  // "w", "v", or "v-or-w"
  double X = 0.0, Y = 0.0;
  bool mapped = false;
  double x = 0.0, t = 0.0;  // physical location when mapped
  double p_min = 0.0, p_max = 0.0, q_min = 0.0, q_max = 0.0;
  double w_sup = 0.0, v_sup = 0.0;  // sup |w|, sup |v| over the domain
};
BlowupReport2 detect_blowup2(const Grid2& grid, const State2& state,
                             double threshold = 3.14159265358979323846 - 1e-3,
                             const InverseResult2* inv = nullptr);

// Wave-family regime label: the transformed system's contraction theory covers
// lambda in (0, 1/3]; anything larger runs as exploratory ("Unsupported").
std::string wave_regime_label(const LambdaParam& lambda);

// Refinement study of the p, q extrema and the blowup time.
struct SweepRow {
  int n = 0;
  double p_min = 0.0, p_max = 0.0, q_min = 0.0, q_max = 0.0;
  bool detected = false;
  double blowup_t = 0.0;  // recovered physical time (when detected)
  bool converged = false;
  int iterations = 0;
};
struct SweepReport {
  std::vector<SweepRow> rows;
  bool pq_cauchy = false;  // every extremum changes < 5% between the last two rows
  std::string regime;
  std::vector<std::string> notes;
};
SweepReport pq_stability_sweep(const ModelSpec2& spec, const std::vector<Grid2>& grids,
                               const SolveOptions& opts);

}  // namespace charwave
