#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charwave/field.hpp"
#include "charwave/model.hpp"
#include "charwave/numerics.hpp"
#include "charwave/parallel.hpp"

namespace charwave {

// Characteristic coordinates for the unidirectional family. The initial line
// t = 0 is re-parameterized by Y(x) = int_0^x (1 + u0'^2)^{1/(2 lambda)} dx'
// and T = t; the physical boundary x = 0 maps to the line Y = -f'(0) T.

// Monotone map x -> Y(x) on [0, r] (Y(x) >= x since the integrand is >= 1).
CumulativeMap initial_coordinate(const ModelSpec1& spec);

// Rectangular n-by-n lattice over [0, r] x [Y_lo, r], Y_lo = min(0, -f'(0) r),
// masked to the solve domain {Y >= -f'(0) T}. Layout: i indexes T, j indexes Y.
struct Grid1 {
  int n = 0;
  double r = 0.0;
  double f_prime0 = 0.0;
  double hT = 0.0, hY = 0.0;
  std::vector<double> T, Y;        // axes, sizes n
  std::vector<std::uint8_t> mask;  // n*n, 1 = inside the solve domain
  std::vector<int> first_j;        // per T-line: first in-domain Y index
  std::vector<double> Y_start;     // per T-line: boundary intersection -f'(0) T
  std::vector<int> first_i;        // per Y-column: first in-domain T index
  std::vector<double> T_start;     // per Y-column: boundary time (0 for Y >= 0)

  bool inside(std::size_t i, std::size_t j) const { return mask[i * T.size() + j] != 0; }
};

Grid1 make_grid1(const ModelSpec1& spec, int n);

// Solved characteristic-coordinate fields. v = 2 arctan(u_x along the image),
// xi is the dilation variable (energy density over coordinate stretching).
// S = u_t + f'(u) u_x is reconstructed after convergence in the regimes where
// the construction defines it (lambda <= 1/3 or lambda = 1/2).
struct State1 {
  Field u, v, xi;
  std::optional<Field> S;
};

struct IterationRow {
  int iter = 0;
  double weighted = 0.0;  // sup-norm of the update under e^{-kappa (T + |Y|)}
  double plain = 0.0;     // unweighted sup-norm of the update
};

struct ConvergenceHistory {
  std::vector<IterationRow> rows;
  bool converged = false;
  int iterations = 0;
  double kappa = 0.0;
};

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 200;
  std::optional<double> kappa;  // weight exponent; default from the model
  Exec exec = Exec::Par;
  bool throw_on_divergence = true;
};

struct SolveResult1 {
  State1 state;
  ConvergenceHistory history;
};

// Right-hand sides of the transformed semi-linear system at one node; powers
// use the continuous extension at cos = 0.
struct Rhs1 {
  double u_Y = 0.0, v_T = 0.0, xi_T = 0.0;
};
Rhs1 rhs_semilinear(double u, double v, double xi, double d2f, const LambdaParam& lambda);

// S-equation right-hand side: S_Y = (1 - lambda) f''(u) xi sin^2(v/2) C^e.
double rhs_S(double u, double v, double xi, double d2f, const LambdaParam& lambda);

// Fixed-point solve of the integral form: u by Y-integration from the
// boundary image, v and xi by T-integration from the initial line (or the
// boundary image for Y < 0). Seeds extend the data along integration lines.
// The T = 0 row is pinned to the exact initial data.
SolveResult1 solve_semilinear(const ModelSpec1& spec, const Grid1& grid,
                              const SolveOptions& opts);

// Default weight exponent: dominates the right-hand side's Lipschitz constant.
double default_kappa1(const ModelSpec1& spec);

// Physical coordinates: x by Y-integration of x_Y = xi C^{1/(2 lambda)} from
// the boundary (x = 0 there), cross-checked against T-integration of
// x_T = f'(u) from the initial map; the max mismatch is the compatibility
// residual (throws CompatibilityError above ~50 h scale).
struct InverseResult1 {
  PhysicalSamples samples;
  Field x;                    // primary (Y-integrated) physical abscissa
  double path_mismatch = 0.0; // sup |x - x_alt| over the domain
};
InverseResult1 inverse_transform(const ModelSpec1& spec, const Grid1& grid,
                                 const State1& state, bool throw_on_mismatch = true);

// int |sin(v/2)|^{1/lambda} xi dY along each T-line; equals the physical
// Sobolev seminorm int |u_x|^{1/lambda} dx and is conserved by the flow.
std::vector<double> sobolev_seminorm(const ModelSpec1& spec, const Grid1& grid,
                                     const State1& state);

struct BlowupReport1 {
  bool detected = false;
  double T = 0.0, Y = 0.0;  // first exceeding node (min T, then min Y)
  double x = 0.0, t = 0.0;  // mapped physical location
  double v_extreme = 0.0;   // signed v of largest magnitude over the domain
};
BlowupReport1 detect_blowup1(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                             double threshold = 3.14159265358979323846 - 1e-3);

// C^1 bump test function phi(x,t) = q((x-x0)/sx) q((t-t0)/st), q(s)=(1-s^2)^2.
struct BumpTestFn {
  double x0 = 0.0, t0 = 0.0, sx = 1.0, st = 1.0;
  double value(double x, double t) const;
  double ddx(double x, double t) const;
  double ddt(double x, double t) const;
};

// |integral of the weak form| against one bump, evaluated entirely in the
// characteristic coordinates (no differencing of the solution).
double weak_residual(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                     const InverseResult1& inv, const BumpTestFn& phi);

// Max-norm residual of the conservation form of the energy law on the smooth
// region (cos^2(v/2) >= smooth_floor), after resampling to a uniform physical
// lattice; first-order under refinement.
double energy_residual(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                       const InverseResult1& inv, double smooth_floor = 0.25);

// Max-norm residual of u_T = S on interior nodes (centered differences),
// defined when state.S is present; first-order under refinement.
double cross_derivative_residual(const Grid1& grid, const State1& state);

}  // namespace charwave
