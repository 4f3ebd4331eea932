#!/usr/bin/env python3
"""Characteristic initial values and transformed right-hand sides.

Frozen into tests/test_model.cpp, tests/test_unichar.cpp and
tests/test_wavechar.cpp.

The wave-family u-equations are derived here from first principles as a
cross-check of the implementation's 1/(4c) prefactor:

  With R = u_t + c u_x, S = u_t - c u_x, w = 2 atan R, v = 2 atan S, and the
  characteristic coordinates defined by t_X = p Cw^{1/(2l)} / (2c) along the
  +c family (Cw = cos^2(w/2)), the chain rule gives

    u_X = u_t t_X + u_x x_X = (u_t + c u_x) t_X = R t_X.

  Since R = tan(w/2) and Cw = 1/(1+R^2):
    R Cw^{1/(2l)} = tan(w/2) cos(w/2)^2 Cw^{1/(2l)-1}
                  = (1/2) sin(w) Cw^{1/(2l)-1},
  so u_X = sin(w) Cw^{1/(2l)-1} p / (4c).  The same argument on the -c family
  gives u_Y = sin(v) Cv^{1/(2l)-1} q / (4c).
"""

import math
import sys

from mpmath import mp, mpf, atan, cos, sin, sqrt, sech, tanh

mp.dps = 30


def show(name, value):
    print(f"{name} = {mp.nstr(mpf(value), 17)}")


# --- "paper-fig" model at x = 1 --------------------------------------------
c = lambda u: sqrt(cos(u) ** 2 + 1)
u0 = sech(1)
du0 = -sech(1) * tanh(1)
u1 = du0
R0 = u1 + c(u0) * du0
S0 = u1 - c(u0) * du0
show("sech_1", u0)
show("dsech_1", du0)
show("c_of_sech_1", c(u0))
show("c_of_1", c(mpf(1)))
show("paper_fig_R0_1", R0)
show("paper_fig_S0_1", S0)
show("paper_fig_w0_1", 2 * atan(R0))

# --- unidirectional semi-linear right-hand sides ----------------------------
#   u_Y  = 1/2 xi sin(v) C^{1/(2l)-1}
#   v_T  = -2 l f'' sin^2(v/2)
#   xi_T = 1/2 f'' xi sin(v)
# At l = 1/2 the C-power exponent is 0 (continuous extension: C^0 = 1), so at
# v = pi/2, xi = 1, f'' = 1:
lam = mpf(1) / 2
v = mp.pi / 2
assert 1 / (2 * lam) - 1 == 0
show("rhs1_half_u_Y", mpf(1) / 2 * sin(v))          # 0.5
show("rhs1_half_v_T", -2 * lam * sin(v / 2) ** 2)   # -0.5
show("rhs1_half_xi_T", mpf(1) / 2 * sin(v))         # 0.5

# S_Y = (1 - l) f'' xi sin^2(v/2) C^{1/(2l)-1}; at v = pi the cosine factor is
# 0 with exponent 0 at l = 1/2 (extension 0^0 = 1) and exponent 1 at l = 1/4.
show("rhsS_half_v_pi", (1 - mpf(1) / 2) * 1 * 1 * 1)  # 0.5
show("rhsS_quarter_v_pi", 0 * 1)                      # 0.0

# --- wave-family u_X, frozen spot value -------------------------------------
# c = 1, l = 1/2, w = pi/2, p = 1: Cw^{1/(2l)-1} = Cw^0 = 1, so
# u_X = sin(pi/2) * 1 * 1 / (4 * 1) = 1/4.
show("rhs2_unit_u_X", sin(mp.pi / 2) / 4)

# Cross-check the two routes to u_X at scattered states.
for (w, p, cc, lamv) in [(0.9, 1.2, 1.3, 0.25), (-2.6, 0.7, 0.8, 0.5),
                         (2.2, 1.6, 1.1, 1.0 / 3.0)]:
    w, p, cc, lamv = map(mpf, (w, p, cc, lamv))
    R = mp.tan(w / 2)
    tX = p * (cos(w / 2) ** 2) ** (1 / (2 * lamv)) / (2 * cc)
    route_a = R * tX
    route_b = sin(w) * (cos(w / 2) ** 2) ** (1 / (2 * lamv) - 1) * p / (4 * cc)
    if abs(route_a - route_b) > mpf("1e-25"):
        sys.exit(f"u_X routes disagree at w={w}: {route_a} vs {route_b}")

# --- full wave right-hand side at one scattered state -----------------------
# Frozen into tests/test_wavechar.cpp as a cross-language regression pin.
# Model: speed sqrt(cos^2 u + 1); state u=0.3, w=0.9, v=-0.4, p=1.2, q=0.8,
# lambda = 1/4.
u, w, v, p, q, lam = map(mpf, ("0.3", "0.9", "-0.4", "1.2", "0.8", "0.25"))
cu = c(u)
dcu = -sin(2 * u) / (2 * sqrt(cos(u) ** 2 + 1))
e = 1 / (2 * lam) - 1
Cw, Cv = cos(w / 2) ** 2, cos(v / 2) ** 2
sw, sv = sin(w / 2) ** 2, sin(v / 2) ** 2
u_X = sin(w) * Cw**e * p / (4 * cu)
u_Y = sin(v) * Cv**e * q / (4 * cu)
brw = lam * sw * Cv + (lam - 1) * sv * Cw - (2 * lam - 1) / 4 * sin(w) * sin(v)
brv = lam * sv * Cw + (lam - 1) * sw * Cv - (2 * lam - 1) / 4 * sin(w) * sin(v)
w_Y = dcu / (2 * cu**2) * q * Cv**e * brw
v_X = dcu / (2 * cu**2) * p * Cw**e * brv
brp = (lam - 1) / lam * (sin(w) * sv - sin(v) * sw) - sin(w) * Cv + sin(v) * Cw
p_Y = dcu / (8 * cu**2) * p * q * Cv**e * brp
q_X = -dcu / (8 * cu**2) * p * q * Cw**e * brp
for name, val in [("u_X", u_X), ("u_Y", u_Y), ("w_Y", w_Y), ("v_X", v_X),
                  ("p_Y", p_Y), ("q_X", q_X)]:
    show(f"rhs2_spot_{name}", val)

# The balance identity Cw^e p_Y + Cv^e q_X = 0 must hold exactly.
bal = Cw**e * p_Y + Cv**e * q_X
if abs(bal) > mpf("1e-25"):
    sys.exit(f"balance identity violated: {bal}")

# Another derivation check: u_xx-free reduction means q_X/p_Y = -Cw^e/Cv^e.
print("ok")
