#!/usr/bin/env python3
"""Closed forms: d'Alembert values, Riccati blowup times, cotangent law.

Frozen into tests/test_verify.cpp and tests/test_unichar.cpp.

Cotangent law (constant f'' = k, unidirectional family): along each
characteristic line (fixed Y, increasing T) the transformed system reduces to

    v_T  = -2 l k sin^2(v/2),
    xi_T = (k/2) xi sin(v),

independent of u.  Substituting m = cot(v/2) gives m_T = l k exactly, so

    m(T) = cot(v0/2) + l k T,
    v(T) = v0 - 2 (atan(m(T)) - atan(m(0))),
    xi(T) = xi0 ((1 + m(T)^2)/(1 + m(0)^2))^(1/(2l)).

The v branch is the continuous continuation: v decreases through -pi (the
gradient blowup) toward -2pi as T grows.  Gradient catastrophe along the
characteristic through x0 happens where m = 0, i.e. at T = -cot(v0/2)/(l k)
= 1/(l k |u0'(x0)|) for u0'(x0) < 0; minimizing over x0 gives
t* = 1/(l k sup(-u0')).
"""

import sys

import numpy as np
from mpmath import mp, mpf, atan, cot, sech, sqrt
from scipy.integrate import solve_ivp

mp.dps = 30


def show(name, value):
    print(f"{name} = {mp.nstr(mpf(value), 17)}")


# --- d'Alembert -------------------------------------------------------------
# u(x,t) = (u0(x-ct)+u0(x+ct))/2 + (1/(2c)) int_{x-ct}^{x+ct} u1.
# Case 1: c = 1, u0 = sech, u1 = u0'. The integral telescopes and the solution
# is the pure left-mover u(x,t) = sech(x+t).
show("dalembert_sech_x03_t07", sech(mpf("0.3") + mpf("0.7")))
# Case 2: c = 2, u0 = 0, u1 = 1: u(x,t) = (1/(2c)) * 2ct = t.
show("dalembert_const_u1_t07", mpf("0.7"))
# Case 3: c = 1, u0 = sech, u1 = 0 at (x,t) = (0.2, 0.5).
show("dalembert_sech_half", (sech(mpf("-0.3")) + sech(mpf("0.7"))) / 2)

# --- Riccati blowup times ----------------------------------------------------
# sine-well data: sup(-u0') = 1 at x = pi/4, so t* = 1/(l k) with k = 1.
show("riccati_sine_well_quarter", 1 / (mpf(1) / 4))
show("riccati_sine_well_half", 1 / (mpf(1) / 2))
# smooth-parabola data u0' = 2x(1-2x^2)e^{-2x^2}: interior minimum where
# 8x^4 - 10x^2 + 1 = 0, i.e. x^2 = (10+sqrt(68))/16 (the larger root).
x = sqrt((10 + sqrt(68)) / 16)
du = 2 * x * (1 - 2 * x * x) * mp.e ** (-2 * x * x)
show("smooth_parabola_min_du0", du)
show("riccati_smooth_parabola_half", 1 / (mpf(1) / 2 * (-du)))

# --- cotangent-law spot values (l = 1/2, k = 1) ------------------------------
# Characteristic with v0 = -pi/2 (u0' = -1), evaluated at T = 1.
lam = mpf(1) / 2
v0 = -mp.pi / 2
m0 = cot(v0 / 2)
m1 = m0 + lam * 1
v1 = v0 - 2 * (atan(m1) - atan(m0))
xi1 = ((1 + m1 * m1) / (1 + m0 * m0)) ** (1 / (2 * lam))
show("cot_law_v_T1", v1)
show("cot_law_xi_T1", xi1)

# Cross-check with a high-accuracy ODE integration of the raw system.
def rhs(_, y):
    v, xi = y
    return [-2 * 0.5 * np.sin(v / 2) ** 2, 0.5 * xi * np.sin(v)]


sol = solve_ivp(rhs, [0.0, 1.0], [-np.pi / 2, 1.0], rtol=1e-12, atol=1e-14,
                dense_output=True)
v_ode, xi_ode = sol.y[0][-1], sol.y[1][-1]
if abs(v_ode - float(v1)) > 1e-9 or abs(xi_ode - float(xi1)) > 1e-9:
    sys.exit(f"ODE cross-check failed: {v_ode} vs {float(v1)}, "
             f"{xi_ode} vs {float(xi1)}")

# Post-blowup continuation check: at T = 4 (past the catastrophe at T = 2 for
# this characteristic) v must lie below -pi and above -2pi.
m4 = m0 + lam * 4
v4 = v0 - 2 * (atan(m4) - atan(m0))
show("cot_law_v_T4", v4)
assert -2 * mp.pi < v4 < -mp.pi
print("ok")
