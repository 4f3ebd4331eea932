#!/usr/bin/env python3
"""Coordinate-stretch integrals for the characteristic transforms.

Unidirectional family: Y(x) = int_0^x (1 + u0'(s)^2)^(1/(2 lambda)) ds.
Wave family:           X(x) = int_0^x (1 + R0(s)^2)^(1/(2 lambda)) ds,
                       Y(x) = -int_0^x (1 + S0(s)^2)^(1/(2 lambda)) ds,
with R0 = u1 + c(u0) u0' and S0 = u1 - c(u0) u0'.

Values printed here are frozen into tests/test_unichar.cpp and
tests/test_wavechar.cpp.
"""

from mpmath import mp, mpf, quad, sech, tanh, sin, cos, sqrt, exp, pi

mp.dps = 30


def show(name, value):
    print(f"{name} = {mp.nstr(value, 17)}")


# --- sine-well data (builtin "burgers-flux" / "linear-transport" data) -----
# u0'(x) = -sin^2(2x) on [0, pi/2], zero outside.
def sine_well_du0(x):
    if x <= 0 or x >= pi / 2:
        return mpf(0)
    return -sin(2 * x) ** 2


for lam, tag in [(mpf(1) / 4, "quarter"), (mpf(1) / 2, "half")]:
    e = 1 / (2 * lam)
    f = lambda s: (1 + sine_well_du0(s) ** 2) ** e
    show(f"sine_well_{tag}_Y_pi4", quad(f, [0, pi / 4]))
    show(f"sine_well_{tag}_Y_pi2", quad(f, [0, pi / 4, pi / 2]))

# --- inline test data u0 = x^2 e^{-x} (used directly in a unit test) -------
du0 = lambda s: (2 * s - s * s) * exp(-s)
show("xx_exp_half_Y_1", quad(lambda s: 1 + du0(s) ** 2, [0, 1]))

# --- builtin "smooth-parabola" data u0 = x^2 e^{-2 x^2} --------------------
rdu0 = lambda s: 2 * s * (1 - 2 * s * s) * exp(-2 * s * s)
show("smooth_parabola_half_Y_1", quad(lambda s: 1 + rdu0(s) ** 2, [0, 1]))

# --- builtin "paper-fig": sech pulse, speed sqrt(cos^2 u + 1), lambda=1/4 --
c = lambda u: sqrt(cos(u) ** 2 + 1)
u0 = lambda x: sech(x)
pdu0 = lambda x: -sech(x) * tanh(x)
u1 = pdu0  # u_t(x,0) equals u0'
R0 = lambda x: u1(x) + c(u0(x)) * pdu0(x)
S0 = lambda x: u1(x) - c(u0(x)) * pdu0(x)

lam = mpf(1) / 4
e = 1 / (2 * lam)
show("paper_fig_quarter_X_1", quad(lambda s: (1 + R0(s) ** 2) ** e, [0, 1]))
show("paper_fig_quarter_Y_1", -quad(lambda s: (1 + S0(s) ** 2) ** e, [0, 1]))

# Sanity: every integrand is >= 1, so Y(x) >= x must hold.
assert quad(lambda s: 1 + du0(s) ** 2, [0, 1]) >= 1
print("ok")
