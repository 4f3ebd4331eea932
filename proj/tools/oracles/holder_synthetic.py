#!/usr/bin/env python3
"""Hölder quotients of synthetic sample sets, by brute force.

Frozen into tests/test_verify.cpp.

The library's quotient measurement rescales the common x-window to unit
length, draws pairs at dyadic separations delta = 2^-m (m = 2..8, keeping only
separations >= twice the lattice spacing), and takes
sup |u(a)-u(b)| / dist^beta over the drawn pairs.  Because every pair it can
draw lies inside the unit window, brute-forcing sup over *all* dyadic pairs
on a fine lattice upper-bounds the library's value, and the analytic sup over
the continuum is an upper bound for both.  For these synthetic fields the
three values coincide to the printed precision.

Applicability: the frozen beta-monotonicity extrema below are attained at the
end separations 2^-2 (beta < 1/2) and 2^-8 (beta > 1/2), so they apply only to
measurement lattices dense enough that 2 h <= 2^-8, i.e. at least 513 samples
across the rescaled unit window (the matching test uses 1025).  On coarser
lattices the implementation legitimately stops at a larger delta_min and the
beta > 1/2 value drops to delta_min^(1/2 - beta), e.g. 2^0.7 for m_max = 7.

  u = sqrt(x), beta = 1/2:  |sqrt(x+d) - sqrt(x)| / sqrt(d) is maximized at
      x = 0 where it equals exactly 1, for every d.  Quotient = 1.
  u = x, beta = 1:          quotient = 1 identically.
  u = 0:                    quotient = 0.

Monotonicity: on a fixed pair set with all distances <= 1, d^-beta is
non-decreasing in beta, hence so is the quotient.
"""

import math

deltas = [2.0 ** -m for m in range(2, 9)]


def brute(u, beta):
    best = 0.0
    n = 4097
    for d in deltas:
        for i in range(n):
            x = i / (n - 1)
            if x + d > 1.0:
                break
            q = abs(u(x + d) - u(x)) / d**beta
            best = max(best, q)
    return best


sqrt_q = brute(math.sqrt, 0.5)
lin_q = brute(lambda x: x, 1.0)
zero_q = brute(lambda x: 0.0, 0.5)
print(f"holder_sqrt_beta_half = {sqrt_q:.17g}")
print(f"holder_linear_beta_one = {lin_q:.17g}")
print(f"holder_zero = {zero_q:.17g}")
assert abs(sqrt_q - 1.0) < 1e-12 and abs(lin_q - 1.0) < 1e-12 and zero_q == 0.0

# Monotonicity of the sqrt quotient in beta on the same pair family.
qs = [brute(math.sqrt, b) for b in (0.4, 0.5, 0.6)]
print(f"holder_sqrt_beta_04 = {qs[0]:.17g}")
print(f"holder_sqrt_beta_06 = {qs[2]:.17g}")
assert qs[0] <= qs[1] <= qs[2]
print("ok")
