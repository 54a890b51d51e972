"""How large are the leading Sylvester waves of restricted partitions?

p_N(n), the number of partitions of n into at most N parts, splits
into waves W_k(N, n).  For n = lambda N the sum of the first hundred
waves follows

    Re[ w0^{-N} / N^2 (a_0 + a_1/N + a_2/N^2 + ...) ]

with w0 the root of Li2(w) = 2 pi i log w.  Since |w0| < 1 the waves
GROW exponentially, overtaking the partition number itself, which this
demo makes concrete at N = n = 2000 by comparing against the exact
p(2000) computed from the pentagonal-number recurrence.
"""

import math

from saddlepoint import (dilog, solve_constants, wave_coefficients,
                         wave_main_term)

wc = solve_constants()
print("Saddle data of the wave phase")
print("-----------------------------")
print(f"  w0 = {wc.w0:.12f}   (defining residual {wc.residual:.1e})")
print(f"  z0 = {wc.z0_wave:.12f}")
print(f"  p0 = {wc.p0_wave:.12f}")
print(f"  growth per unit N: 1/|w0| = {1 / abs(wc.w0):.6f}")
print(f"  check Li2(w0) - 2 pi i log(w0) = "
      f"{dilog(wc.w0) - 2j * math.pi * complex(math.log(abs(wc.w0)), math.atan2(wc.w0.imag, wc.w0.real)):.2e}")
print()

lam, n = 1, 2000
expansion = wave_coefficients(lam, t_max=3)
print(f"Wave coefficients a_t(lambda = {lam})")
print("---------------------------------")
for t, a in enumerate(expansion.coeffs):
    print(f"  a_{t} = {a:.6f}")
print()

print(f"Leading-wave size at N = {n}, n = {lam * n}")
print("---------------------------------------")
for terms in (1, 2, 3):
    print(f"  {terms}-term value: {wave_main_term(lam, n, terms):.4e}")
print()


def partition_count(n):
    """Exact p(n) by the pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


exact = partition_count(n)
print(f"Exact p({n}) = {exact}")
print(f"          ~ {float(exact):.3e}")
print()
print("The three-term wave estimate is ~1e8 times larger than p(2000):")
print("the leading waves wildly overshoot the partition count and must")
print("cancel against the later waves.")
