"""Building a saddle problem from scratch.

Any holomorphic phase with a maximum on the contour works; here the
phase p(z) = -sinh(z - 1/4)^2 has a second-order saddle at z = 1/4 and
a Gaussian-like amplitude rides along.  Taylor data in, expansion out,
quadrature check at the end.

The same problem is expressible as a problem file for the command-line
front end; see demos/problems/ for ready-made ones.
"""

import cmath
import math

from saddlepoint import (EvenOpposite, TruncatedSeries, alpha_bell,
                         alpha_direct, assemble, check_max_condition,
                         find_saddle, integrate, normalize, sector_index,
                         theta)
from saddlepoint.quadrature import Contour

Z0 = 0.25
ORDER = 12


def phase(z: complex) -> complex:
    return -cmath.sinh(z - Z0) ** 2


def amplitude(z: complex) -> complex:
    return cmath.exp(-((z - Z0) ** 2)) * (1 + 0.5 * (z - Z0))


# 1. locate the saddle from the black-box phase
found = find_saddle(phase, guess=0.1)
print(f"saddle found at {found.root:.15f} after {found.iterations} iterations")

# 2. Taylor data about it (here written down analytically)
#    -sinh(h)^2 = -h^2 - h^4/3 - 2 h^6/45 - h^8/315 - ...
p_coeffs = [0.0] * (ORDER + 1)
p_coeffs[2], p_coeffs[4], p_coeffs[6], p_coeffs[8] = -1.0, -1 / 3, -2 / 45, -1 / 315
p_coeffs[10] = -2 / 14175
nf = normalize(TruncatedSeries(Z0, p_coeffs))
print(f"normal form: mu = {nf.mu}, p0 = {nf.p0:.6f}, "
      f"descent angles {theta(nf, 0):.3f} and {theta(nf, 1):.3f}")

q_coeffs = [0.0] * (ORDER + 1)
#    e^{-h^2}(1 + h/2): even part from exp, odd part from the linear factor
for k in range(0, ORDER + 1, 2):
    q_coeffs[k] = (-1) ** (k // 2) / math.factorial(k // 2)
for k in range(1, ORDER + 1, 2):
    q_coeffs[k] = 0.5 * (-1) ** ((k - 1) // 2) / math.factorial((k - 1) // 2)
q = TruncatedSeries(Z0, q_coeffs)

# 3. both coefficient routes agree
bell = alpha_bell(nf, q, 1, 8)
direct = alpha_direct(nf, q, 1, 8)
dev = max(abs(a - b) for a, b in zip(bell.alphas, direct.alphas))
print(f"alpha routes agree to {dev:.1e}")

# 4. the contour [-1, 3/2] passes straight through between the two
#    opposite valleys; verify the maximum condition by sampling
contour = Contour.from_points([-1.0, 1.5])
report = check_max_condition(phase, contour, Z0)
print(f"max condition: passed = {report.passed} "
      f"(max excess {report.max_excess:.3e})")
print(f"entry sector {sector_index(nf, math.pi)}, exit sector {sector_index(nf, 0.0)}")

expansion = assemble(bell, nf, EvenOpposite(0))

# 5. compare against quadrature at a few N
print()
print("      N    expansion(8 terms)        quadrature            rel diff")
for n in (8.0, 20.0, 50.0, 120.0):
    oracle = integrate(lambda z, n=n: cmath.exp(n * phase(z)) * amplitude(z),
                       contour, abs_tol=0.0, rel_tol=1e-12)
    value = expansion.evaluate(n, 8)
    rel = abs(value - oracle.value) / abs(oracle.value)
    print(f"  {n:5.0f}    {value.real:.15f}    {oracle.value.real:.15f}    {rel:.1e}")
