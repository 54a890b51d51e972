"""An oscillatory integral with a third-order saddle.

int_{-pi}^{pi} e^{N i (z - sin z)} dz has its only usable saddle at
z = 0, where p(z) = i(z - sin z) vanishes to third order (mu = 3):
three valleys alternate with three hills at 60-degree spacing.  The
contour is bent over the valley lines, entering through valley 1 and
leaving through valley 0, and the expansion proceeds in powers of
N^{-1/3} with exact rational cores d(s).
"""

import math

from saddlepoint import (Through, TruncatedSeries, alpha_bell, assemble,
                         builtin_integrand, classify_direction, integrate,
                         kepler_d_table, theta)
from saddlepoint.classic import kepler_contour, kepler_normal_form

nf = kepler_normal_form(12)
print(f"normal form: mu = {nf.mu}, p0 = {nf.p0}, omega0 = {nf.omega0:+.6f}")
print("descent angles:", ", ".join(f"{theta(nf, k):+.6f}" for k in range(3)))
for deg in (30, 90, 150):
    cls = classify_direction(nf, math.radians(deg))
    extra = f" (sector {cls.sector_index})" if cls.kind == "valley" else ""
    print(f"  direction {deg:3d} deg: {cls.kind}{extra}")

print()
print("Exact d(s) table (zero for odd s)")
print("---------------------------------")
for s, val in enumerate(kepler_d_table(10)):
    print(f"  d({s:2d}) = {val}")

print()
print("Agreement at N = 50 (reference integral 0.762835382546)")
print("--------------------------------------------------------")
amplitude = TruncatedSeries.constant(1.0, 0.0, 12)
expansion = assemble(alpha_bell(nf, amplitude, 1, 10), nf, Through(1, 0))
oracle = integrate(builtin_integrand("kepler_plain", n=50.0), kepler_contour(),
                   abs_tol=0.0, rel_tol=1e-12)
print(f"  quadrature: {oracle.value.real:.12f}")
for s_count in (1, 5, 7, 10):
    value = expansion.evaluate(50.0, s_count)
    rel = abs(value - oracle.value) / abs(oracle.value)
    print(f"  {s_count:2d}-term expansion: {value.real:.12f}   rel diff {rel:.1e}")

print()
print("Only the orders s = 0, 4 mod 6 contribute:")
for t in expansion.terms:
    marker = "nonzero" if abs(t.coefficient) > 1e-12 else "   zero"
    print(f"  s = {t.s}: N^-{t.exponent.real:.3f} term {marker}")
