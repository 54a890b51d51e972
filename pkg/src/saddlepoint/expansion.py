"""Expansion coefficients and assembly of saddle-point asymptotics.

For an integral of e^{N p(z)} (z - z0)^(a-1) q(z) along a contour
interacting with the saddle z0, the coefficient core is

    alpha_s = (1 / (mu s!)) p0^(-(s+a)/mu)
              d^s/dz^s [ q(z) (1 - phi(z))^(-(s+a)/mu) ]  at z = z0,

computed here by two independent routes: a partial-ordinary-Bell
polynomial sum over the Taylor data (``alpha_bell``) and per-order
series powering (``alpha_direct``).  All fractional powers of p0 and N
are principal; the contour's branch data enters only through sector
phases e^{2 pi i k (s+a)/mu}, attached by :func:`assemble` according
to how the contour meets the saddle:

* ``Endpoint(k)``      - contour starts at z0 into valley k;
* ``Through(k1, k2)``  - enters through valley k1, leaves through k2;
* ``EvenOpposite(k)``  - straight passage between opposite valleys
  (mu even): odd orders cancel, even ones double;
* ``CirclePath(k1, k2)`` - path circles z0 between the two valleys,
  winding (k2 - k1)/mu turns; exact non-positive integer exponents
  (s+a)/mu = m hit a Gamma pole and are replaced by the finite factor
  2 pi i (k2 - k1) (-1)^m / |m|!.

All values are immutable and all operations pure; the per-order loops
share no state and the module is safe for concurrent use.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from scipy.special import gamma as _cgamma

from .saddle import SaddleNormalForm
from .series import TruncatedSeries, bell_hat_table, binomial

__all__ = [
    "AlphaSequence",
    "Endpoint",
    "Through",
    "EvenOpposite",
    "CirclePath",
    "BranchSpec",
    "Term",
    "AsymptoticExpansion",
    "alpha_bell",
    "alpha_direct",
    "assemble",
    "evaluate",
    "vanishing_shift",
    "VanishingShiftReport",
]

ExponentParam = Union[int, Fraction, float, complex]

#: floats this close to a non-positive integer exponent draw a warning
NEAR_POLE_TOL = 1e-8


@dataclass(frozen=True)
class AlphaSequence:
    """Coefficients alpha_0..alpha_{S-1} for exponent parameter a."""

    a: ExponentParam
    alphas: tuple
    mu: int
    p0: complex
    branch_note: str = "principal p0^(-(s+a)/mu)"

    def __len__(self) -> int:
        return len(self.alphas)

    def __getitem__(self, s: int) -> complex:
        return self.alphas[s]


@dataclass(frozen=True)
class Endpoint:
    k: int


@dataclass(frozen=True)
class Through:
    k1: int
    k2: int


@dataclass(frozen=True)
class EvenOpposite:
    k: int


@dataclass(frozen=True)
class CirclePath:
    k1: int
    k2: int

    @property
    def winding(self) -> int:
        return self.k2 - self.k1


BranchSpec = Union[Endpoint, Through, EvenOpposite, CirclePath]


@dataclass(frozen=True)
class Term:
    """One term coeff * N^(-exponent) of an asymptotic expansion."""

    s: int
    exponent: complex
    coefficient: complex

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Prefactor exponent and term list of the expansion in N.

    Evaluation at N > 0 is e^{N p_at_z0} * sum coeff_s N^(-exponent_s)
    over the first ``terms`` entries.  Zero terms are kept so that the
    index s always matches the expansion order.
    """

    p_at_z0: complex
    terms: tuple
    a: ExponentParam = 1

    @property
    def order(self) -> int:
        return len(self.terms)

    def evaluate(self, n: float, terms: Optional[int] = None) -> complex:
        if n <= 0:
            raise ValueError("expansion parameter N must be positive")
        if terms is None:
            terms = len(self.terms)
        if terms > len(self.terms):
            raise ValueError(
                f"requested {terms} terms, only {len(self.terms)} available")
        log_n = math.log(n)
        acc = 0.0 + 0.0j
        for term in self.terms[:terms]:
            if term.coefficient == 0:
                continue
            acc += term.coefficient * cmath.exp(-term.exponent * log_n)
        return cmath.exp(n * self.p_at_z0) * acc

    def partial_sum(self, n: float, terms: Optional[int] = None) -> complex:
        """The bracketed sum without the e^{N p(z0)} prefactor."""
        return self.evaluate(n, terms) * cmath.exp(-n * self.p_at_z0)


def evaluate(expansion: AsymptoticExpansion, n: float,
             terms: Optional[int] = None) -> complex:
    return expansion.evaluate(n, terms)


def _exponent(s: int, a: ExponentParam, mu: int):
    """(s + a)/mu, kept exact when a is an int or Fraction."""
    if isinstance(a, (int, Fraction)):
        return (Fraction(a) + s) / mu
    return (complex(a) + s) / mu


def _require_resolved(nf: SaddleNormalForm, q: TruncatedSeries, s_count: int) -> None:
    if q.order < s_count - 1:
        raise ValueError(
            f"amplitude series resolved to order {q.order}, "
            f"need {s_count - 1} for {s_count} coefficients")
    if nf.phi.order < s_count - 1:
        raise ValueError(
            f"phase series phi resolved to order {nf.phi.order}, "
            f"need {s_count - 1} for {s_count} coefficients")
    if abs(q.base - nf.z0) > 1e-12:
        raise ValueError("amplitude series must be expanded at the saddle point")


def _p0_power(p0: complex, exponent) -> complex:
    """Principal p0^(-exponent)."""
    return cmath.exp(-complex(exponent) * cmath.log(p0))


def alpha_bell(nf: SaddleNormalForm, q: TruncatedSeries,
               a: ExponentParam, s_count: int) -> AlphaSequence:
    """Coefficients via the partial ordinary Bell polynomial sum:

    alpha_s = (1/mu) p0^(-(s+a)/mu) *
              sum_{i<=s} q_{s-i} sum_{j<=i} C(-(s+a)/mu, j) B^_{i,j}(p1/p0, ...)

    where p_i / p0 are the normalized phase coefficients (equal to
    -phi_i).  Needs q and phi resolved to order s_count - 1.
    """
    _require_resolved(nf, q, s_count)
    i_max = s_count - 1
    ratios = [-nf.phi.coeffs[i] for i in range(1, i_max + 1)]
    table = bell_hat_table(i_max, ratios)
    out = []
    for s in range(s_count):
        e_s = _exponent(s, a, nf.mu)
        tau = -(complex(e_s))
        inner_acc = 0.0 + 0.0j
        for i in range(s + 1):
            qc = q.coeffs[s - i]
            if qc == 0:
                continue
            bsum = 0.0 + 0.0j
            for j in range(i + 1):
                b = table[i][j]
                if b == 0:
                    continue
                bsum += binomial(tau, j) * complex(b)
            inner_acc += qc * bsum
        out.append(_p0_power(nf.p0, e_s) * inner_acc / nf.mu)
    return AlphaSequence(a=a, alphas=tuple(out), mu=nf.mu, p0=nf.p0)


def alpha_direct(nf: SaddleNormalForm, q: TruncatedSeries,
                 a: ExponentParam, s_count: int) -> AlphaSequence:
    """Coefficients via per-order series powering.

    For each s the series q(z) (1 - phi(z))^(-(s+a)/mu) is formed with
    a fresh complex-power expansion and its index-s coefficient is
    scaled by p0^(-(s+a)/mu) / mu.  Independent of the Bell route.
    """
    _require_resolved(nf, q, s_count)
    qt = q.truncate(s_count - 1)
    base = nf.one_minus_phi().truncate(s_count - 1)
    out = []
    for s in range(s_count):
        e_s = _exponent(s, a, nf.mu)
        w = base.cpow(-complex(e_s))
        prod = qt * w
        out.append(_p0_power(nf.p0, e_s) * prod.coeffs[s] / nf.mu)
    return AlphaSequence(a=a, alphas=tuple(out), mu=nf.mu, p0=nf.p0)


def _degenerate_order(e_s) -> Optional[int]:
    """m when the exact exponent e_s is an integer <= 0, else None."""
    if isinstance(e_s, Fraction):
        if e_s.denominator == 1 and e_s <= 0:
            return int(e_s)
        return None
    return None


def _warn_near_pole(e_s: complex, s: int) -> None:
    m = round(e_s.real)
    if m <= 0 and abs(e_s - m) < NEAR_POLE_TOL:
        warnings.warn(
            f"exponent (s+a)/mu = {e_s} at s = {s} is within {NEAR_POLE_TOL} "
            f"of the Gamma pole at {m}; supply a as an exact rational to use "
            f"the finite replacement rule", RuntimeWarning, stacklevel=3)


def _phase(k: int, e_s) -> complex:
    return cmath.exp(2j * math.pi * k * complex(e_s))


def assemble(alphas: AlphaSequence, nf: SaddleNormalForm,
             branch: BranchSpec) -> AsymptoticExpansion:
    """Attach Gamma factors and sector phases to an alpha sequence.

    The coefficient of N^(-(s+a)/mu) becomes, per variant:

    * Endpoint(k):        Gamma(e_s) alpha_s e^{2 pi i k e_s}
    * Through(k1,k2):     Gamma(e_s) alpha_s (e^{2 pi i k2 e_s} - e^{2 pi i k1 e_s})
    * EvenOpposite(k):    0 for odd s, else 2 Gamma(e_s) alpha_s e^{2 pi i k e_s}
    * CirclePath(k1,k2):  as Through, except an exact exponent m <= 0
      (possible only when a was given exactly) contributes
      2 pi i (k2 - k1) (-1)^m / |m|! alpha_s instead.

    A Gamma pole outside CirclePath has no replacement rule and is a
    hard error.
    """
    mu = nf.mu
    a = alphas.a
    if isinstance(branch, EvenOpposite) and mu % 2 != 0:
        raise ValueError("opposite-sector variant requires even mu")
    terms = []
    for s, alpha in enumerate(alphas.alphas):
        e_s = _exponent(s, a, mu)
        degenerate = _degenerate_order(e_s)
        if not isinstance(e_s, Fraction):
            _warn_near_pole(complex(e_s), s)
        if degenerate is not None and not isinstance(branch, CirclePath):
            raise ValueError(
                f"exponent (s+a)/mu = {degenerate} at s = {s} hits a Gamma "
                f"pole; only a circling path has a finite replacement")
        if isinstance(branch, Endpoint):
            coeff = _cgamma(complex(e_s)) * alpha * _phase(branch.k, e_s)
        elif isinstance(branch, Through):
            coeff = (_cgamma(complex(e_s)) * alpha
                     * (_phase(branch.k2, e_s) - _phase(branch.k1, e_s)))
        elif isinstance(branch, EvenOpposite):
            if s % 2 == 1:
                coeff = 0.0 + 0.0j
            else:
                coeff = 2.0 * _cgamma(complex(e_s)) * alpha * _phase(branch.k, e_s)
        elif isinstance(branch, CirclePath):
            if degenerate is not None:
                m = degenerate
                coeff = (2j * math.pi * branch.winding * (-1.0) ** m
                         / math.factorial(abs(m))) * alpha
            else:
                coeff = (_cgamma(complex(e_s)) * alpha
                         * (_phase(branch.k2, e_s) - _phase(branch.k1, e_s)))
        else:
            raise TypeError(f"unknown branch variant {branch!r}")
        terms.append(Term(s=s, exponent=complex(e_s), coefficient=complex(coeff)))
    return AsymptoticExpansion(p_at_z0=nf.p_at_z0, terms=tuple(terms), a=a)


@dataclass(frozen=True)
class VanishingShiftReport:
    """Outcome of factoring q = (z - z0)^m psi inside the coefficients."""

    psi: TruncatedSeries
    max_abs_error: float
    leading_alphas_zero: bool

    @property
    def passed(self) -> bool:
        return self.leading_alphas_zero and self.max_abs_error < 1e-9


def vanishing_shift(nf: SaddleNormalForm, q: TruncatedSeries,
                    a: ExponentParam, m: int,
                    s_count: Optional[int] = None) -> VanishingShiftReport:
    """Factor out an exact zero of order m from q and check the shift law.

    With q = (z - z0)^m psi the coefficients obey alpha_s(q, a) = 0 for
    s < m and alpha_{s+m}(q, a) = alpha_s(psi, a + m).  The first m
    coefficients of q must vanish exactly; the identity is then checked
    numerically over ``s_count`` shifted orders.
    """
    if m < 0:
        raise ValueError("vanishing order must be >= 0")
    psi = q.shift_down(m)
    if m == 0:
        return VanishingShiftReport(psi=psi, max_abs_error=0.0,
                                    leading_alphas_zero=True)
    if s_count is None:
        s_count = min(psi.order + 1, nf.phi.order + 1 - m)
    if s_count < 1:
        raise ValueError("series too short to check the shift identity")
    full = alpha_direct(nf, q, a, s_count + m)
    a_shift = a + m if isinstance(a, (int, Fraction)) else complex(a) + m
    shifted = alpha_direct(nf, psi, a_shift, s_count)
    scale = max(max(abs(x) for x in shifted.alphas), 1e-300)
    lead_ok = all(abs(full.alphas[s]) <= 1e-12 * scale for s in range(m))
    worst = max(abs(full.alphas[s + m] - shifted.alphas[s])
                for s in range(s_count)) / scale
    return VanishingShiftReport(psi=psi, max_abs_error=worst,
                                leading_alphas_zero=lead_ok)
