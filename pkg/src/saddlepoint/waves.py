"""Asymptotics of the leading Sylvester waves of restricted partitions.

The sum of the first hundred waves W_k(N, lambda N) grows like

    Re[ w0^{-N} / N^2 * (a_0(lambda) + a_1(lambda)/N + ...) ]

where w0 is the unique solution of Li2(w) - 2 pi i log w = 0 and the
saddle point z0 = 1 + log(1 - w0) / (2 pi i) of the phase

    p(z) = (Li2(e^{2 pi i z}) - Li2(1)) / (2 pi i z)

satisfies e^{p(z0)} = 1 / w0.  The coefficients are

    a_t(lambda) = -4i sum_{m=0}^{t} Gamma(m + 1/2) alpha_{2m}(f_lambda u_{t-m})

with alpha_{2m} the saddle-point expansion coefficients (mu = 2, a = 1)
of the amplitude f_lambda(z) u_j(z) built from

    f_lambda(z) = (z / (2 sin(pi (z-1))))^{1/2} e^{-pi i z (2 lambda + 1/2)},
    g_l(z) = -B_{2l}/(2l)! (pi z)^{2l-1} cot^{(2l-2)}(pi z),
    u_j(z) = sum over m_1 + 3 m_2 + 5 m_3 + ... = j of
             g_1^{m_1}/m_1! g_2^{m_2}/m_2! ...,   u_0 = 1.

Only the lambda-dependent factor f_lambda changes between wave
families; the phase and u_j series are cached per session and reused.
The caches are immutable after first construction, so evaluation is
safe concurrently.  Exact wave values are not computed here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from scipy.special import gamma as _cgamma

from .expansion import alpha_bell
from .saddle import SaddleNormalForm, normalize
from .series import TruncatedSeries, bernoulli

__all__ = [
    "WaveConstants",
    "WaveExpansion",
    "dilog",
    "solve_constants",
    "p_wave_series",
    "f_lambda_series",
    "u_series",
    "wave_coefficients",
    "wave_main_term",
]

Rat = Union[int, Fraction, float]

_PI2_OVER_6 = math.pi * math.pi / 6.0


def dilog(z: complex) -> complex:
    """Principal dilogarithm Li2(z) = sum z^n / n^2, cut along [1, oo).

    Points on the cut (real z >= 1) are rejected: the two one-sided
    values differ and the caller must perturb to pick a side.  The
    argument is reduced with the inversion and reflection functional
    equations until the Bernoulli series applies; accuracy is about
    1e-13 relative for |z| <= 4.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise ValueError("dilogarithm evaluated on its branch cut [1, oo)")
    if abs(z) > 1.0:
        # Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2 / 2
        lg = cmath.log(-z)
        return -_PI2_OVER_6 - 0.5 * lg * lg - dilog(1.0 / z)
    if z.real > 0.5:
        # Li2(z) + Li2(1-z) = pi^2/6 - log(z) log(1-z)
        return _PI2_OVER_6 - cmath.log(z) * cmath.log(1.0 - z) - _dilog_small(1.0 - z)
    return _dilog_small(z)


def _dilog_small(z: complex) -> complex:
    """Bernoulli series in u = -log(1-z); valid |z| <= 1, Re z <= 1/2."""
    if z == 0:
        return 0.0 + 0.0j
    u = -cmath.log(1.0 - z)
    term = u                     # u^{k+1} / (k+1)!
    acc = 0.0 + 0.0j
    for k in range(0, 80):
        b = bernoulli(k)
        if b != 0:
            piece = float(b) * term
            acc += piece
            if k > 4 and abs(piece) < 1e-18 * max(abs(acc), 1e-30):
                break
        term = term * u / (k + 2)
    return acc


@dataclass(frozen=True)
class WaveConstants:
    """Saddle data of the wave phase function.

    ``residual`` is |Li2(w0) - 2 pi i log w0| at the computed root;
    z0_wave = 1 + log(1 - w0) / (2 pi i), so e^{2 pi i z0_wave} = 1 - w0.
    """

    w0: complex
    z0_wave: complex
    p0_wave: complex
    residual: float


@lru_cache(maxsize=None)
def _root_w0() -> tuple:
    """Newton root of Li2(w) - 2 pi i log(w) from the standard seed."""
    w = 0.92 - 0.18j
    for _ in range(60):
        f = dilog(w) - 2j * math.pi * cmath.log(w)
        if abs(f) < 1e-14:
            break
        # d/dw [Li2(w) - 2 pi i log w] = -(log(1-w) + 2 pi i) / w
        df = -(cmath.log(1.0 - w) + 2j * math.pi) / w
        w = w - f / df
    residual = abs(dilog(w) - 2j * math.pi * cmath.log(w))
    if residual > 1e-12:
        raise RuntimeError(f"Newton search for w0 stalled (residual {residual:.3g})")
    z0 = 1.0 + cmath.log(1.0 - w) / (2j * math.pi)
    return w, z0, residual


def solve_constants() -> WaveConstants:
    w0, z0, residual = _root_w0()
    nf = _phase_normal_form(6)
    return WaveConstants(w0=w0, z0_wave=z0, p0_wave=nf.p0, residual=residual)


@lru_cache(maxsize=None)
def _dilog_taylor_at_1mw0(order: int) -> TruncatedSeries:
    """Taylor series of Li2 about x* = 1 - w0.

    Built from the closed derivative Li2'(x) = -log(1-x)/x expanded
    about x* and integrated termwise; no numerical differentiation.
    """
    w0, _, _ = _root_w0()
    xstar = 1.0 - w0
    n = max(order - 1, 0)
    # log(1 - xstar - u) = log(w0) + log(1 - u/w0)
    lg = [cmath.log(w0)] + [-((1.0 / w0) ** k) / k for k in range(1, n + 1)]
    inv = [((-1.0 / xstar) ** k) / xstar for k in range(0, n + 1)]
    deriv = TruncatedSeries(0.0, lg) * TruncatedSeries(0.0, inv) * (-1.0)
    coeffs = [dilog(xstar)]
    for k in range(n + 1):
        coeffs.append(deriv.coeffs[k] / (k + 1))
    return TruncatedSeries(0.0, coeffs[: order + 1])


@lru_cache(maxsize=None)
def p_wave_series(order: int) -> TruncatedSeries:
    """Taylor series at z0 of p(z) = (Li2(e^{2 pi i z}) - Li2(1)) / (2 pi i z).

    e^{2 pi i z} = (1 - w0) e^{2 pi i (z - z0)}, so the dilogarithm
    Taylor data at 1 - w0 is composed with the entire inner series
    (1 - w0)(e^{2 pi i h} - 1) and divided by the linear factor.  The
    constant term is -log(w0), hence e^{p(z0)} = 1/w0, and the linear
    term vanishes: z0 is a saddle point.
    """
    if order > 24:
        raise ValueError("wave phase series supported up to order 24")
    w0, z0, _ = _root_w0()
    xstar = 1.0 - w0
    inner = [0.0 + 0.0j]
    for k in range(1, order + 1):
        inner.append(xstar * (2j * math.pi) ** k / math.factorial(k))
    li2_series = _dilog_taylor_at_1mw0(order).compose(TruncatedSeries(z0, inner))
    shifted = li2_series - _PI2_OVER_6
    denom = TruncatedSeries.identity(z0, order) * (2j * math.pi)
    return shifted * denom.recip()


@lru_cache(maxsize=None)
def _phase_normal_form(order: int) -> SaddleNormalForm:
    return normalize(p_wave_series(order))


@lru_cache(maxsize=None)
def _cot_series(order: int) -> TruncatedSeries:
    """Series of cot(pi z) about z0, by dividing the sine into the cosine."""
    _, z0, _ = _root_w0()
    s0 = cmath.sin(math.pi * z0)
    c0 = cmath.cos(math.pi * z0)
    sin_c = []
    cos_c = []
    for k in range(order + 1):
        scale = math.pi ** k / math.factorial(k)
        if k % 4 == 0:
            sk, ck = s0, c0
        elif k % 4 == 1:
            sk, ck = c0, -s0
        elif k % 4 == 2:
            sk, ck = -s0, -c0
        else:
            sk, ck = -c0, s0
        sin_c.append(scale * sk)
        cos_c.append(scale * ck)
    return TruncatedSeries(z0, cos_c) * TruncatedSeries(z0, sin_c).recip()


def _cot_derivative_series(m: int, order: int) -> TruncatedSeries:
    """Series about z0 of cot^{(m)} evaluated at pi z.

    Differentiating the cot(pi z) series in z brings down one factor
    of pi per order, so the plain m-th derivative of cot is the series
    derivative divided by pi^m.
    """
    ser = _cot_series(order + m)
    for _ in range(m):
        ser = ser.differentiate()
    return ser * (math.pi ** (-m))


@lru_cache(maxsize=None)
def _g_series(ell: int, order: int) -> TruncatedSeries:
    """g_l(z) = -B_{2l}/(2l)! (pi z)^{2l-1} cot^{(2l-2)}(pi z) about z0."""
    if ell < 1:
        raise ValueError("g index must be >= 1")
    _, z0, _ = _root_w0()
    cot_part = _cot_derivative_series(2 * ell - 2, order)
    lin = TruncatedSeries.identity(z0, order) * math.pi
    poly = TruncatedSeries.constant(1.0, z0, order)
    for _ in range(2 * ell - 1):
        poly = poly * lin
    scale = -float(bernoulli(2 * ell)) / math.factorial(2 * ell)
    return cot_part * poly * scale


def _odd_weight_partitions(j: int):
    """Multiplicity tuples (m_1, m_2, ...) with sum_l (2l-1) m_l = j."""
    max_ell = (j + 1) // 2 if j > 0 else 0

    def rec(remaining: int, ell: int):
        if ell > max_ell:
            if remaining == 0:
                yield ()
            return
        weight = 2 * ell - 1
        for m in range(remaining // weight + 1):
            for rest in rec(remaining - weight * m, ell + 1):
                yield (m,) + rest

    yield from rec(j, 1)


@lru_cache(maxsize=None)
def u_series(j: int, order: int = 12) -> TruncatedSeries:
    """Series of u_j about z0; u_0 = 1.

    Assembled by the multi-index sum over products of g_l series with
    weights m_1 + 3 m_2 + 5 m_3 + ... = j.
    """
    if j < 0:
        raise ValueError("u index must be >= 0")
    if j > 8:
        raise ValueError("u series supported up to j = 8")
    _, z0, _ = _root_w0()
    if j == 0:
        return TruncatedSeries.constant(1.0, z0, order)
    total = TruncatedSeries.constant(0.0, z0, order)
    for mults in _odd_weight_partitions(j):
        term = TruncatedSeries.constant(1.0, z0, order)
        for ell, m in enumerate(mults, start=1):
            if m == 0:
                continue
            g = _g_series(ell, order)
            for _ in range(m):
                term = term * g
            term = term * (1.0 / math.factorial(m))
        total = total + term
    return total


@lru_cache(maxsize=None)
def f_lambda_series(lam: Rat, order: int = 12) -> TruncatedSeries:
    """Series of f_lambda about z0, on the branch with

        f_lambda(z0) = -e^{pi i/4} z0^{1/2} w0^{-1/2} e^{-2 pi i lambda z0}.

    The square root of z / (2 sin(pi (z - 1))) is expanded with a
    principal fractional power of the normalized series; the overall
    sign is then fixed against the closed form above (numerically the
    principal root already lands on it).
    """
    w0, z0, _ = _root_w0()
    lam_c = float(Fraction(lam)) if isinstance(lam, (int, Fraction)) else float(lam)
    s0 = cmath.sin(math.pi * (z0 - 1.0))
    c0 = cmath.cos(math.pi * (z0 - 1.0))
    sin_c = []
    for k in range(order + 1):
        scale = math.pi ** k / math.factorial(k)
        if k % 4 == 0:
            sk = s0
        elif k % 4 == 1:
            sk = c0
        elif k % 4 == 2:
            sk = -s0
        else:
            sk = -c0
        sin_c.append(2.0 * scale * sk)
    ratio = TruncatedSeries.identity(z0, order) * TruncatedSeries(z0, sin_c).recip()
    c_head = ratio.coeffs[0]
    root = (ratio * (1.0 / c_head)).cpow(0.5) * cmath.sqrt(c_head)

    mu_exp = -1j * math.pi * (2.0 * lam_c + 0.5)
    exp_c = [cmath.exp(mu_exp * z0)]
    for k in range(1, order + 1):
        exp_c.append(exp_c[0] * mu_exp ** k / math.factorial(k))
    f = root * TruncatedSeries(z0, exp_c)

    target = (-cmath.exp(0.25j * math.pi) * cmath.sqrt(z0) / cmath.sqrt(w0)
              * cmath.exp(-2j * math.pi * lam_c * z0))
    if abs(f.coeffs[0] - target) > abs(f.coeffs[0] + target):
        f = f * (-1.0)
    return f


@dataclass(frozen=True)
class WaveExpansion:
    """Coefficients a_0..a_{t_max} of one wave family.

    Evaluation at integer-compatible N is
    Re[w0^{-N} N^{-2} sum_t coeffs[t] N^{-t}].
    """

    lam: Rat
    coeffs: tuple
    w0: complex
    z0_wave: complex

    def main_term(self, n: int, terms: Optional[int] = None) -> float:
        if terms is None:
            terms = len(self.coeffs)
        if terms > len(self.coeffs):
            raise ValueError(
                f"requested {terms} coefficients, have {len(self.coeffs)}")
        _check_integral(self.lam, n)
        acc = 0.0 + 0.0j
        for t in range(terms):
            acc += self.coeffs[t] * float(n) ** (-t)
        growth = cmath.exp(-n * cmath.log(self.w0))
        return (growth * acc / n ** 2).real


def _check_integral(lam: Rat, n: int) -> None:
    if n < 1:
        raise ValueError("wave argument N must be >= 1")
    product = Fraction(lam) * n
    if product.denominator != 1:
        raise ValueError(f"lambda * N = {product} is not an integer")


def wave_coefficients(lam: Rat, t_max: int = 3) -> WaveExpansion:
    """Coefficients a_t(lambda) for t = 0..t_max.

    a_t = -4i sum_{m <= t} Gamma(m + 1/2) alpha_{2m}(f_lambda u_{t-m}),
    with every alpha computed by the Bell-polynomial route on the wave
    phase normal form (mu = 2, a = 1).
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    if t_max > 6:
        raise ValueError("wave coefficients supported up to t_max = 6")
    w0, z0, _ = _root_w0()
    order = 2 * t_max + 2
    nf = _phase_normal_form(order + 2)
    alpha_by_j = []
    for j in range(t_max + 1):
        q = f_lambda_series(lam, order) * u_series(j, order)
        s_count = 2 * (t_max - j) + 1
        alpha_by_j.append(alpha_bell(nf, q, 1, s_count))
    coeffs = []
    for t in range(t_max + 1):
        acc = 0.0 + 0.0j
        for m in range(t + 1):
            acc += float(_cgamma(m + 0.5)) * alpha_by_j[t - m].alphas[2 * m]
        coeffs.append(complex(-4j * acc))
    return WaveExpansion(lam=lam, coeffs=tuple(coeffs), w0=w0, z0_wave=z0)


def wave_main_term(lam: Rat, n: int, terms: int = 1) -> float:
    """Re[w0^{-N} N^{-2} sum_{t < terms} a_t(lambda) N^{-t}]."""
    if terms < 1:
        raise ValueError("need at least one term")
    expansion = wave_coefficients(lam, t_max=terms - 1)
    return expansion.main_term(n, terms)
