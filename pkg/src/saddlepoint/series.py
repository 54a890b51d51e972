"""Truncated complex power series and the exact combinatorial kernels.

Two coefficient domains are deliberately kept apart:

* exact ``fractions.Fraction`` arithmetic for the combinatorial kernels
  (Bernoulli numbers, Stirling set numbers, partial ordinary Bell
  polynomials, generalized binomials), so that rational coefficient
  tables come out exact;
* double-precision ``complex`` for general analytic series, wrapped in
  :class:`TruncatedSeries`.

All values are immutable after construction and every operation is a
pure function, so everything here is safe to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Scalar = Union[int, float, complex, Fraction]

__all__ = [
    "TruncatedSeries",
    "BellArguments",
    "bernoulli",
    "stirling2",
    "binomial",
    "bell_hat",
    "bell_hat_table",
    "beta_glaisher",
]


# ----------------------------------------------------------------------
# Exact combinatorics
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Exact Bernoulli number B_m with the convention B_1 = -1/2.

    These are the coefficients of z/(e^z - 1) = sum B_m z^m / m!.
    Computed from the defining recurrence sum_k C(m+1, k) B_k = 0.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if m == 0:
        return Fraction(1)
    if m % 2 == 1 and m > 1:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(m):
        acc += _int_binomial(m + 1, k) * bernoulli(k)
    return -acc / (m + 1)


@lru_cache(maxsize=None)
def stirling2(m: int, j: int) -> int:
    """Number of partitions of an m-element set into j nonempty blocks."""
    if m < 0 or j < 0:
        raise ValueError("Stirling indices must be >= 0")
    if m == 0 and j == 0:
        return 1
    if m == 0 or j == 0 or j > m:
        return 0
    return j * stirling2(m - 1, j) + stirling2(m - 1, j - 1)


def _int_binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def binomial(tau: Scalar, j: int) -> Scalar:
    """Generalized binomial coefficient C(tau, j) for integer j >= 0.

    Stays exact when ``tau`` is an int or Fraction; otherwise evaluates
    in complex floating point.
    """
    if j < 0:
        raise ValueError("lower binomial index must be >= 0")
    if isinstance(tau, int):
        tau = Fraction(tau)
    out = Fraction(1) if isinstance(tau, Fraction) else 1.0 + 0.0j
    for i in range(j):
        out = out * (tau - i)
    return out / _factorial(j)


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass(frozen=True)
class BellArguments:
    """Argument list for partial ordinary Bell polynomials.

    ``args[i - 1]`` holds the value attached to index i, matching the
    1-based convention of the generating function
    (p_1 x + p_2 x^2 + ...)^j.
    """

    args: tuple

    def __init__(self, args: Sequence[Scalar]):
        object.__setattr__(self, "args", tuple(args))

    def __len__(self) -> int:
        return len(self.args)

    def get(self, i: int) -> Scalar:
        if i < 1 or i > len(self.args):
            raise IndexError(f"Bell argument p_{i} not supplied "
                             f"(have 1..{len(self.args)})")
        return self.args[i - 1]


def _coerce_bell_args(p) -> tuple:
    if isinstance(p, BellArguments):
        return p.args
    return tuple(p)


def bell_hat(i: int, j: int, p) -> Scalar:
    """Partial ordinary Bell polynomial B^_{i,j}(p_1, p_2, ...).

    Defined as the coefficient of x^i in (p_1 x + p_2 x^2 + ...)^j.
    Exact when the arguments are ints or Fractions.  By convention
    B^_{0,0} = 1, and B^_{i,j} = 0 when j > i or when i > 0, j = 0.
    """
    if i < 0 or j < 0:
        raise ValueError("Bell indices must be >= 0")
    if i == 0:
        return 1 if j == 0 else 0
    if j == 0 or j > i:
        return 0
    args = _coerce_bell_args(p)
    if len(args) < i:
        raise ValueError(f"need Bell arguments p_1..p_{i}, got {len(args)}")
    return bell_hat_table(i, args)[i][j]


def bell_hat_table(i_max: int, p) -> list:
    """Table t with t[i][j] = B^_{i,j} for 0 <= j <= i <= i_max.

    Built by repeated truncated multiplication with the argument
    series, which costs O(i_max^2) per power.  Exact for exact inputs.
    """
    args = _coerce_bell_args(p)
    if i_max > 0 and len(args) < i_max:
        raise ValueError(f"need Bell arguments p_1..p_{i_max}, got {len(args)}")
    zero = Fraction(0) if all(
        isinstance(a, (int, Fraction)) for a in args[:i_max]) else 0.0 + 0.0j
    base = [zero] + [args[k] for k in range(i_max)]  # coefficient of x^k
    table = [[zero] * (i_max + 1) for _ in range(i_max + 1)]
    table[0][0] = zero + 1
    power = [zero] * (i_max + 1)
    power[0] = zero + 1
    for j in range(1, i_max + 1):
        new = [zero] * (i_max + 1)
        for a in range(j - 1, i_max):       # lowest term of power^(j-1) is x^(j-1)
            pa = power[a]
            if pa == 0:
                continue
            for b in range(1, i_max + 1 - a):
                new[a + b] = new[a + b] + pa * base[b]
        power = new
        for i in range(j, i_max + 1):
            table[i][j] = power[i]
    return table


def beta_glaisher(xi: complex, m: int):
    """Coefficient beta_m(xi) of the expansion 1/(xi e^z - 1).

    beta_m(xi) = (-1)^(m-1) m sum_j S(m, j) (j-1)! / (xi - 1)^j, where
    S(m, j) is the Stirling set number.  The expansion reads
    1/(xi e^z - 1) = sum_m beta_{m+1}(xi) z^m / (m+1)!.  Exact when xi
    is rational.
    """
    if m < 1:
        raise ValueError("beta index must be >= 1")
    if xi == 1:
        raise ValueError("beta_m(xi) is undefined at xi = 1")
    exact = isinstance(xi, (int, Fraction))
    acc = Fraction(0) if exact else 0.0 + 0.0j
    inv = (Fraction(1) if exact else (1.0 + 0.0j)) / (xi - 1)
    power = inv
    for j in range(1, m + 1):
        acc += stirling2(m, j) * _factorial(j - 1) * power
        power = power * inv
    return (-1) ** (m - 1) * m * acc


# ----------------------------------------------------------------------
# Truncated power series
# ----------------------------------------------------------------------

_BASE_TOL = 1e-12


@dataclass(frozen=True)
class TruncatedSeries:
    """Finite Taylor expansion sum_s coeffs[s] (z - base)^s.

    ``order`` is the highest retained index; ``coeffs`` has exactly
    order + 1 entries and arithmetic never reads beyond it.  A binary
    operation between series at different base points is an error, and
    the result of a binary operation is truncated to the smaller order.
    """

    base: complex
    coeffs: tuple

    def __init__(self, base: complex, coeffs: Sequence[Scalar]):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "base", complex(base))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in coeffs))

    # -- basic structure ------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def constant(value: Scalar, base: complex = 0.0, order: int = 0) -> "TruncatedSeries":
        return TruncatedSeries(base, (complex(value),) + (0.0 + 0.0j,) * order)

    @staticmethod
    def identity(base: complex = 0.0, order: int = 1) -> "TruncatedSeries":
        """The series of z itself about ``base``: base + (z - base)."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        coeffs = [0.0 + 0.0j] * (order + 1)
        coeffs[0] = complex(base)
        coeffs[1] = 1.0 + 0.0j
        return TruncatedSeries(base, coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series by truncation")
        return TruncatedSeries(self.base, self.coeffs[: order + 1])

    def _check_base(self, other: "TruncatedSeries") -> None:
        if abs(self.base - other.base) > _BASE_TOL:
            raise ValueError(
                f"series base points differ: {self.base} vs {other.base}")

    def __call__(self, z: complex) -> complex:
        """Horner evaluation of the truncated polynomial at z."""
        h = complex(z) - self.base
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = list(self.coeffs)
            c[0] += complex(other)
            return TruncatedSeries(self.base, c)
        self._check_base(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.base, [self.coeffs[s] + other.coeffs[s] for s in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.base, [-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -complex(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + complex(other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            w = complex(other)
            return TruncatedSeries(self.base, [c * w for c in self.coeffs])
        self._check_base(other)
        n = min(self.order, other.order)
        out = [0.0 + 0.0j] * (n + 1)
        for a in range(n + 1):
            ca = self.coeffs[a]
            if ca == 0:
                continue
            for b in range(n + 1 - a):
                out[a + b] += ca * other.coeffs[b]
        return TruncatedSeries(self.base, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.recip()
        return self * (1.0 / complex(other))

    # -- structural operations --------------------------------------------

    def shift_down(self, m: int) -> "TruncatedSeries":
        """Divide by (z - base)^m; the first m coefficients must vanish."""
        if m == 0:
            return self
        if m < 0 or m > self.order:
            raise ValueError("invalid shift")
        if any(c != 0 for c in self.coeffs[:m]):
            raise ValueError(f"series does not vanish to order {m} at its base")
        return TruncatedSeries(self.base, self.coeffs[m:])

    def differentiate(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries(self.base, (0.0 + 0.0j,))
        return TruncatedSeries(
            self.base,
            [(s + 1) * self.coeffs[s + 1] for s in range(self.order)])

    def rebase(self, base: complex) -> "TruncatedSeries":
        """Reinterpret the same coefficients about a different base point."""
        return TruncatedSeries(base, self.coeffs)

    # -- analytic operations ----------------------------------------------

    def recip(self) -> "TruncatedSeries":
        """Series g with self * g = 1 up to the truncation order."""
        f0 = self.coeffs[0]
        if f0 == 0:
            raise ValueError("cannot invert a series with zero constant term")
        out = [0.0 + 0.0j] * (self.order + 1)
        out[0] = 1.0 / f0
        for k in range(1, self.order + 1):
            acc = 0.0 + 0.0j
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -acc / f0
        return TruncatedSeries(self.base, out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Taylor coefficients of self(inner(z)) to the shared order.

        ``inner`` must have an exactly zero constant term: the outer
        series only knows the local expansion about its base point, so
        a constant offset would require information it does not carry.
        The result lives at ``inner``'s base point.
        """
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        acc = TruncatedSeries.constant(self.coeffs[self.order], inner.base, n)
        inner_t = TruncatedSeries(inner.base, inner.coeffs[: n + 1])
        for s in range(self.order - 1, -1, -1):
            acc = acc * inner_t + self.coeffs[s]
        return acc

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse: g with self(g(w)) = w + O(w^(order+1)).

        Requires zero constant term and nonzero linear term.  The
        result is a series in w about 0, with the same base point kept
        for bookkeeping.
        """
        if self.coeffs[0] != 0:
            raise ValueError("reversion needs zero constant term")
        f1 = self.coeffs[1] if self.order >= 1 else 0.0
        if f1 == 0:
            raise ValueError("reversion needs nonzero linear term")
        n = self.order
        g = [0.0 + 0.0j] * (n + 1)
        g[1] = 1.0 / f1
        for k in range(2, n + 1):
            trial = TruncatedSeries(self.base, g)
            h = self.compose(trial)
            g[k] = -h.coeffs[k] / f1
        return TruncatedSeries(self.base, g)

    def log(self) -> "TruncatedSeries":
        """log(self) for a series with constant term 1 (principal branch)."""
        if self.coeffs[0] != 1:
            raise ValueError("series log requires constant term exactly 1")
        n = self.order
        out = [0.0 + 0.0j] * (n + 1)
        for k in range(n):
            acc = (k + 1) * self.coeffs[k + 1]
            for i in range(1, k + 1):
                acc -= self.coeffs[i] * (k + 1 - i) * out[k + 1 - i]
            out[k + 1] = acc / (k + 1)
        return TruncatedSeries(self.base, out)

    def exp(self) -> "TruncatedSeries":
        """exp(self) for a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("series exp requires zero constant term")
        n = self.order
        out = [0.0 + 0.0j] * (n + 1)
        out[0] = 1.0 + 0.0j
        for k in range(n):
            acc = 0.0 + 0.0j
            for i in range(k + 1):
                acc += (i + 1) * self.coeffs[i + 1] * out[k - i]
            out[k + 1] = acc / (k + 1)
        return TruncatedSeries(self.base, out)

    def cpow(self, tau: Scalar) -> "TruncatedSeries":
        """Principal complex power self**tau for constant term exactly 1.

        Uses the binomial sum sum_j C(tau, j) (self - 1)^j at low order
        and exp(tau * log self) past order 12, where the binomial route
        starts losing accuracy.
        """
        if self.coeffs[0] != 1:
            raise ValueError("cpow requires constant term exactly 1")
        t = complex(tau)
        if self.order > 12:
            return (self.log() * t).exp()
        u = self - 1.0
        acc = TruncatedSeries.constant(1.0, self.base, self.order)
        power = TruncatedSeries.constant(1.0, self.base, self.order)
        coeff = 1.0 + 0.0j
        for j in range(1, self.order + 1):
            power = power * u
            coeff = coeff * (t - (j - 1)) / j
            acc = acc + power * coeff
        return acc

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:5])
        tail = ", ..." if self.order >= 5 else ""
        return f"TruncatedSeries(base={self.base:.6g}, order={self.order}, [{head}{tail}])"
