"""Parsing of user-defined saddle problems from a text file.

The format is line oriented: ``key = <json value>`` with ``#``
comments and blank lines ignored.  Keys, one line each, no repeats:

    z0       [re, im]; optional when p names a builtin (which brings
             its own expansion point)
    p        Taylor coefficients of the phase at z0 as [[re, im], ...]
             (index = power of z - z0), or {"builtin": name, "order":
             M, "eps": ...} with name in gamma | kepler | center |
             parabolic
    q        amplitude, same two forms; builtin names: one | center |
             parabolic
    a        exponent parameter of the (z - z0)^(a-1) factor: an
             integer, an exact rational "num/den", or [re, im]
    variant  endpoint | through | even_opposite | circle_path
    k        sector index (endpoint, even_opposite)
    k1, k2   sector indices (through, circle_path)
    order    number S of expansion terms
    contour  optional validation path: list of
             {"segment": [[re,im],[re,im]]} and
             {"arc": {"center": [re,im], "radius": r, "from": t0, "to": t1}}
    initial_branch_angle   optional float for the power-factor branch
    n_values optional list of N at which to compare with quadrature

Coefficient lists must resolve the requested order: the phase needs
mu + S - 1 coefficients past the constant and the amplitude S - 1.
When validating on a contour, coefficient-list inputs are integrated
as the polynomials they literally define, while builtin names supply
the genuine transcendental functions.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .classic import (center_normal_form, center_q_coeffs, center_saddle,
                      gamma_normal_form, kepler_normal_form,
                      parabolic_q_table)
from .expansion import (BranchSpec, CirclePath, Endpoint, EvenOpposite,
                        ExponentParam, Through)
from .quadrature import Arc, Contour, Segment
from .saddle import SaddleNormalForm, normalize
from .series import TruncatedSeries

__all__ = ["Problem", "ProblemFileError", "parse_problem_file", "parse_problem_text"]


class ProblemFileError(ValueError):
    """Problem file rejected; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Problem:
    """A fully resolved saddle problem ready for the expansion pipeline."""

    normal_form: SaddleNormalForm
    q: TruncatedSeries
    a: ExponentParam
    branch: BranchSpec
    order: int
    p_callable: Callable[[complex], complex]
    q_callable: Callable[[complex], complex]
    contour: Optional[Contour]
    n_values: tuple


def _as_complex(value, key: str, line: int) -> complex:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(x, (int, float)) for x in value)):
        raise ProblemFileError(f"{key} must be a pair [re, im]", line)
    return complex(value[0], value[1])


def _coeff_list(value, key: str, line: int) -> list:
    if not isinstance(value, list) or not value:
        raise ProblemFileError(f"{key} coefficient list must be non-empty", line)
    return [_as_complex(item, f"{key}[{i}]", line) for i, item in enumerate(value)]


_PHASE_BUILTINS = {"gamma", "kepler", "center", "parabolic"}
_AMPLITUDE_BUILTINS = {"one", "center", "parabolic"}


def _phase_builtin(name: str, order: int, eps: Optional[float], line: int):
    if name == "gamma":
        nf = gamma_normal_form(order)
        return nf, (lambda z: -z + cmath.log(z))
    if name in ("kepler", "parabolic"):
        nf = kepler_normal_form(order)
        return nf, (lambda z: 1j * (z - cmath.sin(z)))
    if name == "center":
        if eps is None:
            raise ProblemFileError("builtin phase 'center' needs \"eps\"", line)
        nf = center_normal_form(eps, order)
        return nf, (lambda z: 1j * (z - eps * cmath.sin(z)))
    raise ProblemFileError(
        f"unknown phase builtin {name!r}; choose from {sorted(_PHASE_BUILTINS)}", line)


def _amplitude_builtin(name: str, order: int, eps: Optional[float],
                       z0: complex, line: int):
    if name == "one":
        return (TruncatedSeries.constant(1.0, z0, order), (lambda z: 1.0 + 0.0j))
    if name == "center":
        if eps is None:
            raise ProblemFileError("builtin amplitude 'center' needs \"eps\"", line)
        coeffs = center_q_coeffs(eps, order)
        zc = center_saddle(eps)

        def q_center(z: complex) -> complex:
            return (z - zc) / (1.0 - eps * cmath.cos(z))
        return TruncatedSeries(zc, coeffs), q_center
    if name == "parabolic":
        coeffs = [complex(x) for x in parabolic_q_table(order)]

        def q_parabolic(z: complex) -> complex:
            return z * z / (1.0 - cmath.cos(z))
        return TruncatedSeries(0.0, coeffs), q_parabolic
    raise ProblemFileError(
        f"unknown amplitude builtin {name!r}; choose from {sorted(_AMPLITUDE_BUILTINS)}",
        line)


def _parse_a(value, line: int) -> ExponentParam:
    if isinstance(value, bool):
        raise ProblemFileError("a must be a number, rational string or pair", line)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ProblemFileError(f"bad rational {value!r} for a", line) from None
    if isinstance(value, list):
        return _as_complex(value, "a", line)
    if isinstance(value, float):
        return value
    raise ProblemFileError("a must be a number, rational string or pair", line)


def _parse_contour(value, initial_branch_angle, line: int) -> Contour:
    if not isinstance(value, list) or not value:
        raise ProblemFileError("contour must be a non-empty list of pieces", line)
    pieces = []
    for i, raw in enumerate(value):
        if not isinstance(raw, dict) or len(raw) != 1:
            raise ProblemFileError(
                f"contour[{i}] must be a single-key object", line)
        kind, body = next(iter(raw.items()))
        if kind == "segment":
            if not isinstance(body, list) or len(body) != 2:
                raise ProblemFileError(
                    f"contour[{i}].segment needs [start, end]", line)
            pieces.append(Segment(_as_complex(body[0], "segment start", line),
                                  _as_complex(body[1], "segment end", line)))
        elif kind == "arc":
            try:
                pieces.append(Arc(
                    center=_as_complex(body["center"], "arc center", line),
                    radius=float(body["radius"]),
                    angle_from=float(body["from"]),
                    angle_to=float(body["to"])))
            except (KeyError, TypeError, ValueError) as exc:
                raise ProblemFileError(f"bad arc in contour[{i}]: {exc}", line) from None
        else:
            raise ProblemFileError(
                f"contour[{i}] kind must be 'segment' or 'arc', not {kind!r}", line)
    try:
        return Contour(pieces, initial_branch_angle)
    except ValueError as exc:
        raise ProblemFileError(str(exc), line) from None


_VARIANTS = {"endpoint", "through", "even_opposite", "circle_path"}


def _parse_branch(entries) -> BranchSpec:
    variant, line = entries.require("variant")
    if variant not in _VARIANTS:
        raise ProblemFileError(
            f"variant must be one of {sorted(_VARIANTS)}, not {variant!r}", line)
    if variant in ("endpoint", "even_opposite"):
        k, kline = entries.require("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ProblemFileError("k must be an integer", kline)
        entries.forbid("k1", f"variant {variant} takes k, not k1/k2")
        entries.forbid("k2", f"variant {variant} takes k, not k1/k2")
        return Endpoint(k) if variant == "endpoint" else EvenOpposite(k)
    k1, l1 = entries.require("k1")
    k2, l2 = entries.require("k2")
    for name, val, ln in (("k1", k1, l1), ("k2", k2, l2)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise ProblemFileError(f"{name} must be an integer", ln)
    entries.forbid("k", f"variant {variant} takes k1/k2, not k")
    return Through(k1, k2) if variant == "through" else CirclePath(k1, k2)


class _Entries:
    def __init__(self):
        self.data = {}

    def put(self, key: str, value, line: int) -> None:
        if key in self.data:
            raise ProblemFileError(
                f"duplicate key {key!r} (first on line {self.data[key][1]})", line)
        self.data[key] = (value, line)

    def take(self, key: str, default=None):
        if key in self.data:
            value, line = self.data.pop(key)
            return value, line
        return default, None

    def require(self, key: str):
        if key not in self.data:
            raise ProblemFileError(f"missing required key {key!r}")
        return self.data.pop(key)

    def forbid(self, key: str, reason: str) -> None:
        if key in self.data:
            _, line = self.data[key]
            raise ProblemFileError(reason, line)

    def reject_unknown(self) -> None:
        if self.data:
            key = sorted(self.data)[0]
            raise ProblemFileError(f"unknown key {key!r}", self.data[key][1])


def parse_problem_text(text: str) -> Problem:
    entries = _Entries()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ProblemFileError("expected 'key = <json value>'", lineno)
        key, _, rhs = line.partition("=")
        key = key.strip()
        try:
            value = json.loads(rhs.strip())
        except json.JSONDecodeError as exc:
            raise ProblemFileError(f"bad JSON value for {key!r}: {exc.msg}",
                                   lineno) from None
        entries.put(key, value, lineno)

    order, oline = entries.require("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise ProblemFileError("order must be a positive integer", oline)

    a_raw, aline = entries.take("a")
    a = 1 if a_raw is None else _parse_a(a_raw, aline)

    z0_raw, z0line = entries.take("z0")
    z0 = None if z0_raw is None else _as_complex(z0_raw, "z0", z0line)

    p_raw, pline = entries.require("p")
    eps_for_builtin = None
    if isinstance(p_raw, dict):
        name = p_raw.get("builtin")
        if not isinstance(name, str):
            raise ProblemFileError("builtin phase needs a \"builtin\" name", pline)
        p_order = p_raw.get("order", order + 4)
        eps_for_builtin = p_raw.get("eps")
        nf, p_callable = _phase_builtin(name, max(p_order, order + 2),
                                        eps_for_builtin, pline)
        if z0 is not None and abs(z0 - nf.z0) > 1e-9:
            raise ProblemFileError(
                f"z0 = {z0} conflicts with builtin expansion point {nf.z0}", z0line)
    else:
        if z0 is None:
            raise ProblemFileError("z0 is required when p is a coefficient list",
                                   pline)
        coeffs = _coeff_list(p_raw, "p", pline)
        series = TruncatedSeries(z0, coeffs)
        try:
            nf = normalize(series)
        except ValueError as exc:
            raise ProblemFileError(f"degenerate phase: {exc}", pline) from None
        p_callable = series

    q_raw, qline = entries.take("q")
    if q_raw is None:
        q = TruncatedSeries.constant(1.0, nf.z0, order + 2)
        q_callable = lambda z: 1.0 + 0.0j  # noqa: E731
    elif isinstance(q_raw, dict):
        name = q_raw.get("builtin")
        if not isinstance(name, str):
            raise ProblemFileError("builtin amplitude needs a \"builtin\" name", qline)
        q_order = q_raw.get("order", order + 4)
        q, q_callable = _amplitude_builtin(
            name, max(q_order, order + 2), q_raw.get("eps", eps_for_builtin),
            nf.z0, qline)
        if abs(q.base - nf.z0) > 1e-9:
            raise ProblemFileError(
                f"amplitude builtin {name!r} expands at {q.base}, "
                f"but the phase expands at {nf.z0}", qline)
    else:
        coeffs = _coeff_list(q_raw, "q", qline)
        q = TruncatedSeries(nf.z0, coeffs)
        q_callable = q

    if nf.phi.order < order - 1:
        raise ProblemFileError(
            f"phase coefficients resolve only {nf.phi.order + 1} expansion "
            f"terms (need mu + {order - 1} powers past the constant for "
            f"order {order})", pline)
    if q.order < order - 1:
        raise ProblemFileError(
            f"amplitude coefficients resolve only {q.order + 1} expansion "
            f"terms (need {order - 1} powers for order {order})",
            qline if qline else pline)

    branch = _parse_branch(entries)

    iba_raw, ibaline = entries.take("initial_branch_angle")
    iba = None
    if iba_raw is not None:
        if not isinstance(iba_raw, (int, float)) or isinstance(iba_raw, bool):
            raise ProblemFileError("initial_branch_angle must be a number", ibaline)
        iba = float(iba_raw)

    contour_raw, cline = entries.take("contour")
    contour = None
    if contour_raw is not None:
        contour = _parse_contour(contour_raw, iba, cline)

    n_raw, nline = entries.take("n_values")
    n_values = ()
    if n_raw is not None:
        if (not isinstance(n_raw, list) or not n_raw
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                           and x > 0 for x in n_raw)):
            raise ProblemFileError("n_values must be a list of positive numbers",
                                   nline)
        n_values = tuple(float(x) for x in n_raw)
    if n_values and contour is None:
        raise ProblemFileError("n_values given without a contour", nline)

    entries.reject_unknown()

    return Problem(normal_form=nf, q=q, a=a, branch=branch, order=order,
                   p_callable=p_callable, q_callable=q_callable,
                   contour=contour, n_values=n_values)


def parse_problem_file(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem_text(text)
