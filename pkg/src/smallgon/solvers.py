"""Scalar root finding and the truncated large-n expansions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

PI = math.pi


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


def solve_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-13,
    xtol: float = 1e-14,
    maxiter: int = 200,
) -> RootResult:
    """Root of ``f`` in ``[lo, hi]`` by safeguarded secant steps.

    Each step tries the secant (regula falsi) point; when the bracket fails
    to shrink by half over two steps a bisection step is forced instead.
    Terminates once the bracket is narrower than ``xtol`` (or no float lies
    strictly inside) and the residual meets ``tol * max(1, |root|)``.
    """
    if tol <= 0 or xtol <= 0:
        raise ValueError("tolerances must be positive")
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return RootResult(lo, 0.0, 0, (lo, hi))
    if fhi == 0.0:
        return RootResult(hi, 0.0, 0, (lo, hi))
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f = {flo!r}, {fhi!r}")
    a, b, fa, fb = lo, hi, flo, fhi
    width_before = b - a
    it = 0
    for it in range(1, maxiter + 1):
        if b - a < xtol or math.nextafter(a, b) >= b:
            break
        x = b - fb * (b - a) / (fb - fa)
        if it % 2 == 0:
            if (b - a) > 0.5 * width_before:
                x = 0.5 * (a + b)
            width_before = b - a
        if not a < x < b:
            x = 0.5 * (a + b)
        fx = f(x)
        if fx == 0.0:
            a = b = x
            fa = fb = 0.0
            break
        if math.copysign(1.0, fx) == math.copysign(1.0, fa):
            a, fa = x, fx
        else:
            b, fb = x, fx
    else:
        raise ConvergenceError(f"bracket still [{a!r}, {b!r}] after {maxiter} iterations")
    root, res = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    if abs(res) > tol * max(1.0, abs(root)):
        raise ConvergenceError(f"residual {res!r} above tolerance at root {root!r}")
    return RootResult(root, abs(res), it, (lo, hi))


def quintic(t: float) -> float:
    return t**5 - 6 * t**3 + 3 * t**2 + 10 * t - 7


def quintic_root() -> float:
    """Unique positive root of t^5 - 6t^3 + 3t^2 + 10t - 7."""
    # for t > 3: t^5 >= 9t^3 so the cubic part is positive, and 3t^2 + 10t > 7
    grid = [3.0 * j / 30000 for j in range(1, 30001)]
    vals = [quintic(t) for t in grid]
    changes = sum(1 for u, v in zip(vals, vals[1:]) if u * v < 0)
    if changes != 1:
        raise ConvergenceError(f"expected one positive sign change, found {changes}")
    return solve_bracketed(quintic, 0.0, 1.0, tol=1e-14).root


@dataclass(frozen=True)
class SeriesEval:
    n: int
    alpha_series: float
    beta_series: float
    d_series: float
    width_series: float
    order: int = 6


def _check_power_of_two(n: int, smin: int) -> None:
    if not isinstance(n, int) or n < 2**smin or n & (n - 1):
        raise ValueError(f"n must be a power of two >= {2**smin}, got {n!r}")


def asymptotic_g(n: int) -> SeriesEval:
    """Large-n expansions of the G_n parameters and width, truncated as published."""
    _check_power_of_two(n, 4)
    return SeriesEval(
        n=n,
        alpha_series=PI / n + PI**5 / (6 * n**5) + PI**7 / (12 * n**7),
        beta_series=PI / n - PI**5 / (2 * n**5) - PI**7 / (4 * n**7),
        d_series=1 - 4 * PI**4 / (3 * n**4) - 7 * PI**6 / (3 * n**6),
        width_series=1
        - PI**2 / (8 * n**2)
        - 85 * PI**4 / (128 * n**4)
        - 92801 * PI**6 / (46080 * n**6),
    )


def gap_series(n: int, family: str) -> tuple[float, float | None]:
    """(upper-bound gap, gap over the regular n-gon) for family ``"F"`` or ``"G"``.

    The regular-polygon gap is only published for G; it is ``None`` for F.
    """
    if family == "G":
        _check_power_of_two(n, 4)
        ub_gap = 2 * PI**4 / (3 * n**4) + 145 * PI**6 / (72 * n**6)
        reg_gap = 3 * PI**2 / (8 * n**2) - 271 * PI**4 / (384 * n**4)
        return ub_gap, reg_gap
    if family == "F":
        _check_power_of_two(n, 3)
        return PI**3 / (2 * n**3) - 5 * PI**5 / (8 * n**5), None
    raise ValueError(f"unknown family {family!r}")
