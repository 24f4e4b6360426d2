"""Closed-form width bounds for small polygons and the equilateral octagon."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .fixtures import B8_WIDTH, H8_PERIMETER

PI = math.pi


def upper_bound_w(n: int) -> float:
    """Universal width bound cos(pi / 2n) for small n-gons."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return math.cos(PI / (2 * n))


def perimeter_width_bound(L: float, n: int) -> float:
    """Largest width a convex n-gon of perimeter ``L`` can have."""
    if L <= 0 or n < 3:
        raise ValueError("need L > 0 and n >= 3")
    return L / (2 * n * math.tan(PI / (2 * n)))


@lru_cache(maxsize=1)
def f8_width() -> float:
    from .families import f8
    from .geometry import width

    return width(f8()[0])


def octagon_side_bounds() -> tuple[float, float]:
    """Side-length interval for an optimal equilateral small octagon."""
    c_lower = 2 * f8_width() * math.tan(PI / 16)
    c_upper = H8_PERIMETER / 8
    assert c_lower > 0.3794 and c_upper < 0.3870, (c_lower, c_upper)
    return c_lower, c_upper


@dataclass(frozen=True)
class OctagonBoundSet:
    w_lower: float
    w_upper_global: float
    w_upper_tight: float
    c_lower: float
    c_lower_tight: float
    c_upper: float
    diag_upper: float


def tightened_bounds() -> OctagonBoundSet:
    """Bounds that hold once some side has k_i = i+3 and k_{i+3} = i-1.

    Uses the worst case d = 1 for the diagonal v0 v4, the lower width bound
    from the optimal octagon, and the side bound from the maximal-perimeter
    octagon.
    """
    lb_w = f8_width()
    c_lower, c_bar = octagon_side_bounds()
    slack = math.sqrt(1 - lb_w**2)
    return OctagonBoundSet(
        w_lower=lb_w,
        w_upper_global=perimeter_width_bound(H8_PERIMETER, 8),
        w_upper_tight=math.sqrt(4 * c_bar - 1) / (2 * c_bar),
        c_lower=c_lower,
        c_lower_tight=1 / (2 + 2 * slack),
        c_upper=c_bar,
        diag_upper=(c_bar**2 + 2 * c_bar) / math.sqrt(1 + c_bar**2 - 2 * c_bar * slack),
    )


def bingane_lower_bound(n: int) -> float:
    """Analytic lower bound on the maximal width of a small 2^s-gon, s >= 4."""
    if not isinstance(n, int) or n < 16 or n & (n - 1):
        raise ValueError(f"n must be a power of two >= 16, got {n!r}")
    t = PI / n
    inner = (
        t / 2
        + 0.5 * math.atan(math.tan(2 * t) * math.tan(t))
        - 0.5 * math.asin(math.sin(2 * t) * math.sin(t) / math.sqrt(4 * math.sin(t) ** 2 + math.cos(4 * t)))
    )
    return math.cos(inner)


@dataclass(frozen=True)
class BoundCheck:
    label: str
    value: float
    relation: str
    threshold: float
    passed: bool


def _check(label: str, value: float, relation: str, threshold: float) -> BoundCheck:
    ok = value > threshold if relation == ">" else value < threshold
    return BoundCheck(label, value, relation, threshold, ok)


def bound_checks() -> list[BoundCheck]:
    """Every printed inequality of the octagon bound chain, evaluated."""
    b = tightened_bounds()
    return [
        _check("L(H8)/16 cot(pi/16)", b.w_upper_global, ">", 0.9726),
        _check("L(H8)/16 cot(pi/16)", b.w_upper_global, "<", 0.9727),
        _check("c upper = L(H8)/8", b.c_upper, "<", 0.3870),
        _check("c lower = 2 W(F8) tan(pi/16)", b.c_lower, ">", 0.3794),
        _check("tight c lower", b.c_lower_tight, ">", 0.3844),
        _check("tight w upper", b.w_upper_tight, "<", 0.9564),
        _check("tight diagonal upper", b.diag_upper, "<", 0.9644),
        _check("W(F8) vs W(H8) reference", b.w_lower, ">", 0.9503943246),
        _check("tight w upper vs global", b.w_upper_tight, "<", b.w_upper_global),
        _check("global vs cos(pi/16)", b.w_upper_global, "<", upper_bound_w(8)),
        _check("W(B8) vs 0.9727", B8_WIDTH, ">", 0.9727),
        _check("W(F8) vs W(B8)", b.w_lower, "<", B8_WIDTH),
    ]
