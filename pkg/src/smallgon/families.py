"""Constructors for the small polygon families.

The F and G polygons are built from their height graphs.  Every vertex on
the odd cycle of the height graph is the apex of a fan of polygon sides;
a side seen from an apex at distances (1, 1) subtends the angle ``beta``
and a side seen at distances (1, d) subtends ``alpha``.  Walking the cycle
and turning through each fan places every vertex from ``(alpha, beta, d)``
alone, which is what :func:`chain_vertices` does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import fixtures
from .geometry import Polygon
from .solvers import RootResult, solve_bracketed

PI = math.pi


@dataclass(frozen=True)
class ConstructionParams:
    alpha: float
    beta: float
    d: float
    n: int
    variant: str
    residuals: tuple[float, float, float]
    root: RootResult | None = None


@dataclass(frozen=True)
class FamilyId:
    """Names one polygon family member, e.g. ``FamilyId("gn", n=16)``.

    ``kind`` is one of ``regular``, ``reuleaux``, ``f8``, ``fn``, ``gn``,
    ``fixture``.
    """

    kind: str
    n: int | None = None
    m: int | None = None
    name: str | None = None

    def build(self) -> Polygon:
        if self.kind == "regular":
            return regular(_need(self.n, "n"))
        if self.kind == "reuleaux":
            return reuleaux_regular(_need(self.m, "m"), _need(self.n, "n"))
        if self.kind == "f8":
            return f8()[0]
        if self.kind == "fn":
            return f_family(_need(self.n, "n"))[0]
        if self.kind == "gn":
            return g_family(_need(self.n, "n"))[0]
        if self.kind == "fixture":
            return fixture(_need(self.name, "name"))
        raise ValueError(f"unknown family {self.kind!r}")


def _need(value, label):
    if value is None:
        raise ValueError(f"family parameter {label!r} is required")
    return value


def _circle_polygon(name: str, radius: float, angles: list[float]) -> Polygon:
    verts = [(0.0, 0.0)]
    for a in angles[1:]:
        verts.append((radius * math.cos(a), radius + radius * math.sin(a)))
    return Polygon(name, tuple(verts))


def regular(n: int) -> Polygon:
    """Regular n-gon of unit diameter with a vertex at the origin."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    radius = 0.5 if n % 2 == 0 else 1 / (2 * math.cos(PI / (2 * n)))
    angles = [-PI / 2 + 2 * PI * j / n for j in range(n)]
    return _circle_polygon(f"R{n}", radius, angles)


def regular_width(n: int) -> float:
    return math.cos(PI / n) if n % 2 == 0 else math.cos(PI / (2 * n))


def reuleaux_regular(m: int, n: int) -> Polygon:
    """Vertices of the Reuleaux m-gon with each arc split into n/m equal parts."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and at least 3, got {m}")
    if n % m:
        raise ValueError(f"m={m} does not divide n={n}")
    parts = n // m
    radius = 1 / (2 * math.cos(PI / (2 * m)))
    # polar angles about the circumcentre; each arc point is unit distance from its centre vertex
    base = [-PI / 2 + 2 * PI * j / m for j in range(m)]
    corners = [(radius * math.cos(a), radius + radius * math.sin(a)) for a in base]
    pts: list[tuple[float, tuple[float, float]]] = [(base[j], corners[j]) for j in range(m)]
    for j, (cx, cy) in enumerate(corners):
        # the arc centred at corner j faces the circumcentre, spanning pi/m
        toward = base[j] + PI
        for t in range(1, parts):
            phi = toward - PI / (2 * m) + t * PI / (m * parts)
            q = (cx + math.cos(phi), cy + math.sin(phi))
            pts.append((math.atan2(q[1] - radius, q[0]), q))
    pts.sort(key=lambda item: (item[0] + PI / 2) % (2 * PI))
    verts = [(0.0, 0.0)] + [q for _, q in pts[1:]]
    return Polygon(f"R{m},{n}", tuple(verts))


# --- height-graph chains -------------------------------------------------


def _check_power_of_two(n: int, smin: int) -> None:
    if not isinstance(n, int) or n < 2**smin or n & (n - 1):
        raise ValueError(f"n must be a power of two >= {2**smin}, got {n!r}")


def f_cycle(n: int) -> list[int]:
    """Height-graph cycle of F_n, starting at v0 (n/2 + 1 vertices)."""
    q = n // 4
    half = [0] + [n // 2 - j if j % 2 else n - j for j in range(1, q + 1)]
    return half + [q] + [(n - half[j]) % n for j in range(q - 1, 0, -1)]


def g_cycle(n: int) -> list[int]:
    """Height-graph cycle of G_n, starting at v0 (3n/4 - 1 vertices)."""
    pendant = {n // 2 - 4 * k + 1 for k in range(1, n // 8 + 1)}
    right = [i for i in range(n // 2 - 1, 0, -1) if i not in pendant]
    left = sorted((n - i for i in right), reverse=True)
    cycle = [0]
    for r, l in zip(right, left):
        cycle += [r, l]
    return cycle


Fan = tuple[int, tuple[tuple[int, bool], ...]]


@lru_cache(maxsize=None)
def fans(n: int, variant: str) -> tuple[Fan, ...]:
    """Apex and fan vertices for every cycle vertex.

    A fan runs from the apex's cycle predecessor down to its successor in
    index order; each entry is ``(vertex, is_d_edge)``.  Cycle edges
    alternate unit and length-d starting with a unit edge at v0; the only
    length-d pendant edge is v0 - v_{n/2}.
    """
    cycle = f_cycle(n) if variant == "F" else g_cycle(n)
    m = len(cycle)
    short = {frozenset((cycle[j], cycle[(j + 1) % m])) for j in range(1, m, 2)}
    short.add(frozenset((0, n // 2)))
    out = []
    for j, apex in enumerate(cycle):
        pred, succ = cycle[j - 1], cycle[(j + 1) % m]
        members = [pred]
        while members[-1] != succ:
            members.append((members[-1] - 1) % n)
        out.append((apex, tuple((v, frozenset((apex, v)) in short) for v in members)))
    return tuple(out)


def angle_counts(fan_list: tuple[Fan, ...]) -> tuple[int, int]:
    """Number of sides subtending alpha and beta."""
    na = nb = 0
    for _, members in fan_list:
        for (_, s0), (_, s1) in zip(members, members[1:]):
            if s0 or s1:
                na += 1
            else:
                nb += 1
    return na, nb


def chain_vertices(
    n: int, fan_list: tuple[Fan, ...], alpha: float, beta: float, d: float
) -> tuple[list[tuple[float, float]], float]:
    """Place all vertices by walking the cycle; returns (vertices, closure mismatch).

    Directions are propagated symbolically (never recovered from positions),
    so every coordinate is affine in ``d`` for fixed angles.
    """
    pos: dict[int, tuple[float, float]] = {0: (0.0, 0.0)}
    heading: dict[tuple[int, int], float] = {}
    mismatch = 0.0
    for j, (apex, members) in enumerate(fan_list):
        steps = [alpha if (s0 or s1) else beta for (_, s0), (_, s1) in zip(members, members[1:])]
        if j == 0:
            theta = PI / 2 + sum(steps) / 2
        else:
            theta = heading[(members[0][0], apex)] + PI
        ax, ay = pos[apex]
        for idx, (v, is_d) in enumerate(members):
            r = d if is_d else 1.0
            q = (ax + r * math.cos(theta), ay + r * math.sin(theta))
            heading[(apex, v)] = theta
            if v in pos:
                mismatch = max(mismatch, math.dist(q, pos[v]))
            else:
                pos[v] = q
            if idx < len(steps):
                theta -= steps[idx]
    return [pos[i] for i in range(n)], mismatch


def _equilateral_residual(alpha: float, beta: float, d: float) -> float:
    return 1 + d * d - 2 * d * math.cos(alpha) - (2 - 2 * math.cos(beta))


def _chain_d(n: int, variant: str, alpha: float, beta: float) -> float:
    """Chord condition solved for d: x_{n/4} = 1/2 (F) or d/2 (G)."""
    fl = fans(n, variant)
    q = n // 4
    a = chain_vertices(n, fl, alpha, beta, 0.0)[0][q][0]
    b = chain_vertices(n, fl, alpha, beta, 1.0)[0][q][0] - a
    if variant == "F":
        return (0.5 - a) / b
    return a / (0.5 - b)


def f8() -> tuple[Polygon, ConstructionParams]:
    """The equilateral small octagon of maximal width."""

    def d_of(a: float) -> float:
        return (2 * math.sin(a) + 1) / (2 * math.sin(2 * a + (PI / 2 - 3 * a)))

    def residual(a: float) -> float:
        return _equilateral_residual(a, PI / 2 - 3 * a, d_of(a))

    sol = solve_bracketed(residual, 0.0, PI / 6)
    a = sol.root
    b = PI / 2 - 3 * a
    d = d_of(a)
    v3 = (math.sin(a), math.cos(a))
    back = 3 * PI / 2 - a  # heading v3 -> v0
    v7 = (v3[0] + math.cos(back - b), v3[1] + math.sin(back - b))
    v6 = (v3[0] + d * math.cos(back - b - a), v3[1] + d * math.sin(back - b - a))
    verts = [
        (0.0, 0.0),
        (-v7[0], v7[1]),
        (-v6[0], v6[1]),
        v3,
        (0.0, d),
        (-v3[0], v3[1]),
        v6,
        v7,
    ]
    params = ConstructionParams(
        alpha=a,
        beta=b,
        d=d,
        n=8,
        variant="F",
        residuals=(residual(a), 3 * a + b - PI / 2, v6[0] + 0.5),
        root=sol,
    )
    return Polygon("F8", tuple(verts)), params


def _bracket(n: int) -> tuple[float, float]:
    return (0.0, PI / 6) if n == 8 else (PI / (2 * n), 2 * PI / n)


def g_family(n: int) -> tuple[Polygon, ConstructionParams]:
    """The equilateral small n-gon G_n, n = 2^s with s >= 4."""
    _check_power_of_two(n, 4)

    def beta_of(a: float) -> float:
        return 4 * PI / n - 3 * a

    def d_of(a: float) -> float:
        b = beta_of(a)
        return (2 * math.cos(2 * a + b) + 1) / (2 * math.cos(a) + math.cos(3 * a + b))

    def residual(a: float) -> float:
        return _equilateral_residual(a, beta_of(a), d_of(a))

    sol = solve_bracketed(residual, *_bracket(n))
    a, b = sol.root, beta_of(sol.root)
    d = d_of(a)
    verts, _ = chain_vertices(n, fans(n, "G"), a, b, d)
    params = ConstructionParams(
        alpha=a,
        beta=b,
        d=d,
        n=n,
        variant="G",
        residuals=(residual(a), n / 8 * (3 * a + b) - PI / 2, verts[n // 4][0] - d / 2),
        root=sol,
    )
    return Polygon(f"G{n}", tuple(verts)), params


def f_family(n: int) -> tuple[Polygon, ConstructionParams]:
    """The equilateral small n-gon F_n, n = 2^s with s >= 3."""
    _check_power_of_two(n, 3)
    na, nb = angle_counts(fans(n, "F"))

    def beta_of(a: float) -> float:
        # the fan angles around the odd cycle sum to pi
        return (PI - na * a) / nb

    def residual(a: float) -> float:
        b = beta_of(a)
        return _equilateral_residual(a, b, _chain_d(n, "F", a, b))

    sol = solve_bracketed(residual, *_bracket(n))
    a, b = sol.root, beta_of(sol.root)
    d = _chain_d(n, "F", a, b)
    verts, _ = chain_vertices(n, fans(n, "F"), a, b, d)
    params = ConstructionParams(
        alpha=a,
        beta=b,
        d=d,
        n=n,
        variant="F",
        residuals=(residual(a), na * a + nb * b - PI, verts[n // 4][0] - 0.5),
        root=sol,
    )
    return Polygon(f"F{n}", tuple(verts)), params


def closed_form_width(params: ConstructionParams) -> float:
    """Height of v0 over the side v_{n/2-1} v_{n/2}."""
    return params.d * math.sin(params.alpha) / (2 * math.sin(params.beta / 2))


FIXTURE_NAMES = tuple(fixtures.COORDINATES)


def fixture(name: str) -> Polygon:
    try:
        coords = fixtures.COORDINATES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    width = {"H8": fixtures.H8_WIDTH, "B8": fixtures.B8_WIDTH, "F8ref": fixtures.F8_WIDTH}.get(
        name, fixtures.CAPTION_WIDTHS[name]
    )
    perim = fixtures.H8_PERIMETER if name == "H8" else None
    return Polygon(name, tuple(coords), reported_width=width, reported_perimeter=perim)
