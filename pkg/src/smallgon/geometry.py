"""Polygon representation and exact-definition metrics.

Polygons live in a canonical frame: vertex 0 at the origin, the polygon in
the upper half-plane, vertices counterclockwise.  Sides are numbered
``1..n``; side ``i`` joins ``v[i-1]`` and ``v[i]`` with indices taken
modulo ``n``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

FLAG_TOL = 1e-9
METRIC_TOL = 1e-12
TIE_TOL = 1e-9


class InvalidPolygonError(ValueError):
    """Raised when a vertex list cannot be measured as a convex polygon."""


@dataclass(frozen=True)
class Polygon:
    name: str
    vertices: tuple[tuple[float, float], ...]
    # reference values attached to figure fixtures
    reported_width: float | None = field(default=None, compare=False)
    reported_perimeter: float | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise InvalidPolygonError(f"{self.name}: need at least 3 vertices, got {n}")
        if not all(math.isfinite(c) for v in verts for c in v):
            raise InvalidPolygonError(f"{self.name}: non-finite coordinate")
        tol = FLAG_TOL
        x0, y0 = verts[0]
        if abs(x0) > tol or abs(y0) > tol:
            raise InvalidPolygonError(f"{self.name}: vertex 0 must be at the origin")
        if min(y for _, y in verts) < -tol:
            raise InvalidPolygonError(f"{self.name}: polygon must lie in y >= 0")
        for i in range(1, n - 1):
            (xa, ya), (xb, yb) = verts[i], verts[i + 1]
            if xa * yb - ya * xb < -tol:
                raise InvalidPolygonError(
                    f"{self.name}: vertices {i}, {i + 1} are not counterclockwise"
                )

    @property
    def n(self) -> int:
        return len(self.vertices)

    def array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    def vertex(self, k: int) -> tuple[float, float]:
        return self.vertices[k % self.n]

    def to_json(self) -> str:
        return polygon_to_json(self)


@dataclass(frozen=True)
class HeightGraph:
    """Per-side heights and maximizer sets; entry ``i - 1`` belongs to side ``i``."""

    heights: tuple[float, ...]
    maximizers: tuple[frozenset[int], ...]
    width: float
    argmin_side: int

    def k_vector(self) -> tuple[int, ...]:
        """One maximizer per side (the smallest index of each tie set)."""
        return tuple(min(K) for K in self.maximizers)

    def edges(self) -> set[tuple[int, int]]:
        n = len(self.heights)
        out = set()
        for i, K in enumerate(self.maximizers, start=1):
            for k in K:
                for j in ((i - 1) % n, i % n):
                    if j != k:
                        out.add((min(j, k), max(j, k)))
        return out


@dataclass(frozen=True)
class WidthReport:
    width: float
    diameter: float
    perimeter: float
    side_min: float
    side_max: float
    is_small: bool
    is_equilateral: bool
    is_convex: bool
    tol: float


def _signed_heights(P: np.ndarray) -> np.ndarray:
    """Matrix ``H[i-1, k]`` of ``h_ik`` for every side ``i`` and vertex ``k``."""
    # row r is side r+1, with endpoints v[r] and v[r+1]
    a = P
    b = np.roll(P, -1, axis=0)
    lengths = np.hypot(b[:, 0] - a[:, 0], b[:, 1] - a[:, 1])
    if np.any(lengths <= METRIC_TOL):
        bad = int(np.argmin(lengths)) + 1
        raise InvalidPolygonError(f"side {bad} is degenerate (coincident endpoints)")
    ax, ay = a[:, 0][:, None], a[:, 1][:, None]
    bx, by = b[:, 0][:, None], b[:, 1][:, None]
    kx, ky = P[:, 0][None, :], P[:, 1][None, :]
    num = (ax - kx) * (by - ky) - (ay - ky) * (bx - kx)
    return num / lengths[:, None]


def point_side_height(p: Polygon, i: int, k: int) -> float:
    """Signed distance from vertex ``k`` to the line through side ``i``."""
    n = p.n
    if not 1 <= i <= n:
        raise IndexError(f"side index {i} outside 1..{n}")
    if not 0 <= k < n:
        raise IndexError(f"vertex index {k} outside 0..{n - 1}")
    x0, y0 = p.vertex(i - 1)
    x1, y1 = p.vertex(i)
    xk, yk = p.vertex(k)
    length = math.hypot(x1 - x0, y1 - y0)
    if length <= METRIC_TOL:
        raise InvalidPolygonError(f"side {i} is degenerate (coincident endpoints)")
    return ((x0 - xk) * (y1 - yk) - (y0 - yk) * (x1 - xk)) / length


def turn_cross_products(P: np.ndarray) -> np.ndarray:
    prev = np.roll(P, 1, axis=0)
    nxt = np.roll(P, -1, axis=0)
    e1 = P - prev
    e2 = nxt - P
    return e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]


def is_convex(p: Polygon, tol: float = METRIC_TOL) -> bool:
    """Weak convexity: no reflex turn beyond ``tol``."""
    return bool(np.all(turn_cross_products(p.array()) >= -tol))


def height_graph(p: Polygon, tie_tol: float = TIE_TOL) -> HeightGraph:
    P = p.array()
    H = _signed_heights(P)
    if not is_convex(p):
        raise InvalidPolygonError(f"{p.name}: vertex order is not convex")
    heights = H.max(axis=1)
    maximizers = tuple(
        frozenset(int(k) for k in np.flatnonzero(row >= h - tie_tol))
        for row, h in zip(H, heights)
    )
    j = int(np.argmin(heights))
    return HeightGraph(
        heights=tuple(float(h) for h in heights),
        maximizers=maximizers,
        width=float(heights[j]),
        argmin_side=j + 1,
    )


def width(p: Polygon) -> float:
    return height_graph(p).width


def width_antipodal(p: Polygon) -> float:
    """Width by the rotating-supports walk over edge normals.

    For each edge the supporting line on the far side touches an antipodal
    vertex; the pointer only moves forward as the edge direction turns, so
    the extent along each normal is found without scanning every vertex.
    """
    P = p.array()
    n = len(P)
    if not is_convex(p):
        raise InvalidPolygonError(f"{p.name}: vertex order is not convex")
    best = math.inf
    j = 1
    for i in range(n):
        a, b = P[i], P[(i + 1) % n]
        ex, ey = b - a
        length = math.hypot(ex, ey)
        if length <= METRIC_TOL:
            raise InvalidPolygonError(f"side {i + 1} is degenerate (coincident endpoints)")
        # inward unit normal for a counterclockwise polygon
        nx, ny = -ey / length, ex / length

        def extent(m: int) -> float:
            q = P[m % n]
            return (q[0] - a[0]) * nx + (q[1] - a[1]) * ny

        for _ in range(n):
            if extent(j + 1) >= extent(j):
                j += 1
            else:
                break
        best = min(best, extent(j))
    return float(best)


def diameter(p: Polygon, tol: float = FLAG_TOL) -> tuple[float, list[tuple[int, int]]]:
    """Largest vertex distance and every pair within ``tol`` of it."""
    P = p.array()
    D = np.hypot(P[:, None, 0] - P[None, :, 0], P[:, None, 1] - P[None, :, 1])
    dmax = float(D.max())
    i, j = np.nonzero(np.triu(D >= dmax - tol, k=1))
    return dmax, [(int(a), int(b)) for a, b in zip(i, j)]


def side_lengths(p: Polygon) -> np.ndarray:
    P = p.array()
    E = np.roll(P, -1, axis=0) - P
    return np.hypot(E[:, 0], E[:, 1])


def perimeter(p: Polygon) -> float:
    return float(side_lengths(p).sum())


def classify(p: Polygon, tol: float = FLAG_TOL) -> WidthReport:
    hg = height_graph(p)
    dmax, _ = diameter(p, tol)
    sides = side_lengths(p)
    return WidthReport(
        width=hg.width,
        diameter=dmax,
        perimeter=float(sides.sum()),
        side_min=float(sides.min()),
        side_max=float(sides.max()),
        is_small=abs(dmax - 1.0) <= tol,
        is_equilateral=float(sides.max() - sides.min()) <= tol,
        is_convex=bool(np.all(turn_cross_products(p.array()) > tol)),
        tol=tol,
    )


def canonicalize(points: Iterable[Sequence[float]], name: str = "P", anchor: int = 0) -> Polygon:
    """Place ``points[anchor]`` at the origin with the polygon above it.

    The vertex order is made counterclockwise, and the polygon is rotated so
    the bisector of the interior angle at the anchor points along +y.
    """
    P = np.array([tuple(v) for v in points], dtype=float)
    n = len(P)
    if n < 3:
        raise InvalidPolygonError(f"{name}: need at least 3 vertices, got {n}")
    x, y = P[:, 0], P[:, 1]
    area2 = float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))
    order = [(anchor + s) % n for s in range(n)]
    if area2 < 0:
        order = [order[0]] + order[1:][::-1]
    P = P[order] - P[order[0]]
    u = P[1] / np.hypot(*P[1])
    v = P[-1] / np.hypot(*P[-1])
    bis = u + v
    theta = math.atan2(bis[1], bis[0])
    rot = math.pi / 2 - theta
    c, s = math.cos(rot), math.sin(rot)
    R = np.array([[c, -s], [s, c]])
    Q = P @ R.T
    Q[0] = 0.0
    Q[:, 1] = np.where(np.abs(Q[:, 1]) < 1e-15, 0.0, Q[:, 1])
    return Polygon(name, tuple(map(tuple, Q)))


def reflect(p: Polygon) -> Polygon:
    """Mirror image across the y-axis, back in canonical order."""
    verts = [(-x, y) for x, y in p.vertices]
    verts = [verts[0]] + verts[1:][::-1]
    return Polygon(p.name + "'", tuple(verts))


def scaled(p: Polygon, factor: float) -> Polygon:
    return Polygon(p.name, tuple((factor * x, factor * y) for x, y in p.vertices))


def _fmt(x: float) -> str:
    s = format(float(x), ".17g")
    return "0" if s == "-0" else s


def polygon_to_json(p: Polygon, extra: dict | None = None) -> str:
    verts = ", ".join(f"[{_fmt(x)}, {_fmt(y)}]" for x, y in p.vertices)
    fields = [f'"name": {json.dumps(p.name)}', f'"n": {p.n}', f'"vertices": [{verts}]']
    for key, val in (extra or {}).items():
        fields.append(f"{json.dumps(key)}: {_fmt(val) if isinstance(val, float) else json.dumps(val)}")
    return "{" + ", ".join(fields) + "}"


class PolygonParseError(ValueError):
    pass


def polygon_from_json(text: str) -> Polygon:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        line = lines[exc.lineno - 1] if exc.lineno <= len(lines) else ""
        raise PolygonParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}\n  {line}") from exc
    if not isinstance(data, dict):
        raise PolygonParseError("top level must be an object")
    for key in ("name", "n", "vertices"):
        if key not in data:
            raise PolygonParseError(f"missing key {key!r}")
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(
        isinstance(v, list) and len(v) == 2 and all(isinstance(c, (int, float)) for c in v)
        for v in verts
    ):
        raise PolygonParseError("'vertices' must be a list of [x, y] number pairs")
    if data["n"] != len(verts):
        raise PolygonParseError(f"'n' is {data['n']} but {len(verts)} vertices are listed")
    try:
        return Polygon(str(data["name"]), tuple((float(x), float(y)) for x, y in verts))
    except InvalidPolygonError as exc:
        raise PolygonParseError(str(exc)) from exc
