"""Height-graph checks and seeded numerical evidence for the optimal octagon.

Nothing here certifies global optimality.  :func:`local_improve` runs
reproducible multistart local searches on the fixed-configuration width
problem, and :func:`epsilon_uniqueness_probe` samples repaired octagons away
from a reference polygon.  Both report evidence only.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .geometry import InvalidPolygonError, Polygon, height_graph, is_convex

KA: tuple[int, ...] = (5, 6, 7, 0, 0, 1, 2, 3)
KB: tuple[int, ...] = (5, 5, 6, 0, 0, 2, 3, 3)

W_MIN = 0.953776
C_RANGE = (0.384462, 0.386952)
FEAS_TOL = 1e-8


class ConfigClass(str, enum.Enum):
    KA = "KA"
    KB = "KB"
    INVALID = "Invalid"


def dihedral_images(k: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All relabelings of a maximizer vector under the octagon's symmetries.

    Rotating labels by r sends side i to side i + r and vertex j to j + r;
    reflecting sends side i to side 1 - i and vertex j to -j.
    """
    n = len(k)
    out = set()
    for flip in (False, True):
        for r in range(n):
            img = [0] * n
            for i in range(1, n + 1):
                side, vert = (1 - i, -k[i - 1]) if flip else (i, k[i - 1])
                img[(side + r - 1) % n] = (vert + r) % n
            out.add(tuple(img))
    return out


def lemma1_consistent(k: tuple[int, ...]) -> bool:
    return all(k[i - 1] % 8 in ((i + 3) % 8, (i + 4) % 8) for i in range(1, 9))


def pairing_holds(k: tuple[int, ...]) -> bool:
    """k_i = i+3 iff k_{i+4} = i, and k_i = i+4 iff k_{i+4} = i-1."""
    for i in range(1, 9):
        ki, kj = k[i - 1] % 8, k[(i + 3) % 8] % 8
        if (ki == (i + 3) % 8) != (kj == i % 8):
            return False
        if (ki == (i + 4) % 8) != (kj == (i - 1) % 8):
            return False
    return True


_KA_ORBIT = dihedral_images(KA)
_KB_ORBIT = dihedral_images(KB)


def classify_configuration(k: tuple[int, ...]) -> ConfigClass:
    k = tuple(int(v) % 8 for v in k)
    if len(k) != 8 or not lemma1_consistent(k) or not pairing_holds(k):
        return ConfigClass.INVALID
    if k in _KA_ORBIT:
        return ConfigClass.KA
    if k in _KB_ORBIT:
        return ConfigClass.KB
    return ConfigClass.INVALID


def enumerate_configurations() -> list[tuple[int, ...]]:
    """Every maximizer vector allowed by both the third-neighbour rule and the pairing rule."""
    choices = [((i + 3) % 8, (i + 4) % 8) for i in range(1, 9)]
    return [k for k in itertools.product(*choices) if pairing_holds(k)]


@dataclass(frozen=True)
class PairingReport:
    maximizers: tuple[frozenset[int], ...]
    k: tuple[int, ...] | None
    ties: tuple[int, ...]
    lemma1_violations: tuple[int, ...]
    pairing_violations: tuple[int, ...]
    configuration: ConfigClass | None
    width: float
    in_regime: bool

    @property
    def ok(self) -> bool:
        return not self.lemma1_violations and not self.pairing_violations


def check_lemma_pairing(p: Polygon, tie_tol: float = 1e-9) -> PairingReport:
    """Check the third-neighbour rule and the opposite-side pairing on an octagon.

    Sides whose maximizer is tied are listed in ``ties`` and left out of the
    pairing test instead of being counted as violations.
    """
    if p.n != 8:
        raise ValueError(f"expected an octagon, got n={p.n}")
    hg = height_graph(p, tie_tol)
    K = hg.maximizers
    allowed = [{(i + 3) % 8, (i + 4) % 8} for i in range(1, 9)]
    ties = tuple(i for i in range(1, 9) if len(K[i - 1]) > 1)
    l1 = tuple(i for i in range(1, 9) if not K[i - 1] <= allowed[i - 1])
    pv = []
    for i in range(1, 9):
        j = (i + 4 - 1) % 8 + 1
        if i in ties or j in ties or i in l1 or j in l1:
            continue
        (ki,), (kj,) = K[i - 1], K[j - 1]
        if (ki == (i + 3) % 8) != (kj == i % 8) or (ki == (i + 4) % 8) != (kj == (i - 1) % 8):
            pv.append(i)
    k = None if ties else tuple(min(s) for s in K)
    config = classify_configuration(k) if k is not None and not l1 and not pv else None
    return PairingReport(
        maximizers=K,
        k=k,
        ties=ties,
        lemma1_violations=l1,
        pairing_violations=tuple(pv),
        configuration=config,
        width=hg.width,
        in_regime=hg.width >= 0.9503,
    )


# --- fixed-configuration width problem ------------------------------------

_IU = np.triu_indices(8, 1)
_FREE_X = [1, 2, 3, 5, 6, 7]
_SIDE = np.arange(1, 9)
_A, _B = (_SIDE - 1) % 8, _SIDE % 8


def _unpack(z: np.ndarray) -> tuple[np.ndarray, np.ndarray, float, float]:
    x = np.zeros(8)
    y = np.zeros(8)
    x[_FREE_X] = z[0:6]
    y[1:] = z[6:13]
    return x, y, z[13], z[14]


def _pack(xy: np.ndarray, c: float, w: float) -> np.ndarray:
    return np.r_[xy[_FREE_X, 0], xy[1:, 1], c, w]


def _numerators(x: np.ndarray, y: np.ndarray, k: np.ndarray) -> np.ndarray:
    return (x[_A] - x[k]) * (y[_B] - y[k]) - (y[_A] - y[k]) * (x[_B] - x[k])


def problem_constraints(z: np.ndarray, k: tuple[int, ...], w_min: float | None = W_MIN):
    """Inequality (>= 0) and equality (== 0) residuals of the width problem."""
    x, y, c, w = _unpack(z)
    kk = np.asarray(k)
    d2 = ((x[:, None] - x[None, :]) ** 2 + (y[:, None] - y[None, :]) ** 2)[_IU]
    parts = [
        1.0 - d2,
        y[1:],
        x[1:7] * y[2:8] - y[1:7] * x[2:8],
        _numerators(x, y, kk) - c * w,
        [c - C_RANGE[0], C_RANGE[1] - c],
    ]
    if w_min is not None:
        parts.append([w - w_min])
    ineq = np.concatenate([np.atleast_1d(np.asarray(v, dtype=float)) for v in parts])
    eq = (x[_B] - x[_A]) ** 2 + (y[_B] - y[_A]) ** 2 - c * c
    return ineq, eq


def violation(z: np.ndarray, k: tuple[int, ...], w_min: float | None = W_MIN) -> float:
    ineq, eq = problem_constraints(z, k, w_min)
    return float(max(0.0, -ineq.min(), np.abs(eq).max()))


def _penalized(z: np.ndarray, k: tuple[int, ...], mu: float) -> float:
    ineq, eq = problem_constraints(z, k, None)
    return -z[14] + mu * (np.sum(np.minimum(ineq, 0.0) ** 2) + np.sum(eq**2))


def repair_octagon(xy: np.ndarray, iterations: int = 8) -> np.ndarray:
    """Nearest equilateral octagon (Gauss-Newton), v4 on the y-axis, diameter 1.

    v0 stays at the origin.  Rotation and uniform scaling keep sides equal,
    so they are applied after the projection.
    """
    P = np.array(xy, dtype=float)
    P[0] = 0.0
    for _ in range(iterations):
        E = P[_B] - P[_A]
        s2 = np.sum(E**2, axis=1)
        res = s2 - s2.mean()
        if np.abs(res).max() < 1e-15:
            break
        # d(s2_i)/d(v_b) = 2E_i, d(s2_i)/d(v_a) = -2E_i; v0 is fixed
        J = np.zeros((8, 16))
        for i in range(8):
            J[i, 2 * _B[i] : 2 * _B[i] + 2] += 2 * E[i]
            J[i, 2 * _A[i] : 2 * _A[i] + 2] -= 2 * E[i]
        J -= J.mean(axis=0)
        step = np.linalg.lstsq(J[:, 2:], res, rcond=None)[0]
        P[1:] -= step.reshape(7, 2)
    phi = math.atan2(P[4, 0], P[4, 1])
    c, s = math.cos(phi), math.sin(phi)
    P = P @ np.array([[c, s], [-s, c]])
    P[0] = 0.0
    P[4, 0] = 0.0
    D = np.sqrt(((P[:, None, :] - P[None, :, :]) ** 2).sum(axis=2)).max()
    return P / D


def _start_points(seed: int, index: int, sigma: float) -> np.ndarray:
    rng = np.random.default_rng([seed, index])
    ang = -np.pi / 2 + 2 * np.pi * np.arange(8) / 8
    P = np.c_[0.5 * np.cos(ang), 0.5 + 0.5 * np.sin(ang)]
    P[1:] += rng.normal(0.0, sigma, size=(7, 2))
    return P


def _model_point(P: np.ndarray, k: tuple[int, ...]) -> np.ndarray:
    E = P[_B] - P[_A]
    c = float(np.sqrt(np.sum(E**2, axis=1)).mean())
    w = float(_numerators(P[:, 0], P[:, 1], np.asarray(k)).min() / c)
    return _pack(P, c, w)


@dataclass(frozen=True)
class StartOutcome:
    index: int
    model_width: float
    width: float | None
    violation: float
    z: np.ndarray = field(repr=False)


def _run_start(k: tuple[int, ...], P0: np.ndarray, index: int) -> StartOutcome:
    z = _model_point(P0, k)
    # penalty continuation pulls infeasible starts in; a feasible start skips it
    mus = () if violation(z, k, None) <= FEAS_TOL else (1e2, 1e4)
    for mu in mus:
        z = minimize(
            _penalized, z, args=(k, mu), method="Nelder-Mead",
            options={"maxfev": 1500, "xatol": 1e-9, "fatol": 1e-12},
        ).x
    cons = [
        {"type": "ineq", "fun": lambda v: problem_constraints(v, k, None)[0]},
        {"type": "ineq", "fun": lambda v: problem_constraints(v, k, None)[1]},
        {"type": "ineq", "fun": lambda v: -problem_constraints(v, k, None)[1]},
    ]
    z = minimize(
        lambda v: -v[14], z, method="COBYLA", constraints=cons,
        options={"maxiter": 20000, "rhobeg": 0.01, "tol": 1e-13},
    ).x
    x, y, _, _ = _unpack(z)
    P = repair_octagon(np.c_[x, y])
    zr = _model_point(P, k)
    viol = violation(zr, k, W_MIN)
    width = None
    if viol <= FEAS_TOL:
        try:
            width = height_graph(Polygon("octagon", tuple(map(tuple, P)))).width
        except InvalidPolygonError:
            viol = math.inf
    return StartOutcome(index, float(zr[14]), width, viol, zr)


@dataclass(frozen=True)
class SearchResult:
    """Best point of a multistart search.

    ``best_width`` is the width-engine value of the repaired polygon and is
    only set when that polygon satisfies every constraint within 1e-8.
    ``best_polygon`` is the best feasible polygon, or the start with the
    largest model width when nothing was feasible.  ``relaxed_width`` is the
    largest model width reached over all starts with the lower bound on the
    width dropped.
    """

    best_width: float | None
    best_polygon: Polygon
    feasible: bool
    starts: int
    seed: int
    constraint_violation: float
    relaxed_width: float
    feasible_starts: int


def local_improve(
    config: tuple[int, ...] | ConfigClass | str,
    seed: int = 0,
    starts: int = 100,
    initial: Polygon | None = None,
    sigma: float = 0.03,
) -> SearchResult:
    """Maximize the width of an equilateral small octagon with fixed maximizers.

    Each start perturbs the regular octagon with a stream derived from
    ``(seed, start index)``, so results do not depend on evaluation order.
    ``initial`` replaces the first start.
    """
    k = _resolve_config(config)
    if starts < 1:
        raise ValueError("starts must be positive")
    outcomes = []
    for idx in range(starts):
        P0 = np.array(initial.vertices) if (initial is not None and idx == 0) else _start_points(seed, idx, sigma)
        outcomes.append(_run_start(k, P0, idx))
    feasible = [o for o in outcomes if o.width is not None]
    best = max(feasible, key=lambda o: o.width) if feasible else max(outcomes, key=lambda o: o.model_width)
    x, y, _, _ = _unpack(best.z)
    return SearchResult(
        best_width=best.width,
        best_polygon=Polygon(f"search-{_label(k)}", tuple(zip(x, y))),
        feasible=bool(feasible),
        starts=starts,
        seed=seed,
        constraint_violation=best.violation,
        relaxed_width=max(o.model_width for o in outcomes),
        feasible_starts=len(feasible),
    )


def _resolve_config(config) -> tuple[int, ...]:
    if isinstance(config, str) and not isinstance(config, ConfigClass):
        config = ConfigClass(config)
    if config == ConfigClass.KA:
        return KA
    if config == ConfigClass.KB:
        return KB
    k = tuple(int(v) % 8 for v in config)
    if classify_configuration(k) is ConfigClass.INVALID:
        raise ValueError(f"configuration {k} is neither KA nor KB")
    return k


def _label(k: tuple[int, ...]) -> str:
    return classify_configuration(k).value


def free_coordinates(p: Polygon) -> np.ndarray:
    """(x1..x7, y1..y7) of an octagon."""
    P = p.array()
    return np.r_[P[1:, 0], P[1:, 1]]


def coordinate_distance(p: Polygon, q: Polygon) -> float:
    return float(np.linalg.norm(free_coordinates(p) - free_coordinates(q)))


@dataclass(frozen=True)
class ProbeResult:
    max_width: float
    accepted: int
    attempts: int
    min_distance: float
    argmax: Polygon | None


def epsilon_uniqueness_probe(
    p_star: Polygon, radius: float, samples: int, seed: int = 0
) -> ProbeResult:
    """Largest width among repaired octagons at coordinate distance >= ``radius``.

    Draws a random direction in the 14 free coordinates, steps a length in
    ``[radius, 2 * radius]``, repairs to an equilateral small octagon with
    v4 on the y-axis and keeps the sample only if it is convex, canonical and
    still at least ``radius`` away.  Rejected draws are replaced, up to 50
    attempts per requested sample.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if radius <= 0:
        raise ValueError("radius must be positive")
    rng = np.random.default_rng(seed)
    z_star = free_coordinates(p_star)
    base = p_star.array()
    best, best_poly = -math.inf, None
    accepted = attempts = 0
    dmin = math.inf
    while accepted < samples and attempts < 50 * samples:
        attempts += 1
        g = rng.normal(size=14)
        g *= radius * (1.0 + rng.random()) / np.linalg.norm(g)
        P = base.copy()
        P[1:, 0] += g[:7]
        P[1:, 1] += g[7:]
        P = repair_octagon(P)
        dist = float(np.linalg.norm(np.r_[P[1:, 0], P[1:, 1]] - z_star))
        if dist < radius or P[:, 1].min() < -1e-12:
            continue
        try:
            poly = Polygon("probe", tuple(map(tuple, P)))
            if not is_convex(poly):
                continue
            w = height_graph(poly).width
        except InvalidPolygonError:
            continue
        accepted += 1
        dmin = min(dmin, dist)
        if w > best:
            best, best_poly = w, poly
    return ProbeResult(best, accepted, attempts, dmin, best_poly)
