"""``smallgon`` command line: construct, width, table1, verify, asymptotics."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from decimal import ROUND_HALF_EVEN, Decimal

from . import bounds, verify
from .families import FIXTURE_NAMES, FamilyId, f8, f_family, g_family, regular_width
from .geometry import (
    InvalidPolygonError,
    Polygon,
    PolygonParseError,
    classify,
    diameter,
    height_graph,
    polygon_from_json,
    polygon_to_json,
)
from .solvers import asymptotic_g, gap_series

DEFAULT_SEED = 7
TABLE_NS = (16, 32, 64, 128, 256)
SVG_SCALE = 400
TIKZ_SCALE = 4


def fmt(x: float, places: int = 10) -> str:
    """Fixed-point with round-half-even on the exact binary value."""
    q = Decimal(1).scaleb(-places)
    return str(Decimal(x).quantize(q, rounding=ROUND_HALF_EVEN))


def default_seed() -> int:
    raw = os.environ.get("SMALLGON_SEED")
    return int(raw) if raw not in (None, "") else DEFAULT_SEED


# --- figures --------------------------------------------------------------

def edge_classes(p: Polygon, tol: float = 1e-9) -> dict[str, list[tuple[int, int]]]:
    """Sides, unit-length diagonals and the remaining height-graph edges."""
    n = p.n
    sides = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    dmax, pairs = diameter(p, tol)
    unit = {e for e in pairs if e not in sides} if abs(dmax - 1.0) <= tol else set()
    other = height_graph(p).edges() - sides - unit
    return {"side": sorted(sides), "unit": sorted(unit), "height": sorted(other)}


def to_svg(p: Polygon) -> str:
    P = p.array()
    pad = 0.05
    xmin, ymin = P.min(axis=0) - pad
    xmax, ymax = P.max(axis=0) + pad
    w, h = (xmax - xmin) * SVG_SCALE, (ymax - ymin) * SVG_SCALE

    def pt(k: int) -> tuple[float, float]:
        x, y = P[k]
        return (x - xmin) * SVG_SCALE, (ymax - y) * SVG_SCALE

    styles = {
        "side": 'stroke-dasharray="8,5"',
        "unit": 'stroke-linecap="round"',
        "height": 'stroke-dasharray="2,4"',
    }
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1f}" height="{h:.1f}" '
        f'viewBox="0 0 {w:.1f} {h:.1f}">',
        f"  <title>{p.name}</title>",
    ]
    for cls, edges in edge_classes(p).items():
        for a, b in edges:
            (x1, y1), (x2, y2) = pt(a), pt(b)
            lines.append(
                f'  <line class="{cls}" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                f'stroke="black" stroke-width="1.5" {styles[cls]}/>'
            )
    for k in range(p.n):
        x, y = pt(k)
        lines.append(f'  <circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_tikz(p: Polygon) -> str:
    styles = {"side": "dashed", "unit": "solid", "height": "dotted"}
    out = [f"% {p.name}", f"\\begin{{tikzpicture}}[scale={TIKZ_SCALE}]"]
    for k, (x, y) in enumerate(p.vertices):
        out.append(f"  \\coordinate (v{k}) at ({x:.6f}, {y:.6f});")
    for cls, edges in edge_classes(p).items():
        for a, b in edges:
            out.append(f"  \\draw[{styles[cls]}] (v{a}) -- (v{b});")
    out.append("  \\foreach \\k in {0,...,%d} \\fill (v\\k) circle (0.25pt);" % (p.n - 1))
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


# --- commands -------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> int:
    fam = FamilyId(args.family, n=args.n, m=args.m, name=args.name)
    p = fam.build()
    if args.format == "json":
        text = polygon_to_json(p, {"width": height_graph(p).width}) + "\n"
    elif args.format == "svg":
        text = to_svg(p)
    else:
        text = to_tikz(p)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_width(args: argparse.Namespace) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    p = polygon_from_json(text)
    r = classify(p, args.tol)
    for key in ("width", "diameter", "perimeter", "side_min", "side_max"):
        print(f"{key:<15}{getattr(r, key):.10g}")
    for key in ("is_small", "is_equilateral", "is_convex"):
        print(f"{key:<15}{str(getattr(r, key)).lower()}")
    return 0


def table1_rows() -> list[tuple[int, float, float, float, float, float]]:
    rows = []
    for n in TABLE_NS:
        wr = regular_width(n)
        wf = f_family(n)[0]
        wg = g_family(n)[0]
        ub = bounds.upper_bound_w(n)
        wf_, wg_ = height_graph(wf).width, height_graph(wg).width
        rows.append((n, wr, wf_, wg_, ub, (wg_ - wr) / (ub - wr)))
    return rows


def cmd_table1(args: argparse.Namespace) -> int:
    rows = table1_rows()
    head = ("n", "W(R_n)", "W(F_n)", "W(G_n)", "W_hat_n", "fraction")
    if args.format == "csv":
        print(",".join(head))
        for n, *vals, frac in rows:
            print(",".join([str(n)] + [fmt(v) for v in vals] + [fmt(frac, 4)]))
    else:
        print(f"{head[0]:>4}  " + "  ".join(f"{h:>12}" for h in head[1:5]) + f"  {head[5]:>8}")
        for n, *vals, frac in rows:
            print(f"{n:>4}  " + "  ".join(f"{fmt(v):>12}" for v in vals) + f"  {fmt(frac, 4):>8}")
    return 0


def _line(ok: bool, label: str, detail: str = "") -> str:
    return f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else "")


def suite_bounds(args) -> list[dict]:
    return [
        {"check": c.label, "passed": c.passed, "detail": f"{c.value:.10f} {c.relation} {c.threshold:.10g}"}
        for c in bounds.bound_checks()
    ]


def suite_lemmas(args) -> list[dict]:
    found = set(verify.enumerate_configurations())
    orbits = verify.dihedral_images(verify.KA) | verify.dihedral_images(verify.KB)
    out = [
        {
            "check": "admissible maximizer vectors = orbits of KA and KB",
            "passed": found == orbits,
            "detail": f"{len(found)} found, {len(orbits)} expected",
        }
    ]
    polys = [("F8", f8()[0])] + [(nm, FamilyId("fixture", name=nm).build()) for nm in ("H8", "B8", "F8ref")]
    for label, p in polys:
        rep = verify.check_lemma_pairing(p)
        out.append(
            {
                "check": f"{label} height graph is KB",
                "passed": rep.ok and rep.configuration is verify.ConfigClass.KB,
                "detail": f"k={rep.k} ties={rep.ties}",
            }
        )
    return out


def suite_search(args) -> list[dict]:
    f8_poly = f8()[0]
    kb = verify.local_improve("KB", seed=args.seed, starts=args.starts)
    ka = verify.local_improve("KA", seed=args.seed, starts=args.starts)
    bw = kb.best_width
    dist = verify.coordinate_distance(kb.best_polygon, f8_poly)
    return [
        {
            "check": "KB best width in [0.9537762, 0.953777]",
            "passed": bw is not None and 0.9537762 <= bw <= 0.953777,
            "detail": f"best={bw!r} feasible_starts={kb.feasible_starts}/{kb.starts}",
        },
        {
            "check": "KB optimum within 1.5e-4 of F8",
            "passed": dist < 1.5e-4,
            "detail": f"distance={dist:.3e}",
        },
        {
            "check": "KA has no feasible point with w >= 0.953776",
            "passed": not ka.feasible,
            "detail": f"relaxed best={ka.relaxed_width:.10f} violation={ka.constraint_violation:.3e}",
        },
    ]


def suite_uniqueness(args) -> list[dict]:
    p = f8()[0]
    w_star = height_graph(p).width
    r = verify.epsilon_uniqueness_probe(p, args.radius, args.samples, seed=args.seed)
    return [
        {
            "check": f"no width >= W(F8) at distance >= {args.radius:g}",
            "passed": r.accepted > 0 and r.max_width < w_star,
            "detail": f"max={r.max_width:.10f} accepted={r.accepted}/{r.attempts}",
        }
    ]


SUITES = {
    "bounds": suite_bounds,
    "lemmas": suite_lemmas,
    "search": suite_search,
    "uniqueness": suite_uniqueness,
}


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = {}
    t0 = time.perf_counter()
    for name in names:
        report[name] = SUITES[name](args)
    elapsed = time.perf_counter() - t0
    ok = all(c["passed"] for checks in report.values() for c in checks)
    if args.json:
        print(json.dumps({"seed": args.seed, "passed": ok, "seconds": round(elapsed, 3), "suites": report}, indent=2))
    else:
        for name, checks in report.items():
            print(f"== {name}")
            for c in checks:
                print(_line(c["passed"], c["check"], c["detail"]))
        print(f"{'all checks passed' if ok else 'some checks failed'} (seed {args.seed}, {elapsed:.1f} s)")
    return 0 if ok else 1


def cmd_asymptotics(args: argparse.Namespace) -> int:
    print(f"{'n':>4}  {'W(G_n)':>14}  {'series':>14}  {'n^4 gap G':>10}  {'n^3 gap F':>10}  {'gap/series':>10}")
    for n in args.n or TABLE_NS:
        wg = height_graph(g_family(n)[0]).width
        wf = height_graph(f_family(n)[0]).width
        ub = bounds.upper_bound_w(n)
        s = asymptotic_g(n)
        ub_gap, _ = gap_series(n, "G")
        print(
            f"{n:>4}  {fmt(wg, 12):>14}  {fmt(s.width_series, 12):>14}  "
            f"{n**4 * (ub - wg):>10.6f}  {n**3 * (ub - wf):>10.6f}  {(ub - wg) / ub_gap:>10.6f}"
        )
    print(f"limits: 2pi^4/3 = {2 * math.pi**4 / 3:.6f}, pi^3/2 = {math.pi**3 / 2:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smallgon", description="Widths of small polygons.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a family member")
    c.add_argument("family", choices=["regular", "reuleaux", "f8", "fn", "gn", "fixture"])
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--name", choices=FIXTURE_NAMES)
    c.add_argument("--format", choices=["json", "svg", "tikz"], default="json")
    c.add_argument("--out", "-o", help="output file (default stdout)")
    c.set_defaults(func=cmd_construct)

    w = sub.add_parser("width", help="measure a polygon JSON file")
    w.add_argument("path", help="polygon JSON, or - for stdin")
    w.add_argument("--tol", type=float, default=1e-9)
    w.set_defaults(func=cmd_width)

    t = sub.add_parser("table1", help="recompute the width table for n = 16..256")
    t.add_argument("--format", choices=["text", "csv"], default="text")
    t.set_defaults(func=cmd_table1)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="bounds")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--starts", type=int, default=100)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--radius", type=float, default=1.5e-4)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("asymptotics", help="compare the G_n and F_n gaps with their expansions")
    a.add_argument("--n", type=int, action="append")
    a.set_defaults(func=cmd_asymptotics)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = default_seed()
    try:
        return args.func(args)
    except PolygonParseError as exc:
        print(f"smallgon: parse error: {exc}", file=sys.stderr)
        return 2
    except (InvalidPolygonError, ValueError) as exc:
        print(f"smallgon: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"smallgon: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
