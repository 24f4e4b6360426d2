import math

import pytest

from smallgon.bounds import (
    bingane_lower_bound,
    bound_checks,
    octagon_side_bounds,
    perimeter_width_bound,
    tightened_bounds,
    upper_bound_w,
)
from smallgon.families import f8, f_family, g_family, regular, reuleaux_regular
from smallgon.geometry import perimeter, side_lengths, width

PI = math.pi
L_H8 = 3.0956093174


@pytest.mark.parametrize("n, expected", [(16, 0.9951847267), (256, 0.9999811753), (3, math.cos(PI / 6))])
def test_upper_bound_w(n, expected):
    assert upper_bound_w(n) == pytest.approx(expected, abs=1e-10)


def test_upper_bound_w_rejects_small_n():
    with pytest.raises(ValueError):
        upper_bound_w(2)


def test_perimeter_width_bound_h8():
    assert 0.9726 < perimeter_width_bound(L_H8, 8) < 0.9727


def test_perimeter_width_bound_r8_dominates():
    L = 4 * math.sqrt(2 - math.sqrt(2))
    assert L == pytest.approx(perimeter(regular(8)), abs=1e-14)
    assert perimeter_width_bound(L, 8) >= width(regular(8))


def test_perimeter_width_bound_equality_scale():
    assert perimeter_width_bound(16 * math.tan(PI / 16), 8) == pytest.approx(1.0, abs=1e-15)


def test_perimeter_width_bound_errors():
    with pytest.raises(ValueError):
        perimeter_width_bound(0.0, 8)
    with pytest.raises(ValueError):
        perimeter_width_bound(1.0, 2)


@pytest.mark.parametrize(
    "p",
    [regular(8), regular(9), reuleaux_regular(3, 6), reuleaux_regular(5, 10), f8()[0],
     f_family(16)[0], g_family(16)[0], g_family(32)[0]],
    ids=lambda p: p.name,
)
def test_perimeter_width_bound_holds_for_constructions(p):
    assert perimeter_width_bound(perimeter(p), p.n) >= width(p) - 1e-12


def test_octagon_side_bounds():
    lo, hi = octagon_side_bounds()
    assert hi == pytest.approx(L_H8 / 8, abs=1e-15)
    assert hi == pytest.approx(0.38695116, abs=1e-8)
    assert lo == pytest.approx(2 * 0.9537763006 * math.tan(PI / 16), abs=1e-10)
    assert lo > 0.3794
    c = side_lengths(f8()[0])[0]
    assert lo < c < hi


def test_tightened_bounds_published():
    b = tightened_bounds()
    assert b.c_lower_tight > 0.3844
    assert b.w_upper_tight < 0.9564
    assert b.w_lower == width(f8()[0])
    assert b.c_lower_tight <= side_lengths(f8()[0])[0] <= b.c_upper


def test_tightened_diagonal_value():
    # the printed threshold is 0.9644; the expression itself evaluates to 0.96444
    b = tightened_bounds()
    c, w = L_H8 / 8, width(f8()[0])
    oracle = (c * c + 2 * c) / math.sqrt(1 + c * c - 2 * c * math.sqrt(1 - w * w))
    assert b.diag_upper == pytest.approx(oracle, abs=1e-15)
    assert b.diag_upper == pytest.approx(0.9644443, abs=1e-7)
    assert b.diag_upper < 0.9645


def test_bound_checks_only_diagonal_fails():
    failed = [c.label for c in bound_checks() if not c.passed]
    assert failed == ["tight diagonal upper"]


@pytest.mark.parametrize("n", [16, 32, 64, 128, 256])
def test_bingane_ordering(n):
    lb = bingane_lower_bound(n)
    ub = upper_bound_w(n)
    assert lb < ub
    assert width(g_family(n)[0]) < ub
    assert lb > width(g_family(n)[0])


def test_bingane_gap_order_n16():
    gap = upper_bound_w(16) - bingane_lower_bound(16)
    assert gap <= PI**5 / (4 * 16**5) * 1.1


def test_bingane_gap_order_n32():
    gap = upper_bound_w(32) - bingane_lower_bound(32)
    assert gap * 32**5 == pytest.approx(PI**5 / 4, rel=0.1)


def test_bingane_gap_ratio_tends_to_one():
    ratios = [(upper_bound_w(n) - bingane_lower_bound(n)) * n**5 / (PI**5 / 4) for n in (16, 32, 64, 128)]
    assert all(a > b > 1 for a, b in zip(ratios, ratios[1:]))


@pytest.mark.parametrize("bad", [8, 24, 0])
def test_bingane_rejects_bad_n(bad):
    with pytest.raises(ValueError):
        bingane_lower_bound(bad)
