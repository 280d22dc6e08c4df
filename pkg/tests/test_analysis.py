import math

import numpy as np
import pytest

from hadamard_rect.analysis import (GapSurface, RefinedMin, compare_families,
                                    refine_argmin, scan_gap, sweep_s)
from hadamard_rect.bounds import TheoremId
from hadamard_rect.domain import EvalPoint, PrefactorMode, Rect
from hadamard_rect.surfaces import catalog_lookup, parse_surface

WIDE = Rect(0.0, 2.0, 0.0, 1.0)
UV = catalog_lookup("uv")


def test_scan_grid_shape_and_order():
    surf = scan_gap(TheoremId.T1, UV, WIDE, 1.0, grid_n=2)
    assert isinstance(surf, GapSurface)
    assert surf.grid_shape == (3, 3)
    assert surf.grid.shape == (9, 5)
    # y is the outer loop: the first three rows share y = 0
    assert list(surf.grid[:3, 1]) == [0.0, 0.0, 0.0]
    assert list(surf.grid[:3, 0]) == [0.0, 1.0, 2.0]


def test_scan_bilinear_attains_zero_margin_at_corners():
    surf = scan_gap(TheoremId.T1, UV, WIDE, 1.0, grid_n=8)
    assert surf.min_margin == pytest.approx(0.0, abs=1e-13)
    # four corner ties; argmin carries the coordinates of the first one
    # in scan order, which is (a, c)
    assert surf.argmin == (WIDE.a, WIDE.c)
    assert not surf.errors


def test_scan_known_values_on_coarse_grid():
    surf = scan_gap(TheoremId.T1, UV, WIDE, 1.0, grid_n=2)
    by_xy = {(row[0], row[1]): row for row in surf.grid}
    corner = by_xy[(0.0, 0.0)]
    assert corner[2] == pytest.approx(0.5)      # lhs
    assert corner[3] == pytest.approx(0.5)      # rhs
    center = by_xy[(1.0, 0.5)]
    assert center[2] == pytest.approx(0.0)
    assert center[3] == pytest.approx(0.125)


def test_scan_is_deterministic():
    one = scan_gap(TheoremId.T2, UV, WIDE, 0.5, q=2.0, grid_n=4)
    two = scan_gap(TheoremId.T2, UV, WIDE, 0.5, q=2.0, grid_n=4)
    assert np.array_equal(one.grid, two.grid)
    assert one.argmin == two.argmin


def test_scan_survives_cell_failures():
    # mixed partial of u^1.5 v^1.5 blows up nowhere, but u^0.5's does at 0;
    # cells on the singular edges record errors instead of aborting
    f = parse_surface("u^0.5*v^0.5")
    surf = scan_gap(TheoremId.T1, f, Rect(0.0, 1.0, 0.0, 1.0), 0.5, grid_n=2)
    assert surf.errors
    bad = {(ix, iy) for ix, iy, _ in surf.errors}
    assert (0, 0) in bad
    finite = surf.grid[~np.isnan(surf.grid[:, 4])]
    assert len(finite) + len(surf.errors) == 9


def test_scan_rejects_empty_grid():
    with pytest.raises(ValueError):
        scan_gap(TheoremId.T1, UV, WIDE, 1.0, grid_n=0)


def test_refine_descends_from_lattice_minimum():
    coarse = scan_gap(TheoremId.T1, UV, WIDE, 0.5, grid_n=4)
    ref = refine_argmin(TheoremId.T1, UV, WIDE, 0.5, coarse.argmin)
    assert isinstance(ref, RefinedMin)
    assert ref.margin <= coarse.min_margin + 1e-15
    assert WIDE.contains(EvalPoint(ref.x, ref.y))


def test_refine_stays_inside_from_boundary_start():
    ref = refine_argmin(TheoremId.T1, UV, WIDE, 1.0, (0.0, 0.0))
    assert WIDE.contains(EvalPoint(ref.x, ref.y))
    assert ref.margin <= 1e-13


def test_sweep_reports_one_row_per_s_and_trend():
    res = sweep_s(TheoremId.T1, UV, WIDE, EvalPoint(1.0, 0.5),
                  [0.25, 0.5, 0.75, 1.0])
    assert len(res.reports) == 4
    assert all(r.holds for r in res.reports)
    # rhs = area-scaled 1/(4(s+1)^2) shrinks as s rises
    assert res.rhs_trend == "decreasing"
    rhs = [r.rhs for r in res.reports]
    assert rhs == sorted(rhs, reverse=True)


def test_sweep_requires_q_for_holder_family():
    with pytest.raises(ValueError, match="needs q"):
        sweep_s(TheoremId.T2, UV, WIDE, EvalPoint(1.0, 0.5), [0.5])


def test_compare_families_shares_lhs():
    reps = compare_families(catalog_lookup("u2v2"), WIDE, EvalPoint(0.5, 0.25),
                            0.5, 2.0)
    assert len(reps) == 4
    assert {r.theorem_id for r in reps} == {TheoremId.T1, TheoremId.T2, TheoremId.T3}
    lhs = {r.lhs for r in reps}
    assert len(lhs) == 1
    assert all(r.holds for r in reps)
    t3s = [r for r in reps if r.theorem_id is TheoremId.T3]
    assert {r.params["constant"] for r in t3s} == {"verbatim", "sharpened"}
