"""Upper bounds on the identity's left side under coordinated s-convexity
of |d^2 f / du dv| (or its q-th power), plus the five-term mean chain.

Three families:

- t1 (first power): kernel moments integrate to 1/((s+1)(s+2)) and the
  bound groups by evaluation point.
- t2 (Holder): kernel mass (p+1)^(-2/p) against q-th power means over each
  quadrant's four evaluation points.
- t3 (power mean): per-quadrant weighted q-means; the printed leading
  constant 2^(2-2/q) is kept verbatim, with the sharper 2^(2/q-2) available
  side by side. At q = 1 the family collapses onto t1 exactly.

Corner and midpoint specializations follow the displayed formulas; each one
equals its family bound evaluated at that point (tested, not assumed).
All left sides use the corrected normalization unless told otherwise.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .domain import (EvalPoint, NormalizationMode, PowerMeanQ,
                     PrefactorMode, Rect, SExponent, make_holder_pair)
from .identity import lemma_lhs
from .quad import (DEEP, QuadConfig, integrate_1d, integrate_2d,
                   holder_kernel_constant, poly1d_integral_exact,
                   poly_integral_exact, power_mean_prefactor)
from .surfaces import (SamplerConfig, Surface, Verdict, certify_coordinated)

__all__ = [
    "TheoremId", "Corner", "BoundReport", "ChainEvaluation", "mixed_abs",
    "t1_rhs", "t2_rhs", "t3_rhs", "t1_report", "t2_report", "t3_report",
    "corner_report", "midpoint_report", "remark_aggregate", "chain_evaluate",
    "BOUND_ABS_TOL", "BOUND_REL_TOL", "CHAIN_TOL",
]

BOUND_ABS_TOL = 1e-10
BOUND_REL_TOL = 1e-12
CHAIN_TOL = 1e-10


class TheoremId(Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    C1_1 = "c1_1"
    C1_2 = "c1_2"
    C1_3 = "c1_3"
    C1_4 = "c1_4"
    C1_MID = "c1_mid"
    C2_1 = "c2_1"
    C2_2 = "c2_2"
    C2_3 = "c2_3"
    C2_4 = "c2_4"
    C2_5 = "c2_5"
    C3_1 = "c3_1"
    C3_2 = "c3_2"
    C3_3 = "c3_3"
    C3_4 = "c3_4"
    C3_5 = "c3_5"
    R_C15 = "r_c15"
    R_METU = "r_metu"
    R_FINAL = "r_final"
    CHAIN = "chain"


class Corner(Enum):
    """Corner where a specialization pins (x, y); canonical order."""

    AC = "ac"
    AD = "ad"
    BC = "bc"
    BD = "bd"

    def point(self, rect: Rect) -> EvalPoint:
        u = rect.a if self.value[0] == "a" else rect.b
        v = rect.c if self.value[1] == "c" else rect.d
        return EvalPoint(u, v)

    def opposite(self, rect: Rect) -> EvalPoint:
        u = rect.b if self.value[0] == "a" else rect.a
        v = rect.d if self.value[1] == "c" else rect.c
        return EvalPoint(u, v)


# displayed part numbers: the (a,c) specialization is part 1, (b,d) part 2,
# (a,d) part 3, (b,c) part 4, for all three families
_CORNER_PART = {Corner.AC: 1, Corner.BD: 2, Corner.AD: 3, Corner.BC: 4}

_CORNER_IDS = {
    (TheoremId.T1, 1): TheoremId.C1_1, (TheoremId.T1, 2): TheoremId.C1_2,
    (TheoremId.T1, 3): TheoremId.C1_3, (TheoremId.T1, 4): TheoremId.C1_4,
    (TheoremId.T2, 1): TheoremId.C2_1, (TheoremId.T2, 2): TheoremId.C2_2,
    (TheoremId.T2, 3): TheoremId.C2_3, (TheoremId.T2, 4): TheoremId.C2_4,
    (TheoremId.T3, 1): TheoremId.C3_1, (TheoremId.T3, 2): TheoremId.C3_2,
    (TheoremId.T3, 3): TheoremId.C3_3, (TheoremId.T3, 4): TheoremId.C3_4,
}

_MID_IDS = {TheoremId.T1: TheoremId.C1_MID, TheoremId.T2: TheoremId.C2_5,
            TheoremId.T3: TheoremId.C3_5}


@dataclass(frozen=True)
class BoundReport:
    theorem_id: TheoremId
    lhs: float
    rhs: float
    margin: float
    holds: bool
    tol: float
    params: dict
    hypothesis_certified: bool | None = None


@dataclass(frozen=True)
class ChainEvaluation:
    e0: float
    e1: float
    e2: float
    e3: float
    e4: float
    monotone: bool
    hypothesis_certified: bool | None = None

    @property
    def values(self) -> tuple[float, float, float, float, float]:
        return (self.e0, self.e1, self.e2, self.e3, self.e4)


def mixed_abs(f: Surface, u: float, v: float) -> float:
    return abs(f.mixed_partial(u, v))


def _finish(tid: TheoremId, lhs: float, rhs: float, params: dict,
            certified: bool | None = None) -> BoundReport:
    tol = BOUND_ABS_TOL + BOUND_REL_TOL * abs(rhs)
    margin = rhs - lhs
    return BoundReport(theorem_id=tid, lhs=lhs, rhs=rhs, margin=margin,
                       holds=margin >= -tol, tol=tol, params=params,
                       hypothesis_certified=certified)


def _params(rect: Rect, pt: EvalPoint | None, s: float, mode: NormalizationMode,
            **extra) -> dict:
    out = {"rect": (rect.a, rect.b, rect.c, rect.d), "s": s, "mode": mode.value}
    if pt is not None:
        out["point"] = (pt.x, pt.y)
    out.update(extra)
    return out


def _quadrant_eval_points(rect: Rect, pt: EvalPoint):
    """Per quadrant: (squared weight product, edge pt, edge pt, corner pt).

    The inner evaluation set of the Holder/power-mean families, canonical
    corner order.
    """
    a, b, c, d = rect.a, rect.b, rect.c, rect.d
    x, y = pt.x, pt.y
    return (
        ((x - a) ** 2 * (y - c) ** 2, (x, c), (a, y), (a, c)),
        ((x - a) ** 2 * (d - y) ** 2, (x, d), (a, y), (a, d)),
        ((b - x) ** 2 * (y - c) ** 2, (x, c), (b, y), (b, c)),
        ((b - x) ** 2 * (d - y) ** 2, (x, d), (b, y), (b, d)),
    )


# ---------------------------------------------------------------------------
# the three point bounds
# ---------------------------------------------------------------------------

def t1_rhs(f: Surface, rect: Rect, pt: EvalPoint, s: float) -> float:
    """First-power bound, grouped by evaluation point."""
    SExponent(s)
    a, b, c, d = rect.a, rect.b, rect.c, rect.d
    x, y = pt.x, pt.y
    wx = (x - a) ** 2 + (b - x) ** 2
    wy = (y - c) ** 2 + (d - y) ** 2
    s1 = s + 1.0
    D = lambda u, v: mixed_abs(f, u, v)
    acc = wx * wy / s1 ** 2 * D(x, y)
    acc += (x - a) ** 2 * wy / s1 * D(a, y)
    acc += (b - x) ** 2 * wy / s1 * D(b, y)
    acc += (y - c) ** 2 * wx / s1 * D(x, c)
    acc += (d - y) ** 2 * wx / s1 * D(x, d)
    acc += (x - a) ** 2 * (y - c) ** 2 * D(a, c)
    acc += (x - a) ** 2 * (d - y) ** 2 * D(a, d)
    acc += (b - x) ** 2 * (y - c) ** 2 * D(b, c)
    acc += (b - x) ** 2 * (d - y) ** 2 * D(b, d)
    return acc / (rect.area * (s + 2.0) ** 2)


def t2_rhs(f: Surface, rect: Rect, pt: EvalPoint, s: float, q: float) -> float:
    """Holder-type bound; q > 1, conjugate p = q/(q-1)."""
    SExponent(s)
    hp = make_holder_pair(q)
    D = lambda u, v: mixed_abs(f, u, v)
    dxy = D(pt.x, pt.y)
    acc = 0.0
    for w2, pe, pv, pc in _quadrant_eval_points(rect, pt):
        if w2 == 0.0:
            continue
        inner = dxy ** q + D(*pe) ** q + D(*pv) ** q + D(*pc) ** q
        acc += w2 / rect.area * inner ** (1.0 / q)
    return acc * holder_kernel_constant(hp.p) / (s + 1.0) ** (2.0 / q)


def t3_rhs(f: Surface, rect: Rect, pt: EvalPoint, s: float, q: float,
           constant_mode: PrefactorMode = PrefactorMode.VERBATIM) -> float:
    """Power-mean bound; q >= 1. At q = 1 it equals t1_rhs exactly."""
    SExponent(s)
    PowerMeanQ(q)
    D = lambda u, v: mixed_abs(f, u, v)
    dxy = D(pt.x, pt.y)
    s1 = s + 1.0
    acc = 0.0
    for w2, pe, pv, pc in _quadrant_eval_points(rect, pt):
        if w2 == 0.0:
            continue
        inner = dxy ** q + s1 * D(*pe) ** q + s1 * D(*pv) ** q + s1 ** 2 * D(*pc) ** q
        acc += w2 / rect.area * inner ** (1.0 / q)
    pref = power_mean_prefactor(q, constant_mode)
    return pref / ((s + 1.0) * (s + 2.0)) ** (2.0 / q) * acc


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _certify_abs_mixed(f: Surface, rect: Rect, s: float, power: float,
                       sampler: SamplerConfig) -> bool:
    g = (lambda u, v: np.abs(f.mixed_partial(u, v)) ** power)
    report = certify_coordinated(g, rect, s, sampler)
    ok = report.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
    if not ok:
        warnings.warn(f"certification found a counterexample for {f.name}: {report.witness}")
    return ok


def t1_report(f: Surface, rect: Rect, pt: EvalPoint, s: float,
              mode: NormalizationMode = NormalizationMode.CORRECTED,
              cfg: QuadConfig = QuadConfig(), certify: bool = False,
              sampler: SamplerConfig = SamplerConfig()) -> BoundReport:
    certified = _certify_abs_mixed(f, rect, s, 1.0, sampler) if certify else None
    lhs = abs(lemma_lhs(f, rect, pt, mode, cfg))
    rhs = t1_rhs(f, rect, pt, s)
    return _finish(TheoremId.T1, lhs, rhs, _params(rect, pt, s, mode), certified)


def t2_report(f: Surface, rect: Rect, pt: EvalPoint, s: float, q: float,
              mode: NormalizationMode = NormalizationMode.CORRECTED,
              cfg: QuadConfig = QuadConfig(), certify: bool = False,
              sampler: SamplerConfig = SamplerConfig()) -> BoundReport:
    certified = _certify_abs_mixed(f, rect, s, q, sampler) if certify else None
    lhs = abs(lemma_lhs(f, rect, pt, mode, cfg))
    rhs = t2_rhs(f, rect, pt, s, q)
    return _finish(TheoremId.T2, lhs, rhs, _params(rect, pt, s, mode, q=q),
                   certified)


def t3_report(f: Surface, rect: Rect, pt: EvalPoint, s: float, q: float,
              constant_mode: PrefactorMode = PrefactorMode.VERBATIM,
              mode: NormalizationMode = NormalizationMode.CORRECTED,
              cfg: QuadConfig = QuadConfig(), certify: bool = False,
              sampler: SamplerConfig = SamplerConfig()) -> BoundReport:
    certified = _certify_abs_mixed(f, rect, s, q, sampler) if certify else None
    lhs = abs(lemma_lhs(f, rect, pt, mode, cfg))
    rhs = t3_rhs(f, rect, pt, s, q, constant_mode)
    return _finish(TheoremId.T3, lhs, rhs,
                   _params(rect, pt, s, mode, q=q, constant=constant_mode.value),
                   certified)


def corner_report(theorem: TheoremId, corner: Corner, f: Surface, rect: Rect,
                  s: float, q: float | None = None,
                  mode: NormalizationMode = NormalizationMode.CORRECTED,
                  constant_mode: PrefactorMode = PrefactorMode.VERBATIM,
                  cfg: QuadConfig = QuadConfig()) -> BoundReport:
    """Corner specialization of a bound family, per the displayed formulas."""
    SExponent(s)
    pt = corner.point(rect)
    opp = corner.opposite(rect)
    lhs = abs(lemma_lhs(f, rect, pt, mode, cfg))
    D = lambda u, v: mixed_abs(f, u, v)
    dc = D(pt.x, pt.y)
    dm1 = D(pt.x, opp.y)       # shares the corner's x
    dm2 = D(opp.x, pt.y)       # shares the corner's y
    do = D(opp.x, opp.y)
    area = rect.area
    s1 = s + 1.0
    extra: dict = {}
    if theorem is TheoremId.T1:
        rhs = area / (s + 2.0) ** 2 * (dc / s1 ** 2 + (dm1 + dm2) / s1 + do)
    elif theorem is TheoremId.T2:
        if q is None:
            raise ValueError("the Holder family needs q")
        hp = make_holder_pair(q)
        csum = sum(D(p.x, p.y) ** q for p in rect.corners())
        rhs = (area * holder_kernel_constant(hp.p) / s1 ** (2.0 / q)
               * csum ** (1.0 / q))
        extra["q"] = q
    elif theorem is TheoremId.T3:
        if q is None:
            raise ValueError("the power-mean family needs q")
        PowerMeanQ(q)
        inner = dc ** q + s1 * (dm1 ** q + dm2 ** q) + s1 ** 2 * do ** q
        rhs = (power_mean_prefactor(q, constant_mode) * area
               / (s1 * (s + 2.0)) ** (2.0 / q) * inner ** (1.0 / q))
        extra["q"] = q
        extra["constant"] = constant_mode.value
    else:
        raise ValueError(f"no corner specialization for {theorem}")
    tid = _CORNER_IDS[(theorem, _CORNER_PART[corner])]
    return _finish(tid, lhs, rhs,
                   _params(rect, pt, s, mode, corner=corner.value, **extra))


def midpoint_report(theorem: TheoremId, f: Surface, rect: Rect, s: float,
                    q: float | None = None,
                    mode: NormalizationMode = NormalizationMode.CORRECTED,
                    constant_mode: PrefactorMode = PrefactorMode.VERBATIM,
                    cfg: QuadConfig = QuadConfig()) -> BoundReport:
    """Midpoint specialization, per the displayed formulas."""
    SExponent(s)
    mid = rect.midpoint()
    lhs = abs(lemma_lhs(f, rect, mid, mode, cfg))
    D = lambda u, v: mixed_abs(f, u, v)
    a, b, c, d = rect.a, rect.b, rect.c, rect.d
    mx, my = mid.x, mid.y
    area = rect.area
    s1 = s + 1.0
    extra: dict = {}
    if theorem is TheoremId.T1:
        corner_sum = sum(D(p.x, p.y) for p in rect.corners())
        rhs = area / (4.0 * (s + 2.0) ** 2) * (
            D(mx, my) / s1 ** 2
            + (D(a, my) + D(b, my)) / (2.0 * s1)
            + (D(mx, c) + D(mx, d)) / (2.0 * s1)
            + corner_sum / 4.0)
    elif theorem is TheoremId.T2:
        if q is None:
            raise ValueError("the Holder family needs q")
        hp = make_holder_pair(q)
        dm = D(mx, my)
        quads = (((mx, c), (a, my), (a, c)), ((mx, d), (a, my), (a, d)),
                 ((mx, c), (b, my), (b, c)), ((mx, d), (b, my), (b, d)))
        total = sum((dm ** q + D(*pe) ** q + D(*pv) ** q + D(*pc) ** q) ** (1.0 / q)
                    for pe, pv, pc in quads)
        rhs = area / 16.0 * holder_kernel_constant(hp.p) / s1 ** (2.0 / q) * total
        extra["q"] = q
    elif theorem is TheoremId.T3:
        if q is None:
            raise ValueError("the power-mean family needs q")
        PowerMeanQ(q)
        dm = D(mx, my)
        quads = (((mx, c), (a, my), (a, c)), ((mx, d), (a, my), (a, d)),
                 ((mx, c), (b, my), (b, c)), ((mx, d), (b, my), (b, d)))
        total = sum((dm ** q + s1 * D(*pe) ** q + s1 * D(*pv) ** q
                     + s1 ** 2 * D(*pc) ** q) ** (1.0 / q)
                    for pe, pv, pc in quads)
        rhs = (power_mean_prefactor(q, constant_mode) * area / 16.0
               / (s1 * (s + 2.0)) ** (2.0 / q) * total)
        extra["q"] = q
        extra["constant"] = constant_mode.value
    else:
        raise ValueError(f"no midpoint specialization for {theorem}")
    return _finish(_MID_IDS[theorem], lhs, rhs, _params(rect, mid, s, mode, **extra))


def remark_aggregate(remark: TheoremId, f: Surface, rect: Rect, s: float,
                     q: float | None = None,
                     cfg: QuadConfig = QuadConfig()) -> BoundReport:
    """Summed corner inequalities (un-normalized: each corner value x area).

    The right side of each aggregate equals the sum of the four corner
    right sides times the area; that equivalence is a test, not an input.
    """
    SExponent(s)
    area = rect.area
    lhs = sum(area * abs(lemma_lhs(f, rect, p, NormalizationMode.CORRECTED, cfg))
              for p in rect.corners())
    D = lambda u, v: mixed_abs(f, u, v)
    corner_vals = [D(p.x, p.y) for p in rect.corners()]
    s1 = s + 1.0
    extra: dict = {}
    if remark is TheoremId.R_C15:
        rhs = area ** 2 / s1 ** 2 * sum(corner_vals)
    elif remark is TheoremId.R_METU:
        if q is None:
            raise ValueError("the Holder aggregate needs q")
        hp = make_holder_pair(q)
        rhs = (4.0 * area ** 2 * holder_kernel_constant(hp.p) / s1 ** (2.0 / q)
               * sum(val ** q for val in corner_vals) ** (1.0 / q))
        extra["q"] = q
    elif remark is TheoremId.R_FINAL:
        if q is None:
            raise ValueError("the power-mean aggregate needs q")
        PowerMeanQ(q)
        dac, dad, dbc, dbd = corner_vals
        inners = (
            dac ** q + s1 * (dad ** q + dbc ** q) + s1 ** 2 * dbd ** q,
            dbd ** q + s1 * (dbc ** q + dad ** q) + s1 ** 2 * dac ** q,
            dad ** q + s1 * (dac ** q + dbd ** q) + s1 ** 2 * dbc ** q,
            dbc ** q + s1 * (dbd ** q + dac ** q) + s1 ** 2 * dad ** q,
        )
        rhs = (4.0 * area ** 2 / (2.0 * s1 * (s + 2.0)) ** (2.0 / q)
               * sum(val ** (1.0 / q) for val in inners))
        extra["q"] = q
    else:
        raise ValueError(f"not an aggregate id: {remark}")
    return _finish(remark, lhs, rhs, _params(rect, None, s, NormalizationMode.CORRECTED, **extra))


# ---------------------------------------------------------------------------
# the five-term chain
# ---------------------------------------------------------------------------

def _mean_1d(f: Surface, fixed: str, coord: float, lo: float, hi: float,
             cfg: QuadConfig) -> float:
    """Mean of a section f(., coord) or f(coord, .) over [lo, hi]."""
    if f.poly is not None:
        from fractions import Fraction
        coeffs = (f.poly.restrict_v(Fraction(coord)) if fixed == "v"
                  else f.poly.restrict_u(Fraction(coord)))
        return float(poly1d_integral_exact(coeffs, Fraction(lo), Fraction(hi))
                     / (Fraction(hi) - Fraction(lo)))
    if fixed == "v":
        g = lambda u: f.fn(u, np.full_like(np.asarray(u, float), coord))
    else:
        g = lambda v: f.fn(np.full_like(np.asarray(v, float), coord), v)
    return integrate_1d(g, lo, hi, cfg).value / (hi - lo)


def chain_evaluate(f: Surface, rect: Rect, s: float,
                   cfg: QuadConfig = DEEP, certify: bool = False,
                   sampler: SamplerConfig = SamplerConfig()) -> ChainEvaluation:
    """The five-term chain of means.

    e0: scaled midpoint value. e1: scaled mid-section means. e2: area mean.
    e3: edge-mean combination. e4: corner sum over (s+1)^2. Monotone means
    e0 <= e1 <= e2 <= e3 <= e4 up to 1e-10.

    The default quadrature config subdivides deeply: the chain is used with
    surfaces like u^s v^s whose boundary sections have endpoint
    singularities, and several chain links are exact equalities for them.
    """
    SExponent(s)
    certified = None
    if certify:
        report = certify_coordinated(f.fn, rect, s, sampler)
        certified = report.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
        if not certified:
            warnings.warn(f"chain hypothesis failed for {f.name}: {report.witness}")
    a, b, c, d = rect.a, rect.b, rect.c, rect.d
    mid = rect.midpoint()
    e0 = 4.0 ** (s - 1.0) * f(mid.x, mid.y)
    e1 = 2.0 ** (s - 2.0) * (_mean_1d(f, "v", mid.y, a, b, cfg)
                             + _mean_1d(f, "u", mid.x, c, d, cfg))
    if f.poly is not None:
        e2 = float(poly_integral_exact(f.poly, rect)) / rect.area
    else:
        e2 = integrate_2d(f.fn, rect, cfg).value / rect.area
    e3 = (1.0 / (2.0 * (s + 1.0))) * (
        _mean_1d(f, "v", c, a, b, cfg) + _mean_1d(f, "v", d, a, b, cfg)
        + _mean_1d(f, "u", a, c, d, cfg) + _mean_1d(f, "u", b, c, d, cfg))
    e4 = sum(f(p.x, p.y) for p in rect.corners()) / (s + 1.0) ** 2
    vals = (e0, e1, e2, e3, e4)
    monotone = all(vals[i + 1] - vals[i] >= -CHAIN_TOL for i in range(4))
    return ChainEvaluation(e0, e1, e2, e3, e4, monotone, certified)
