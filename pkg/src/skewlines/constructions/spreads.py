"""The Hopf spread of P3 over GF(q), q odd.

With n the first non-square of GF(q) and alpha^2 = n in GF(q^2), the fiber of
(a:b:c:d) under (a:b:c:d) -> (a + alpha b : c + alpha d) is the line through the point
and its image under (a, b, c, d) -> (n b, a, n d, c).
"""

from __future__ import annotations

import logging

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.config import get_settings
from skewlines.constructions.base import Expected, NamedConfig
from skewlines.errors import ConstructionError, IncidenceError, RootOfUnityUnavailableError
from skewlines.geometry.projective import ProjLine, ProjPoint, line_through, projective_points
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import Entry, PointSet

logger = logging.getLogger(__name__)


def _odd_field(q: int) -> FieldCtx:
    ctx = FieldCtx.galois(q)
    if ctx.characteristic == 2:
        raise ConstructionError(f"Hopf spreads need odd q, got {q}")
    return ctx


def first_nonsquare(ctx: FieldCtx, scan_cap: int | None = None) -> Fel:
    """The first element in canonical order with no square root."""
    q = ctx.order
    if q is None:
        raise ConstructionError(f"{ctx!r} is not finite")
    cap = get_settings().field_scan_cap if scan_cap is None else scan_cap
    for index in range(1, min(q, cap)):
        e = ctx.element_at(index)
        if ctx.sqrt(e) is None:
            return e
    raise RootOfUnityUnavailableError(f"no non-square found in {ctx!r} within {cap}")


def _partner(p: ProjPoint, n: Fel) -> ProjPoint:
    a, b, c, d = p.coords
    return ProjPoint.of([n * b, a, n * d, c], p.ctx)


def _line_points(line: ProjLine) -> list[ProjPoint]:
    ctx = line.ctx
    pts = [line.chart_point(ctx.one(), e) for e in ctx.elements()]
    pts.append(line.chart_point(ctx.zero(), ctx.one()))
    return pts


def hopf_spread(q: int) -> NamedConfig:
    """The q^2 + 1 fibers, in the order their first uncovered point is met."""
    ctx = _odd_field(q)
    n = first_nonsquare(ctx)
    covered: set[ProjPoint] = set()
    lines: list[ProjLine] = []
    entries: list[Entry] = []
    for p in projective_points(ctx):
        if p in covered:
            continue
        fiber = line_through(p, _partner(p, n))
        for x in _line_points(fiber):
            if x in covered:
                raise IncidenceError(f"fibers overlap at {x}")
            covered.add(x)
            entries.append((len(lines), x))
        lines.append(fiber)
    cfg = SkewConfig(tuple(lines))
    logger.info("Hopf spread over GF(%d): %d lines, %d points", q, cfg.s, len(entries))
    return NamedConfig(
        f"hopf-{q}",
        cfg,
        PointSet.of(entries),
        Expected(orbits=1, per_line=q + 1, group_order=q + 1, geproci_type=(q + 1, q * q + 1)),
        {"kind": "hopf", "q": q, "nonsquare": n},
    )


def hopf_map(q: int, point: ProjPoint) -> ProjPoint:
    """(a:b:c:d) -> (a + alpha b : c + alpha d) in P1 over GF(q^2)."""
    ctx = point.ctx
    if ctx.order != q:
        raise ConstructionError(f"point lives over {ctx!r}, expected GF({q})")
    _odd_field(q)
    big, embed, alpha = ctx.quadratic_extension(first_nonsquare(ctx))
    a, b, c, d = (embed(v) for v in point.coords)
    return ProjPoint.of([a + alpha * b, c + alpha * d], big)


def hopf_multiplier_group(q: int) -> list[Fel]:
    """{c / c^q : c in GF(q^2)*}, the norm-one subgroup of order q + 1."""
    J = FieldCtx.galois(q * q)
    out = {c / c**q for c in J.elements() if not c.is_zero}
    return sorted(out, key=lambda e: e.sort_key())
