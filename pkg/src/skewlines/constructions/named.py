"""Named configurations: D4, F4, H4 and the 80-point Penrose orbit.

Line lists are fixed data. F4 and H4 orbits are grown from the seed (1:0:0:-1) on
the line {y, z}; the Penrose seed is the first point with coordinates in
{0} and the sixth roots of unity whose orbit closes at exactly 80 points.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import StrEnum
from itertools import product
from typing import Any

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.roots import cyclotomic_field, primitive_root_of_unity
from skewlines.constructions.base import Expected, NamedConfig
from skewlines.errors import ConstructionError, SkewlinesError
from skewlines.geometry.projective import ProjLine, ProjPoint
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import Entry, PointSet, orbit

logger = logging.getLogger(__name__)

PENROSE_ORBIT_SIZE = 80


class NamedLabel(StrEnum):
    D4 = "D4"
    F4 = "F4"
    H4 = "H4"
    PENROSE80 = "Penrose80"


def _root_in(m: int, ctx: FieldCtx) -> Fel:
    try:
        u = primitive_root_of_unity(m, ctx)
    except SkewlinesError as e:
        raise ConstructionError(f"{ctx!r} holds no primitive {m}-th root of unity") from e
    if u.ctx != ctx:
        raise ConstructionError(f"{ctx!r} holds no primitive {m}-th root of unity")
    return u


def _line(h1: Sequence[Any], h2: Sequence[Any], ctx: FieldCtx) -> ProjLine:
    return ProjLine.from_forms(h1, h2, ctx)


# ── D4 ──


D4_POINTS: tuple[tuple[int, tuple[int, int, int, int]], ...] = (
    (0, (0, 1, 1, 1)),
    (0, (0, 0, 1, 0)),
    (0, (0, 1, 0, 1)),
    (1, (0, 1, 0, 0)),
    (1, (1, 0, 0, 1)),
    (1, (1, 1, 0, 1)),
    (2, (0, 0, 1, 1)),
    (2, (1, 0, 1, 1)),
    (2, (1, 0, 0, 0)),
    (3, (0, 0, 0, 1)),
    (3, (1, 1, 1, 1)),
    (3, (1, 1, 1, 2)),
)


def d4(ctx: FieldCtx | None = None) -> NamedConfig:
    """Three lines of a cube perspective plus its main diagonal, 3 points on each."""
    ctx = FieldCtx.rationals() if ctx is None else ctx
    lines = (
        _line([1, 0, 0, 0], [0, 1, 0, -1], ctx),
        _line([0, 0, 1, 0], [1, 0, 0, -1], ctx),
        _line([0, 1, 0, 0], [0, 0, 1, -1], ctx),
        _line([1, -1, 0, 0], [0, 1, -1, 0], ctx),
    )
    entries = [(i, ProjPoint.of(coords, ctx)) for i, coords in D4_POINTS]
    return NamedConfig(
        NamedLabel.D4,
        SkewConfig(lines),
        PointSet.of(entries),
        Expected(orbits=1, per_line=3, group_order=3, geproci_type=(3, 4)),
        {"kind": "named"},
    )


# ── F4 and H4 ──


def _paired_family(
    label: NamedLabel, m: int, ctx: FieldCtx, eta: Fel, per_line: int
) -> NamedConfig:
    """L_j, l1, L'_j, l2 for j < m; the two families are indices 0..m and m+1..2m+1."""
    eps = _root_in(m, ctx)
    one, zero = ctx.one(), ctx.zero()
    powers = [eps**j for j in range(m)]
    first = [_line([e, -one, zero, zero], [zero, zero, e, -one], ctx) for e in powers]
    first.append(_line([0, 1, 0, 0], [0, 0, 1, 0], ctx))
    second = [_line([e * eta, -one, zero, zero], [zero, zero, e, -eta], ctx) for e in powers]
    second.append(_line([1, 0, 0, 0], [0, 0, 0, 1], ctx))
    cfg = SkewConfig((*first, *second))
    l1, l2 = m, 2 * m + 1
    seeds: dict[str, Entry] = {
        "p1": (l1, ProjPoint.of([1, 0, 0, -1], ctx)),
        "p2": (l1, ProjPoint.of([1, 0, 0, 1], ctx)),
        "q1": (l2, ProjPoint.of([0, 1, -1, 0], ctx)),
        "q2": (l2, ProjPoint.of([0, 1, 1, 0], ctx)),
    }
    Z = orbit(cfg, seeds["p1"])
    if Z is None:
        raise ConstructionError(f"{label} orbit exceeds the orbit cap over {ctx!r}")
    logger.info("%s orbit over %r has %d points", label, ctx, len(Z))
    return NamedConfig(
        label,
        cfg,
        Z,
        Expected(orbits=1, per_line=per_line, group_order=per_line, geproci_type=(per_line, cfg.s)),
        {
            "kind": "named",
            "families": (tuple(range(m + 1)), tuple(range(m + 1, 2 * m + 2))),
            "seeds": seeds,
        },
    )


def f4(ctx: FieldCtx | None = None) -> NamedConfig:
    ctx = cyclotomic_field(3) if ctx is None else ctx
    eps = _root_in(3, ctx)
    return _paired_family(NamedLabel.F4, 3, ctx, eps**2 + eps - 1, per_line=6)


def h4(ctx: FieldCtx | None = None) -> NamedConfig:
    ctx = cyclotomic_field(5) if ctx is None else ctx
    eps = _root_in(5, ctx)
    return _paired_family(NamedLabel.H4, 5, ctx, eps**4 + eps - 1, per_line=10)


def subfamily_orbits(named: NamedConfig) -> dict[str, tuple[SkewConfig, PointSet]]:
    """Orbits of p1, p2 under the first family and of q1, q2 under the second."""
    families = named.params.get("families")
    seeds = named.params.get("seeds")
    if families is None or seeds is None:
        raise ConstructionError(f"{named.label} has no line families")
    out: dict[str, tuple[SkewConfig, PointSet]] = {}
    for name, (index, point) in sorted(seeds.items()):
        family = next(f for f in families if index in f)
        sub = named.cfg.restrict(family)
        found = orbit(sub, (family.index(index), point))
        if found is None:
            raise ConstructionError(f"orbit of {name} exceeds the orbit cap")
        out[name] = (sub, found)
    return out


# ── Penrose ──


def _penrose_lines(ctx: FieldCtx, e: Fel) -> tuple[ProjLine, ...]:
    e2 = e * e
    one = ctx.one()
    rows: list[tuple[list[Any], list[Any]]] = [
        ([0, 0, 0, 1], [0, 1, e2, 0]),
        ([0, 1, 1, -e2], [1, 0, -e2, -e2]),
        ([1, 0, 0, 0], [0, 1, -e2, 0]),
        ([0, 1, -e, -one], [1, 0, -e2, -one]),
        ([0, 1, -e, -e2], [1, 0, -1, -1]),
        ([0, 0, 1, 0], [1, 0, 0, e]),
        ([0, 1, -e, e], [1, 0, e, -one]),
        ([0, 1, 0, 0], [1, 0, 0, -e]),
        ([0, 1, 1, e], [1, 0, -1, -e2]),
        ([0, 1, 1, -1], [1, 0, e, -e2]),
    ]
    return tuple(_line(h1, h2, ctx) for h1, h2 in rows)


def _penrose_candidates(cfg: SkewConfig, e: Fel) -> list[Entry]:
    ctx = cfg.ctx
    values = [ctx.zero(), *(e**k for k in range(6))]
    found: dict[Entry, None] = {}
    for coords in product(values, repeat=4):
        if all(c.is_zero for c in coords):
            continue
        p = ProjPoint.of(coords, ctx)
        for i, line in enumerate(cfg.lines):
            if line.contains(p):
                found.setdefault((i, p), None)
    return list(found)


def penrose80(ctx: FieldCtx | None = None, seed: Entry | None = None) -> NamedConfig:
    """Ten lines covering the Penrose configuration; the orbit of ``seed`` or a scanned one."""
    ctx = cyclotomic_field(6) if ctx is None else ctx
    e = _root_in(6, ctx)
    cfg = SkewConfig(_penrose_lines(ctx, e))
    candidates = [seed] if seed is not None else _penrose_candidates(cfg, e)
    for entry in candidates:
        Z = orbit(cfg, entry, cap=PENROSE_ORBIT_SIZE)
        if Z is not None and len(Z) == PENROSE_ORBIT_SIZE:
            logger.info("Penrose orbit seeded at %s on line %d", entry[1], entry[0])
            return NamedConfig(
                NamedLabel.PENROSE80,
                cfg,
                Z,
                Expected(orbits=1, per_line=8, geproci_type=(8, 10)),
                {"kind": "named", "families": (tuple(range(5)), tuple(range(5, 10))), "seed": entry},
            )
    raise ConstructionError(f"no seed with an orbit of {PENROSE_ORBIT_SIZE} points over {ctx!r}")


def named_example(label: NamedLabel | str, ctx: FieldCtx | None = None) -> NamedConfig:
    label = NamedLabel(label)
    builders = {
        NamedLabel.D4: d4,
        NamedLabel.F4: f4,
        NamedLabel.H4: h4,
        NamedLabel.PENROSE80: penrose80,
    }
    return builders[label](ctx)
