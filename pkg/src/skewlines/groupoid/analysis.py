"""Structure of the group G of a skew configuration.

The transversal census decides the shape first: infinitely many transversals give
the trivial group, two give a multiplicative group of eigenvalue ratios, one of
multiplicity 2 gives a group of translations. Everything else is enumerated by
closure from the generators of G_0.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from math import lcm

from skewlines.algebra.field import Fel
from skewlines.algebra.linalg import rank
from skewlines.algebra.roots import multiplicative_order
from skewlines.config import get_settings
from skewlines.errors import ParameterRangeError, SkewlinesError
from skewlines.geometry.projective import ProjPoint, cross_ratio, meet_lines
from skewlines.geometry.transversals import (
    TransversalKind,
    TransversalResult,
    quadratic_roots,
)
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.maps import GMap, element_order, generators_of_Gi

logger = logging.getLogger(__name__)


class GroupStatus(StrEnum):
    TRIVIAL = "trivial"
    ABELIAN_MULTIPLICATIVE = "abelian-multiplicative"
    ABELIAN_ADDITIVE = "abelian-additive"
    NONABELIAN_FINITE = "nonabelian-finite"
    NONABELIAN_CAPPED = "nonabelian-capped"
    INFINITE = "infinite"


@dataclass(frozen=True)
class GroupDescription:
    status: GroupStatus
    transversals: TransversalResult
    order: int | None = None
    generators: tuple[Fel, ...] = ()
    elements: tuple[GMap, ...] = ()
    lower_bound: int | None = None
    witness: GMap | None = None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def is_abelian(self) -> bool:
        return self.status in (
            GroupStatus.TRIVIAL,
            GroupStatus.ABELIAN_MULTIPLICATIVE,
            GroupStatus.ABELIAN_ADDITIVE,
        )

    @property
    def transversal_count(self) -> int | None:
        return self.transversals.count

    @property
    def multiplicity_two(self) -> bool:
        return self.transversals.kind is TransversalKind.ONE_DOUBLE


def group_analysis(
    cfg: SkewConfig,
    cap: int | None = None,
    *,
    char0_threshold: int | None = None,
) -> GroupDescription:
    settings = get_settings()
    cap = settings.closure_cap if cap is None else cap
    if cap < 1:
        raise ParameterRangeError(f"closure cap must be positive, got {cap}")
    threshold = settings.char0_closure_threshold if char0_threshold is None else char0_threshold
    census = cfg.census
    if census.kind is TransversalKind.INFINITE:
        return GroupDescription(GroupStatus.TRIVIAL, census, order=1)
    gens = generators_of_Gi(cfg, 0)
    if census.kind is TransversalKind.TWO:
        description = _multiplicative(cfg, census, gens)
    elif census.kind is TransversalKind.ONE_DOUBLE:
        description = _additive(cfg, census, gens)
    else:
        description = _closure(cfg, census, gens, cap, threshold)
    logger.info(
        "Group of %d lines: %s, order %s", cfg.s, description.status, description.order
    )
    return description


def _multiplicative(
    cfg: SkewConfig, census: TransversalResult, gens: list[GMap]
) -> GroupDescription:
    order = 1
    witness = None
    for g in gens:
        n = element_order(g)
        if n is None:
            witness = g
            break
        order = lcm(order, n)
    multipliers = _multipliers(census, gens)
    return GroupDescription(
        GroupStatus.ABELIAN_MULTIPLICATIVE,
        census,
        order=None if witness else order,
        generators=multipliers,
        witness=witness,
    )


def _multipliers(census: TransversalResult, gens: list[GMap]) -> tuple[Fel, ...]:
    """Eigenvalue ratios e1/e2 at the two transversal points of L_0, excluding 1."""
    ctx = census.ctx
    embed: Callable[[Fel], Fel] = _same
    roots = census.roots
    if not roots:
        if census.needed_extension is None:
            return ()
        A, B, C = census.needed_extension
        try:
            if ctx.is_finite:
                big, embed = ctx.extend_degree(2)
            else:
                big, embed, _ = ctx.quadratic_extension(B * B - A * C * 4)
        except SkewlinesError as e:
            logger.debug("No quadratic extension of %r for the multipliers: %s", ctx, e)
            return ()
        solved = quadratic_roots(embed(A), embed(B), embed(C))
        if not solved.solvable:
            return ()
        roots = solved.roots
        ctx = big
    r1, r2 = roots
    out: set[Fel] = set()
    for g in gens:
        lifted = g.embed(embed)
        e1, e2 = _eigenvalue(lifted, r1), _eigenvalue(lifted, r2)
        ratio = e1 / e2
        if not ratio.is_one:
            out.add(ratio)
    return tuple(sorted(out, key=lambda a: a.sort_key()))


def _same(a: Fel) -> Fel:
    return a


def _eigenvalue(g: GMap, v: tuple[Fel, Fel]) -> Fel:
    s, t = g.apply(*v)
    return s / v[0] if not v[0].is_zero else t / v[1]


def _additive(cfg: SkewConfig, census: TransversalResult, gens: list[GMap]) -> GroupDescription:
    ctx = cfg.ctx
    [(vs, vt)] = census.roots
    if vs.is_zero:
        v = (ctx.zero(), ctx.one())
    else:
        v = (ctx.one(), vt / vs)
    w = (ctx.one(), ctx.zero()) if not v[1].is_zero else (ctx.zero(), ctx.one())
    amounts: list[Fel] = []
    for g in gens:
        lam = _eigenvalue(g, v)
        ws, wt = g.apply(*w)
        ws, wt = ws / lam, wt / lam
        # M w = alpha v + beta w in the basis (v, w)
        det = v[0] * w[1] - v[1] * w[0]
        alpha = (ws * w[1] - wt * w[0]) / det
        beta = (v[0] * wt - v[1] * ws) / det
        amount = alpha / beta
        if not amount.is_zero:
            amounts.append(amount)
    distinct = tuple(sorted(set(amounts), key=lambda a: a.sort_key()))
    if not ctx.is_finite:
        if distinct:
            witness = next(g for g in gens if not g.is_scalar)
            return GroupDescription(
                GroupStatus.ABELIAN_ADDITIVE, census, order=None, generators=distinct,
                witness=witness,
            )
        return GroupDescription(GroupStatus.ABELIAN_ADDITIVE, census, order=1)
    p = ctx.characteristic
    prime = ctx.prime_subfield
    rows = [[prime.from_int(int(c)) for c in a.coeffs()] for a in distinct]
    dim = rank(rows) if rows else 0
    return GroupDescription(
        GroupStatus.ABELIAN_ADDITIVE, census, order=p**dim, generators=distinct
    )


def _closure(
    cfg: SkewConfig,
    census: TransversalResult,
    gens: list[GMap],
    cap: int,
    threshold: int,
) -> GroupDescription:
    identity = GMap.identity(cfg, 0)
    elements: dict[GMap, GMap] = {identity: identity}
    queue = deque([identity])
    for g in gens:
        if element_order(g) is None:
            return GroupDescription(GroupStatus.INFINITE, census, witness=g)
    char0 = not cfg.ctx.is_finite
    while queue:
        current = queue.popleft()
        for g in gens:
            new = g @ current
            if new in elements:
                continue
            if element_order(new) is None:
                logger.info("Closure found an element of infinite order")
                return GroupDescription(GroupStatus.INFINITE, census, witness=new)
            elements[new] = new
            queue.append(new)
            if char0 and len(elements) == threshold + 1 and not _cyclic_or_dihedral(gens):
                logger.info("Closure passed %d elements, not cyclic or dihedral", threshold)
                return GroupDescription(
                    GroupStatus.INFINITE, census, lower_bound=len(elements), witness=new
                )
            if len(elements) > cap:
                logger.warning("Closure exceeded cap %d", cap)
                return GroupDescription(
                    GroupStatus.NONABELIAN_CAPPED, census, lower_bound=len(elements)
                )
    ordered = tuple(sorted(elements, key=_map_key))
    return GroupDescription(
        GroupStatus.NONABELIAN_FINITE, census, order=len(ordered), elements=ordered
    )


def _map_key(g: GMap) -> tuple[object, ...]:
    return tuple(e.sort_key() for row in g.mat for e in row)


def _commute(a: GMap, b: GMap) -> bool:
    return a @ b == b @ a


def _cyclic_or_dihedral(gens: list[GMap]) -> bool:
    """Whether the generators fit inside one cyclic or dihedral subgroup of PGL2."""
    live = [g for g in gens if not g.is_scalar]
    if all(_commute(a, b) for a in live for b in live):
        return True
    rotations = [g for g in live if element_order(g) != 2]
    if not rotations:
        # only involutions: dihedral exactly when they share a rotation axis pairwise
        r0 = next((a @ b for a in live for b in live if not (a @ b).is_scalar), None)
        if r0 is None:
            return True
    else:
        r0 = rotations[0]
    r0_inv = r0.inverse()
    for g in live:
        if element_order(g) == 2:
            if not (_commute(g, r0) or g @ r0 @ g.inverse() == r0_inv):
                return False
        elif not _commute(g, r0):
            return False
    return True


def cross_ratio_ratio_generators(cfg: SkewConfig) -> tuple[Fel, ...]:
    """Ratios chi_{i,j,0,k}(T1) / chi_{i,j,0,k}(T2) over distinct nonzero i, j, k.

    Needs two transversals defined over the configuration's field.
    """
    census = cfg.census
    if census.kind is not TransversalKind.TWO or len(census.lines) != 2:
        raise ParameterRangeError("cross-ratio generators need two transversals over the field")
    points: list[list[ProjPoint]] = []
    for T in census.lines:
        row = []
        for line in cfg.lines:
            q = meet_lines(T, line)
            if q is None:
                raise ParameterRangeError("transversal misses a line")
            row.append(q)
        points.append(row)
    out: set[Fel] = set()
    for i in range(1, cfg.s):
        for j in range(1, cfg.s):
            for k in range(1, cfg.s):
                if len({i, j, k}) != 3:
                    continue
                chi = [
                    cross_ratio([row[i], row[j], row[0], row[k]], T)
                    for row, T in zip(points, census.lines, strict=True)
                ]
                ratio = chi[0] / chi[1]
                if not ratio.is_one:
                    out.add(ratio)
    return tuple(sorted(out, key=lambda a: a.sort_key()))


def group_order_of_multipliers(multipliers: tuple[Fel, ...]) -> int | None:
    """lcm of the multiplicative orders; None when some multiplier has infinite order."""
    order = 1
    for a in multipliers:
        n = multiplicative_order(a)
        if n is None:
            return None
        order = lcm(order, n)
    return order
