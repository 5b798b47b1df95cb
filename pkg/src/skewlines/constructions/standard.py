"""Standard position, the standard constructions and grids on xz - yw.

Every construction here returns a ``NamedConfig`` whose point set is a single orbit
(grids: one orbit per horizontal line) together with the values it is known to have.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from itertools import product
from typing import Any

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.roots import primitive_root_of_unity
from skewlines.constructions.base import Expected, NamedConfig
from skewlines.errors import ConstructionError, ParameterRangeError
from skewlines.geometry.projective import ProjLine, ProjPoint
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import Entry, PointSet

logger = logging.getLogger(__name__)


# ── Standard position ──


@dataclass(frozen=True)
class StandardFrame:
    """L1, L2, L3 in standard position with their transversals T1 and T2."""

    ctx: FieldCtx
    L1: ProjLine
    L2: ProjLine
    L3: ProjLine
    T1: ProjLine
    T2: ProjLine

    @classmethod
    def over(cls, ctx: FieldCtx) -> StandardFrame:
        return cls(
            ctx,
            L1=ProjLine.from_forms([0, 1, 0, 0], [0, 0, 1, 0], ctx),
            L2=ProjLine.from_forms([1, -1, 0, 0], [0, 0, 1, -1], ctx),
            L3=ProjLine.from_forms([1, 0, 0, 0], [0, 0, 0, 1], ctx),
            T1=ProjLine.from_forms([1, 0, 0, 0], [0, 1, 0, 0], ctx),
            T2=ProjLine.from_forms([0, 0, 1, 0], [0, 0, 0, 1], ctx),
        )

    def config(self, *extra: ProjLine) -> SkewConfig:
        return SkewConfig((self.L1, self.L2, self.L3, *extra))


def l4_from_lt(frame: StandardFrame, t: Fel | int, l: Fel | int) -> ProjLine:
    """The line z = t w, x = l y, meeting T1 at (0:0:t:1) and T2 at (l:1:0:0)."""
    ctx = frame.ctx
    t, l = ctx.coerce(t), ctx.coerce(l)
    if t.is_zero or t.is_one:
        raise ParameterRangeError(f"t must avoid 0 and 1, got {t}")
    if l.is_zero or l.is_one:
        raise ParameterRangeError(f"l must avoid 0 and 1, got {l}")
    if (l * t).is_one:
        raise ParameterRangeError(f"lt = 1 puts L4 on the quadric of L1, L2, L3 (t={t}, l={l})")
    return ProjLine.from_forms([0, 0, ctx.one(), -t], [ctx.one(), -l, 0, 0], ctx)


def lt_from_roots(alpha: Fel, beta: Fel) -> tuple[Fel, Fel]:
    """(t, l) whose configuration has multipliers generated by alpha and beta."""
    if alpha.is_one or beta.is_one:
        raise ParameterRangeError("alpha and beta must differ from 1")
    ab = alpha * beta
    if ab.is_zero:
        raise ParameterRangeError("alpha and beta must be nonzero")
    if ab.is_one:
        raise ParameterRangeError(f"alpha * beta = 1 gives lt = 1 (alpha={alpha}, beta={beta})")
    t = (ab - 1) / (ab - alpha)
    return t, (t * alpha).inverse()


def l4_from_roots(frame: StandardFrame, alpha: Fel, beta: Fel) -> ProjLine:
    t, l = lt_from_roots(frame.ctx.coerce(alpha), frame.ctx.coerce(beta))
    return l4_from_lt(frame, t, l)


# ── Standard constructions ──


class MultVariant(StrEnum):
    Z0 = "Z0"
    ZINF = "Zinf"
    Z0INF = "Z0inf"


def standard_construction_mult(
    m: int, ctx: FieldCtx, variant: MultVariant | str = MultVariant.Z0
) -> NamedConfig:
    """m points on each of V_0..V_{m-1} plus lambda_0 and/or lambda_inf.

    The result lives over the field holding a primitive m-th root of unity u, which
    may be an extension of ``ctx``.
    """
    variant = MultVariant(variant)
    if m < 3:
        raise ParameterRangeError(f"the standard construction needs m >= 3, got {m}")
    u = primitive_root_of_unity(m, ctx)
    work = u.ctx
    if variant is MultVariant.Z0INF and m % 2 and work.characteristic != 2:
        raise ConstructionError(f"Z0inf needs (-1)^m = 1, false for m={m} over {work!r}")
    one, zero = work.one(), work.zero()
    powers = [u**i for i in range(m)]
    lines = [
        ProjLine.from_forms([ui, -one, zero, zero], [zero, zero, -one, ui], work) for ui in powers
    ]
    entries: list[Entry] = [
        (i, ProjPoint.of([one, powers[i], powers[(i + j) % m], powers[j]], work))
        for i, j in product(range(m), repeat=2)
    ]
    params: dict[str, Any] = {"kind": "mult", "m": m, "u": u, "variant": variant}
    if variant in (MultVariant.Z0, MultVariant.Z0INF):
        params["lambda0"] = len(lines)
        lines.append(ProjLine.from_forms([1, 0, 0, 0], [0, 0, 1, 0], work))
        entries.extend((len(lines) - 1, ProjPoint.of([zero, one, zero, -ui], work)) for ui in powers)
    if variant in (MultVariant.ZINF, MultVariant.Z0INF):
        params["lambda_inf"] = len(lines)
        lines.append(ProjLine.from_forms([0, 1, 0, 0], [0, 0, 0, 1], work))
        entries.extend((len(lines) - 1, ProjPoint.of([one, zero, -ui, zero], work)) for ui in powers)
    cfg = SkewConfig(tuple(lines))
    logger.info("Standard construction %s for m=%d over %r: %d lines", variant, m, work, cfg.s)
    return NamedConfig(
        f"std-mult-{variant}-{m}",
        cfg,
        PointSet.of(entries),
        Expected(orbits=1, per_line=m, group_order=m, geproci_type=(m, cfg.s)),
        params,
    )


def additive_span(basis: Sequence[Fel]) -> list[Fel]:
    """All GF(p)-combinations of ``basis``, in a fixed order."""
    if not basis:
        raise ParameterRangeError("an additive span needs at least one vector")
    ctx = basis[0].ctx
    p = ctx.characteristic
    if not p:
        raise ConstructionError("finite additive subgroups need positive characteristic")
    out: dict[Fel, None] = {}
    for digits in product(range(p), repeat=len(basis)):
        acc = ctx.zero()
        for d, v in zip(digits, basis, strict=True):
            acc = acc + v * d
        out.setdefault(acc, None)
    return list(out)


def _check_subgroup(A: Sequence[Fel]) -> None:
    members = set(A)
    if len(members) != len(A):
        raise ConstructionError("the subgroup lists an element twice")
    if len(A) < 3:
        raise ConstructionError(f"|A| = {len(A)} < 3 gives a grid, not a half grid")
    ctx = A[0].ctx
    if not ctx.characteristic:
        raise ConstructionError("a finite additive subgroup needs positive characteristic")
    if ctx.zero() not in members:
        raise ConstructionError("A must contain 0")
    for a in A:
        for b in A:
            if a + b not in members:
                raise ConstructionError(f"A is not closed under addition: {a} + {b}")


def standard_construction_add(A: Sequence[Fel]) -> NamedConfig:
    """|A| points on each V_i (i in A) and on lambda = {w, x - z}."""
    _check_subgroup(A)
    ctx = A[0].ctx
    one, zero = ctx.one(), ctx.zero()
    lines = [ProjLine.from_forms([i, -one, zero, zero], [zero, zero, -one, i], ctx) for i in A]
    entries: list[Entry] = [
        (n, ProjPoint.of([j, i * j, i, one], ctx)) for n, i in enumerate(A) for j in A
    ]
    lines.append(ProjLine.from_forms([0, 0, 0, 1], [1, 0, -1, 0], ctx))
    entries.extend((len(A), ProjPoint.of([one, i, one, zero], ctx)) for i in A)
    cfg = SkewConfig(tuple(lines))
    n = len(A)
    logger.info("Additive construction of order %d over %r", n, ctx)
    return NamedConfig(
        f"std-add-{n}",
        cfg,
        PointSet.of(entries),
        Expected(orbits=1, per_line=n, group_order=n, geproci_type=(n, n + 1)),
        {"kind": "add", "A": tuple(A), "lambda": len(A)},
    )


# ── Cone identities ──


def _product(values: Sequence[Fel], ctx: FieldCtx) -> Fel:
    acc = ctx.one()
    for v in values:
        acc = acc * v
    return acc


def cone_identity_check(named: NamedConfig, rng: random.Random) -> bool:
    """Evaluate the cone pencil F, G from a random vertex at the extra-line points.

    Multiplicative: F - G (F + G when (-1)^m = -1) vanishes on Z along lambda_0 and
    F - G along lambda_inf. Additive: F - G vanishes at every (1:i:1:0).
    """
    kind = named.params.get("kind")
    if kind not in ("mult", "add"):
        raise ParameterRangeError(f"{named.label} is not a standard construction")
    ctx = named.cfg.ctx
    a, b, c, d = (ctx.random_element(rng) for _ in range(4))
    if kind == "mult":
        u, m = named.params["u"], named.params["m"]
        powers = [u**i for i in range(m)]

        def F(X: ProjPoint) -> Fel:
            return _product(
                [(r * d - c) * (r * X[0] - X[1]) - (r * a - b) * (r * X[3] - X[2]) for r in powers],
                ctx,
            )

        def G(X: ProjPoint) -> Fel:
            return _product(
                [(r * b - c) * (r * X[0] - X[3]) - (r * a - d) * (r * X[1] - X[2]) for r in powers],
                ctx,
            )

        sign = 1 if m % 2 == 0 or ctx.characteristic == 2 else -1
        checks: list[tuple[int | None, int]] = [
            (named.params.get("lambda0"), sign),
            (named.params.get("lambda_inf"), 1),
        ]
    else:
        A = named.params["A"]

        def F(X: ProjPoint) -> Fel:
            return _product(
                [(c - i * d) * (i * X[0] - X[1]) - (i * a - b) * (X[2] - i * X[3]) for i in A],
                ctx,
            )

        def G(X: ProjPoint) -> Fel:
            return _product(
                [(b - j * c) * (X[0] - j * X[3]) - (a - j * d) * (X[1] - j * X[2]) for j in A],
                ctx,
            )

        checks = [(named.params["lambda"], 1)]
    for index, sign in checks:
        if index is None:
            continue
        for X in named.Z.slice(index):
            value = F(X) - G(X) if sign == 1 else F(X) + G(X)
            if not value.is_zero:
                logger.warning("Cone identity fails at %s (vertex %s:%s:%s:%s)", X, a, b, c, d)
                return False
    return True


# ── Grids ──


def _ruling_parameters(ctx: FieldCtx, n: int) -> list[Fel | None]:
    """n distinct ruling parameters: field elements in canonical order, then infinity."""
    q = ctx.order
    if q is None:
        return [ctx.from_int(k) for k in range(n)]
    if n > q + 1:
        raise ConstructionError(f"a ruling over {ctx!r} has only {q + 1} lines, asked for {n}")
    params: list[Fel | None] = [ctx.element_at(k) for k in range(min(n, q))]
    if n == q + 1:
        params.append(None)
    return params


def _vertical(u: Fel | None, ctx: FieldCtx) -> ProjLine:
    if u is None:
        return ProjLine.from_forms([1, 0, 0, 0], [0, 0, 0, 1], ctx)
    return ProjLine.from_forms([u, -ctx.one(), 0, 0], [0, 0, -ctx.one(), u], ctx)


def _grid_point(u: Fel | None, v: Fel | None, ctx: FieldCtx) -> ProjPoint:
    """V_u meets H_v, where H_v = {v x - w, v y - z} and H_inf = {x, y}."""
    one, zero = ctx.one(), ctx.zero()
    if u is None and v is None:
        return ProjPoint.of([zero, zero, one, zero], ctx)
    if u is None:
        return ProjPoint.of([zero, one, v, zero], ctx)
    if v is None:
        return ProjPoint.of([zero, zero, u, one], ctx)
    return ProjPoint.of([one, u, u * v, v], ctx)


def grid_config(
    a: int,
    b: int,
    ctx: FieldCtx,
    u_params: Sequence[Fel | None] | None = None,
    v_params: Sequence[Fel | None] | None = None,
) -> NamedConfig:
    """b ruling lines of xz - yw, each carrying its a points with a lines of the other ruling.

    A parameter of None stands for the ruling line at infinity.
    """
    if a < 1:
        raise ParameterRangeError(f"a grid needs a >= 1, got {a}")
    if b < 3:
        raise ParameterRangeError(f"a grid configuration needs b >= 3 lines, got {b}")
    us = list(u_params) if u_params is not None else _ruling_parameters(ctx, b)
    vs = list(v_params) if v_params is not None else _ruling_parameters(ctx, a)
    if len(us) != b or len(vs) != a:
        raise ParameterRangeError("ruling parameter counts must match a and b")
    if len(set(us)) != b or len(set(vs)) != a:
        raise ConstructionError("ruling parameters must be distinct")
    cfg = SkewConfig(tuple(_vertical(u, ctx) for u in us))
    entries = [(n, _grid_point(u, v, ctx)) for n, u in enumerate(us) for v in vs]
    return NamedConfig(
        f"grid-{a}x{b}",
        cfg,
        PointSet.of(entries),
        Expected(orbits=a, per_line=a, group_order=1, geproci_type=(a, b)),
        {"kind": "grid", "u": tuple(us), "v": tuple(vs)},
    )
