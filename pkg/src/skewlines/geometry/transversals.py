"""Transversals of four or more skew lines.

Every transversal of L1, L2, L3 is the ruling line of Q123 through some point of L1,
so the question reduces to binary quadratics: for each further line, the form on a
chart whose roots are the ruling lines meeting it.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import determinant, matvec
from skewlines.algebra.polys import BinaryForm, form_gcd, quadratic_form_from_values
from skewlines.config import get_settings
from skewlines.errors import ParameterRangeError
from skewlines.geometry.projective import (
    ProjLine,
    ProjPoint,
    combine,
    line_through,
    meet_lines,
    pencil_map_matrix,
    quadric_through_skew_triple,
    transversal_through,
)

logger = logging.getLogger(__name__)


class TransversalKind(StrEnum):
    TWO = "two"
    ONE_SIMPLE = "one_simple"
    ONE_DOUBLE = "one_double"
    INFINITE = "infinite"
    NONE = "none"


@dataclass(frozen=True)
class TransversalResult:
    """Outcome of a transversal computation.

    ``roots`` are chart parameters (s, t) of the transversal points on the line the
    quadratic lives on (L4 for a quadruple, L1 for a census). When the roots need a
    quadratic extension that was not built, ``lines`` is empty and
    ``needed_extension`` holds (A, B, C) of A s^2 + B s t + C t^2.
    """

    kind: TransversalKind
    ctx: FieldCtx
    lines: tuple[ProjLine, ...] = ()
    roots: tuple[tuple[Fel, Fel], ...] = ()
    needed_extension: tuple[Fel, Fel, Fel] | None = None
    embed: Callable[[Fel], Fel] | None = field(default=None, compare=False)

    @property
    def count(self) -> int | None:
        """Number of distinct transversals; None when infinite."""
        return {
            TransversalKind.TWO: 2,
            TransversalKind.ONE_SIMPLE: 1,
            TransversalKind.ONE_DOUBLE: 1,
            TransversalKind.NONE: 0,
            TransversalKind.INFINITE: None,
        }[self.kind]

    @property
    def abelian(self) -> bool:
        """Two transversals, or one of multiplicity 2, or infinitely many."""
        return self.kind in (
            TransversalKind.TWO,
            TransversalKind.ONE_DOUBLE,
            TransversalKind.INFINITE,
        )


@dataclass(frozen=True)
class QuadraticRoots:
    roots: tuple[tuple[Fel, Fel], ...]
    double: bool
    solvable: bool


def quadratic_roots(A: Fel, B: Fel, C: Fel, *, scan_cap: int | None = None) -> QuadraticRoots:
    """Roots (s:t) of A s^2 + B s t + C t^2 (not identically zero) inside its field."""
    ctx = A.ctx
    one, zero = ctx.one(), ctx.zero()
    if A.is_zero:
        if B.is_zero:
            return QuadraticRoots(((one, zero),), double=True, solvable=True)
        return QuadraticRoots(((one, zero), (-C, B)), double=False, solvable=True)
    disc = B * B - A * C * 4
    if ctx.characteristic == 2:
        if B.is_zero:
            r = ctx.sqrt(C / A)
            assert r is not None
            return QuadraticRoots(((r, one),), double=True, solvable=True)
        # s = (B/A) y turns the equation into y^2 + y = AC/B^2
        c = A * C / (B * B)
        y = _artin_schreier_root(c, scan_cap)
        if y is None:
            return QuadraticRoots((), double=False, solvable=False)
        k = B / A
        return QuadraticRoots(((k * y, one), (k * (y + 1), one)), double=False, solvable=True)
    if disc.is_zero:
        return QuadraticRoots(((-B / (A * 2), one),), double=True, solvable=True)
    r = ctx.sqrt(disc)
    if r is None:
        return QuadraticRoots((), double=False, solvable=False)
    return QuadraticRoots(
        (((-B + r) / (A * 2), one), ((-B - r) / (A * 2), one)), double=False, solvable=True
    )


def _artin_schreier_root(c: Fel, scan_cap: int | None) -> Fel | None:
    ctx = c.ctx
    q = ctx.order
    assert q is not None
    cap = get_settings().field_scan_cap if scan_cap is None else scan_cap
    for n in range(min(q, cap)):
        y = ctx.element_at(n)
        if y * y + y == c:
            return y
    return None


def _extend_for(ctx: FieldCtx, A: Fel, B: Fel, C: Fel) -> tuple[FieldCtx, Callable[[Fel], Fel]]:
    if ctx.characteristic == 2:
        return ctx.extend_degree(2)
    big, embed, _root = ctx.quadratic_extension(B * B - A * C * 4)
    return big, embed


def transversals_of_quadruple(
    L1: ProjLine,
    L2: ProjLine,
    L3: ProjLine,
    L4: ProjLine,
    *,
    auto_extend: bool | None = None,
) -> TransversalResult:
    """Transversals of four pairwise skew lines via Q123 restricted to L4."""
    if auto_extend is None:
        auto_extend = get_settings().auto_extend
    ctx = L1.ctx
    quadric = quadric_through_skew_triple(L1, L2, L3)
    P, Q = L4.points
    A = quadric(P.coords)
    C = quadric(Q.coords)
    B = quadric(combine(ctx.one(), P, ctx.one(), Q)) - A - C
    if A.is_zero and B.is_zero and C.is_zero:
        return TransversalResult(TransversalKind.INFINITE, ctx)
    solved = quadratic_roots(A, B, C)
    if not solved.solvable:
        if not auto_extend:
            logger.info("Transversals of the quadruple need a quadratic extension of %r", ctx)
            return TransversalResult(TransversalKind.TWO, ctx, needed_extension=(A, B, C))
        big, embed = _extend_for(ctx, A, B, C)
        logger.info("Extended %r to %r for the transversals", ctx, big)
        lifted = [line.embed(embed) for line in (L1, L2, L3, L4)]
        result = transversals_of_quadruple(*lifted, auto_extend=False)
        return TransversalResult(
            result.kind, big, result.lines, result.roots, result.needed_extension, embed
        )
    lines = tuple(transversal_through(L4.chart_point(s, t), L1, L2) for s, t in solved.roots)
    if solved.double:
        return TransversalResult(TransversalKind.ONE_DOUBLE, ctx, lines, solved.roots)
    return TransversalResult(TransversalKind.TWO, ctx, lines, solved.roots)


def census_forms(lines: Sequence[ProjLine]) -> list[BinaryForm]:
    """For each Li (i >= 4), the quadratic on L1's chart vanishing where M_x meets Li."""
    L1, L2, L3 = lines[0], lines[1], lines[2]
    ctx = L1.ctx
    f123 = pencil_map_matrix(L1, L2, L3)
    forms = []
    for Li in lines[3:]:
        values = []
        for a, b in ((1, 0), (0, 1), (1, 1)):
            ab = [ctx.coerce(a), ctx.coerce(b)]
            x = L1.chart_vector(*ab)
            s, t = matvec(f123, ab)
            y = L2.chart_vector(s, t)
            values.append(determinant([x, y, list(Li.points[0]), list(Li.points[1])]))
        forms.append(quadratic_form_from_values(*values))
    return forms


def transversal_census(lines: Sequence[ProjLine]) -> TransversalResult:
    """Common transversals of s >= 3 pairwise skew lines, counted without extending."""
    if len(lines) < 3:
        raise ParameterRangeError("a transversal census needs at least three lines")
    ctx = lines[0].ctx
    if len(lines) == 3:
        return TransversalResult(TransversalKind.INFINITE, ctx)
    L1, L2, L3 = lines[0], lines[1], lines[2]
    g = form_gcd(census_forms(lines), ctx)
    if g is None:
        return TransversalResult(TransversalKind.INFINITE, ctx)
    if g.deg == 0:
        return TransversalResult(TransversalKind.NONE, ctx)
    coeffs = list(g.coeffs) + [ctx.zero()] * (3 - len(g.coeffs))
    if g.deg == 1:
        # c0 t + c1 s, with c1 = 0 meaning the root (1:0)
        c0, c1 = coeffs[0], coeffs[1]
        roots: tuple[tuple[Fel, Fel], ...] = (
            ((-c0, ctx.one()),) if not c1.is_zero else ((ctx.one(), ctx.zero()),)
        )
        kind = TransversalKind.ONE_SIMPLE
    else:
        A, B, C = coeffs[2], coeffs[1], coeffs[0]
        double = (B * B - A * C * 4).is_zero
        kind = TransversalKind.ONE_DOUBLE if double else TransversalKind.TWO
        solved = quadratic_roots(A, B, C)
        if not solved.solvable:
            logger.info("Census transversals of %d lines lie outside %r", len(lines), ctx)
            return TransversalResult(kind, ctx, needed_extension=(A, B, C))
        roots = solved.roots
    f123 = pencil_map_matrix(L1, L2, L3)
    found = []
    for s, t in roots:
        x = L1.chart_point(s, t)
        ys, yt = matvec(f123, [s, t])
        found.append(line_through(x, L2.chart_point(ys, yt)))
    return TransversalResult(kind, ctx, tuple(found), tuple(roots))


def transversal_points(T: ProjLine, lines: Sequence[ProjLine]) -> list[ProjPoint]:
    """Where a transversal meets each of the lines, in line order."""
    out = []
    for L in lines:
        p = meet_lines(T, L)
        if p is None:
            raise ParameterRangeError(f"{T} does not meet {L}")
        out.append(p)
    return out
