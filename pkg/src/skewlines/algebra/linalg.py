"""Exact linear algebra over a FieldCtx.

Matrices are lists of rows of Fel. Elimination runs on sympy's ``DomainMatrix``
over the sympy domain of the context: ``QQ`` or ``GF(p)`` directly, and a
``FiniteExtension`` of the base domain by the modulus for extension fields.
Only division-based routines (``rref``, ``lu``, ``inv``) are used there, since
``FiniteExtension`` implements exact quotients as polynomial division.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from typing import Any

from sympy import Poly, Symbol
from sympy.polys.agca.extensions import ExtensionElement, FiniteExtension
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.polyclasses import DMP

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.errors import FieldDivisionError, ParameterRangeError

Matrix = list[list[Fel]]

_T = Symbol("t")


def zeros(ctx: FieldCtx, nrows: int, ncols: int) -> Matrix:
    return [[ctx.zero() for _ in range(ncols)] for _ in range(nrows)]


def identity(ctx: FieldCtx, n: int) -> Matrix:
    return [[ctx.one() if i == j else ctx.zero() for j in range(n)] for i in range(n)]


def transpose(mat: Sequence[Sequence[Fel]]) -> Matrix:
    return [list(col) for col in zip(*mat, strict=True)]


def matmul(a: Sequence[Sequence[Fel]], b: Sequence[Sequence[Fel]]) -> Matrix:
    if not a or not b:
        raise ParameterRangeError("empty matrix product")
    cols = transpose(b)
    out = []
    for row in a:
        if len(row) != len(b):
            raise ParameterRangeError("matrix shapes do not match")
        out.append([dot(row, col) for col in cols])
    return out


def matvec(a: Sequence[Sequence[Fel]], v: Sequence[Fel]) -> list[Fel]:
    return [dot(row, v) for row in a]


def dot(u: Sequence[Fel], v: Sequence[Fel]) -> Fel:
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:], strict=True):
        acc = acc + x * y
    return acc


# ── DomainMatrix bridge ──


@lru_cache(maxsize=64)
def matrix_domain(ctx: FieldCtx) -> Any:
    """The sympy domain whose elements stand for the elements of ``ctx``."""
    if ctx.is_base:
        return ctx.domain
    high_to_low = list(reversed(ctx.modulus))
    return FiniteExtension(Poly.new(DMP(high_to_low, ctx.domain, 0), _T))


def to_domain_element(a: Fel) -> Any:
    if a.ctx.is_base:
        return a.rep
    return ExtensionElement(DMP(list(a.rep), a.ctx.domain, 0), matrix_domain(a.ctx))


def from_domain_element(ctx: FieldCtx, c: Any) -> Fel:
    if ctx.is_base:
        return Fel(ctx, c)
    return Fel(ctx, tuple(c.rep.to_list()))


def to_domain_matrix(rows: Sequence[Sequence[Fel]]) -> DomainMatrix:
    ctx = rows[0][0].ctx
    shape = (len(rows), len(rows[0]))
    return DomainMatrix(
        [[to_domain_element(e) for e in row] for row in rows], shape, matrix_domain(ctx)
    )


def from_domain_matrix(dm: DomainMatrix, ctx: FieldCtx) -> Matrix:
    return [[from_domain_element(ctx, c) for c in row] for row in dm.to_list()]


# ── Elimination ──


def row_reduce(rows: Sequence[Sequence[Fel]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and the pivot columns."""
    if not rows:
        return [], []
    ctx = rows[0][0].ctx
    rref, pivots = to_domain_matrix(rows).rref()
    return from_domain_matrix(rref, ctx)[: len(pivots)], list(pivots)


def rank(rows: Sequence[Sequence[Fel]]) -> int:
    if not rows:
        return 0
    return int(to_domain_matrix(rows).rank())


def kernel(rows: Sequence[Sequence[Fel]], ctx: FieldCtx, ncols: int) -> Matrix:
    """Basis of the right kernel: one vector per free column, that column set to 1."""
    if not rows:
        return identity(ctx, ncols)
    rref, pivots = to_domain_matrix(rows).rref()
    return from_domain_matrix(rref.nullspace_from_rref(pivots), ctx)


def determinant(mat: Sequence[Sequence[Fel]]) -> Fel:
    n = len(mat)
    if n == 0 or any(len(r) != n for r in mat):
        raise ParameterRangeError("determinant needs a nonempty square matrix")
    ctx = mat[0][0].ctx
    _, upper, swaps = to_domain_matrix(mat).lu()
    diagonal = upper.to_list()
    det = ctx.one() if len(swaps) % 2 == 0 else -ctx.one()
    for i in range(n):
        det = det * from_domain_element(ctx, diagonal[i][i])
    return det


def solve(mat: Sequence[Sequence[Fel]], rhs: Sequence[Fel]) -> list[Fel] | None:
    """The unique solution of a square system, or None when the matrix is singular."""
    n = len(mat)
    augmented = [[*row, b] for row, b in zip(mat, rhs, strict=True)]
    rref, pivots = row_reduce(augmented)
    if pivots != list(range(n)):
        return None
    return [row[n] for row in rref]


def inverse(mat: Sequence[Sequence[Fel]]) -> Matrix:
    n = len(mat)
    if n == 0 or any(len(r) != n for r in mat):
        raise ParameterRangeError("inverse needs a nonempty square matrix")
    try:
        inv = to_domain_matrix(mat).inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
        raise FieldDivisionError("matrix is singular") from exc
    return from_domain_matrix(inv, mat[0][0].ctx)
