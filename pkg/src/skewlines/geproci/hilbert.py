"""Hilbert functions and h-vectors of finite point sets in P2 and P3."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from skewlines.algebra.field import Fel
from skewlines.algebra.linalg import Matrix, kernel, rank
from skewlines.errors import IncidenceError, ParameterRangeError
from skewlines.geometry.projective import ProjPoint

Exponent = tuple[int, ...]


@lru_cache(maxsize=256)
def monomials(nvars: int, t: int) -> tuple[Exponent, ...]:
    """Exponent vectors of degree t in nvars variables, lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), t):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return tuple(out)


def evaluate_monomial(exp: Exponent, point: Sequence[Fel]) -> Fel:
    acc = point[0].ctx.one()
    for c, e in zip(point, exp, strict=True):
        if e:
            acc = acc * c**e
    return acc


def evaluation_matrix(points: Sequence[ProjPoint], t: int) -> Matrix:
    """Rows: points. Columns: monomials of degree t."""
    monos = monomials(len(points[0]), t)
    return [[evaluate_monomial(m, p.coords) for m in monos] for p in points]


def _check(points: Sequence[ProjPoint]) -> None:
    if not points:
        raise ParameterRangeError("a point set needs at least one point")
    if len(set(points)) != len(points):
        raise IncidenceError("duplicate points")
    if points[0].dim not in (2, 3):
        raise ParameterRangeError(f"points must lie in P2 or P3, got P{points[0].dim}")


def hilbert_function(points: Sequence[ProjPoint], t: int) -> int:
    """dim of degree-t forms modulo those vanishing on the points."""
    _check(points)
    if t < 0:
        return 0
    return rank(evaluation_matrix(points, t))


def forms_vanishing(points: Sequence[ProjPoint], t: int) -> Matrix:
    """Basis (coefficient vectors over ``monomials``) of degree-t forms through the points."""
    _check(points)
    monos = monomials(len(points[0]), t)
    return kernel(evaluation_matrix(points, t), points[0].ctx, len(monos))


@dataclass(frozen=True)
class HilbertProfile:
    """H(0..D) with D the first degree where H reaches the point count."""

    values: tuple[int, ...]
    h: tuple[int, ...]
    n: int
    count: int

    @property
    def regularity_degree(self) -> int:
        return len(self.values) - 1


def h_vector(points: Sequence[ProjPoint]) -> HilbertProfile:
    _check(points)
    values: list[int] = []
    t = 0
    while not values or values[-1] < len(points):
        values.append(hilbert_function(points, t))
        t += 1
    h = tuple(v - (values[k - 1] if k else 0) for k, v in enumerate(values))
    return HilbertProfile(tuple(values), h, points[0].dim, len(points))


def ci_h_vector(a: int, b: int) -> tuple[int, ...]:
    """h(t) = #{(i, j) : i < a, j < b, i + j = t}."""
    if a < 1 or b < 1:
        raise ParameterRangeError(f"complete intersection degrees must be positive, got {(a, b)}")
    return tuple(
        sum(1 for i in range(a) if 0 <= t - i < b) for t in range(a + b - 1)
    )
