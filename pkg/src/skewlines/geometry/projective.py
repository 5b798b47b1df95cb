"""Points, lines, planes and quadrics of P3 with exact coordinates.

Every line keeps two spanning points (its P1 chart: the first maps to (1:0), the
second to (0:1)) together with the reduced echelon form of the two linear forms
cutting it out. Equality of lines compares the forms, never the chart.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Any

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import determinant, kernel, rank, row_reduce
from skewlines.errors import DegenerateQuadricError, IncidenceError, ParameterRangeError

logger = logging.getLogger(__name__)

VARIABLES = ("x", "y", "z", "w")
# x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2
QUADRIC_MONOMIALS: tuple[tuple[int, int], ...] = tuple(combinations_with_replacement(range(4), 2))


def _normalize(values: Sequence[Fel]) -> tuple[Fel, ...]:
    lead = next((v for v in values if not v.is_zero), None)
    if lead is None:
        raise IncidenceError("the zero vector is not a projective point")
    inv = lead.inverse()
    return tuple(v * inv for v in values)


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^n, scaled so the first nonzero coordinate is 1."""

    coords: tuple[Fel, ...]

    @classmethod
    def of(cls, values: Sequence[Any], ctx: FieldCtx | None = None) -> ProjPoint:
        if ctx is None:
            ctx = next(v.ctx for v in values if isinstance(v, Fel))
        return cls(_normalize([ctx.coerce(v) for v in values]))

    @property
    def ctx(self) -> FieldCtx:
        return self.coords[0].ctx

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self) -> Iterator[Fel]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fel:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def map(self, embed: Callable[[Fel], Fel]) -> ProjPoint:
        return ProjPoint(tuple(embed(c) for c in self.coords))

    def sort_key(self) -> tuple[Any, ...]:
        return tuple(c.sort_key() for c in self.coords)

    def encode(self) -> list[Any]:
        return [self.ctx.encode_element(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def combine(s: Fel, p: Sequence[Fel], t: Fel, q: Sequence[Fel]) -> list[Fel]:
    """The vector s*p + t*q."""
    return [s * a + t * b for a, b in zip(p, q, strict=True)]


def linear_value(form: Sequence[Fel], point: Sequence[Fel]) -> Fel:
    acc = form[0] * point[0]
    for a, b in zip(form[1:], point[1:], strict=True):
        acc = acc + a * b
    return acc


@dataclass(frozen=True, eq=False)
class ProjLine:
    """A line of P3: chart points plus the reduced forms vanishing on it."""

    points: tuple[ProjPoint, ProjPoint]
    forms: tuple[tuple[Fel, ...], tuple[Fel, ...]]

    @classmethod
    def from_points(cls, p: ProjPoint, q: ProjPoint) -> ProjLine:
        return line_through(p, q)

    @classmethod
    def from_forms(cls, h1: Sequence[Any], h2: Sequence[Any], ctx: FieldCtx) -> ProjLine:
        rows = [[ctx.coerce(c) for c in h1], [ctx.coerce(c) for c in h2]]
        rref, _ = row_reduce(rows)
        if len(rref) != 2:
            raise IncidenceError("line forms must be linearly independent")
        basis = kernel(rref, ctx, 4)
        p, q = (ProjPoint(_normalize(v)) for v in basis)
        return cls((p, q), (tuple(rref[0]), tuple(rref[1])))

    @property
    def ctx(self) -> FieldCtx:
        return self.points[0].ctx

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjLine) and self.forms == other.forms

    def __hash__(self) -> int:
        return hash(self.forms)

    def contains(self, p: ProjPoint) -> bool:
        return all(linear_value(h, p.coords).is_zero for h in self.forms)

    def chart_point(self, s: Fel | int, t: Fel | int) -> ProjPoint:
        ctx = self.ctx
        P, Q = self.points
        return ProjPoint(_normalize(combine(ctx.coerce(s), P, ctx.coerce(t), Q)))

    def chart_vector(self, s: Fel, t: Fel) -> list[Fel]:
        return combine(s, self.points[0], t, self.points[1])

    def chart_coords(self, p: ProjPoint) -> tuple[Fel, Fel]:
        """(s, t) with p = s*P + t*Q exactly, for the chart points P, Q."""
        if not self.contains(p):
            raise IncidenceError(f"{p} is not on the line")
        P, Q = self.points
        for i in range(4):
            for j in range(i + 1, 4):
                det = P[i] * Q[j] - P[j] * Q[i]
                if not det.is_zero:
                    s = (p[i] * Q[j] - p[j] * Q[i]) / det
                    t = (P[i] * p[j] - P[j] * p[i]) / det
                    return s, t
        raise IncidenceError("chart points are dependent")

    def embed(self, embed: Callable[[Fel], Fel]) -> ProjLine:
        return line_through(self.points[0].map(embed), self.points[1].map(embed))

    def encode(self) -> dict[str, Any]:
        ctx = self.ctx
        return {
            "points": [p.encode() for p in self.points],
            "forms": [[ctx.encode_element(c) for c in h] for h in self.forms],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(_linear_str(h) for h in self.forms) + "}"

    __repr__ = __str__


def _linear_str(form: Sequence[Fel]) -> str:
    terms = []
    for c, v in zip(form, VARIABLES, strict=True):
        if c.is_zero:
            continue
        terms.append(v if c.is_one else f"{c}*{v}")
    return " + ".join(terms)


@dataclass(frozen=True)
class Plane:
    """A plane of P3, form scaled so its first nonzero coefficient is 1."""

    form: tuple[Fel, ...]

    @classmethod
    def of(cls, values: Sequence[Any], ctx: FieldCtx) -> Plane:
        return cls(_normalize([ctx.coerce(v) for v in values]))

    def __call__(self, p: Sequence[Fel]) -> Fel:
        return linear_value(self.form, p)

    def contains(self, p: ProjPoint) -> bool:
        return self(p.coords).is_zero


@dataclass(frozen=True)
class Quadric:
    """A quadric surface by its 10 coefficients in lex order x^2, xy, ..., w^2."""

    coeffs: tuple[Fel, ...]

    @classmethod
    def of(cls, values: Sequence[Any], ctx: FieldCtx) -> Quadric:
        if len(values) != len(QUADRIC_MONOMIALS):
            raise ParameterRangeError("a quadric has 10 coefficients")
        return cls(_normalize([ctx.coerce(v) for v in values]))

    @property
    def ctx(self) -> FieldCtx:
        return self.coeffs[0].ctx

    def __call__(self, p: Sequence[Fel]) -> Fel:
        acc = self.ctx.zero()
        for c, (i, j) in zip(self.coeffs, QUADRIC_MONOMIALS, strict=True):
            if not c.is_zero:
                acc = acc + c * p[i] * p[j]
        return acc

    def polar_matrix(self) -> list[list[Fel]]:
        """Matrix of B(u, v) = Q(u + v) - Q(u) - Q(v)."""
        ctx = self.ctx
        mat = [[ctx.zero() for _ in range(4)] for _ in range(4)]
        for c, (i, j) in zip(self.coeffs, QUADRIC_MONOMIALS, strict=True):
            if i == j:
                mat[i][i] = c * 2
            else:
                mat[i][j] = c
                mat[j][i] = c
        return mat

    @property
    def is_smooth(self) -> bool:
        """Nonsingular polar form.

        In characteristic 2 the polar form is alternating; over a perfect field its
        radical is nonzero exactly when the quadric has a singular point.
        """
        return not determinant(self.polar_matrix()).is_zero

    def contains_line(self, line: ProjLine) -> bool:
        P, Q = line.points
        ctx = self.ctx
        return all(
            self(combine(ctx.coerce(s), P, ctx.coerce(t), Q)).is_zero
            for s, t in ((1, 0), (0, 1), (1, 1))
        )

    def __str__(self) -> str:
        terms = []
        for c, (i, j) in zip(self.coeffs, QUADRIC_MONOMIALS, strict=True):
            if c.is_zero:
                continue
            mono = VARIABLES[i] + VARIABLES[j] if i != j else VARIABLES[i] + "^2"
            terms.append(mono if c.is_one else f"{c}*{mono}")
        return " + ".join(terms)


# ── Incidence ──


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p.dim != 3 or q.dim != 3:
        raise ParameterRangeError("lines live in P3")
    if p == q:
        raise IncidenceError(f"coincident points {p}")
    ctx = p.ctx
    forms = kernel([list(p.coords), list(q.coords)], ctx, 4)
    rref, _ = row_reduce(forms)
    return ProjLine((p, q), (tuple(rref[0]), tuple(rref[1])))


def plane_span(p: ProjPoint, line: ProjLine) -> Plane:
    ctx = p.ctx
    rows = [list(p.coords), list(line.points[0].coords), list(line.points[1].coords)]
    basis = kernel(rows, ctx, 4)
    if len(basis) != 1:
        raise IncidenceError(f"{p} lies on {line}")
    return Plane(_normalize(basis[0]))


def meet_line_plane(line: ProjLine, plane: Plane) -> ProjPoint:
    P, Q = line.points
    hp, hq = plane(P.coords), plane(Q.coords)
    if hp.is_zero and hq.is_zero:
        raise IncidenceError(f"{line} lies in the plane")
    return ProjPoint(_normalize(combine(hq, P, -hp, Q)))


def are_skew(L: ProjLine, M: ProjLine) -> bool:
    rows = [list(pt.coords) for pt in (*L.points, *M.points)]
    return not determinant(rows).is_zero


def meet_lines(L: ProjLine, M: ProjLine) -> ProjPoint | None:
    """The common point of two distinct lines, or None when they are skew."""
    if L == M:
        raise IncidenceError("a line does not meet itself in a point")
    basis = kernel([list(h) for h in (*L.forms, *M.forms)], L.ctx, 4)
    if not basis:
        return None
    return ProjPoint(_normalize(basis[0]))


def pencil_map_matrix(Li: ProjLine, Lj: ProjLine, Lk: ProjLine) -> list[list[Fel]]:
    """Chart matrix of Li -> Lj sending x to where the plane through x and Lk meets Lj.

    The plane through x and Lk is h2(x) h1 - h1(x) h2 for the forms h1, h2 of Lk.
    """
    h1, h2 = Lk.forms
    Pi, Qi = Li.points
    Pj, Qj = Lj.points

    def v(h: Sequence[Fel], p: ProjPoint) -> Fel:
        return linear_value(h, p.coords)

    s_a = v(h2, Pi) * v(h1, Qj) - v(h1, Pi) * v(h2, Qj)
    s_b = v(h2, Qi) * v(h1, Qj) - v(h1, Qi) * v(h2, Qj)
    t_a = v(h1, Pi) * v(h2, Pj) - v(h2, Pi) * v(h1, Pj)
    t_b = v(h1, Qi) * v(h2, Pj) - v(h2, Qi) * v(h1, Pj)
    return [[s_a, s_b], [t_a, t_b]]


# ── Quadrics and transversals ──


def quadric_through_skew_triple(L1: ProjLine, L2: ProjLine, L3: ProjLine) -> Quadric:
    ctx = L1.ctx
    rows = []
    for line in (L1, L2, L3):
        for s, t in ((1, 0), (0, 1), (1, 1)):
            pt = line.chart_vector(ctx.coerce(s), ctx.coerce(t))
            rows.append([pt[i] * pt[j] for i, j in QUADRIC_MONOMIALS])
    basis = kernel(rows, ctx, len(QUADRIC_MONOMIALS))
    if len(basis) != 1:
        raise DegenerateQuadricError(f"{len(basis)}-dimensional space of quadrics; lines not skew")
    quadric = Quadric(_normalize(basis[0]))
    if not quadric.is_smooth:
        raise DegenerateQuadricError(f"quadric {quadric} through the lines is singular")
    return quadric


def transversal_through(p: ProjPoint, La: ProjLine, Lb: ProjLine) -> ProjLine:
    """The unique line through p meeting La and Lb (p on neither)."""
    if La.contains(p) or Lb.contains(p):
        raise IncidenceError(f"{p} lies on one of the lines")
    x = meet_line_plane(La, plane_span(p, Lb))
    return line_through(p, x)


def ruling_transversal_through(
    quadric: Quadric, L1: ProjLine, L2: ProjLine, L3: ProjLine, p: ProjPoint
) -> ProjLine:
    """The line of the other ruling of ``quadric`` through p in L1."""
    if not L1.contains(p) or not quadric(p.coords).is_zero:
        raise IncidenceError(f"{p} is not on L1 inside the quadric")
    q = meet_line_plane(L2, plane_span(p, L3))
    T = line_through(p, q)
    if meet_lines(T, L3) is None or not quadric.contains_line(T):
        raise IncidenceError("ruling transversal is inconsistent with the input lines")
    return T


def line_meets(L: ProjLine, M: ProjLine) -> bool:
    return L == M or not are_skew(L, M)


# ── Cross ratio and projection ──


def cross_ratio_p1(pairs: Sequence[tuple[Fel, Fel]]) -> Fel:
    """chi = (a3b1-a1b3)(a4b2-a2b4) / ((a3b2-a2b3)(a4b1-a1b4)) of four points (a:b) of P1."""
    if len(pairs) != 4:
        raise ParameterRangeError("cross ratio needs four points")
    (a1, b1), (a2, b2), (a3, b3), (a4, b4) = pairs
    num = (a3 * b1 - a1 * b3) * (a4 * b2 - a2 * b4)
    den = (a3 * b2 - a2 * b3) * (a4 * b1 - a1 * b4)
    if num.is_zero or den.is_zero:
        raise IncidenceError("cross ratio of repeated points")
    return num / den


def cross_ratio(points: Sequence[ProjPoint], line: ProjLine | None = None) -> Fel:
    """Cross ratio of four distinct points on one line, in that line's chart."""
    if len(points) != 4:
        raise ParameterRangeError("cross ratio needs four points")
    if len(set(points)) != 4:
        raise IncidenceError("cross ratio of repeated points")
    if points[0].dim == 1:
        return cross_ratio_p1([(p[0], p[1]) for p in points])
    if line is None:
        line = line_through(points[0], points[1])
    if not all(line.contains(p) for p in points):
        raise IncidenceError("cross ratio of non-collinear points")
    return cross_ratio_p1([line.chart_coords(p) for p in points])


def plane_basis(plane: Plane) -> list[list[Fel]]:
    """Basis of a plane: one vector per free column of its form."""
    ctx = plane.form[0].ctx
    return kernel([list(plane.form)], ctx, 4)


def project_from_point(
    center: ProjPoint, plane: Plane, points: Sequence[ProjPoint]
) -> list[ProjPoint]:
    """Images in P2 coordinates of ``plane`` (its free-column basis) of a projection."""
    hc = plane(center.coords)
    if hc.is_zero:
        raise IncidenceError(f"center {center} lies in the projection plane")
    pivot = next(i for i, c in enumerate(plane.form) if not c.is_zero)
    free = [i for i in range(4) if i != pivot]
    images = []
    for x in points:
        if x == center:
            raise IncidenceError(f"point {x} equals the projection center")
        y = combine(plane(x.coords), center.coords, -hc, x.coords)
        images.append(ProjPoint(_normalize([y[i] for i in free])))
    return images


def points_rank(points: Sequence[ProjPoint]) -> int:
    return rank([list(p.coords) for p in points])


def projective_points(ctx: FieldCtx, dim: int = 3) -> Iterator[ProjPoint]:
    """Every point of P^dim over a finite field, by position of the leading 1."""
    elements = list(ctx.elements())
    zero, one = ctx.zero(), ctx.one()
    for lead in range(dim + 1):
        for tail in product(elements, repeat=dim - lead):
            yield ProjPoint((*([zero] * lead), one, *tail))
