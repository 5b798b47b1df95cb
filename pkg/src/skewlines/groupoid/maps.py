"""Arrows of the groupoid: projective maps between the charts of two lines."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from sympy import factorint

from skewlines.algebra.field import Fel
from skewlines.algebra.roots import char0_order_candidates
from skewlines.errors import FieldDivisionError, IncidenceError, ParameterRangeError
from skewlines.geometry.projective import (
    ProjPoint,
    meet_line_plane,
    pencil_map_matrix,
    plane_span,
)
from skewlines.groupoid.config import SkewConfig

logger = logging.getLogger(__name__)

Mat2 = tuple[tuple[Fel, Fel], tuple[Fel, Fel]]
Word = tuple[tuple[int, int, int], ...]


def _canonical(rows: Sequence[Sequence[Fel]]) -> Mat2:
    flat = [rows[0][0], rows[0][1], rows[1][0], rows[1][1]]
    lead = next((e for e in flat if not e.is_zero), None)
    if lead is None:
        raise FieldDivisionError("zero matrix")
    inv = lead.inverse()
    a, b, c, d = (e * inv for e in flat)
    return ((a, b), (c, d))


@dataclass(frozen=True)
class GMap:
    """A projective map from the chart of line ``src`` to the chart of line ``dst``.

    The matrix is scaled so its first nonzero entry (row-major) is 1; equality is
    exact entry match. ``word`` lists the f-triples it was composed from, the
    rightmost applied first.
    """

    src: int
    dst: int
    mat: Mat2
    word: Word = field(default=(), compare=False)

    @classmethod
    def of(cls, src: int, dst: int, rows: Sequence[Sequence[Fel]], word: Word = ()) -> GMap:
        mat = _canonical(rows)
        (a, b), (c, d) = mat
        if (a * d - b * c).is_zero:
            raise ParameterRangeError("a groupoid map needs an invertible matrix")
        return cls(src, dst, mat, word)

    @classmethod
    def identity(cls, cfg: SkewConfig, i: int) -> GMap:
        ctx = cfg.ctx
        return cls.of(i, i, [[ctx.one(), ctx.zero()], [ctx.zero(), ctx.one()]])

    @property
    def trace(self) -> Fel:
        return self.mat[0][0] + self.mat[1][1]

    @property
    def det(self) -> Fel:
        (a, b), (c, d) = self.mat
        return a * d - b * c

    @property
    def is_scalar(self) -> bool:
        (a, b), (c, d) = self.mat
        return b.is_zero and c.is_zero and a == d

    @property
    def is_identity(self) -> bool:
        return self.src == self.dst and self.is_scalar

    def __matmul__(self, other: GMap) -> GMap:
        """self after other."""
        if other.dst != self.src:
            raise ParameterRangeError(f"cannot compose L{other.dst} -> with L{self.src} ->")
        (a, b), (c, d) = self.mat
        (e, f), (g, h) = other.mat
        rows = [[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]]
        return GMap.of(other.src, self.dst, rows, self.word + other.word)

    def inverse(self) -> GMap:
        (a, b), (c, d) = self.mat
        word = tuple((j, i, k) for i, j, k in reversed(self.word))
        return GMap.of(self.dst, self.src, [[d, -b], [-c, a]], word)

    def __pow__(self, n: int) -> GMap:
        if self.src != self.dst:
            raise ParameterRangeError("only endomorphisms have powers")
        if n < 0:
            return self.inverse() ** (-n)
        ctx = self.mat[0][0].ctx
        result = GMap.of(self.src, self.dst, [[ctx.one(), ctx.zero()], [ctx.zero(), ctx.one()]])
        square = self
        while n:
            if n & 1:
                result = result @ square
            n >>= 1
            if n:
                square = square @ square
        return result

    def apply(self, s: Fel, t: Fel) -> tuple[Fel, Fel]:
        (a, b), (c, d) = self.mat
        return a * s + b * t, c * s + d * t

    def apply_point(self, cfg: SkewConfig, p: ProjPoint) -> ProjPoint:
        s, t = cfg[self.src].chart_coords(p)
        return cfg[self.dst].chart_point(*self.apply(s, t))

    def embed(self, embed: Callable[[Fel], Fel]) -> GMap:
        rows = [[embed(e) for e in row] for row in self.mat]
        return GMap.of(self.src, self.dst, rows, self.word)

    def agrees_with_geometry(self, cfg: SkewConfig, samples: int = 3) -> bool:
        """Compare with plane_span/meet_line_plane on chart points; needs a single-letter word."""
        if len(self.word) != 1:
            raise ParameterRangeError("geometric comparison needs a single f-triple")
        i, j, k = self.word[0]
        ctx = cfg.ctx
        Li, Lj, Lk = cfg[i], cfg[j], cfg[k]
        params = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)][: max(samples, 1)]
        for s, t in params:
            try:
                x = Li.chart_point(s, t)
            except IncidenceError:
                continue
            expected = meet_line_plane(Lj, plane_span(x, Lk))
            got = Lj.chart_point(*self.apply(ctx.coerce(s), ctx.coerce(t)))
            if got != expected:
                return False
        return True


def f_map(cfg: SkewConfig, i: int, j: int, k: int) -> GMap:
    """f_ijk: x on L_i goes to where the plane through x and L_k meets L_j."""
    cfg.check_index(i, j, k)
    if len({i, j, k}) != 3:
        raise ParameterRangeError(f"f-map indices must be distinct, got {(i, j, k)}")
    key = (i, j, k)
    cached = cfg._maps.get(key)
    if cached is None:
        mat = pencil_map_matrix(cfg[i], cfg[j], cfg[k])
        cached = GMap.of(i, j, mat, (key,))
        cfg._maps[key] = cached
    return cached


def generators_of_Gi(cfg: SkewConfig, i: int) -> list[GMap]:
    """f_jil f_ijk and f_kij f_jkl f_ijk over all admissible j, k, l, deduplicated."""
    cfg.check_index(i)
    cached = cfg._generators.get(i)
    if cached is not None:
        return list(cached)
    seen: dict[Mat2, GMap] = {}
    others = [n for n in range(cfg.s) if n != i]
    for j in others:
        for k in others:
            if k == j:
                continue
            fijk = f_map(cfg, i, j, k)
            for l in others:
                if l != j:
                    g = f_map(cfg, j, i, l) @ fijk
                    seen.setdefault(g.mat, g)
            for l in range(cfg.s):
                if l not in (j, k):
                    g = f_map(cfg, k, i, j) @ f_map(cfg, j, k, l) @ fijk
                    seen.setdefault(g.mat, g)
    logger.debug("G_%d has %d distinct generators", i, len(seen))
    cfg._generators[i] = list(seen.values())
    return list(seen.values())


def element_order(g: GMap) -> int | None:
    """Order of g in PGL2; None when infinite."""
    if g.src != g.dst:
        raise ParameterRangeError("element order needs src = dst")
    if g.is_scalar:
        return 1
    ctx = g.mat[0][0].ctx
    p = ctx.characteristic
    tr, det = g.trace, g.det
    if (tr * tr - det * 4).is_zero:
        # a single eigenline: unipotent up to scaling
        return p if p else None
    if p:
        q = ctx.order
        assert q is not None
        if (g ** (q - 1)).is_scalar:
            n = q - 1
        elif (g ** (q + 1)).is_scalar:
            n = q + 1
        else:
            return None
        for r in factorint(n):
            while n % r == 0 and (g ** (n // r)).is_scalar:
                n //= r
        return n
    candidates = set(char0_order_candidates(2 * ctx.degree))
    power = g
    for n in range(1, max(candidates) + 1):
        if n in candidates and power.is_scalar:
            return n
        power = power @ g
    return None
