"""Projective equivalence of orbits.

An orbit either lies on a transversal, and is matched through three-point maps of
P1, or it holds five points in linear general position built from three points of
one slice and their images under f_{0,2,1} and f_{0,1,2}. The target frames are
built the same way from every ordered triple of lines of the other configuration.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations, permutations

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import Matrix, identity, inverse, matmul, matvec, rank, solve
from skewlines.config import get_settings
from skewlines.geometry.projective import ProjPoint, line_through, points_rank
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.maps import f_map
from skewlines.groupoid.orbits import PointSet

logger = logging.getLogger(__name__)


def _frame_matrix(points: Sequence[ProjPoint]) -> Matrix | None:
    """Columns P1..P4 scaled so they sum to P5; None if not in general position."""
    cols = [list(p.coords) for p in points[:4]]
    mat = [[cols[c][r] for c in range(4)] for r in range(4)]
    scale = solve(mat, list(points[4].coords))
    if scale is None or any(c.is_zero for c in scale):
        return None
    return [[mat[r][c] * scale[c] for c in range(4)] for r in range(4)]


def map_frame(source: Sequence[ProjPoint], target: Sequence[ProjPoint]) -> Matrix | None:
    """The projective map sending five general points to five general points."""
    A = _frame_matrix(source)
    B = _frame_matrix(target)
    if A is None or B is None:
        return None
    return matmul(B, inverse(A))


def _apply(mat: Matrix, p: ProjPoint) -> ProjPoint:
    return ProjPoint.of(matvec(mat, list(p.coords)), p.ctx)


def _maps_onto(mat: Matrix, source: Sequence[ProjPoint], target: set[ProjPoint]) -> bool:
    return all(_apply(mat, p) in target for p in source)


def projective_equivalence_of_orbits(
    cfg: SkewConfig,
    O1: PointSet,
    O2: PointSet,
    other_cfg: SkewConfig | None = None,
    *,
    search_cap: int | None = None,
) -> Matrix | None:
    """A 4x4 matrix carrying O1 onto O2, or None when none is found.

    ``O2`` may be an orbit of ``other_cfg``; the search covers maps that carry the lines
    of ``cfg`` meeting O1 onto lines of the other configuration.
    """
    cap = get_settings().equivalence_search_cap if search_cap is None else search_cap
    target_cfg = cfg if other_cfg is None else other_cfg
    ctx = cfg.ctx
    if len(O1) != len(O2):
        return None
    src_points = O1.points()
    dst_points = O2.points()
    target = set(dst_points)
    if set(src_points) == target:
        return identity(ctx, 4)
    r1, r2 = points_rank(src_points), points_rank(dst_points)
    if r1 != r2:
        return None
    if r1 <= 2:
        return _collinear_equivalence(ctx, src_points, dst_points, cap)
    source_frames = list(_frames(cfg, O1))
    if not source_frames:
        logger.warning("No five points in general position in the source orbit")
        return None
    source = source_frames[0]
    tried = 0
    for a, b, c in permutations(range(target_cfg.s), 3):
        slice_a = O2.slice(a)
        if len(slice_a) < 3:
            continue
        fcb = f_map(target_cfg, a, c, b)
        fbc = f_map(target_cfg, a, b, c)
        for x1, x2, x3 in permutations(slice_a, 3):
            tried += 1
            if tried > cap:
                logger.warning("Equivalence search stopped after %d frames", cap)
                return None
            frame = [
                x1,
                x3,
                fcb.apply_point(target_cfg, x1),
                fcb.apply_point(target_cfg, x3),
                fbc.apply_point(target_cfg, x2),
            ]
            mat = map_frame(source, frame)
            if mat is not None and _maps_onto(mat, src_points, target):
                logger.info("Orbits are equivalent (frame %d)", tried)
                return mat
    return None


def _frames(cfg: SkewConfig, O: PointSet) -> list[list[ProjPoint]]:
    slice0 = O.slice(0)
    f021 = f_map(cfg, 0, 2, 1)
    f012 = f_map(cfg, 0, 1, 2)
    frames = []
    for p1, p2, p3 in permutations(slice0, 3):
        frame = [
            p1,
            p3,
            f021.apply_point(cfg, p1),
            f021.apply_point(cfg, p3),
            f012.apply_point(cfg, p2),
        ]
        if _general_position(frame):
            frames.append(frame)
            break
    return frames


def _general_position(points: Sequence[ProjPoint]) -> bool:
    return all(points_rank(list(sub)) == 4 for sub in combinations(points, 4))


def _collinear_equivalence(
    ctx: FieldCtx, src: list[ProjPoint], dst: list[ProjPoint], cap: int
) -> Matrix | None:
    if len(src) < 3:
        return None
    l1 = line_through(src[0], src[1])
    l2 = line_through(dst[0], dst[1])
    U = _completed_basis(ctx, [list(l1.points[0]), list(l1.points[1])])
    V = _completed_basis(ctx, [list(l2.points[0]), list(l2.points[1])])
    a, b, c = (l1.chart_coords(p) for p in src[:3])
    target = set(dst)
    tried = 0
    for x, y, z in permutations(dst, 3):
        tried += 1
        if tried > cap:
            return None
        m = _p1_three_point_map([a, b, c], [l2.chart_coords(p) for p in (x, y, z)])
        if m is None:
            continue
        block = [
            [m[0][0], m[0][1], ctx.zero(), ctx.zero()],
            [m[1][0], m[1][1], ctx.zero(), ctx.zero()],
            [ctx.zero(), ctx.zero(), ctx.one(), ctx.zero()],
            [ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()],
        ]
        mat = matmul(matmul(V, block), inverse(U))
        if _maps_onto(mat, src, target):
            return mat
    return None


def _completed_basis(ctx: FieldCtx, vectors: list[list[Fel]]) -> Matrix:
    """Columns: the given vectors followed by standard vectors completing a basis."""
    cols = list(vectors)
    for k in range(4):
        if len(cols) == 4:
            break
        e = [ctx.one() if r == k else ctx.zero() for r in range(4)]
        if rank([*cols, e]) == len(cols) + 1:
            cols.append(e)
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def _p1_three_point_map(
    src: list[tuple[Fel, Fel]], dst: list[tuple[Fel, Fel]]
) -> list[list[Fel]] | None:
    """The 2x2 matrix sending three points of P1 to three points (None if degenerate)."""

    def frame(pts: list[tuple[Fel, Fel]]) -> list[list[Fel]] | None:
        mat = [[pts[0][0], pts[1][0]], [pts[0][1], pts[1][1]]]
        scale = solve(mat, [pts[2][0], pts[2][1]])
        if scale is None or any(c.is_zero for c in scale):
            return None
        return [[mat[r][c] * scale[c] for c in range(2)] for r in range(2)]

    A, B = frame(src), frame(dst)
    if A is None or B is None:
        return None
    return matmul(B, inverse(A))
