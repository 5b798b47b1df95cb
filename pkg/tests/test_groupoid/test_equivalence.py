"""Tests for projective equivalence of orbits."""

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import matvec
from skewlines.constructions import NamedConfig
from skewlines.geometry.projective import ProjLine, ProjPoint
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.equivalence import map_frame, projective_equivalence_of_orbits
from skewlines.groupoid.orbits import PointSet

MOVE = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 2]]


def _matrix(ctx: FieldCtx) -> list[list[Fel]]:
    return [[ctx.from_int(v) for v in row] for row in MOVE]


def _moved(named: NamedConfig) -> tuple[SkewConfig, PointSet]:
    ctx = named.cfg.ctx
    mat = _matrix(ctx)

    def move(p: ProjPoint) -> ProjPoint:
        return ProjPoint.of(matvec(mat, list(p.coords)), ctx)

    lines = tuple(ProjLine.from_points(*(move(p) for p in L.points)) for L in named.cfg.lines)
    return SkewConfig(lines), PointSet.of((i, move(p)) for i, p in named.Z)


class TestEquivalence:
    def test_orbit_with_itself(self, d4_named: NamedConfig) -> None:
        mat = projective_equivalence_of_orbits(d4_named.cfg, d4_named.Z, d4_named.Z)
        assert mat is not None

    def test_moved_copy(self, d4_named: NamedConfig) -> None:
        other_cfg, other_Z = _moved(d4_named)
        mat = projective_equivalence_of_orbits(d4_named.cfg, d4_named.Z, other_Z, other_cfg)
        assert mat is not None
        ctx = d4_named.cfg.ctx
        images = {ProjPoint.of(matvec(mat, list(p.coords)), ctx) for p in d4_named.Z.points()}
        assert images == set(other_Z.points())

    def test_different_sizes(self, d4_named: NamedConfig) -> None:
        smaller = d4_named.Z.without(d4_named.Z.entries[0])
        assert projective_equivalence_of_orbits(d4_named.cfg, d4_named.Z, smaller) is None

    def test_grid_is_not_a_half_grid(self, d4_named: NamedConfig, grid_3x4: NamedConfig) -> None:
        cfg, Z = d4_named.cfg, d4_named.Z
        assert projective_equivalence_of_orbits(cfg, Z, grid_3x4.Z, grid_3x4.cfg) is None


class TestFrames:
    def test_standard_frame_map(self, qq: FieldCtx) -> None:
        coords = ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1])
        source = [ProjPoint.of(v, qq) for v in coords]
        target = [ProjPoint.of(matvec(_matrix(qq), list(p.coords)), qq) for p in source]
        mat = map_frame(source, target)
        assert mat is not None
        for p, q in zip(source, target, strict=True):
            assert ProjPoint.of(matvec(mat, list(p.coords)), qq) == q
