"""Tests for points, lines, incidence, quadrics and cross ratios in P3."""

import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.constructions import StandardFrame
from skewlines.errors import DegenerateQuadricError, IncidenceError
from skewlines.geometry.projective import (
    Plane,
    ProjLine,
    Quadric,
    ProjPoint,
    are_skew,
    cross_ratio,
    line_meets,
    line_through,
    meet_line_plane,
    meet_lines,
    plane_span,
    project_from_point,
    projective_points,
    quadric_through_skew_triple,
    ruling_transversal_through,
    transversal_through,
)


class TestPoints:
    def test_normalization(self, qq: FieldCtx) -> None:
        assert ProjPoint.of([2, 4, 0, 2], qq) == ProjPoint.of([1, 2, 0, 1], qq)
        assert ProjPoint.of([0, 3, 6, 0], qq).coords[1].is_one

    def test_points_of_finite_space(self) -> None:
        points = list(projective_points(FieldCtx.prime_field(3)))
        assert len(points) == 40
        assert len(set(points)) == 40


class TestLines:
    def test_points_and_forms_agree(self, qq: FieldCtx) -> None:
        by_forms = ProjLine.from_forms([0, 1, 0, 0], [0, 0, 1, 0], qq)
        by_points = line_through(ProjPoint.of([1, 0, 0, 0], qq), ProjPoint.of([1, 0, 0, 5], qq))
        assert by_forms == by_points
        assert hash(by_forms) == hash(by_points)

    def test_coincident_points(self, qq: FieldCtx) -> None:
        p = ProjPoint.of([1, 2, 3, 4], qq)
        with pytest.raises(IncidenceError):
            line_through(p, ProjPoint.of([2, 4, 6, 8], qq))

    def test_chart_round_trip(self, qq: FieldCtx) -> None:
        line = ProjLine.from_forms([1, -1, 0, 0], [0, 0, 1, -1], qq)
        p = line.chart_point(2, 3)
        assert line.contains(p)
        s, t = line.chart_coords(p)
        assert line.chart_point(s, t) == p

    def test_standard_frame_incidences(self, frame: StandardFrame) -> None:
        assert are_skew(frame.L1, frame.L2)
        assert are_skew(frame.L2, frame.L3)
        assert are_skew(frame.L1, frame.L3)
        for L in (frame.L1, frame.L2, frame.L3):
            assert line_meets(frame.T1, L)
            assert line_meets(frame.T2, L)
        assert meet_lines(frame.L1, frame.T1) == ProjPoint.of([0, 0, 0, 1], frame.ctx)
        assert meet_lines(frame.L1, frame.L2) is None

    def test_plane_through_point_and_line(self, frame: StandardFrame) -> None:
        p = ProjPoint.of([1, 0, 0, 1], frame.ctx)
        plane = plane_span(p, frame.L3)
        assert plane.contains(p)
        x = meet_line_plane(frame.L2, plane)
        assert frame.L2.contains(x)
        assert plane.contains(x)

    def test_transversal_through(self, frame: StandardFrame) -> None:
        p = ProjPoint.of([1, 0, 0, 1], frame.ctx)
        T = transversal_through(p, frame.L2, frame.L3)
        assert T.contains(p)
        assert line_meets(T, frame.L2)
        assert line_meets(T, frame.L3)


class TestQuadrics:
    def test_quadric_of_standard_frame(self, frame: StandardFrame) -> None:
        quadric = quadric_through_skew_triple(frame.L1, frame.L2, frame.L3)
        assert quadric.is_smooth
        for line in (frame.L1, frame.L2, frame.L3, frame.T1, frame.T2):
            assert quadric.contains_line(line)
        # proportional to xz - yw
        assert quadric(ProjPoint.of([1, 1, 1, 1], frame.ctx).coords).is_zero
        assert not quadric(ProjPoint.of([1, 0, 1, 0], frame.ctx).coords).is_zero

    def test_ruling_transversal(self, frame: StandardFrame) -> None:
        quadric = quadric_through_skew_triple(frame.L1, frame.L2, frame.L3)
        p = frame.L1.chart_point(1, 1)
        T = ruling_transversal_through(quadric, frame.L1, frame.L2, frame.L3, p)
        assert T.contains(p)
        assert quadric.contains_line(T)
        assert line_meets(T, frame.L2)
        assert line_meets(T, frame.L3)
        with pytest.raises(IncidenceError):
            ruling_transversal_through(
                quadric, frame.L1, frame.L2, frame.L3, ProjPoint.of([1, 0, 1, 0], frame.ctx)
            )

    def test_meeting_lines_have_no_smooth_quadric(self, frame: StandardFrame) -> None:
        with pytest.raises(DegenerateQuadricError):
            quadric_through_skew_triple(frame.L1, frame.L2, frame.T1)

    def test_quadric_in_characteristic_two(self) -> None:
        frame = StandardFrame.over(FieldCtx.prime_field(2))
        assert quadric_through_skew_triple(frame.L1, frame.L2, frame.L3).is_smooth

    @pytest.mark.parametrize("q", [2, 4])
    @pytest.mark.parametrize(
        ("coeffs", "smooth"),
        [
            # x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2
            ([0, 0, 1, 0, 0, 0, 1, 0, 0, 0], True),  # xz + yw
            ([1, 1, 0, 0, 1, 0, 0, 0, 1, 0], True),  # x^2 + xy + y^2 + zw
            ([0, 1, 0, 0, 0, 0, 0, 1, 0, 1], False),  # xy + z^2 + w^2, a cone
            ([0, 1, 0, 0, 0, 0, 0, 0, 0, 0], False),  # xy, two planes
            ([1, 0, 0, 0, 0, 0, 0, 0, 0, 0], False),  # x^2
        ],
    )
    def test_smoothness_in_characteristic_two(
        self, q: int, coeffs: list[int], smooth: bool
    ) -> None:
        assert Quadric.of(coeffs, FieldCtx.galois(q)).is_smooth is smooth



class TestCrossRatio:
    def test_points_of_p1(self, qq: FieldCtx) -> None:
        points = [ProjPoint.of(v, qq) for v in ([0, 1], [1, 1], [1, 0], [2, 1])]
        assert cross_ratio(points) == qq.from_fraction(1, 2)

    def test_does_not_depend_on_the_chart(self, frame: StandardFrame) -> None:
        ctx = frame.ctx
        coords = ([1, 0, 0, 0], [1, 0, 0, 1], [0, 0, 0, 1], [1, 0, 0, 2])
        points = [ProjPoint.of(v, ctx) for v in coords]
        assert cross_ratio(points, frame.L1) == ctx.from_fraction(1, 2)
        assert cross_ratio(points) == ctx.from_fraction(1, 2)

    def test_repeated_points(self, qq: FieldCtx) -> None:
        p = ProjPoint.of([0, 1], qq)
        with pytest.raises(IncidenceError):
            cross_ratio([p, p, ProjPoint.of([1, 0], qq), ProjPoint.of([1, 1], qq)])


class TestProjection:
    def test_images_lie_in_p2(self, qq: FieldCtx) -> None:
        plane = Plane.of([0, 0, 0, 1], qq)
        center = ProjPoint.of([1, 2, 3, 1], qq)
        points = [ProjPoint.of(v, qq) for v in ([1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1])]
        images = project_from_point(center, plane, points)
        assert [p.dim for p in images] == [2, 2, 2]
        # points already in the plane w = 0 keep their first three coordinates
        assert images[0] == ProjPoint.of([1, 0, 0], qq)

    def test_collinear_with_center_collide(self, qq: FieldCtx) -> None:
        plane = Plane.of([0, 0, 0, 1], qq)
        center = ProjPoint.of([0, 0, 0, 1], qq)
        a, b = ProjPoint.of([1, 1, 0, 0], qq), ProjPoint.of([1, 1, 0, 3], qq)
        images = project_from_point(center, plane, [a, b])
        assert images[0] == images[1]

    def test_center_in_plane(self, qq: FieldCtx) -> None:
        with pytest.raises(IncidenceError):
            project_from_point(
                ProjPoint.of([1, 0, 0, 0], qq), Plane.of([0, 0, 0, 1], qq), []
            )
