"""Tests for transversals of four skew lines and the transversal census."""

import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.constructions import StandardFrame, l4_from_lt
from skewlines.errors import ParameterRangeError
from skewlines.geometry.projective import ProjLine, ProjPoint, line_meets, line_through
from skewlines.geometry.transversals import (
    TransversalKind,
    quadratic_roots,
    transversal_census,
    transversal_points,
    transversals_of_quadruple,
)


def _no_rational_transversals(frame: StandardFrame) -> ProjLine:
    """Meets xz - yw where s^2 + t^2 = 0."""
    ctx = frame.ctx
    return line_through(ProjPoint.of([1, 0, 1, 0], ctx), ProjPoint.of([0, 1, 0, -1], ctx))


def _same_regulus(frame: StandardFrame, u: int) -> ProjLine:
    """x = u y, w = u z lies on xz - yw with L1, L2, L3."""
    return ProjLine.from_forms([1, -u, 0, 0], [0, 0, u, -1], frame.ctx)


class TestQuadraticRoots:
    def test_two_roots(self, qq: FieldCtx) -> None:
        # s^2 - 3 s t + 2 t^2
        solved = quadratic_roots(qq.one(), qq.from_int(-3), qq.from_int(2))
        assert solved.solvable and not solved.double
        assert {s / t for s, t in solved.roots} == {qq.from_int(1), qq.from_int(2)}

    def test_double_root(self, qq: FieldCtx) -> None:
        solved = quadratic_roots(qq.one(), qq.from_int(-2), qq.one())
        assert solved.double
        assert len(solved.roots) == 1

    def test_no_roots(self, qq: FieldCtx) -> None:
        assert not quadratic_roots(qq.one(), qq.zero(), qq.one()).solvable

    def test_root_at_infinity(self, qq: FieldCtx) -> None:
        solved = quadratic_roots(qq.zero(), qq.one(), qq.from_int(-2))
        assert (qq.one(), qq.zero()) in solved.roots

    def test_characteristic_two(self) -> None:
        ctx = FieldCtx.galois(4)
        # s^2 + s t + t^2 splits over GF(4) but not over GF(2)
        assert quadratic_roots(ctx.one(), ctx.one(), ctx.one()).solvable
        gf2 = FieldCtx.prime_field(2)
        assert not quadratic_roots(gf2.one(), gf2.one(), gf2.one()).solvable


class TestQuadruples:
    def test_standard_position(self, frame: StandardFrame) -> None:
        L4 = l4_from_lt(frame, 2, 3)
        result = transversals_of_quadruple(frame.L1, frame.L2, frame.L3, L4)
        assert result.kind is TransversalKind.TWO
        assert set(result.lines) == {frame.T1, frame.T2}

    def test_infinitely_many(self, frame: StandardFrame) -> None:
        L4 = _same_regulus(frame, 2)
        result = transversals_of_quadruple(frame.L1, frame.L2, frame.L3, L4)
        assert result.kind is TransversalKind.INFINITE
        assert result.count is None

    def test_reports_needed_extension(self, frame: StandardFrame) -> None:
        L4 = _no_rational_transversals(frame)
        result = transversals_of_quadruple(frame.L1, frame.L2, frame.L3, L4, auto_extend=False)
        assert result.kind is TransversalKind.TWO
        assert result.lines == ()
        assert result.needed_extension is not None

    def test_auto_extend(self, frame: StandardFrame) -> None:
        L4 = _no_rational_transversals(frame)
        result = transversals_of_quadruple(frame.L1, frame.L2, frame.L3, L4, auto_extend=True)
        assert result.ctx.degree == 2
        assert len(result.lines) == 2
        assert result.embed is not None
        lifted = [L.embed(result.embed) for L in (frame.L1, frame.L2, frame.L3, L4)]
        for T in result.lines:
            assert all(line_meets(T, L) for L in lifted)


class TestCensus:
    def test_three_lines(self, frame: StandardFrame) -> None:
        result = transversal_census([frame.L1, frame.L2, frame.L3])
        assert result.kind is TransversalKind.INFINITE

    def test_two_lines_is_an_error(self, frame: StandardFrame) -> None:
        with pytest.raises(ParameterRangeError):
            transversal_census([frame.L1, frame.L2])

    def test_many_lines_through_two_transversals(self, frame: StandardFrame) -> None:
        lines = [frame.L1, frame.L2, frame.L3, l4_from_lt(frame, 2, 3), l4_from_lt(frame, 5, 7)]
        result = transversal_census(lines)
        assert result.kind is TransversalKind.TWO
        assert set(result.lines) == {frame.T1, frame.T2}
        assert result.abelian

    def test_one_regulus(self, frame: StandardFrame) -> None:
        lines = [frame.L1, frame.L2, frame.L3, _same_regulus(frame, 2), _same_regulus(frame, 3)]
        assert transversal_census(lines).kind is TransversalKind.INFINITE

    def test_no_common_transversal(self, frame: StandardFrame) -> None:
        # L4 through T1 and T2 only; L5 misses both
        lines = [
            frame.L1,
            frame.L2,
            frame.L3,
            l4_from_lt(frame, 2, 3),
            _no_rational_transversals(frame),
        ]
        assert transversal_census(lines).kind is TransversalKind.NONE

    def test_census_without_extension(self, frame: StandardFrame) -> None:
        lines = [frame.L1, frame.L2, frame.L3, _no_rational_transversals(frame)]
        result = transversal_census(lines)
        assert result.kind is TransversalKind.TWO
        assert result.lines == ()
        assert result.needed_extension is not None

    def test_transversal_points(self, frame: StandardFrame) -> None:
        lines = [frame.L1, frame.L2, frame.L3]
        points = transversal_points(frame.T1, lines)
        assert [L.contains(p) for L, p in zip(lines, points, strict=True)] == [True] * 3
        assert all(frame.T1.contains(p) for p in points)
