"""Tests for standard position, the standard constructions and grids."""

import random

import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.constructions import (
    MultVariant,
    StandardFrame,
    additive_span,
    cone_identity_check,
    grid_config,
    l4_from_lt,
    l4_from_roots,
    lt_from_roots,
    standard_construction_add,
    standard_construction_mult,
)
from skewlines.errors import ConstructionError, ParameterRangeError
from skewlines.geometry.projective import ProjPoint, meet_lines
from skewlines.geometry.transversals import TransversalKind
from skewlines.groupoid import group_analysis, is_collinearly_complete, orbit


class TestStandardPosition:
    def test_l4_meets_both_transversals(self, frame: StandardFrame) -> None:
        ctx = frame.ctx
        L4 = l4_from_lt(frame, 2, 3)
        assert meet_lines(L4, frame.T1) == ProjPoint.of([0, 0, 2, 1], ctx)
        assert meet_lines(L4, frame.T2) == ProjPoint.of([3, 1, 0, 0], ctx)

    @pytest.mark.parametrize(("t", "l"), [(0, 2), (1, 2), (2, 0), (2, 1)])
    def test_forbidden_parameters(self, frame: StandardFrame, t: int, l: int) -> None:
        with pytest.raises(ParameterRangeError):
            l4_from_lt(frame, t, l)

    def test_lt_one_lies_on_the_quadric(self, frame: StandardFrame) -> None:
        with pytest.raises(ParameterRangeError):
            l4_from_lt(frame, 2, frame.ctx.from_fraction(1, 2))

    def test_roots(self, gf7: FieldCtx) -> None:
        alpha, beta = gf7.from_int(2), gf7.from_int(3)
        t, l = lt_from_roots(alpha, beta)
        assert (t * alpha).inverse() == l
        frame = StandardFrame.over(gf7)
        assert l4_from_roots(frame, alpha, beta) == l4_from_lt(frame, t, l)

    def test_inverse_roots_rejected(self, gf7: FieldCtx) -> None:
        with pytest.raises(ParameterRangeError):
            lt_from_roots(gf7.from_int(2), gf7.from_int(4))


class TestMultiplicative:
    @pytest.mark.parametrize(
        ("variant", "lines"), [(MultVariant.Z0, 5), (MultVariant.ZINF, 5), (MultVariant.Z0INF, 6)]
    )
    def test_line_and_point_counts(self, qq: FieldCtx, variant: MultVariant, lines: int) -> None:
        named = standard_construction_mult(4, qq, variant)
        assert named.cfg.s == lines
        assert named.Z.per_line(lines) == [4] * lines
        assert named.cfg.ctx.cyclotomic_index == 4

    def test_single_complete_orbit(self, gf7: FieldCtx) -> None:
        named = standard_construction_mult(3, gf7)
        assert is_collinearly_complete(named.cfg, named.Z)
        assert orbit(named.cfg, named.Z.entries[0]) == named.Z
        assert group_analysis(named.cfg).order == 3

    def test_odd_m_with_both_lines(self, qq: FieldCtx) -> None:
        with pytest.raises(ConstructionError):
            standard_construction_mult(3, qq, MultVariant.Z0INF)

    def test_both_lines_in_characteristic_two(self) -> None:
        named = standard_construction_mult(3, FieldCtx.prime_field(2), MultVariant.Z0INF)
        assert named.cfg.s == 5
        assert named.cfg.ctx.order == 4

    def test_m_too_small(self, qq: FieldCtx) -> None:
        with pytest.raises(ParameterRangeError):
            standard_construction_mult(2, qq)

    def test_cone_identities(self, gf7: FieldCtx) -> None:
        for variant in MultVariant:
            if variant is MultVariant.Z0INF:
                named = standard_construction_mult(6, FieldCtx.prime_field(13), variant)
            else:
                named = standard_construction_mult(3, gf7, variant)
            assert cone_identity_check(named, random.Random(5))


class TestAdditive:
    def test_whole_prime_field(self) -> None:
        gf3 = FieldCtx.prime_field(3)
        named = standard_construction_add(list(gf3.elements()))
        assert named.cfg.s == 4
        assert named.Z.per_line(4) == [3, 3, 3, 3]
        assert named.cfg.census.kind is TransversalKind.ONE_DOUBLE
        assert is_collinearly_complete(named.cfg, named.Z)
        assert cone_identity_check(named, random.Random(2))

    def test_subgroup_of_extension(self) -> None:
        ctx = FieldCtx.galois(9)
        A = additive_span([ctx.gen()])
        assert len(A) == 3
        named = standard_construction_add(A)
        assert orbit(named.cfg, named.Z.entries[0]) == named.Z

    def test_not_a_subgroup(self) -> None:
        gf5 = FieldCtx.prime_field(5)
        with pytest.raises(ConstructionError):
            standard_construction_add([gf5.zero(), gf5.one(), gf5.from_int(2)])

    def test_missing_zero(self) -> None:
        gf5 = FieldCtx.prime_field(5)
        with pytest.raises(ConstructionError):
            standard_construction_add([gf5.one(), gf5.from_int(2), gf5.from_int(3)])

    def test_needs_positive_characteristic(self, qq: FieldCtx) -> None:
        with pytest.raises(ConstructionError):
            additive_span([qq.one()])


class TestGrids:
    def test_counts(self, qq: FieldCtx) -> None:
        named = grid_config(3, 5, qq)
        assert named.cfg.s == 5
        assert len(named.Z) == 15
        assert named.cfg.census.kind is TransversalKind.INFINITE
        assert is_collinearly_complete(named.cfg, named.Z)

    def test_uses_line_at_infinity(self, gf7: FieldCtx) -> None:
        named = grid_config(2, 8, gf7)
        assert named.params["u"][-1] is None
        assert named.Z.per_line(8) == [2] * 8

    def test_too_many_lines(self, gf7: FieldCtx) -> None:
        with pytest.raises(ConstructionError):
            grid_config(2, 9, gf7)

    @pytest.mark.parametrize(("a", "b"), [(0, 4), (2, 2)])
    def test_bad_sizes(self, qq: FieldCtx, a: int, b: int) -> None:
        with pytest.raises(ParameterRangeError):
            grid_config(a, b, qq)
