"""Tests for the structure of G_L."""

import random

import pytest

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.roots import cyclotomic_field, multiplicative_order
from skewlines.classify import four_lines, param_pair_from_roots
from skewlines.constructions import (
    NamedConfig,
    StandardFrame,
    l4_from_lt,
    standard_construction_add,
    standard_construction_mult,
)
from skewlines.errors import ParameterRangeError
from skewlines.geometry.projective import ProjLine
from skewlines.geometry.transversals import TransversalKind
from skewlines.groupoid.analysis import (
    GroupStatus,
    cross_ratio_ratio_generators,
    group_analysis,
    group_order_of_multipliers,
)
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.maps import element_order, generators_of_Gi


class TestGroupAnalysis:
    def test_grid_is_trivial(self, grid_3x4: NamedConfig) -> None:
        desc = group_analysis(grid_3x4.cfg)
        assert desc.status is GroupStatus.TRIVIAL
        assert desc.order == 1
        assert desc.transversal_count is None

    def test_d4(self, d4_named: NamedConfig) -> None:
        desc = group_analysis(d4_named.cfg)
        assert desc.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        assert desc.order == 3
        assert desc.transversal_count == 2

    def test_multiplicative_standard_construction(self, gf7: FieldCtx) -> None:
        named = standard_construction_mult(3, gf7)
        desc = group_analysis(named.cfg)
        assert desc.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        assert desc.order == 3
        assert all(multiplicative_order(a) == 3 for a in desc.generators)

    def test_additive_standard_construction(self) -> None:
        gf3 = FieldCtx.prime_field(3)
        named = standard_construction_add(list(gf3.elements()))
        desc = group_analysis(named.cfg)
        assert desc.status is GroupStatus.ABELIAN_ADDITIVE
        assert desc.multiplicity_two
        assert desc.order == 3

    def test_infinite_over_rationals(self, frame: StandardFrame) -> None:
        desc = group_analysis(frame.config(l4_from_lt(frame, 2, 3)))
        assert desc.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        assert desc.order is None
        assert desc.witness is not None

    def test_order_from_roots_of_unity(self) -> None:
        ctx = cyclotomic_field(5)
        zeta = ctx.gen()
        cfg = four_lines(param_pair_from_roots(zeta, zeta**2))
        desc = group_analysis(cfg)
        assert desc.transversals.kind is TransversalKind.TWO
        assert desc.order == 5
        assert group_order_of_multipliers(desc.generators) == 5


class TestCrossRatioGenerators:
    def test_agree_with_multipliers(self) -> None:
        ctx = cyclotomic_field(5)
        zeta = ctx.gen()
        cfg = four_lines(param_pair_from_roots(zeta, zeta))
        ratios = cross_ratio_ratio_generators(cfg)
        assert ratios
        assert group_order_of_multipliers(ratios) == 5

    def test_infinite_order(self, frame: StandardFrame) -> None:
        cfg = frame.config(l4_from_lt(frame, 2, 3))
        assert group_order_of_multipliers(cross_ratio_ratio_generators(cfg)) is None

    def test_empty_product(self) -> None:
        assert group_order_of_multipliers(()) == 1


def _ruling_line(u: int, ctx: FieldCtx) -> ProjLine:
    """x = u y, w = u z: a line of the ruling of xz = yw through L1, L2, L3."""
    return ProjLine.from_forms([1, -u, 0, 0], [0, 0, -u, 1], ctx)


def _nonunit(rng: random.Random, ctx: FieldCtx) -> Fel:
    while True:
        if ctx.is_finite:
            a = ctx.random_element(rng)
        else:
            a = ctx.from_int(rng.choice([-1, 1]) * rng.randint(2, 60))
        if not (a.is_zero or a.is_one):
            return a


def _one_double(frame: StandardFrame, r: Fel, t: Fel) -> ProjLine:
    """r y + z = t w, y = t x: meets T1 at (0:0:t:1) and touches the quadric there."""
    return ProjLine.from_forms([0, r, 1, -t], [-t, 1, 0, 0], frame.ctx)


def _samples(n: int) -> list[tuple[int, FieldCtx]]:
    return [
        (seed, FieldCtx.rationals() if seed % 2 == 0 else FieldCtx.prime_field(101))
        for seed in range(n)
    ]


class TestRulingLines:
    @pytest.mark.parametrize("s", [3, 4, 5, 6])
    def test_ruling_lines_are_trivial(self, frame: StandardFrame, s: int) -> None:
        extra = [_ruling_line(u, frame.ctx) for u in range(2, s - 1)]
        desc = group_analysis(frame.config(*extra))
        assert desc.status is GroupStatus.TRIVIAL
        assert desc.order == 1

    @pytest.mark.parametrize("s", [4, 5, 6])
    def test_moving_one_line_off_the_quadric(self, frame: StandardFrame, s: int) -> None:
        extra = [_ruling_line(u, frame.ctx) for u in range(2, s - 2)]
        desc = group_analysis(frame.config(*extra, l4_from_lt(frame, 5, 7)))
        assert desc.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        assert desc.order is None
        assert desc.witness is not None


class TestTwoTransversals:
    @pytest.mark.parametrize(("seed", "ctx"), _samples(20))
    def test_multipliers_from_t_and_l(self, seed: int, ctx: FieldCtx) -> None:
        rng = random.Random(seed)
        frame = StandardFrame.over(ctx)
        t, l = _nonunit(rng, ctx), _nonunit(rng, ctx)
        while (l * t).is_one:
            l = _nonunit(rng, ctx)
        desc = group_analysis(frame.config(l4_from_lt(frame, t, l)))
        assert desc.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        base = (1 / (l * t), (l - 1) / (l * (1 - t)), (t - 1) / (t * (1 - l)))
        expected = {m for b in base for m in (b, b.inverse()) if not m.is_one}
        assert set(desc.generators) == expected


class TestOneDoubleTransversal:
    @pytest.mark.parametrize(("seed", "ctx"), _samples(20))
    def test_translation_amounts(self, seed: int, ctx: FieldCtx) -> None:
        rng = random.Random(seed)
        frame = StandardFrame.over(ctx)
        r, t = _nonunit(rng, ctx), _nonunit(rng, ctx)
        desc = group_analysis(frame.config(_one_double(frame, r, t)))
        assert desc.status is GroupStatus.ABELIAN_ADDITIVE
        assert desc.multiplicity_two
        base = (r, r / (1 - t), r * t / (1 - t))
        assert set(desc.generators) == {a for b in base for a in (b, -b)}
        if ctx.is_finite:
            assert desc.order == 101
        else:
            assert desc.order is None
            assert desc.witness is not None


def _no_transversal(ctx: FieldCtx) -> SkewConfig:
    frame = StandardFrame.over(ctx)
    # x + z = 0, y + 2w = 0 misses both transversals of the first four lines
    off = ProjLine.from_forms([1, 0, 1, 0], [0, 1, 0, 2], ctx)
    return frame.config(l4_from_lt(frame, 2, 3), off)


class TestClosure:
    def test_finite_field(self, gf7: FieldCtx) -> None:
        cfg = _no_transversal(gf7)
        desc = group_analysis(cfg)
        assert desc.transversals.kind is TransversalKind.NONE
        assert desc.status is GroupStatus.NONABELIAN_FINITE
        assert not desc.is_abelian
        assert desc.order == len(desc.elements)
        # contains the cyclic group of order 6 of the first four lines, inside PGL2(7)
        assert desc.order % 6 == 0
        assert 336 % desc.order == 0
        members = set(desc.elements)
        assert any(g.is_identity for g in members)
        for g in generators_of_Gi(cfg, 0)[:4]:
            assert all(g @ e in members for e in members)

    def test_cap(self, gf7: FieldCtx) -> None:
        desc = group_analysis(_no_transversal(gf7), cap=5)
        assert desc.status is GroupStatus.NONABELIAN_CAPPED
        assert desc.order is None
        assert desc.lower_bound == 6

    def test_rationals(self, frame: StandardFrame) -> None:
        desc = group_analysis(_no_transversal(frame.ctx))
        assert desc.status is GroupStatus.INFINITE
        assert desc.witness is not None
        assert element_order(desc.witness) is None

    def test_nonpositive_cap(self, d4_named: NamedConfig) -> None:
        with pytest.raises(ParameterRangeError):
            group_analysis(d4_named.cfg, cap=0)


class TestFieldExtension:
    def test_multiplicative(self, gf7: FieldCtx) -> None:
        cfg = standard_construction_mult(3, gf7).cfg
        _, embed = gf7.extend_degree(2)
        before, after = group_analysis(cfg), group_analysis(cfg.embed(embed))
        assert after.status is before.status is GroupStatus.ABELIAN_MULTIPLICATIVE
        assert after.order == before.order == 3
        assert {embed(m) for m in before.generators} == set(after.generators)

    def test_additive(self) -> None:
        gf101 = FieldCtx.prime_field(101)
        frame = StandardFrame.over(gf101)
        cfg = frame.config(_one_double(frame, gf101.from_int(3), gf101.from_int(5)))
        _, embed = gf101.extend_degree(2)
        before, after = group_analysis(cfg), group_analysis(cfg.embed(embed))
        assert after.status is before.status is GroupStatus.ABELIAN_ADDITIVE
        assert after.order == before.order == 101

    @pytest.mark.slow
    def test_closure(self, gf7: FieldCtx) -> None:
        cfg = _no_transversal(gf7)
        _, embed = gf7.extend_degree(2)
        before, after = group_analysis(cfg), group_analysis(cfg.embed(embed))
        assert after.status is before.status is GroupStatus.NONABELIAN_FINITE
        assert after.order == before.order
