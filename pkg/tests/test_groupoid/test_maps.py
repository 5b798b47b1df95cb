"""Tests for configurations and the arrows f_ijk of the groupoid."""

import random

import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.constructions import NamedConfig, StandardFrame, l4_from_lt
from skewlines.errors import NotSkewError, ParameterRangeError, SkewlinesError
from skewlines.geometry.projective import ProjLine, ProjPoint, are_skew, line_through
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.maps import GMap, element_order, f_map, generators_of_Gi


class TestSkewConfig:
    def test_meeting_lines_rejected(self, frame: StandardFrame) -> None:
        with pytest.raises(NotSkewError):
            SkewConfig((frame.L1, frame.L2, frame.T1))

    def test_needs_three_lines(self, frame: StandardFrame) -> None:
        with pytest.raises(ParameterRangeError):
            SkewConfig((frame.L1, frame.L2))

    def test_triples_and_restrict(self, d4_named: NamedConfig) -> None:
        cfg = d4_named.cfg
        assert len(cfg.triples()) == 4 * 3 * 2
        sub = cfg.restrict([3, 1, 0])
        assert sub.s == 3
        assert sub[0] == cfg[3]

    def test_index_checks(self, d4_named: NamedConfig) -> None:
        with pytest.raises(ParameterRangeError):
            d4_named.cfg.check_index(4)


class TestFMaps:
    def test_agree_with_geometry(self, d4_named: NamedConfig) -> None:
        cfg = d4_named.cfg
        for i, j, k in cfg.triples():
            assert f_map(cfg, i, j, k).agrees_with_geometry(cfg)

    def test_swapping_source_and_target_inverts(self, d4_named: NamedConfig) -> None:
        cfg = d4_named.cfg
        for i, j, k in cfg.triples():
            assert (f_map(cfg, j, i, k) @ f_map(cfg, i, j, k)).is_identity

    def test_carries_points_of_the_orbit(self, d4_named: NamedConfig) -> None:
        cfg, Z = d4_named.cfg, d4_named.Z
        members = set(Z.entries)
        g = f_map(cfg, 0, 2, 3)
        for p in Z.slice(0):
            assert (2, g.apply_point(cfg, p)) in members

    def test_repeated_indices(self, d4_named: NamedConfig) -> None:
        with pytest.raises(ParameterRangeError):
            f_map(d4_named.cfg, 0, 0, 1)

    def test_composition_needs_matching_lines(self, d4_named: NamedConfig) -> None:
        cfg = d4_named.cfg
        with pytest.raises(ParameterRangeError):
            f_map(cfg, 0, 1, 2) @ f_map(cfg, 0, 1, 2)

    def test_inverse_reverses_the_word(self, d4_named: NamedConfig) -> None:
        cfg = d4_named.cfg
        g = f_map(cfg, 1, 2, 0) @ f_map(cfg, 0, 1, 3)
        assert g.inverse().word == ((1, 0, 3), (2, 1, 0))
        assert (g.inverse() @ g).is_identity


class TestGMap:
    def test_singular_matrix(self, qq: FieldCtx) -> None:
        one = qq.one()
        with pytest.raises(ParameterRangeError):
            GMap.of(0, 0, [[one, one], [one, one]])

    def test_scaling_is_ignored(self, qq: FieldCtx) -> None:
        a = GMap.of(0, 0, [[qq.from_int(2), qq.zero()], [qq.zero(), qq.from_int(6)]])
        b = GMap.of(0, 0, [[qq.one(), qq.zero()], [qq.zero(), qq.from_int(3)]])
        assert a == b

    def test_powers(self, gf7: FieldCtx) -> None:
        g = GMap.of(0, 0, [[gf7.from_int(3), gf7.zero()], [gf7.zero(), gf7.one()]])
        assert element_order(g) == 6
        assert (g**6).is_identity
        assert not (g**3).is_identity
        assert (g**-1 @ g).is_identity


class TestElementOrder:
    def test_generators_of_standard_construction(self, gf7: FieldCtx) -> None:
        frame = StandardFrame.over(gf7)
        cfg = frame.config(l4_from_lt(frame, 2, 3))
        for g in generators_of_Gi(cfg, 0):
            n = element_order(g)
            assert n is not None
            assert 6 % n == 0

    def test_infinite_order_over_rationals(self, frame: StandardFrame) -> None:
        cfg = frame.config(l4_from_lt(frame, 2, 3))
        orders = [element_order(g) for g in generators_of_Gi(cfg, 0)]
        assert None in orders

    def test_unipotent_in_characteristic_p(self) -> None:
        gf5 = FieldCtx.prime_field(5)
        g = GMap.of(0, 0, [[gf5.one(), gf5.one()], [gf5.zero(), gf5.one()]])
        assert element_order(g) == 5

    def test_unipotent_over_rationals(self, qq: FieldCtx) -> None:
        g = GMap.of(0, 0, [[qq.one(), qq.one()], [qq.zero(), qq.one()]])
        assert element_order(g) is None

    def test_needs_an_endomorphism(self, d4_named: NamedConfig) -> None:
        with pytest.raises(ParameterRangeError):
            element_order(f_map(d4_named.cfg, 0, 1, 2))


def _random_config(ctx: FieldCtx, s: int, rng: random.Random) -> SkewConfig:
    lines: list[ProjLine] = []
    while len(lines) < s:
        coords = [[ctx.random_element(rng, 20) for _ in range(4)] for _ in range(2)]
        try:
            line = line_through(*(ProjPoint.of(c, ctx) for c in coords))
        except SkewlinesError:
            continue
        if all(are_skew(line, other) for other in lines):
            lines.append(line)
    return SkewConfig(tuple(lines))


class TestRandomConfigurations:
    @pytest.mark.parametrize("seed", range(50))
    def test_groupoid_relations(self, seed: int) -> None:
        ctx = FieldCtx.rationals() if seed < 25 else FieldCtx.prime_field(101)
        cfg = _random_config(ctx, 3 + seed % 4, random.Random(seed))
        for i, j, k in cfg.triples():
            fijk = f_map(cfg, i, j, k)
            assert (f_map(cfg, j, i, k) @ fijk).is_identity
            assert (f_map(cfg, k, i, j) @ f_map(cfg, j, k, i) @ fijk).is_identity
