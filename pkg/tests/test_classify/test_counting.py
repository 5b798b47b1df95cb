"""Tests for the line counts, bounds and the reference table."""

import pytest

from skewlines.classify import (
    FINAL_TABLE,
    exponent_pairs,
    line_count_bound,
    n_m_bruteforce,
    n_m_formula,
    prime_class_count,
    self_paired_root_count,
    table_row,
)
from skewlines.errors import ParameterRangeError


class TestLineCounts:
    @pytest.mark.parametrize("m", range(4, 21))
    def test_formula_matches_table_and_enumeration(self, m: int) -> None:
        row = table_row(m)
        assert row is not None
        assert n_m_formula(m) == row.size
        assert n_m_bruteforce(m) == row.size

    def test_small_m(self) -> None:
        assert n_m_formula(2) == 0
        assert n_m_formula(3) == 2
        assert exponent_pairs(3) == [(1, 1), (2, 2)]

    def test_exponent_pairs(self) -> None:
        pairs = exponent_pairs(4)
        assert len(pairs) == 6
        assert (1, 3) not in pairs
        assert (2, 2) not in pairs

    def test_characteristic_dividing_m(self) -> None:
        assert n_m_formula(6, 3) == 0
        assert n_m_formula(5, 3) == 12

    def test_self_paired(self) -> None:
        assert self_paired_root_count(5) == 12

    def test_m_too_small(self) -> None:
        with pytest.raises(ParameterRangeError):
            n_m_formula(1)


class TestTable:
    def test_sizes_split_into_sixes_and_twelves(self) -> None:
        for row in FINAL_TABLE:
            assert 6 * row.a + 12 * row.b == row.size
            assert row.a + row.b == row.classes

    def test_signature(self) -> None:
        row = table_row(6)
        assert row is not None
        assert row.signature == "6^1 12^1"
        assert table_row(21) is None


class TestBounds:
    @pytest.mark.parametrize(
        ("r", "variant", "characteristic", "expected"),
        [(3, "a", 0, 6), (4, "a", 0, 18), (3, "b", 2, 6), (4, "b", 3, 14), (4, "b", 0, 18)],
    )
    def test_line_count_bound(
        self, r: int, variant: str, characteristic: int, expected: int
    ) -> None:
        assert line_count_bound(r, variant, characteristic) == expected  # type: ignore[arg-type]

    def test_bad_variant(self) -> None:
        with pytest.raises(ParameterRangeError):
            line_count_bound(3, "c")  # type: ignore[arg-type]

    @pytest.mark.parametrize(("m", "expected"), [(5, 2), (7, 4), (11, 10), (13, 14)])
    def test_prime_class_count(self, m: int, expected: int) -> None:
        assert prime_class_count(m) == expected
        row = table_row(m)
        assert row is not None
        assert row.classes == expected

    def test_prime_class_count_needs_a_prime(self) -> None:
        with pytest.raises(ParameterRangeError):
            prime_class_count(9)
