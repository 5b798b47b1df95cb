"""Configurations of pairwise skew lines."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Any

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.errors import FieldMismatchError, NotSkewError, ParameterRangeError
from skewlines.geometry.projective import (
    ProjLine,
    Quadric,
    are_skew,
    quadric_through_skew_triple,
)
from skewlines.geometry.transversals import TransversalResult, transversal_census

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SkewConfig:
    """An ordered list of s >= 3 pairwise skew lines over one field.

    Lines are indexed from 0. Non-skew input is rejected here, never later.
    """

    lines: tuple[ProjLine, ...]
    _quadrics: dict[tuple[int, int, int], Quadric] = field(
        default_factory=dict, repr=False, compare=False
    )
    _maps: dict[tuple[int, int, int], Any] = field(default_factory=dict, repr=False, compare=False)
    _generators: dict[int, list[Any]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.lines) < 3:
            raise ParameterRangeError(
                f"a configuration needs at least 3 lines, got {len(self.lines)}"
            )
        ctx = self.lines[0].ctx
        for line in self.lines[1:]:
            if line.ctx != ctx:
                raise FieldMismatchError(f"line {line} is over {line.ctx!r}, expected {ctx!r}")
        for a, b in combinations(range(len(self.lines)), 2):
            if not are_skew(self.lines[a], self.lines[b]):
                raise NotSkewError(f"lines {a} and {b} meet: {self.lines[a]}, {self.lines[b]}")

    @classmethod
    def of(cls, lines: Sequence[ProjLine]) -> SkewConfig:
        return cls(tuple(lines))

    @property
    def ctx(self) -> FieldCtx:
        return self.lines[0].ctx

    @property
    def s(self) -> int:
        return len(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    def __getitem__(self, i: int) -> ProjLine:
        return self.lines[i]

    def check_index(self, *indices: int) -> None:
        for i in indices:
            if not 0 <= i < self.s:
                raise ParameterRangeError(f"line index {i} outside 0..{self.s - 1}")

    def triples(self) -> list[tuple[int, int, int]]:
        """All ordered triples of distinct line indices."""
        return list(permutations(range(self.s), 3))

    def quadric(self, i: int, j: int, k: int) -> Quadric:
        """Q_ijk, the smooth quadric through three of the lines."""
        a, b, c = sorted((i, j, k))
        if len({a, b, c}) != 3:
            raise ParameterRangeError(f"quadric indices must be distinct, got {(i, j, k)}")
        key = (a, b, c)
        if key not in self._quadrics:
            self._quadrics[key] = quadric_through_skew_triple(
                self.lines[a], self.lines[b], self.lines[c]
            )
        return self._quadrics[key]

    @cached_property
    def census(self) -> TransversalResult:
        result = transversal_census(self.lines)
        logger.debug("Transversal census of %d lines: %s", self.s, result.kind)
        return result

    def restrict(self, indices: Sequence[int]) -> SkewConfig:
        self.check_index(*indices)
        if len(set(indices)) != len(indices):
            raise ParameterRangeError("restriction indices must be distinct")
        return SkewConfig(tuple(self.lines[i] for i in indices))

    def embed(self, embed: Callable[[Fel], Fel]) -> SkewConfig:
        return SkewConfig(tuple(line.embed(embed) for line in self.lines))

    def encode(self) -> dict[str, Any]:
        return {
            "field": self.ctx.encode(),
            "lines": [line.encode() for line in self.lines],
        }
