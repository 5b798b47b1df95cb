"""Common shape of every generated configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import PointSet


@dataclass(frozen=True)
class Expected:
    """Values a construction guarantees; None where nothing is claimed."""

    orbits: int | None = None
    per_line: int | None = None
    group_order: int | None = None
    geproci_type: tuple[int, int] | None = None

    def encode(self) -> dict[str, Any]:
        return {
            "orbits": self.orbits,
            "per_line": self.per_line,
            "group_order": self.group_order,
            "geproci_type": list(self.geproci_type) if self.geproci_type else None,
        }


@dataclass(frozen=True)
class NamedConfig:
    """A labelled configuration, its point set and what is known about them.

    ``params`` keeps the construction inputs (root of unity, subgroup, seeds) that
    later checks need.
    """

    label: str
    cfg: SkewConfig
    Z: PointSet
    expected: Expected = field(default_factory=Expected)
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        self.Z.validate(self.cfg)

    def encode(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "config": self.cfg.encode(),
            "points": self.Z.encode(),
            "expected": self.expected.encode(),
        }
