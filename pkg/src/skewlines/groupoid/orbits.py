"""Point sets on a configuration, orbits and collinear completeness."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from skewlines.algebra.field import Fel
from skewlines.config import get_settings
from skewlines.errors import IncidenceError, NotCollinearlyCompleteError, ParameterRangeError
from skewlines.geometry.projective import ProjPoint
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.maps import GMap, f_map, generators_of_Gi

logger = logging.getLogger(__name__)

Entry = tuple[int, ProjPoint]


def _entry_key(entry: Entry) -> tuple[Any, ...]:
    return (entry[0], entry[1].sort_key())


@dataclass(frozen=True)
class PointSet:
    """Points tagged with the index of the line carrying them, sorted and deduplicated."""

    entries: tuple[Entry, ...]

    @classmethod
    def of(cls, entries: Iterable[Entry]) -> PointSet:
        return cls(tuple(sorted(set(entries), key=_entry_key)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.entries)

    def __contains__(self, entry: object) -> bool:
        return entry in set(self.entries)

    def points(self) -> list[ProjPoint]:
        return [p for _, p in self.entries]

    def slice(self, i: int) -> list[ProjPoint]:
        return [p for idx, p in self.entries if idx == i]

    def per_line(self, s: int) -> list[int]:
        counts = [0] * s
        for idx, _ in self.entries:
            counts[idx] += 1
        return counts

    def union(self, other: PointSet) -> PointSet:
        return PointSet.of((*self.entries, *other.entries))

    def without(self, entry: Entry) -> PointSet:
        if entry not in self:
            raise ParameterRangeError(f"{entry[1]} on line {entry[0]} is not in the set")
        return PointSet(tuple(e for e in self.entries if e != entry))

    def with_entry(self, entry: Entry) -> PointSet:
        return PointSet.of((*self.entries, entry))

    def validate(self, cfg: SkewConfig) -> None:
        seen: set[ProjPoint] = set()
        for idx, p in self.entries:
            cfg.check_index(idx)
            if not cfg[idx].contains(p):
                raise IncidenceError(f"{p} is not on line {idx}")
            if p in seen:
                raise IncidenceError(f"{p} appears on two lines")
            seen.add(p)

    def restrict(self, indices: Sequence[int]) -> PointSet:
        """Entries on the given lines, renumbered by position in ``indices``."""
        position = {old: new for new, old in enumerate(indices)}
        return PointSet.of((position[i], p) for i, p in self.entries if i in position)

    def encode(self) -> list[dict[str, Any]]:
        return [{"line": i, "coords": p.encode()} for i, p in self.entries]


# ── Chart helpers ──

Chart = tuple[Fel, Fel]


def _normalize_chart(s: Fel, t: Fel) -> Chart:
    if not s.is_zero:
        return (s.ctx.one(), t / s)
    return (t.ctx.zero(), t.ctx.one())


def _to_chart(cfg: SkewConfig, i: int, p: ProjPoint) -> Chart:
    return _normalize_chart(*cfg[i].chart_coords(p))


def _apply(g: GMap, c: Chart) -> Chart:
    return _normalize_chart(*g.apply(*c))


# ── Orbits ──


def orbit(cfg: SkewConfig, seed: Entry, cap: int | None = None) -> PointSet | None:
    """The groupoid orbit of a point, or None when it has more than ``cap`` points.

    The slice on L_0 is closed under the generators of G_0; every other slice is its
    image under f_{0,j,k} for a fixed k.
    """
    cap = get_settings().orbit_cap if cap is None else cap
    i, p = seed
    cfg.check_index(i)
    if not cfg[i].contains(p):
        raise IncidenceError(f"{p} is not on line {i}")
    start = _to_chart(cfg, i, p)
    if i != 0:
        start = _apply(f_map(cfg, i, 0, 1 if i != 1 else 2), start)
    gens = [g for g in generators_of_Gi(cfg, 0) if not g.is_scalar]
    base: dict[Chart, None] = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in gens:
            image = _apply(g, current)
            if image not in base:
                base[image] = None
                queue.append(image)
                if len(base) * cfg.s > cap:
                    logger.warning("Orbit exceeds cap %d", cap)
                    return None
    entries: list[Entry] = [(0, cfg[0].chart_point(*c)) for c in base]
    for j in range(1, cfg.s):
        move = f_map(cfg, 0, j, 1 if j != 1 else 2)
        entries.extend((j, cfg[j].chart_point(*_apply(move, c))) for c in base)
    result = PointSet.of(entries)
    logger.info("Orbit closed with %d points (%d per line)", len(result), len(base))
    return result


@dataclass(frozen=True)
class CompletenessResult:
    """Outcome of a completeness check; the certificate is (triple, z, missing point)."""

    complete: bool
    certificate: tuple[tuple[int, int, int], ProjPoint, ProjPoint] | None = None

    def __bool__(self) -> bool:
        return self.complete


def is_collinearly_complete(cfg: SkewConfig, Z: PointSet) -> CompletenessResult:
    """Whether Z contains every point where a triple transversal through Z meets the lines.

    The transversal through z on L_i meeting L_j and L_k crosses L_j at f_ijk(z), so
    completeness is closure under every f_ijk.
    """
    Z.validate(cfg)
    members = set(Z.entries)
    for i, j, k in cfg.triples():
        g = f_map(cfg, i, j, k)
        for z in Z.slice(i):
            image = g.apply_point(cfg, z)
            if (j, image) not in members:
                logger.debug("Z misses f_%d%d%d(%s) = %s", i, j, k, z, image)
                return CompletenessResult(False, ((i, j, k), z, image))
    return CompletenessResult(True)


def orbit_decomposition(
    cfg: SkewConfig, Z: PointSet, cap: int | None = None
) -> list[PointSet]:
    verdict = is_collinearly_complete(cfg, Z)
    if not verdict:
        raise NotCollinearlyCompleteError(
            "point set is not a union of orbits", certificate=verdict.certificate
        )
    remaining = set(Z.entries)
    orbits: list[PointSet] = []
    for entry in Z.entries:
        if entry not in remaining:
            continue
        found = orbit(cfg, entry, cap=max(len(Z), 1) if cap is None else cap)
        if found is None:
            raise NotCollinearlyCompleteError("orbit escapes the point set", certificate=entry)
        orbits.append(found)
        remaining.difference_update(found.entries)
    return orbits


def restrict(cfg: SkewConfig, Z: PointSet, indices: Sequence[int]) -> tuple[SkewConfig, PointSet]:
    """The sub-configuration on ``indices`` (at least 3) and the matching slice of Z."""
    return cfg.restrict(indices), Z.restrict(indices)
