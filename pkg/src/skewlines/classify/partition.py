"""Projective equivalence classes of four skew lines with |G| = m.

The fourth line L_{t,l} meets T1 at (0:0:t:1) and T2 at (l:1:0:0). Two such quadruples
are equivalent by a projectivity fixing each transversal exactly when their (t, l)
pairs are related by one of the six simultaneous cross-ratio transforms below, and by
one swapping the transversals when (t, l) is related to (1/l, 1/t).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any

from sympy import isprime

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.roots import cyclotomic_field, primitive_root_of_unity
from skewlines.classify.counting import exponent_pairs, n_m_formula, table_row
from skewlines.classify.union_find import UnionFind
from skewlines.constructions.standard import StandardFrame, l4_from_lt
from skewlines.errors import ParameterRangeError
from skewlines.groupoid.config import SkewConfig

logger = logging.getLogger(__name__)

TL = tuple[Fel, Fel]


@dataclass(frozen=True)
class ParamPair:
    """(t, l) of an admissible fourth line; the roots (alpha, gamma) are recovered."""

    t: Fel
    l: Fel

    def __post_init__(self) -> None:
        for name, v in (("t", self.t), ("l", self.l)):
            if v.is_zero or v.is_one:
                raise ParameterRangeError(f"{name} must avoid 0 and 1, got {v}")
        if (self.t * self.l).is_one:
            raise ParameterRangeError(f"lt = 1 (t={self.t}, l={self.l})")

    @property
    def key(self) -> TL:
        return (self.t, self.l)

    def recover(self) -> tuple[Fel, Fel]:
        """alpha = 1/(lt), gamma = l(1 - t)/(l - 1)."""
        t, l = self.t, self.l
        return (l * t).inverse(), l * (1 - t) / (l - 1)

    @property
    def swapped(self) -> TL:
        return (self.l.inverse(), self.t.inverse())

    def sort_key(self) -> tuple[Any, ...]:
        return (self.t.sort_key(), self.l.sort_key())

    def encode(self) -> dict[str, Any]:
        ctx = self.t.ctx
        return {"t": ctx.encode_element(self.t), "l": ctx.encode_element(self.l)}


def param_pair_from_roots(alpha: Fel, gamma: Fel) -> ParamPair:
    """t = (gamma - 1)/(alpha gamma - 1), l = (alpha gamma - 1)/(alpha gamma - alpha)."""
    ag = alpha * gamma
    if alpha.is_zero or gamma.is_zero:
        raise ParameterRangeError("alpha and gamma must be nonzero")
    if alpha.is_one or gamma.is_one or ag.is_one:
        raise ParameterRangeError(
            f"alpha, gamma and alpha * gamma must differ from 1 (alpha={alpha}, gamma={gamma})"
        )
    return ParamPair((gamma - 1) / (ag - 1), (ag - 1) / (ag - alpha))


def chi_set(pair: ParamPair | TL) -> frozenset[TL]:
    """The six pairs (t', l') reached by permuting 0, 1, oo, t and 0, 1, oo, 1/l alike."""
    t, l = pair.key if isinstance(pair, ParamPair) else pair
    one = t.ctx.one()
    # Second coordinates are 1/l' for the transforms of 1/l.
    return frozenset(
        {
            (t, l),
            (one / t, one / l),
            (one - t, l / (l - 1)),
            (one / (one - t), (l - 1) / l),
            ((t - 1) / t, one / (one - l)),
            (t / (t - 1), one - l),
        }
    )


def four_lines(pair: ParamPair, frame: StandardFrame | None = None) -> SkewConfig:
    frame = StandardFrame.over(pair.t.ctx) if frame is None else frame
    return frame.config(l4_from_lt(frame, pair.t, pair.l))


# ── Enumeration ──


def _root_field(m: int, ctx: FieldCtx | None) -> Fel:
    ctx = cyclotomic_field(m) if ctx is None else ctx
    return primitive_root_of_unity(m, ctx)


def admissible_pairs(m: int, ctx: FieldCtx | None = None) -> list[ParamPair]:
    """All (t, l) with |G| = m, one per admissible root pair, in exponent order."""
    zeta = _root_field(m, ctx)
    powers = [zeta**k for k in range(m)]
    return [param_pair_from_roots(powers[i], powers[j]) for i, j in exponent_pairs(m)]


@dataclass(frozen=True)
class ClassPartition:
    m: int
    ctx: FieldCtx
    pairs: tuple[ParamPair, ...]
    classes: tuple[tuple[ParamPair, ...], ...]

    @property
    def total(self) -> int:
        return len(self.pairs)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> Counter[int]:
        return Counter(len(c) for c in self.classes)

    @property
    def a(self) -> int:
        return self.sizes[6]

    @property
    def b(self) -> int:
        return self.sizes[12]

    @property
    def signature(self) -> str:
        return f"6^{self.a} 12^{self.b}"

    @property
    def only_6_and_12(self) -> bool:
        return 6 * self.a + 12 * self.b == self.total

    def encode(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "lambda": self.total,
            "classes": self.class_count,
            "signature": self.signature,
            "sizes": {str(k): v for k, v in sorted(self.sizes.items())},
        }


def class_partition(m: int, ctx: FieldCtx | None = None) -> ClassPartition:
    """Union-find over the admissible pairs: merge each chi-set, then (t, l) with (1/l, 1/t).

    Defaults to QQ(zeta_m). Over a finite field the counts are reported as found.
    """
    if m < 4:
        raise ParameterRangeError(f"classification needs m >= 4, got {m}")
    pairs = admissible_pairs(m, ctx)
    work = pairs[0].t.ctx
    if work.is_finite:
        logger.info("Classifying m=%d over %r; finite-field counts are not checked", m, work)
    index = {p.key: k for k, p in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    missing = 0
    for k, pair in enumerate(pairs):
        for other in (*chi_set(pair), pair.swapped):
            j = index.get(other)
            if j is None:
                missing += 1
                continue
            uf.union(k, j)
    if missing:
        logger.warning("%d transforms left the admissible set for m=%d", missing, m)
    classes = tuple(
        tuple(sorted((pairs[k] for k in group), key=ParamPair.sort_key))
        for group in uf.disjoint_sets()
    )
    partition = ClassPartition(m, work, tuple(pairs), classes)
    row = table_row(m)
    if work.characteristic == 0 and row is not None and row.classes != partition.class_count:
        logger.warning(
            "m=%d: %d classes, reference table has %d", m, partition.class_count, row.classes
        )
    logger.info(
        "m=%d: |Lambda|=%d, %d classes (%s)",
        m,
        partition.total,
        partition.class_count,
        partition.signature,
    )
    return partition


def distinct_tl_check(m: int, ctx: FieldCtx | None = None) -> bool:
    """For prime m > 2 the admissible pairs have pairwise distinct t's and distinct l's."""
    if m < 3 or not isprime(m):
        raise ParameterRangeError(f"m must be an odd prime, got {m}")
    pairs = admissible_pairs(m, ctx)
    expected = n_m_formula(m, pairs[0].t.ctx.characteristic)
    ts = {p.t for p in pairs}
    ls = {p.l for p in pairs}
    return len(pairs) == expected and len(ts) == expected and len(ls) == expected
