"""Complete-intersection certificates for finite point sets in P2.

Only linear algebra is used: kernels of evaluation matrices give the forms through
the points, and a resultant on a random line shows the two generators share no
component, so by Bezout their common zeros are exactly the ab given points.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from math import comb

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import rank
from skewlines.algebra.polys import BinaryForm, form_product, resultant
from skewlines.errors import CardinalityError, ParameterRangeError
from skewlines.geometry.projective import ProjPoint
from skewlines.geproci.hilbert import (
    Exponent,
    HilbertProfile,
    ci_h_vector,
    forms_vanishing,
    h_vector,
    monomials,
)

logger = logging.getLogger(__name__)

RESULTANT_LINE_TRIES = 5


class CertificateStatus(StrEnum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CICertificate:
    status: CertificateStatus
    profile: HilbertProfile
    reason: str = ""
    step: int | None = None

    @property
    def certified(self) -> bool:
        return self.status is CertificateStatus.CERTIFIED


def _multiply(f: Sequence[Fel], deg_f: int, exp: Exponent) -> dict[Exponent, Fel]:
    out: dict[Exponent, Fel] = {}
    for c, m in zip(f, monomials(3, deg_f), strict=True):
        if not c.is_zero:
            key = tuple(x + y for x, y in zip(m, exp, strict=True))
            out[key] = c
    return out


def _multiples(f: Sequence[Fel], a: int, b: int, ctx: FieldCtx) -> list[list[Fel]]:
    """Coefficient vectors of f * m for every monomial m of degree b - a."""
    target = monomials(3, b)
    rows = []
    for exp in monomials(3, b - a):
        prod = _multiply(f, a, exp)
        rows.append([prod.get(m, ctx.zero()) for m in target])
    return rows


def restrict_to_line(
    coeffs: Sequence[Fel], deg: int, P: ProjPoint, Q: ProjPoint
) -> BinaryForm:
    """F(s P + t Q) as a binary form of degree ``deg``."""
    ctx = P.ctx
    linear = [BinaryForm((Q[v], P[v]), 1) for v in range(3)]
    total = [ctx.zero()] * (deg + 1)
    for c, exp in zip(coeffs, monomials(3, deg), strict=True):
        if c.is_zero:
            continue
        factors = [linear[v] for v in range(3) for _ in range(exp[v])]
        term = form_product(factors, ctx) if factors else BinaryForm((ctx.one(),), 0)
        for k, e in enumerate(term.coeffs):
            total[k] = total[k] + c * e
    return BinaryForm(tuple(total), deg)


def _random_point(ctx: FieldCtx, rng: random.Random) -> ProjPoint:
    while True:
        values = [ctx.random_element(rng) for _ in range(3)]
        if any(not v.is_zero for v in values):
            return ProjPoint.of(values, ctx)


def ci_certificate(
    points: Sequence[ProjPoint],
    a: int,
    b: int,
    rng: random.Random | None = None,
    *,
    line_tries: int = RESULTANT_LINE_TRIES,
) -> CICertificate:
    """Whether the points of P2 are a reduced complete intersection of type (a, b)."""
    a, b = sorted((a, b))
    if a < 1:
        raise ParameterRangeError(f"complete intersection degrees must be positive, got {(a, b)}")
    if len(points) != a * b:
        raise CardinalityError(f"type ({a}, {b}) needs {a * b} points, got {len(points)}")
    if points[0].dim != 2:
        raise ParameterRangeError("complete intersection certificates live in P2")
    rng = rng or random.Random(0)
    ctx = points[0].ctx
    profile = h_vector(points)

    def refuted(step: int, reason: str) -> CICertificate:
        logger.debug("CI(%d, %d) refuted at step %d: %s", a, b, step, reason)
        return CICertificate(CertificateStatus.REFUTED, profile, reason, step)

    expected = ci_h_vector(a, b)
    if profile.h != expected:
        return refuted(1, f"h-vector {profile.h} differs from {expected}")
    I_a = forms_vanishing(points, a)
    if len(I_a) != (2 if a == b else 1):
        return refuted(2, f"degree {a} forms through the points: {len(I_a)}")
    F = I_a[0]
    if a == 1 and b == 1:
        return CICertificate(CertificateStatus.CERTIFIED, profile)
    I_b = forms_vanishing(points, b)
    multiples = _multiples(F, a, b, ctx)
    if len(I_b) != comb(b - a + 2, 2) + 1:
        return refuted(4, f"degree {b} forms through the points: {len(I_b)}")
    base_rank = rank(multiples)
    G = next((g for g in I_b if rank([*multiples, g]) > base_rank), None)
    if G is None:
        return refuted(4, f"no degree {b} form independent of F")
    for _ in range(line_tries):
        P, Q = _random_point(ctx, rng), _random_point(ctx, rng)
        if P == Q:
            continue
        fl, gl = restrict_to_line(F, a, P, Q), restrict_to_line(G, b, P, Q)
        if fl.is_zero or gl.is_zero:
            continue
        if not resultant(fl, gl).is_zero:
            return CICertificate(CertificateStatus.CERTIFIED, profile)
    logger.info("CI(%d, %d): resultant vanished on %d random lines", a, b, line_tries)
    return CICertificate(
        CertificateStatus.INCONCLUSIVE, profile, "F and G may share a component", 5
    )
