"""Geproci verdicts by projection from seeded random centers.

A trial draws a center P off the plane w = 0, projects Z there and certifies the image
as a complete intersection. Refutations are exact for the drawn center; certification
holds for the recorded seeds only, so a geproci verdict is Monte-Carlo.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from skewlines.algebra.field import FieldCtx
from skewlines.config import get_settings
from skewlines.errors import (
    CardinalityError,
    FieldTooSmallError,
    IncidenceError,
    ParameterRangeError,
    UnequalLineCountsError,
)
from skewlines.geometry.projective import Plane, ProjPoint, points_rank, project_from_point
from skewlines.geometry.transversals import TransversalKind
from skewlines.geproci.certificate import CertificateStatus, CICertificate, ci_certificate
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import PointSet, is_collinearly_complete

logger = logging.getLogger(__name__)

TRIAL_STRIDE = 1_000_003


class GeprociStatus(StrEnum):
    GEPROCI = "geproci"
    NOT_GEPROCI = "not-geproci"
    INCONCLUSIVE = "inconclusive"


class Classification(StrEnum):
    DEGENERATE = "degenerate"
    GRID = "grid"
    HALF_GRID = "half-grid"
    NONGRID_NON_HALF_GRID = "nongrid-non-half-grid"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TrialRecord:
    index: int
    seed: int
    redraws: int
    center: ProjPoint | None
    certificate: CICertificate | None

    @property
    def status(self) -> CertificateStatus:
        if self.certificate is None:
            return CertificateStatus.INCONCLUSIVE
        return self.certificate.status

    def encode(self) -> dict[str, Any]:
        cert = self.certificate
        return {
            "index": self.index,
            "seed": self.seed,
            "redraws": self.redraws,
            "center": self.center.encode() if self.center else None,
            "status": str(self.status),
            "h_vector": list(cert.profile.h) if cert else None,
            "reason": cert.reason if cert else "no valid center within the redraw cap",
        }


@dataclass(frozen=True)
class GeprociVerdict:
    a: int
    b: int
    status: GeprociStatus
    classification: Classification
    trials: tuple[TrialRecord, ...]
    extension_degree: int = 1

    @property
    def is_geproci(self) -> bool:
        return self.status is GeprociStatus.GEPROCI

    @property
    def monte_carlo(self) -> bool:
        return self.is_geproci

    def encode(self) -> dict[str, Any]:
        return {
            "type": [self.a, self.b],
            "status": str(self.status),
            "classification": str(self.classification),
            "extension_degree": self.extension_degree,
            "monte_carlo": self.monte_carlo,
            "trials": [t.encode() for t in self.trials],
        }


# ── Fields and centers ──


def extension_for(ctx: FieldCtx, npoints: int) -> int:
    """Least e with q^e > 4 npoints^2; 1 in characteristic 0."""
    q = ctx.order
    if q is None:
        return 1
    bound = 4 * npoints * npoints
    e = 1
    while q**e <= bound:
        e += 1
    return e


def _working_points(
    points: Sequence[ProjPoint], auto_extend: bool
) -> tuple[list[ProjPoint], int]:
    ctx = points[0].ctx
    e = extension_for(ctx, len(points))
    if e == 1:
        return list(points), 1
    if not auto_extend:
        raise FieldTooSmallError(
            f"{ctx!r} is too small for {len(points)} points; needs degree {e} (use auto-extend)"
        )
    big, embed = ctx.extend_degree(e)
    logger.info("Projecting over %r (degree %d over %r)", big, e, ctx)
    return [p.map(embed) for p in points], e


def _project(
    points: Sequence[ProjPoint], rng: random.Random, redraw_cap: int
) -> tuple[ProjPoint | None, list[ProjPoint], int]:
    ctx = points[0].ctx
    plane = Plane.of([0, 0, 0, 1], ctx)
    for redraw in range(redraw_cap + 1):
        values = [ctx.random_element(rng) for _ in range(4)]
        if values[3].is_zero:
            continue
        center = ProjPoint.of(values, ctx)
        try:
            images = project_from_point(center, plane, points)
        except IncidenceError:
            continue
        if len(set(images)) == len(points):
            return center, images, redraw
    return None, [], redraw_cap


# ── Verdicts ──


def _points_of(Z: PointSet | Sequence[ProjPoint]) -> list[ProjPoint]:
    return Z.points() if isinstance(Z, PointSet) else list(Z)


def _classify(
    status: GeprociStatus,
    points: Sequence[ProjPoint],
    Z: PointSet | Sequence[ProjPoint],
    a: int,
    b: int,
    cfg: SkewConfig | None,
) -> Classification:
    if points_rank(points) <= 3:
        return Classification.DEGENERATE
    if status is not GeprociStatus.GEPROCI or cfg is None or not isinstance(Z, PointSet):
        return Classification.UNKNOWN
    per_line = Z.per_line(cfg.s)
    # b lines of a points, or a lines of b points
    if (cfg.s, per_line) not in ((b, [a] * b), (a, [b] * a)):
        return Classification.NONGRID_NON_HALF_GRID
    if cfg.census.kind is TransversalKind.INFINITE:
        return Classification.GRID
    return Classification.HALF_GRID


def is_geproci(
    Z: PointSet | Sequence[ProjPoint],
    a: int,
    b: int,
    trials: int | None = None,
    seed: int | None = None,
    *,
    cfg: SkewConfig | None = None,
    auto_extend: bool | None = None,
    redraw_cap: int | None = None,
) -> GeprociVerdict:
    """Project Z from ``trials`` random centers and certify each image as CI(a, b).

    ``cfg`` carries the lines of Z, needed to tell grids from half grids.
    """
    settings = get_settings()
    trials = settings.geproci_trials if trials is None else trials
    seed = settings.seed if seed is None else seed
    auto_extend = settings.auto_extend if auto_extend is None else auto_extend
    redraw_cap = settings.redraw_cap if redraw_cap is None else redraw_cap
    if trials < 1:
        raise ParameterRangeError(f"at least one trial is needed, got {trials}")
    points = _points_of(Z)
    if len(points) != a * b:
        raise CardinalityError(f"type ({a}, {b}) needs {a * b} points, got {len(points)}")
    work, e = _working_points(points, auto_extend)
    records = []
    for trial in range(trials):
        trial_seed = seed * TRIAL_STRIDE + trial
        rng = random.Random(trial_seed)
        center, images, redraws = _project(work, rng, redraw_cap)
        if center is None:
            logger.warning("Trial %d found no valid center in %d draws", trial, redraw_cap)
            records.append(TrialRecord(trial, trial_seed, redraws, None, None))
            continue
        cert = ci_certificate(images, a, b, rng)
        logger.debug("Trial %d: %s (h=%s)", trial, cert.status, cert.profile.h)
        records.append(TrialRecord(trial, trial_seed, redraws, center, cert))
        if cert.status is CertificateStatus.REFUTED:
            break
    statuses = {r.status for r in records}
    if CertificateStatus.REFUTED in statuses:
        status = GeprociStatus.NOT_GEPROCI
    elif statuses == {CertificateStatus.CERTIFIED}:
        status = GeprociStatus.GEPROCI
    else:
        status = GeprociStatus.INCONCLUSIVE
    verdict = GeprociVerdict(
        a, b, status, _classify(status, points, Z, a, b, cfg), tuple(records), e
    )
    logger.info("Geproci (%d, %d): %s, %s", a, b, verdict.status, verdict.classification)
    return verdict


# ── Cross-checks ──


@dataclass(frozen=True)
class CrossCheck:
    consistent: bool
    complete: bool
    verdict: GeprociVerdict
    detail: str = ""


def _equal_counts(cfg: SkewConfig, Z: PointSet) -> int:
    counts = Z.per_line(cfg.s)
    if len(set(counts)) != 1:
        raise UnequalLineCountsError(f"points per line differ: {counts}")
    return counts[0]


def chg_crosscheck(
    cfg: SkewConfig,
    Z: PointSet,
    trials: int | None = None,
    seed: int | None = None,
    *,
    auto_extend: bool | None = None,
) -> CrossCheck:
    """Collinear completeness against the geproci verdict on the same lines.

    With a points on each of b >= 3 skew lines, Z is collinearly complete exactly when
    it is a grid or an [a, b] half grid.
    """
    a = _equal_counts(cfg, Z)
    if cfg.s < 3 or a < 1:
        raise ParameterRangeError("the cross-check needs points on at least 3 lines")
    complete = bool(is_collinearly_complete(cfg, Z))
    verdict = is_geproci(Z, a, cfg.s, trials, seed, cfg=cfg, auto_extend=auto_extend)
    if verdict.status is GeprociStatus.INCONCLUSIVE:
        return CrossCheck(False, complete, verdict, "geproci trials were inconclusive")
    consistent = complete == verdict.is_geproci
    detail = "" if consistent else f"complete={complete} but verdict {verdict.status}"
    if not consistent:
        logger.warning("Cross-check disagrees: %s", detail)
    return CrossCheck(consistent, complete, verdict, detail)


def restriction_property(
    Z: PointSet,
    cfg: SkewConfig,
    a: int,
    b: int,
    line_index: int,
    trials: int | None = None,
    seed: int | None = None,
    *,
    auto_extend: bool | None = None,
) -> GeprociVerdict:
    """Drop the points of one line and certify the rest as [a, b - 1]."""
    if b < 4:
        raise ParameterRangeError(f"restriction needs b >= 4, got {b}")
    cfg.check_index(line_index)
    keep = [i for i in range(cfg.s) if i != line_index]
    sub_cfg, sub_Z = cfg.restrict(keep), Z.restrict(keep)
    return is_geproci(sub_Z, a, b - 1, trials, seed, cfg=sub_cfg, auto_extend=auto_extend)
