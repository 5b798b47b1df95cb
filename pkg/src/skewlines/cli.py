"""Command-line front end: every subcommand writes one JSON document.

Exit status 0 means success, 1 a mathematical refutation (not geproci, not complete,
not equivalent) and 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from skewlines.algebra.field import FieldCtx
from skewlines.algebra.roots import cyclotomic_field
from skewlines.classify import (
    class_partition,
    line_count_bound,
    n_m_bruteforce,
    n_m_formula,
    table_row,
)
from skewlines.config import get_settings
from skewlines.constructions import (
    MultVariant,
    NamedConfig,
    NamedLabel,
    grid_config,
    hopf_multiplier_group,
    hopf_spread,
    named_example,
    standard_construction_add,
    standard_construction_mult,
)
from skewlines.errors import SchemaError, SkewlinesError
from skewlines.geometry.projective import projective_points
from skewlines.geproci import chg_crosscheck, is_geproci
from skewlines.groupoid import (
    PointSet,
    SkewConfig,
    group_analysis,
    is_collinearly_complete,
    orbit,
    orbit_decomposition,
    projective_equivalence_of_orbits,
)
from skewlines.schemas import (
    ClassifyReport,
    CompletenessCertificate,
    CompletenessReport,
    ConfigDocument,
    CountReport,
    CountRow,
    EquivalenceReport,
    FieldSpec,
    GeprociReport,
    GroupReport,
    HopfReport,
    OrbitReport,
    PointEntry,
    PointsDocument,
    dumps,
    read_document,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2

Outcome = tuple[BaseModel, int]


# ── Input helpers ──


def parse_field(text: str) -> FieldCtx:
    """"Q", "gf:q", "cyclo:m" or a JSON field document."""
    value = text.strip()
    if value.upper() == "Q":
        return FieldCtx.rationals()
    head, _, tail = value.partition(":")
    if head.lower() == "gf" and tail:
        return FieldCtx.galois(int(tail))
    if head.lower() == "cyclo" and tail:
        return cyclotomic_field(int(tail))
    try:
        return FieldSpec.model_validate_json(value).to_ctx()
    except ValueError as e:
        raise SchemaError(f"cannot read field {text!r}: {e}") from e


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    start = int(lo)
    stop = int(hi) if sep else start
    if stop < start:
        raise SchemaError(f"empty range {text!r}")
    return range(start, stop + 1)


def _type_pair(text: str) -> tuple[int, int]:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 2:
        raise SchemaError(f"expected a,b, got {text!r}")
    return parts[0], parts[1]


def _load(config: Path, points: Path | None) -> tuple[SkewConfig, PointSet | None]:
    doc = read_document(ConfigDocument, config)
    cfg = doc.to_config()
    if points is not None:
        return cfg, read_document(PointsDocument, points).to_points(cfg)
    return cfg, doc.to_points(cfg)


def _load_with_points(config: Path, points: Path | None) -> tuple[SkewConfig, PointSet]:
    cfg, Z = _load(config, points)
    if Z is None:
        raise SchemaError(f"{config} carries no points; pass --points")
    return cfg, Z


# ── Subcommands ──


def _construct(args: argparse.Namespace) -> Outcome:
    ctx = parse_field(args.field) if args.field else None
    base = FieldCtx.rationals() if ctx is None else ctx
    name = args.name
    named: NamedConfig
    if name == "std-mult":
        named = standard_construction_mult(args.m, base, args.variant)
    elif name == "std-add":
        named = standard_construction_add(list(FieldCtx.galois(args.q).elements()))
    elif name == "hopf":
        named = hopf_spread(args.q)
    elif name == "grid":
        named = grid_config(args.a, args.b, base)
    else:
        named = named_example(name, ctx)
    doc = ConfigDocument.from_config(
        named.cfg, named.Z, label=named.label, expected=named.expected.encode()
    )
    return doc, EXIT_OK


def _group(args: argparse.Namespace) -> Outcome:
    cfg, _ = _load(args.config, None)
    desc = group_analysis(cfg, args.closure_cap)
    report = GroupReport(
        field=FieldSpec.from_ctx(cfg.ctx),
        lines=cfg.s,
        status=str(desc.status),
        order=desc.order,
        lower_bound=desc.lower_bound,
        transversals=str(desc.transversals.kind),
        transversal_count=desc.transversal_count,
        multiplicity_two=desc.multiplicity_two,
        generators=[g.ctx.encode_element(g) for g in desc.generators],
        elements=len(desc.elements),
    )
    return report, EXIT_OK


def _orbit(args: argparse.Namespace) -> Outcome:
    cfg, _ = _load(args.config, None)
    try:
        coords = json.loads(args.point)
    except json.JSONDecodeError as e:
        raise SchemaError(f"--point is not JSON: {e}") from e
    seed = PointEntry(line=args.line, coords=coords)
    found = orbit(cfg, seed.to_entry(cfg.ctx), args.orbit_cap)
    report = OrbitReport(field=FieldSpec.from_ctx(cfg.ctx), seed=seed, capped=found is None)
    if found is not None:
        report.size = len(found)
        report.per_line = found.per_line(cfg.s)
        report.points = [PointEntry.from_entry(e) for e in found]
    return report, EXIT_OK


def _complete(args: argparse.Namespace) -> Outcome:
    cfg, Z = _load_with_points(args.config, args.points)
    result = is_collinearly_complete(cfg, Z)
    report = CompletenessReport(
        complete=result.complete, points=len(Z), per_line=Z.per_line(cfg.s)
    )
    if result.certificate is not None:
        triple, z, missing = result.certificate
        report.certificate = CompletenessCertificate(
            triple=list(triple), point=z.encode(), missing=missing.encode()
        )
    if result.complete:
        report.orbit_sizes = [len(o) for o in orbit_decomposition(cfg, Z, args.orbit_cap)]
    return report, EXIT_OK if result.complete else EXIT_REFUTED


def _geproci(args: argparse.Namespace) -> Outcome:
    cfg, Z = _load_with_points(args.config, args.points)
    complete = consistent = None
    if args.crosscheck:
        check = chg_crosscheck(cfg, Z, args.trials, args.seed, auto_extend=args.auto_extend)
        verdict = check.verdict
        complete, consistent = check.complete, check.consistent
    else:
        a, b = _type_pair(args.type) if args.type else (len(Z) // cfg.s, cfg.s)
        verdict = is_geproci(
            Z, a, b, args.trials, args.seed, cfg=cfg, auto_extend=args.auto_extend
        )
    report = GeprociReport.model_validate(verdict.encode())
    report.collinearly_complete = complete
    report.consistent = consistent
    return report, EXIT_OK if verdict.is_geproci else EXIT_REFUTED


def _classify(args: argparse.Namespace) -> Outcome:
    ctx = parse_field(args.field) if args.field else None
    partition = class_partition(args.m, ctx)
    row = table_row(args.m)
    matches = None
    if row is not None and partition.ctx.characteristic == 0:
        matches = (row.classes, row.a, row.b) == (partition.class_count, partition.a, partition.b)
    report = ClassifyReport(
        m=args.m,
        field=FieldSpec.from_ctx(partition.ctx),
        lambda_=partition.total,
        classes=partition.class_count,
        signature=partition.signature,
        sizes={str(k): v for k, v in sorted(partition.sizes.items())},
        matches_table=matches,
    )
    return report, EXIT_OK


def _count(args: argparse.Namespace) -> Outcome:
    p = args.char
    rows = []
    for m in _int_range(args.nm):
        if m < 1:
            raise SchemaError(f"m must be positive, got {m}")
        row = CountRow(m=m, n_m=0 if m == 1 else n_m_formula(m, p))
        if args.check and m > 1 and p == 0:
            row.bruteforce = n_m_bruteforce(m)
        ref = table_row(m)
        if args.table and ref is not None:
            row.classes, row.signature = ref.classes, ref.signature
        rows.append(row)
    report = CountReport(characteristic=p, rows=rows)
    if args.bound is not None:
        report.bound_a = line_count_bound(args.bound, "a", p)
        report.bound_b = line_count_bound(args.bound, "b", p)
    return report, EXIT_OK


def _hopf(args: argparse.Namespace) -> Outcome:
    named = hopf_spread(args.q)
    cfg, Z = named.cfg, named.Z
    space = set(projective_points(cfg.ctx))
    first = orbit(cfg, Z.entries[0], len(Z))
    report = HopfReport(
        q=args.q,
        lines=cfg.s,
        points=len(Z),
        covers_space=set(Z.points()) == space and len(Z) == len(space),
        group_order=group_analysis(cfg, args.closure_cap).order,
        multiplier_group=len(hopf_multiplier_group(args.q)),
        single_orbit=first is not None and len(first) == len(Z),
    )
    status = EXIT_OK
    if args.geproci:
        verdict = is_geproci(
            Z, args.q + 1, cfg.s, args.trials, args.seed, cfg=cfg, auto_extend=True
        )
        report.geproci = GeprociReport.model_validate(verdict.encode())
        status = EXIT_OK if verdict.is_geproci else EXIT_REFUTED
    return report, status


def _equiv(args: argparse.Namespace) -> Outcome:
    cfg, Z = _load_with_points(args.config, args.points)
    other_cfg, other_Z = _load_with_points(args.other_config, args.other_points)
    if other_cfg.ctx != cfg.ctx:
        raise SchemaError(f"configurations live over {cfg.ctx!r} and {other_cfg.ctx!r}")
    matrix = projective_equivalence_of_orbits(
        cfg, Z, other_Z, other_cfg, search_cap=args.search_cap
    )
    report = EquivalenceReport(
        equivalent=matrix is not None,
        size=len(Z),
        matrix=None
        if matrix is None
        else [[cfg.ctx.encode_element(c) for c in row] for row in matrix],
    )
    return report, EXIT_OK if matrix is not None else EXIT_REFUTED


# ── Parser ──


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, help="Write the JSON document here.")
    common.add_argument("--seed", type=int, default=None, help="Seed for random trials.")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    return common


def _add(
    sub: Any, name: str, handler: Callable[[argparse.Namespace], Outcome], help_text: str
) -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = sub.add_parser(name, parents=[_common()], help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlines",
        description=(
            "Skew lines in P3: groupoid orbits, half grids and geproci certificates. "
            'Fields are "Q", "gf:q", "cyclo:m" or a JSON document '
            '{"kind": "Q" | "GF" | "ext", ...}; configurations are '
            '{"schema_version", "field", "lines": [{"points" | "forms"}], "points"?}.'
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = _add(sub, "construct", _construct, "Build a named or standard configuration.")
    p.add_argument(
        "--name",
        required=True,
        choices=[*(str(x) for x in NamedLabel), "std-mult", "std-add", "hopf", "grid"],
    )
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--variant", choices=[str(v) for v in MultVariant], default="Z0")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=4)
    p.add_argument("--field", help="Field of definition.")

    p = _add(sub, "group", _group, "Describe G_L of a configuration.")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--closure-cap", type=int, default=None)

    p = _add(sub, "orbit", _orbit, "Grow the orbit of a point.")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--line", type=int, required=True)
    p.add_argument("--point", required=True, help="JSON array of 4 coordinates.")
    p.add_argument("--orbit-cap", type=int, default=None)

    p = _add(sub, "complete", _complete, "Check collinear completeness.")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--points", type=Path)
    p.add_argument("--orbit-cap", type=int, default=None)

    p = _add(sub, "geproci", _geproci, "Certify a point set as (a, b)-geproci.")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--points", type=Path)
    p.add_argument("--type", help="a,b (defaults to points per line, line count).")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--auto-extend", action="store_true", default=None)
    p.add_argument("--crosscheck", action="store_true", help="Compare with completeness.")

    p = _add(sub, "classify", _classify, "Classes of single-orbit [m, 4]-half grids.")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", help="Defaults to QQ(zeta_m).")

    p = _add(sub, "count", _count, "Admissible fourth-line counts n_m.")
    p.add_argument("--nm", default="2..20", help="m or lo..hi")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--check", action="store_true", help="Also count by brute force.")
    p.add_argument("--table", action="store_true", help="Attach the reference class counts.")
    p.add_argument("--bound", type=int, default=None, help="r for the line-count bounds.")

    p = _add(sub, "hopf", _hopf, "The Hopf spread over GF(q).")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--closure-cap", type=int, default=None)
    p.add_argument("--geproci", action="store_true")
    p.add_argument("--trials", type=int, default=2)

    p = _add(sub, "equiv", _equiv, "Search for a projectivity between two orbits.")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--points", type=Path)
    p.add_argument("--other-config", type=Path, required=True)
    p.add_argument("--other-points", type=Path)
    p.add_argument("--search-cap", type=int, default=None)
    return parser


def run(args: argparse.Namespace) -> Outcome:
    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    return handler(args)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        doc, status = run(args)
    except (SkewlinesError, ValueError, OSError) as e:
        print(f"skewlines {args.command}: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(doc)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    logger.debug("%s finished with status %d", args.command, status)
    return status
