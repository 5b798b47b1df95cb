"""Input documents: fields, lines, point sets and configurations."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from skewlines.algebra.field import FieldCtx
from skewlines.config import get_settings
from skewlines.errors import SchemaError
from skewlines.geometry.projective import ProjLine, ProjPoint
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.orbits import Entry, PointSet

Element = int | str | list[int | str]
Coords = list[Element]


def current_version() -> str:
    return get_settings().schema_version


def _point(coords: Coords, ctx: FieldCtx) -> ProjPoint:
    return ProjPoint.of([ctx.decode_element(c) for c in coords], ctx)


class FieldSpec(BaseModel):
    kind: Literal["Q", "GF", "ext"]
    p: int | None = Field(default=None, ge=2)
    base: FieldSpec | None = None
    modulus: list[Element] | None = None
    cyclotomic: int | None = Field(default=None, ge=3)

    @model_validator(mode="after")
    def _complete(self) -> FieldSpec:
        if self.kind == "GF" and self.p is None:
            raise ValueError("a prime field needs p")
        if self.kind == "ext" and (self.base is None or not self.modulus):
            raise ValueError("an extension needs base and modulus")
        return self

    @classmethod
    def from_ctx(cls, ctx: FieldCtx) -> FieldSpec:
        return cls.model_validate(ctx.encode())

    def to_ctx(self) -> FieldCtx:
        return FieldCtx.decode(self.model_dump(exclude_none=True))


class LineSpec(BaseModel):
    """Two spanning points or two defining linear forms; points win when both are given."""

    points: list[Coords] | None = Field(default=None, min_length=2, max_length=2)
    forms: list[Coords] | None = Field(default=None, min_length=2, max_length=2)

    @model_validator(mode="after")
    def _one_of(self) -> LineSpec:
        if self.points is None and self.forms is None:
            raise ValueError("a line needs points or forms")
        return self

    @classmethod
    def from_line(cls, line: ProjLine) -> LineSpec:
        return cls.model_validate(line.encode())

    def to_line(self, ctx: FieldCtx) -> ProjLine:
        if self.points is not None:
            p, q = (_point(c, ctx) for c in self.points)
            return ProjLine.from_points(p, q)
        assert self.forms is not None
        h1, h2 = ([ctx.decode_element(c) for c in h] for h in self.forms)
        return ProjLine.from_forms(h1, h2, ctx)


class PointEntry(BaseModel):
    line: int = Field(ge=0)
    coords: Coords = Field(min_length=4, max_length=4)

    @classmethod
    def from_entry(cls, entry: Entry) -> PointEntry:
        return cls(line=entry[0], coords=entry[1].encode())

    def to_entry(self, ctx: FieldCtx) -> Entry:
        return (self.line, _point(self.coords, ctx))


def _point_set(entries: list[PointEntry], cfg: SkewConfig) -> PointSet:
    Z = PointSet.of(e.to_entry(cfg.ctx) for e in entries)
    Z.validate(cfg)
    return Z


class ConfigDocument(BaseModel):
    """A configuration, optionally with a point set and the values it is known to have."""

    schema_version: str = Field(default_factory=current_version)
    label: str | None = None
    field: FieldSpec
    lines: list[LineSpec] = Field(min_length=3)
    points: list[PointEntry] | None = None
    expected: dict[str, Any] | None = None

    @classmethod
    def from_config(
        cls,
        cfg: SkewConfig,
        Z: PointSet | None = None,
        *,
        label: str | None = None,
        expected: dict[str, Any] | None = None,
    ) -> ConfigDocument:
        return cls(
            label=label,
            field=FieldSpec.from_ctx(cfg.ctx),
            lines=[LineSpec.from_line(line) for line in cfg.lines],
            points=None if Z is None else [PointEntry.from_entry(e) for e in Z],
            expected=expected,
        )

    def to_config(self) -> SkewConfig:
        ctx = self.field.to_ctx()
        return SkewConfig(tuple(spec.to_line(ctx) for spec in self.lines))

    def to_points(self, cfg: SkewConfig) -> PointSet | None:
        return None if self.points is None else _point_set(self.points, cfg)


class PointsDocument(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    field: FieldSpec | None = None
    points: list[PointEntry]

    @classmethod
    def from_points(cls, Z: PointSet, ctx: FieldCtx) -> PointsDocument:
        return cls(field=FieldSpec.from_ctx(ctx), points=[PointEntry.from_entry(e) for e in Z])

    def to_points(self, cfg: SkewConfig) -> PointSet:
        if self.field is not None and self.field.to_ctx() != cfg.ctx:
            raise SchemaError(f"points are over {self.field.to_ctx()!r}, lines over {cfg.ctx!r}")
        return _point_set(self.points, cfg)
