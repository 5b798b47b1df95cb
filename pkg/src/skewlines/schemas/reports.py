"""Output documents, one per CLI subcommand."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from skewlines.schemas.documents import Coords, Element, FieldSpec, PointEntry, current_version


class GroupReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    field: FieldSpec
    lines: int
    status: str
    order: int | None = None
    lower_bound: int | None = None
    transversals: str
    transversal_count: int | None = None
    multiplicity_two: bool = False
    generators: list[Element] = Field(default_factory=list)
    elements: int = 0


class OrbitReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    field: FieldSpec
    seed: PointEntry
    capped: bool = False
    size: int | None = None
    per_line: list[int] | None = None
    points: list[PointEntry] | None = None


class CompletenessCertificate(BaseModel):
    triple: list[int] = Field(min_length=3, max_length=3)
    point: Coords
    missing: Coords


class CompletenessReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    complete: bool
    points: int
    per_line: list[int]
    certificate: CompletenessCertificate | None = None
    orbit_sizes: list[int] | None = None


class TrialReport(BaseModel):
    index: int
    seed: int
    redraws: int
    center: Coords | None = None
    status: str
    h_vector: list[int] | None = None
    reason: str = ""


class GeprociReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    type: list[int] = Field(min_length=2, max_length=2)
    status: str
    classification: str
    extension_degree: int = 1
    monte_carlo: bool
    trials: list[TrialReport]
    collinearly_complete: bool | None = None
    consistent: bool | None = None


class ClassifyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default_factory=current_version)
    m: int
    field: FieldSpec
    lambda_: int = Field(alias="lambda")
    classes: int
    signature: str
    sizes: dict[str, int]
    matches_table: bool | None = None


class CountRow(BaseModel):
    m: int
    n_m: int
    bruteforce: int | None = None
    classes: int | None = None
    signature: str | None = None


class CountReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    characteristic: int = 0
    rows: list[CountRow]
    bound_a: int | None = None
    bound_b: int | None = None


class HopfReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    q: int
    lines: int
    points: int
    covers_space: bool
    group_order: int | None = None
    multiplier_group: int
    single_orbit: bool
    geproci: GeprociReport | None = None


class EquivalenceReport(BaseModel):
    schema_version: str = Field(default_factory=current_version)
    equivalent: bool
    size: int
    matrix: list[list[Element]] | None = None
