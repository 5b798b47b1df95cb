"""Canonical JSON reading and writing for every document model."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from skewlines.config import get_settings
from skewlines.errors import SchemaError

M = TypeVar("M", bound=BaseModel)


def dumps(doc: BaseModel) -> str:
    """Sorted keys, two-space indent, trailing newline: equal values give equal bytes."""
    payload = doc.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(model: type[M], text: str) -> M:
    try:
        doc = model.model_validate_json(text)
    except ValidationError as e:
        raise SchemaError(f"invalid {model.__name__}: {e}") from e
    version = getattr(doc, "schema_version", None)
    expected = get_settings().schema_version
    if version is not None and version != expected:
        raise SchemaError(f"{model.__name__} has schema version {version}, expected {expected}")
    return doc


def read_document(model: type[M], path: Path) -> M:
    return loads(model, path.read_text(encoding="utf-8"))
