import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.config import Settings
from skewlines.constructions import NamedConfig, StandardFrame, d4, grid_config


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in Settings.model_fields:
        monkeypatch.delenv(f"SKEWLINES_{name.upper()}", raising=False)


@pytest.fixture
def qq() -> FieldCtx:
    return FieldCtx.rationals()


@pytest.fixture
def gf7() -> FieldCtx:
    return FieldCtx.prime_field(7)


@pytest.fixture
def frame(qq: FieldCtx) -> StandardFrame:
    return StandardFrame.over(qq)


@pytest.fixture
def d4_named() -> NamedConfig:
    return d4()


@pytest.fixture
def grid_3x4(qq: FieldCtx) -> NamedConfig:
    return grid_config(3, 4, qq)
