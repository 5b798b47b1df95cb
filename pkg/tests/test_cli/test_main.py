"""Tests for the command-line front end."""

import json
from pathlib import Path
from typing import Any

import pytest

from skewlines.algebra.field import FieldCtx
from skewlines.cli import EXIT_INPUT, EXIT_OK, EXIT_REFUTED, main, parse_field
from skewlines.constructions import NamedConfig
from skewlines.errors import SkewlinesError
from skewlines.schemas import PointsDocument, dumps


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict[str, Any]]:
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, json.loads(out) if out else {}


@pytest.fixture
def d4_path(tmp_path: Path) -> Path:
    path = tmp_path / "d4.json"
    assert main(["construct", "--name", "D4", "--output", str(path)]) == EXIT_OK
    return path


class TestParseField:
    def test_shorthands(self) -> None:
        assert parse_field("Q") == FieldCtx.rationals()
        assert parse_field("gf:7") == FieldCtx.prime_field(7)
        assert parse_field("cyclo:5").cyclotomic_index == 5

    def test_json(self) -> None:
        assert parse_field('{"kind": "GF", "p": 11}') == FieldCtx.prime_field(11)

    @pytest.mark.parametrize("text", ["gf:6", "nonsense"])
    def test_bad(self, text: str) -> None:
        with pytest.raises(SkewlinesError):
            parse_field(text)


class TestConstruct:
    def test_writes_a_config(self, d4_path: Path) -> None:
        payload = json.loads(d4_path.read_text(encoding="utf-8"))
        assert payload["label"] == "D4"
        assert len(payload["lines"]) == 4
        assert len(payload["points"]) == 12
        assert payload["expected"]["group_order"] == 3

    def test_grid_to_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(capsys, "construct", "--name", "grid", "--a", "2", "--b", "3")
        assert status == EXIT_OK
        assert len(payload["points"]) == 6

    def test_bad_parameters(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["construct", "--name", "std-mult", "--m", "2"]) == EXIT_INPUT
        assert capsys.readouterr().out == ""


class TestAnalysis:
    def test_group(self, d4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(capsys, "group", "--config", str(d4_path))
        assert status == EXIT_OK
        assert payload["order"] == 3
        assert payload["transversal_count"] == 2

    def test_orbit(self, d4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(
            capsys, "orbit", "--config", str(d4_path), "--line", "0", "--point", "[0, 1, 1, 1]"
        )
        assert status == EXIT_OK
        assert payload["size"] == 12
        assert payload["per_line"] == [3, 3, 3, 3]

    def test_complete(self, d4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(capsys, "complete", "--config", str(d4_path))
        assert status == EXIT_OK
        assert payload["complete"]
        assert payload["orbit_sizes"] == [12]

    def test_incomplete(
        self,
        d4_path: Path,
        d4_named: NamedConfig,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        points = tmp_path / "points.json"
        Z = d4_named.Z.without(d4_named.Z.entries[0])
        points.write_text(dumps(PointsDocument.from_points(Z, d4_named.cfg.ctx)), encoding="utf-8")
        status, payload = _run(
            capsys, "complete", "--config", str(d4_path), "--points", str(points)
        )
        assert status == EXIT_REFUTED
        assert not payload["complete"]
        assert len(payload["certificate"]["triple"]) == 3

    def test_geproci(self, d4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(
            capsys, "geproci", "--config", str(d4_path), "--trials", "1", "--crosscheck"
        )
        assert status == EXIT_OK
        assert payload["type"] == [3, 4]
        assert payload["status"] == "geproci"
        assert payload["classification"] == "half-grid"
        assert payload["consistent"]
        assert payload["trials"][0]["h_vector"] == [1, 2, 3, 3, 2, 1]

    def test_equiv(self, d4_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(
            capsys, "equiv", "--config", str(d4_path), "--other-config", str(d4_path)
        )
        assert status == EXIT_OK
        assert payload["equivalent"]
        assert payload["size"] == 12


class TestClassification:
    def test_classify(self, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(capsys, "classify", "--m", "5")
        assert status == EXIT_OK
        assert payload["lambda"] == 12
        assert payload["classes"] == 2
        assert payload["matches_table"]

    def test_count(self, capsys: pytest.CaptureFixture[str]) -> None:
        status, payload = _run(
            capsys, "count", "--nm", "4..6", "--check", "--table", "--bound", "4"
        )
        assert status == EXIT_OK
        assert [row["n_m"] for row in payload["rows"]] == [6, 12, 18]
        assert all(row["bruteforce"] == row["n_m"] for row in payload["rows"])
        assert payload["rows"][2]["signature"] == "6^1 12^1"
        assert (payload["bound_a"], payload["bound_b"]) == (18, 18)

    def test_count_bad_range(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["count", "--nm", "6..4"]) == EXIT_INPUT
        assert "empty range" in capsys.readouterr().err

    def test_hopf(self, tmp_path: Path) -> None:
        out = tmp_path / "hopf.json"
        assert main(["hopf", "--q", "3", "--output", str(out)]) == EXIT_OK
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["lines"] == 10
        assert payload["covers_space"]
        assert payload["single_orbit"]
        assert payload["multiplier_group"] == 4


class TestInputErrors:
    def test_missing_config(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["group", "--config", str(tmp_path / "missing.json")]) == EXIT_INPUT
        assert "group" in capsys.readouterr().err

    def test_bad_point(self, d4_path: Path) -> None:
        argv = ["orbit", "--config", str(d4_path), "--line", "0", "--point", "[1, 2"]
        assert main(argv) == EXIT_INPUT

    def test_geproci_without_points(self, tmp_path: Path) -> None:
        path = tmp_path / "lines.json"
        payload = {
            "schema_version": "1",
            "field": {"kind": "Q"},
            "lines": [
                {"forms": [[1, 0, 0, 0], [0, 1, 0, -1]]},
                {"forms": [[0, 0, 1, 0], [1, 0, 0, -1]]},
                {"forms": [[0, 1, 0, 0], [0, 0, 1, -1]]},
            ],
        }
        path.write_text(json.dumps(payload), encoding="utf-8")
        assert main(["geproci", "--config", str(path)]) == EXIT_INPUT
