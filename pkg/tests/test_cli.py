"""End-to-end tests of the command-line tool."""

import json

import pandas as pd
import pytest

from fuzzypettis.cli import ExitCode
from fuzzypettis.cli.scenario import (
    load_scenario,
    parse_direction,
    parse_set_spec,
    scenario_from_dict,
)
from fuzzypettis.exceptions import DimensionMismatchError, InvalidSetError, NestingViolationError
from fuzzypettis.fuzzy import fuzzy_hausdorff
from fuzzypettis.integration import fuzzy_pettis_integral
from fuzzypettis.main import main


@pytest.fixture
def cube_scenario(tmp_path):
    path = tmp_path / "cube.json"
    corners = [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    path.write_text(json.dumps({
        "dims": 3,
        "atoms": [{"id": "c", "weight": 1.0, "levels": [{"level": 1.0, "vertices": corners}]}],
    }))
    return path


class TestIntegrate:

    def test_theta(self, fixtures_dir, capsys):
        assert main(["integrate", str(fixtures_dir / "theta.json")]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "max support residual" in out

    def test_points_to_directory(self, fixtures_dir, tmp_path):
        code = main(["integrate", str(fixtures_dir / "points.json"), "--out", str(tmp_path)])
        assert code == ExitCode.OK
        levels = pd.read_csv(tmp_path / "integral_levels.csv")
        assert levels[["x1", "x2"]].values.tolist() == [[3.0, 0.0]]
        assert (tmp_path / "residuals.csv").exists()

    def test_integral_file_reloads(self, fixtures_dir, tmp_path, two_atom_mapping):
        main(["integrate", str(fixtures_dir / "twoatom.json"), "--out", str(tmp_path)])
        reloaded = load_scenario(tmp_path / "integral.json").mapping.values[0]
        direct = fuzzy_pettis_integral(two_atom_mapping, two_atom_mapping.space.full_set()).value
        assert fuzzy_hausdorff(reloaded, direct) <= 1e-12

    def test_subset(self, fixtures_dir, capsys):
        code = main(["integrate", str(fixtures_dir / "twoatom.json"), "--set", "w1", "--prune"])
        assert code == ExitCode.OK

    def test_unknown_atom(self, fixtures_dir, capsys):
        code = main(["integrate", str(fixtures_dir / "twoatom.json"), "--set", "w9"])
        assert code == ExitCode.VALIDATION
        assert "INVALID_INDEX" in capsys.readouterr().err


class TestMalformedInput:

    @pytest.mark.parametrize("name, code, field", [
        ("bad_nesting.json", "NESTING_VIOLATION", "atoms[0].levels[1]"),
        ("parse_error.json", "PARSE", "line"),
        ("bad_weight.json", "VALIDATION", "atoms[1].weight"),
        ("bad_dims.json", "DIMENSION_MISMATCH", "atoms[0].levels[0].vertices[1]"),
    ])
    def test_exit_two_with_field(self, fixtures_dir, capsys, name, code, field):
        assert main(["integrate", str(fixtures_dir / name)]) == ExitCode.VALIDATION
        err = capsys.readouterr().err
        assert code in err
        assert field in err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "missing.json")]) == ExitCode.IO
        assert "I/O error" in capsys.readouterr().err

    def test_missing_config(self, fixtures_dir, tmp_path):
        code = main([
            "integrate", str(fixtures_dir / "theta.json"), "--config", str(tmp_path / "no.yaml")
        ])
        assert code == ExitCode.IO


class TestDecompose:

    def test_squares(self, fixtures_dir, tmp_path, capsys):
        code = main([
            "decompose", str(fixtures_dir / "squares.json"), "--direction", "1,0",
            "--out", str(tmp_path)
        ])
        assert code == ExitCode.OK
        selection = pd.read_csv(tmp_path / "selection.csv")
        assert selection[["f1", "f2"]].values.tolist() == [[1.0, 1.0]]
        assert pd.read_csv(tmp_path / "checks.csv")["zero_member"].all()
        assert "reconstruction" in capsys.readouterr().out

    def test_wrong_direction_length(self, fixtures_dir):
        code = main(["decompose", str(fixtures_dir / "squares.json"), "--direction", "1,0,0"])
        assert code == ExitCode.VALIDATION


class TestVerify:

    def test_two_atom_passes(self, fixtures_dir, tmp_path, capsys):
        code = main([
            "verify", str(fixtures_dir / "twoatom.json"), "--tail", "0.5", "10",
            "--out", str(tmp_path)
        ])
        assert code == ExitCode.OK
        report = pd.read_csv(tmp_path / "report.csv")
        assert "countable-additivity" in report["theorem"].tolist()
        assert "FAIL" not in report["status"].tolist()

    def test_seeded_output_is_reproducible(self, fixtures_dir, capsys):
        main(["verify", str(fixtures_dir / "twoatom.json"), "--seed", "7"])
        first = capsys.readouterr().out
        main(["verify", str(fixtures_dir / "twoatom.json"), "--seed", "7"])
        second = capsys.readouterr().out
        assert first == second
        assert "TRIVIAL" in first

    @pytest.mark.parametrize("tail", [["half", "20"], ["0.5", "2.5"]])
    def test_malformed_tail_is_a_usage_error(self, fixtures_dir, capsys, tail):
        with pytest.raises(SystemExit) as exit_info:
            main(["verify", str(fixtures_dir / "twoatom.json"), "--tail", *tail])
        assert exit_info.value.code == ExitCode.VALIDATION
        err = capsys.readouterr().err
        assert "--tail" in err
        assert "configuration" not in err


class TestPlotData:

    def test_squares(self, fixtures_dir, tmp_path):
        code = main(["plot-data", str(fixtures_dir / "squares.json"), "--out", str(tmp_path)])
        assert code == ExitCode.OK
        polygons = pd.read_csv(tmp_path / "polygons.csv")
        assert polygons.groupby("level").size().tolist() == [4, 4]
        first = polygons[polygons["level"] == 1.0][["x1", "x2"]].values.tolist()
        assert first == [[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]
        grid = pd.read_csv(tmp_path / "membership_grid.csv")
        assert list(grid.columns) == ["x1", "x2", "s1"]
        assert set(grid["s1"]) <= {0.0, 0.5, 1.0}

    def test_integral_polygons(self, fixtures_dir, tmp_path):
        code = main([
            "plot-data", str(fixtures_dir / "twoatom.json"), "--set", "all", "--out", str(tmp_path)
        ])
        assert code == ExitCode.OK
        polygons = pd.read_csv(tmp_path / "polygons.csv")
        assert set(polygons["label"]) == {"integral"}
        assert polygons.groupby("level").size().tolist() == [5, 5, 5]

    def test_three_dimensional_rejected(self, cube_scenario, capsys):
        assert main(["plot-data", str(cube_scenario)]) == ExitCode.VALIDATION
        assert "UNSUPPORTED_DIMENSION" in capsys.readouterr().err


class TestParsing:

    def test_set_spec(self, two_atom_mapping):
        space = two_atom_mapping.space
        assert parse_set_spec(space, "all") == space.full_set()
        assert len(parse_set_spec(space, "none")) == 0
        assert parse_set_spec(space, "w2, w1") == space.full_set()
        with pytest.raises(InvalidSetError):
            parse_set_spec(space, "w3")

    def test_direction(self):
        assert parse_direction("3,4", 2).coords.tolist() == pytest.approx([0.6, 0.8])
        with pytest.raises(DimensionMismatchError):
            parse_direction("1,0", 3)


class TestScenarioTolerances:

    @pytest.fixture
    def loose_document(self):
        """Level-1 vertex (2 + 1e-6, 0) pokes out of the level-0.5 triangle."""
        return {
            "dims": 2,
            "atoms": [{
                "id": "w1",
                "weight": 1.0,
                "levels": [
                    {"level": 0.5, "vertices": [[0, 0], [2, 0], [0, 2]]},
                    {"level": 1.0, "vertices": [[0, 0], [2.000001, 0], [0, 1]]},
                ],
            }],
            "tolerances": {"distance": 1e-3},
        }

    def test_own_tolerance_used_for_nesting(self, loose_document):
        scenario = scenario_from_dict(loose_document)
        assert scenario.tolerances["distance"] == 1e-3

    def test_fallback_when_document_has_none(self, loose_document):
        del loose_document["tolerances"]
        with pytest.raises(NestingViolationError):
            scenario_from_dict(loose_document, fallback_tol=1e-9)
        assert scenario_from_dict(loose_document, fallback_tol=1e-3).dims == 2

    def test_explicit_tolerance_wins(self, loose_document):
        with pytest.raises(NestingViolationError):
            scenario_from_dict(loose_document, tol=1e-9)

    def test_command_line_precedence(self, loose_document, tmp_path, capsys):
        path = tmp_path / "loose.json"
        path.write_text(json.dumps(loose_document))
        assert main(["integrate", str(path)]) == ExitCode.OK
        assert main(["integrate", str(path), "--tol", "1e-9"]) == ExitCode.VALIDATION
        assert "NESTING_VIOLATION" in capsys.readouterr().err
