import json
from fractions import Fraction as F

import pytest

from hamloc import space_from_json_dict, space_to_json_dict
from hamloc.cli import main
from corpus import cp1, cp2


@pytest.fixture
def cp1_file(tmp_path):
    path = tmp_path / "cp1.json"
    path.write_text(json.dumps(space_to_json_dict(cp1()), indent=2) + "\n")
    return str(path)


@pytest.fixture
def cp2_file(tmp_path):
    path = tmp_path / "cp2.json"
    path.write_text(json.dumps(space_to_json_dict(cp2()), indent=2) + "\n")
    return str(path)


def write_space(tmp_path, space, name="space.json"):
    path = tmp_path / name
    path.write_text(json.dumps(space_to_json_dict(space), indent=2) + "\n")
    return str(path)


class TestValidate:
    def test_pass(self, cp2_file, capsys):
        assert main(["validate", cp2_file]) == 0
        out = capsys.readouterr().out
        assert "j=0 sum = 0" in out
        assert "j=1 sum = 0" in out
        assert "consistency: pass" in out

    def test_fail_prints_sums(self, tmp_path, capsys):
        path = tmp_path / "lone.json"
        path.write_text(json.dumps({
            "torus_rank": 1, "half_dim": 1,
            "fixed_points": [{"name": "p", "moment": ["0"],
                              "weights": [[1]], "orientation_sign": 1}],
        }))
        assert main(["validate", str(path)]) == 3
        out = capsys.readouterr().out
        assert "j=0 sum = 1" in out
        assert "consistency: fail" in out

    def test_malformed_rational_is_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "torus_rank": 1, "half_dim": 1,
            "fixed_points": [{"name": "p", "moment": ["1/0"],
                              "weights": [[1]], "orientation_sign": 1}],
        }))
        assert main(["validate", str(path)]) == 2
        assert "malformed rational" in capsys.readouterr().err

    def test_invalid_json_reports_line_and_column(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{\n  \"torus_rank\": ,\n}")
        assert main(["validate", str(path)]) == 2
        err = capsys.readouterr().err
        assert "line 2" in err and "column" in err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "nope.json")]) == 2


class TestDh:
    def test_json_tent(self, cp2_file, capsys):
        assert main(["dh", cp2_file]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"breakpoints": ["0", "1", "2"],
                        "pieces": [["0", "1/2"], ["1", "-1/2"]]}

    def test_csv_uniform(self, cp1_file, capsys):
        assert main(["dh", cp1_file, "--format", "csv", "--samples", "4"]) == 0
        rows = capsys.readouterr().out.strip().splitlines()
        assert len(rows) == 5
        assert all(row.split(",")[1] == "1.000000000000" for row in rows)

    def test_csv_skips_breakpoints_by_half_step(self, cp1_file, capsys):
        main(["dh", cp1_file, "--format", "csv", "--samples", "4"])
        ts = [row.split(",")[0] for row in capsys.readouterr().out.splitlines()]
        assert ts[0] == "0.125000000000"  # 0 is a breakpoint, step/2 offset
        assert ts[-1] == "0.875000000000"
        assert ts[2] == "0.500000000000"

    def test_csv_places_env(self, cp1_file, capsys, monkeypatch):
        monkeypatch.setenv("HAMLOC_CSV_PLACES", "3")
        main(["dh", cp1_file, "--format", "csv", "--samples", "2"])
        rows = capsys.readouterr().out.strip().splitlines()
        assert rows[1] == "0.500,1.000"

    def test_empty_space_json(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({
            "torus_rank": 1, "half_dim": 1, "fixed_points": []}))
        assert main(["dh", str(path)]) == 0
        assert json.loads(capsys.readouterr().out) \
            == {"breakpoints": [], "pieces": []}

    def test_inconsistent_space_exit_code(self, tmp_path, capsys):
        path = tmp_path / "lone.json"
        path.write_text(json.dumps({
            "torus_rank": 1, "half_dim": 1,
            "fixed_points": [{"name": "p", "moment": ["0"],
                              "weights": [[1]], "orientation_sign": 1}],
        }))
        assert main(["dh", str(path)]) == 3


class TestScalars:
    def test_total_volume(self, cp2_file, capsys):
        assert main(["volume", cp2_file]) == 0
        assert capsys.readouterr().out.strip() == "1/2"

    def test_reduced_volume_at(self, cp2_file, capsys):
        assert main(["volume", cp2_file, "--at", "3/2"]) == 0
        assert capsys.readouterr().out.strip() == "1/4"

    def test_jk(self, cp2_file, capsys):
        assert main(["jk", cp2_file, "--at", "3/2"]) == 0
        assert capsys.readouterr().out.strip() == "-1/2"

    def test_jk_non_regular_exit(self, cp2_file, capsys):
        assert main(["jk", cp2_file, "--at", "1"]) == 4

    def test_bad_level_string(self, cp2_file, capsys):
        assert main(["jk", cp2_file, "--at", "x"]) == 2


class TestCharacterCmd:
    def test_cp2(self, cp2_file, capsys):
        assert main(["character", cp2_file]) == 0
        assert json.loads(capsys.readouterr().out) == {"0": 1, "1": 1, "2": 1}

    def test_non_integral_moments(self, tmp_path, capsys):
        from hamloc import build_projective
        path = write_space(tmp_path, build_projective([0, 1], F(1, 2)))
        assert main(["character", path]) == 2


class TestRr:
    def test_cp1_level3(self, tmp_path, capsys):
        from hamloc import build_projective
        path = write_space(tmp_path, build_projective([0, 1], 3))
        assert main(["rr", path, "--from", "0", "--to", "4"]) == 0
        out = capsys.readouterr().out
        rows = [line.split("\t") for line in out.strip().splitlines()[:-1]]
        assert [r[1] for r in rows] == ["1", "1", "1", "1", "0"]
        assert out.strip().splitlines()[-1] == "PASS"


class TestCut:
    def test_writes_measure_and_character(self, cp2_file, capsys):
        assert main(["cut", cp2_file, "--at", "3/2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["measure"]["breakpoints"] == ["0", "1", "3/2"]
        assert data["character"] == {"0": 1, "1": 1}

    def test_out_file(self, cp2_file, tmp_path):
        out = tmp_path / "cut.json"
        assert main(["cut", cp2_file, "--at", "1/2", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["measure"]["breakpoints"] == ["0", "1/2"]
        assert data["character"] == {"0": 1}

    def test_character_null_for_fractional_moments(self, tmp_path, capsys):
        from hamloc import build_projective
        path = write_space(tmp_path, build_projective([0, 1], F(1, 2)))
        assert main(["cut", path, "--at", "1/4"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["character"] is None

    def test_non_regular_cut(self, cp2_file, capsys):
        assert main(["cut", cp2_file, "--at", "1"]) == 4


class TestExampleAndRestrict:
    def test_example_cp1_roundtrip(self, capsys):
        assert main(["example", "cp_d", "--weights", "0,1", "--scale", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert space_from_json_dict(data) == cp1()

    def test_example_duplicate_weights(self, capsys):
        assert main(["example", "cp_d", "--weights", "0,0"]) == 2

    def test_torus_example_and_restrict(self, tmp_path, capsys):
        torus = tmp_path / "torus.json"
        assert main(["example", "cp_d_torus", "--dim", "2",
                     "--out", str(torus)]) == 0
        assert main(["restrict", str(torus), "--xi", "1,2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert space_from_json_dict(data) == cp2()

    def test_restrict_non_generic(self, tmp_path, capsys):
        torus = tmp_path / "torus.json"
        main(["example", "cp_d_torus", "--dim", "2", "--out", str(torus)])
        capsys.readouterr()
        assert main(["restrict", str(torus), "--xi", "1,1"]) == 5


class TestDeterminism:
    def test_parse_write_roundtrip_is_identity(self, tmp_path, capsys):
        main(["example", "cp_d", "--weights", "0,3,7", "--scale", "5/3"])
        first = capsys.readouterr().out
        path = tmp_path / "space.json"
        path.write_text(first)
        main(["restrict", str(path), "--xi", "1"])
        second = capsys.readouterr().out
        assert first == second

    def test_repeated_runs_byte_identical(self, cp2_file, capsys):
        main(["dh", cp2_file])
        first = capsys.readouterr().out
        main(["dh", cp2_file])
        assert capsys.readouterr().out == first
