"""Command-line interface: subcommands, exit codes, tolerance plumbing."""

import json

import pytest

from logroots.cli import main


@pytest.fixture
def pslz_path(tmp_path):
    path = tmp_path / "pslz.json"
    assert main(["example", "pslz-section5", "--out", str(path)]) == 0
    return str(path)


class TestClassify:
    def test_exit_zero_and_output(self, pslz_path, tmp_path, capsys):
        out = tmp_path / "out.json"
        assert main(["classify", pslz_path, "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["results"][0]["result"]["canonical"] == ["(0,-1,-2)"]

    def test_pretty(self, pslz_path, capsys):
        assert main(["classify", pslz_path, "--pretty"]) == 0
        text = capsys.readouterr().out
        assert "(0,-1,-2)" in text
        assert "both" in text

    def test_exact_flag(self, pslz_path, capsys):
        assert main(["classify", pslz_path, "--exact"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["results"][0]["chern"]["exact"] is True

    def test_missing_file_is_usage_error(self, capsys):
        assert main(["classify", "/does/not/exist.json"]) == 2

    def test_invalid_document_is_schema_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"version": "1", "reps": []}))
        assert main(["classify", str(path)]) == 2

    def test_singular_matrix_is_computation_error(self, tmp_path, capsys):
        doc = {"version": "1", "reps": [{
            "n": 1, "m0": [[[0.0, 0.0]]], "m1": [[[1.0, 0.0]]]}]}
        path = tmp_path / "sing.json"
        path.write_text(json.dumps(doc))
        assert main(["classify", str(path)]) == 3


class TestChern:
    def test_json_output(self, pslz_path, capsys):
        assert main(["chern", pslz_path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["results"][0]["chern"]["c1"] == -3

    def test_pretty(self, pslz_path, capsys):
        assert main(["chern", pslz_path, "--pretty"]) == 0
        assert "c1 = -3" in capsys.readouterr().out


class TestTree:
    def test_offsets(self, capsys):
        assert main(["tree", "3", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["patterns"]) == 4
        assert doc["c1"] is None

    def test_with_degree(self, capsys):
        assert main(["tree", "3", "3", "-3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert sorted(doc["canonical"]) == ["(-1,-1,-1)", "(0,-1,-2)"]

    def test_more_punctures_flagged_conjectural(self, capsys):
        assert main(["tree", "4", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["conjectural"] is True


class TestVerify:
    def test_single_ensemble(self, capsys):
        assert main(["verify", "--ensemble", "generic", "--dim", "2",
                     "--count", "50", "--seed", "6"]) == 0
        assert "generic" in capsys.readouterr().out

    def test_report_file(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(["verify", "--ensemble", "unitary", "--dim", "2",
                     "--count", "30", "--seed", "2", "--out", str(out)]) == 0
        reports = json.loads(out.read_text())
        assert reports[0]["ok"] is True

    def test_explicit_checks(self, capsys):
        assert main(["verify", "--ensemble", "generic", "--dim", "3",
                     "--count", "20", "--checks", "sum-rule",
                     "integrality"]) == 0


class TestExample:
    def test_prints_document(self, capsys):
        assert main(["example", "aux-character"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["reps"][0]["n"] == 1

    def test_unknown_name(self, capsys):
        assert main(["example", "whatever"]) == 2


class TestTolerances:
    def test_flag_override(self, pslz_path, capsys):
        # an absurd singularity threshold rejects every unit-determinant rep
        assert main(["classify", pslz_path, "--tol-eps-sing", "10"]) == 3

    def test_config_file(self, pslz_path, tmp_path, capsys):
        cfg = tmp_path / "tol.json"
        cfg.write_text(json.dumps({"eps_sing": 10.0}))
        assert main(["classify", pslz_path, "--config", str(cfg)]) == 3

    def test_flag_beats_config(self, pslz_path, tmp_path, capsys):
        cfg = tmp_path / "tol.json"
        cfg.write_text(json.dumps({"eps_sing": 10.0}))
        assert main(["classify", pslz_path, "--config", str(cfg),
                     "--tol-eps-sing", "1e-12"]) == 0

    def test_unknown_config_key(self, pslz_path, tmp_path, capsys):
        cfg = tmp_path / "tol.json"
        cfg.write_text(json.dumps({"no_such_tolerance": 1.0}))
        assert main(["classify", pslz_path, "--config", str(cfg)]) == 2
