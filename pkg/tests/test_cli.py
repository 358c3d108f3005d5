import json

import pytest

from tripurify.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBasisVerify:
    @pytest.mark.parametrize("qubits", ["3", "4"])
    def test_passes(self, capsys, qubits):
        code, out, _ = run(capsys, "basis", "verify", "--qubits", qubits)
        assert code == 0
        assert "PASS" in out

    def test_impossible_tolerance_fails(self, capsys):
        code, _, _ = run(capsys, "basis", "verify", "--tol", "-1")
        assert code == 1


class TestPurify:
    def test_concise_round(self, capsys):
        code, out, _ = run(capsys, "purify", "--c1", "0.5")
        assert code == 0
        assert "0.163265306122" in out
        assert out.rstrip().splitlines()[-1].split() == ["total", "1"]

    def test_out_of_range_c1(self, capsys):
        code, _, err = run(capsys, "purify", "--c1", "1.5")
        assert code == 1
        assert err.startswith("error:")

    def test_coefficient_file(self, capsys, tmp_path):
        path = tmp_path / "coeffs.txt"
        path.write_text("# uniform\n0.125 0.125 0.125 0.125\n0.125,0.125,0.125,0.125\n")
        code, out, _ = run(capsys, "purify", "--coeffs", str(path))
        assert code == 0
        assert "Success" in out

    def test_coefficient_file_with_twelve_digit_rounding(self, capsys, tmp_path):
        path = tmp_path / "coeffs.txt"
        path.write_text("0.6000000000009 0 0 0.4 0 0 0 0\n")
        code, out, err = run(capsys, "purify", "--coeffs", str(path))
        assert code == 0, err
        assert out.rstrip().splitlines()[-1].split() == ["total", "1"]

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "purify", "--coeffs", str(tmp_path / "nope.txt"))
        assert code == 1
        assert "error:" in err

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "purify", "--c1", "0.5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["branches"]) == 8
        assert payload["branches"][0]["outcome"] == "000"

    def test_needs_a_source(self, capsys):
        assert main(["purify"]) == 2


class TestIterate:
    def test_closed_form_recurrence(self, capsys):
        code, out, _ = run(capsys, "iterate", "--c1", "0.45", "--rounds", "25")
        assert code == 0
        lines = out.rstrip().splitlines()
        assert lines[-1].startswith("cumulative_yield")
        last_row = lines[-2].split()
        assert last_row[0] == "25"
        assert float(last_row[2]) > 0.99

    def test_brute_force(self, capsys):
        code, out, _ = run(capsys, "iterate", "--c1", "0.6", "--rounds", "2", "--brute-force")
        assert code == 0
        assert len(out.rstrip().splitlines()) == 4

    def test_no_twirl_needs_brute_force(self, capsys):
        code, _, _ = run(capsys, "iterate", "--c1", "0.6", "--rounds", "2", "--no-twirl")
        assert code == 2


class TestSweep:
    def test_default_destination_comes_from_settings(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TRIPURIFY_OUTPUT_DIR", str(tmp_path))
        code, out, _ = run(capsys, "sweep", "--from", "0.125", "--to", "1", "--steps", "50")
        assert code == 0
        assert (tmp_path / "concise_map.csv").exists()
        assert (tmp_path / "concise_map.csv.meta.json").exists()
        assert "identity_crossing" in out

    def test_deterministic(self, capsys, tmp_path):
        first, second = tmp_path / "1.csv", tmp_path / "2.csv"
        assert main(["sweep", "--steps", "21", "--out", str(first)]) == 0
        assert main(["sweep", "--steps", "21", "--out", str(second), "--workers", "3"]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_bad_range(self, capsys, tmp_path):
        code, _, err = run(capsys, "sweep", "--from", "0.9", "--to", "0.1", "--out", str(tmp_path / "x.csv"))
        assert code == 1
        assert "violated invariant" in err


class TestWitness:
    def test_w_preset_with_thirteen_twentieths_bound(self, capsys):
        code, out, _ = run(capsys, "witness", "--c1", "0.7", "--preset", "paper-w")
        assert code == 0
        row = out.rstrip().splitlines()[-1].split()
        assert row[0] == "paper-w"
        assert row[1] == "0.65"
        assert row[5] == "yes"

    def test_single_preset(self, capsys):
        code, out, _ = run(capsys, "witness", "--c1", "0.7", "--preset", "ghz")
        assert code == 0
        row = out.rstrip().splitlines()[-1].split()
        assert row[0] == "ghz"
        assert float(row[3]) > 0
        assert row[4] == "absent"

    def test_all_presets_note_the_disagreement(self, capsys):
        code, out, _ = run(capsys, "witness", "--c1", "0.66")
        assert code == 0
        assert "note:" in out
        for name in ("paper-w", "standard-w", "ghz"):
            assert name in out

    def test_unknown_preset(self, capsys):
        assert main(["witness", "--c1", "0.5", "--preset", "bell"]) == 2


class TestByproduct:
    def test_factorized_party(self, capsys):
        code, out, _ = run(capsys, "byproduct", "--mix", "gb1gb4", "--c1", "0.6", "--outcome", "100")
        assert code == 0
        head = out.split("\npair_state\n")[0]
        fields = dict(line.split(None, 1) for line in head.splitlines())
        assert fields["factorized_party"] == "A"
        assert fields["is_pure"] == "true"
        assert fields["pair"] == "BC"

    def test_success_outcome_is_rejected(self, capsys):
        code, _, err = run(capsys, "byproduct", "--mix", "gb1gb4", "--outcome", "000")
        assert code == 1
        assert "failure outcome" in err

    def test_unknown_mixture(self, capsys):
        assert main(["byproduct", "--mix", "gb1gb9", "--outcome", "100"]) == 2


class TestChecks:
    def test_eigencheck(self, capsys):
        code, out, _ = run(capsys, "eigencheck")
        assert code == 0
        assert "basic states" in out
        assert "genuine basis" in out

    def test_seeded_check(self, capsys):
        code, out, _ = run(capsys, "check", "--samples", "10", "--seed", "5")
        assert code == 0
        assert "PASS" in out
        assert out.rstrip().splitlines()[-1].startswith("fixed_points")


class TestUsage:
    def test_no_arguments(self):
        assert main([]) == 2

    def test_unknown_command(self):
        assert main(["teleport"]) == 2

    def test_help(self, capsys):
        assert main(["--help"]) == 0
        assert "purify" in capsys.readouterr().out
