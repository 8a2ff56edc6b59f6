import json

from indexcoding import parse_instance, validate
from indexcoding.cli import main

from conftest import INSTANCE_DIR

EXAMPLE6 = str(INSTANCE_DIR / "example6.json")
GROUPCAST3 = str(INSTANCE_DIR / "groupcast3.json")
CYCLE3 = str(INSTANCE_DIR / "cycle3.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "solve", EXAMPLE6)
        assert code == 0
        data = json.loads(out)
        assert data["rate"] == 3
        assert data["transmissions"] == [[1, 3, 4], [2, 5], [6]]
        assert data["solver"] == "exact"
        assert len(data["assignments"]) == 6

    def test_groupcast_pair(self, capsys):
        code, out, _ = run(capsys, "solve", GROUPCAST3)
        assert code == 0
        data = json.loads(out)
        assert data["rate"] == 2
        assert data["transmissions"] == [[1, 2], [3]]
        # both demands of receiver 2 get a transmission
        origins = {tuple(a["origin"]): a["transmission"] for a in data["assignments"]}
        assert origins[(2, 1)] == 0 and origins[(2, 2)] == 1

    def test_invalid_instance_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"num_messages": 3, "receivers": [{"wants": [1], "has": [1]}]}')
        code, out, err = run(capsys, "solve", str(path))
        assert code == 1
        assert out == ""
        assert "receiver 1" in err and "overlap" in err

    def test_missing_file_exits_1(self, capsys):
        code, _, err = run(capsys, "solve", "/nonexistent.json")
        assert code == 1
        assert "cannot read" in err

    def test_usage_error_exits_1(self, capsys):
        code, _, err = run(capsys, "solve")  # missing the instance argument
        assert code == 1
        assert "usage" in err

    def test_byte_identical_stdout(self, capsys):
        _, first, _ = run(capsys, "solve", EXAMPLE6)
        _, second, _ = run(capsys, "solve", EXAMPLE6)
        assert first == second

    def test_exact_over_cap_exits_2(self, capsys):
        code, _, err = run(capsys, "solve", EXAMPLE6, "--solver", "exact", "--exact-cap", "3")
        assert code == 2
        assert "cap" in err

    def test_auto_falls_back_to_greedy(self, capsys):
        code, out, err = run(capsys, "solve", EXAMPLE6, "--exact-cap", "3")
        assert code == 0
        assert json.loads(out)["solver"] == "greedy"
        assert "falling back" in err

    def test_no_dedup_flag(self, capsys, tmp_path):
        path = tmp_path / "dup.json"
        path.write_text(
            '{"num_messages": 3, "receivers": ['
            '{"wants": [1, 2], "has": [3]}, {"wants": [1, 2], "has": [3]}]}'
        )
        code, out, _ = run(capsys, "solve", str(path), "--no-dedup")
        assert code == 0
        assert len(json.loads(out)["assignments"]) == 4

    def test_bad_word_width_exits_1(self, capsys):
        code, _, err = run(capsys, "solve", EXAMPLE6, "--word-width", "80")
        assert code == 1
        assert "word_width" in err

    def test_strict_mode_separates_equal_wants(self, capsys, tmp_path):
        path = tmp_path / "same_want.json"
        path.write_text(
            '{"num_messages": 2, "receivers": ['
            '{"wants": [1], "has": []}, {"wants": [1], "has": [2]}]}'
        )
        _, out, _ = run(capsys, "solve", str(path))
        assert json.loads(out)["rate"] == 1
        _, out, _ = run(capsys, "solve", str(path), "--strict-cross-neighbor")
        assert json.loads(out)["rate"] == 2


class TestVerify:
    def test_solve_output_verifies(self, capsys, tmp_path):
        _, out, _ = run(capsys, "solve", EXAMPLE6)
        scheme_path = tmp_path / "scheme.json"
        scheme_path.write_text(out)
        code, out, _ = run(capsys, "verify", EXAMPLE6, str(scheme_path))
        assert code == 0
        data = json.loads(out)
        assert data["symbolic_ok"] and data["random_ok"]

    def test_missing_transmission_exits_3(self, capsys, tmp_path):
        scheme_path = tmp_path / "short.json"
        scheme_path.write_text('{"rate": 2, "transmissions": [[1, 3, 4], [2, 5]]}')
        code, out, _ = run(capsys, "verify", EXAMPLE6, str(scheme_path))
        assert code == 3
        data = json.loads(out)
        assert not data["symbolic_ok"]
        assert data["unsatisfied"] == [{"virtual": 5, "origin": [6, 1], "want": 6}]

    def test_groupcast_confirms_both_demands(self, capsys, tmp_path):
        scheme_path = tmp_path / "scheme.json"
        scheme_path.write_text('{"rate": 2, "transmissions": [[1, 2], [3]]}')
        code, out, _ = run(capsys, "verify", GROUPCAST3, str(scheme_path), "--trials", "100")
        assert code == 0
        data = json.loads(out)
        by_origin = {tuple(v["origin"]): v["transmission"] for v in data["virtuals"]}
        assert (2, 1) in by_origin and (2, 2) in by_origin

    def test_bad_scheme_file_exits_1(self, capsys, tmp_path):
        scheme_path = tmp_path / "broken.json"
        scheme_path.write_text('{"transmissions": [[]]}')
        code, _, err = run(capsys, "verify", EXAMPLE6, str(scheme_path))
        assert code == 1
        assert "nonempty" in err


class TestGap:
    def test_directed_cycle(self, capsys):
        code, out, _ = run(capsys, "gap", CYCLE3)
        assert code == 0
        assert json.loads(out) == {
            "mais": 2,
            "oracle": 2,
            "cover_exact": 3,
            "cover_greedy": 3,
            "gap": 1,
            "counterexample": True,
        }

    def test_worked_example_no_gap(self, capsys):
        code, out, _ = run(capsys, "gap", EXAMPLE6)
        assert code == 0
        data = json.loads(out)
        assert data["gap"] == 0 and not data["counterexample"]

    def test_over_cap_fields_null(self, capsys):
        code, out, _ = run(capsys, "gap", EXAMPLE6, "--oracle-cap", "2")
        assert code == 0
        data = json.loads(out)
        assert data["oracle"] is None and data["gap"] is None


class TestGen:
    def test_output_is_valid_and_deterministic(self, capsys):
        code, first, _ = run(capsys, "gen", "-n", "6", "-m", "6", "-p", "0.4", "--seed", "7")
        assert code == 0
        assert validate(parse_instance(first)) == []
        _, second, _ = run(capsys, "gen", "-n", "6", "-m", "6", "-p", "0.4", "--seed", "7")
        assert first == second

    def test_zero_density(self, capsys):
        _, out, _ = run(capsys, "gen", "-n", "5", "-m", "4", "-p", "0")
        inst = parse_instance(out)
        assert all(not r.has for r in inst.receivers)

    def test_full_density_unicast_solves_at_rate_1(self, capsys, tmp_path):
        _, out, _ = run(capsys, "gen", "-n", "5", "-m", "6", "-p", "1", "--seed", "2")
        path = tmp_path / "dense.json"
        path.write_text(out)
        code, out, _ = run(capsys, "solve", str(path))
        assert code == 0
        assert json.loads(out)["rate"] == 1

    def test_infeasible_parameters_exit_1(self, capsys):
        code, _, err = run(capsys, "gen", "-n", "3", "-m", "2", "-p", "0.5",
                           "--demand-min", "2", "--demand-max", "5")
        assert code == 1
        assert "demand range" in err


class TestExportDot:
    def test_bipartite(self, capsys):
        code, out, _ = run(capsys, "export-dot", GROUPCAST3, "--variant", "bipartite")
        assert code == 0
        assert out.startswith("graph index_coding {")
        assert out.count("shape=box") == 3

    def test_derived_with_overlay(self, capsys):
        code, out, _ = run(capsys, "export-dot", EXAMPLE6, "--variant", "derived",
                           "--overlay-cover")
        assert code == 0
        assert out.count("style=filled") == 6
        assert sum("--" in line for line in out.splitlines()) == 4

    def test_parse_error_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        code, _, err = run(capsys, "export-dot", str(path))
        assert code == 1
        assert "malformed" in err


class TestPipelineClosure:
    def test_solve_then_verify_on_random_instances(self, capsys, tmp_path):
        for seed in range(10):
            gen_code, inst_text, _ = run(
                capsys, "gen", "-n", "6", "-m", "5", "-p", "0.5",
                "--demand-min", "1", "--demand-max", "2", "--seed", str(seed),
            )
            assert gen_code == 0
            inst_path = tmp_path / f"inst{seed}.json"
            inst_path.write_text(inst_text)
            solve_code, scheme_text, _ = run(capsys, "solve", str(inst_path))
            assert solve_code == 0
            scheme_path = tmp_path / f"scheme{seed}.json"
            scheme_path.write_text(scheme_text)
            verify_code, report, _ = run(capsys, "verify", str(inst_path), str(scheme_path))
            assert verify_code == 0, report
