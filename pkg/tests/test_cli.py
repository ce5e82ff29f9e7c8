"""CLI: exit codes, JSON/CSV shapes, guards, and deterministic output."""

import json

import numpy as np
import pytest

from majorana_braids.cli import main
from majorana_braids.linalg import matrix_to_json
from majorana_braids.representations import SWAP


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestBuildRep:
    def test_ivanov_basic(self, capsys):
        code, data = run_json(capsys, "build-rep", "--family", "ivanov", "--n", "4")
        assert code == 0
        assert data["strands"] == 4 and data["dim"] == 4
        assert len(data["generators"]) == 3
        assert data["braid_residual"] < 1e-10

    def test_fibonacci(self, capsys):
        code, data = run_json(capsys, "build-rep", "--family", "fibonacci")
        assert code == 0
        assert len(data["generators"]) == 2
        assert data["generators"][0]["rows"] == 2
        assert data["braid_residual"] < 1e-12

    def test_temperley_lieb(self, capsys):
        code, data = run_json(capsys, "build-rep", "--family", "temperley-lieb", "--n", "4")
        assert code == 0
        assert data["loop_value"] == pytest.approx(np.sqrt(2.0))
        assert data["tl_residual"] < 1e-10

    def test_dimension_guard_exits_one(self, capsys):
        code = main(["build-rep", "--family", "ivanov", "--n", "99"])
        capsys.readouterr()
        assert code == 1

    def test_unknown_family_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["build-rep", "--family", "nonsense", "--n", "4"])
        assert exc.value.code == 2

    def test_missing_n_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["build-rep", "--family", "ivanov"])
        assert exc.value.code == 2

    def test_writes_file(self, capsys, tmp_path):
        out = tmp_path / "rep.json"
        code, _ = run(capsys, "build-rep", "--family", "ivanov", "--n", "4", "--out", str(out))
        assert code == 0
        assert json.loads(out.read_text())["family"] == "ivanov"


class TestVerify:
    def test_family_braid_and_order(self, capsys):
        code, data = run_json(
            capsys, "verify", "--family", "ivanov", "--n", "6", "--checks", "braid,order"
        )
        assert code == 0 and data["pass"]
        by_check = {c["check"]: c for c in data["checks"]}
        assert by_check["braid-relations"]["pass"]
        orders = [w["detail"]["order"] for w in by_check["generator-order"]["witnesses"]]
        assert orders == [8] * 5

    def test_matrix_ybe_and_entangling(self, capsys, tmp_path):
        path = tmp_path / "r_gate.json"
        code, _ = run(capsys, "export", "--what", "r-gate", "--out", str(path))
        assert code == 0
        code, data = run_json(
            capsys, "verify", "--matrix", str(path), "--checks", "ybe,entangling"
        )
        assert code == 0 and data["pass"]
        ent = next(c for c in data["checks"] if c["check"] == "entangling")
        assert ent["witnesses"][0]["detail"]["max_determinant"] > 0.4

    def test_swap_fails_entangling(self, capsys, tmp_path):
        path = tmp_path / "swap.json"
        path.write_text(json.dumps(matrix_to_json(SWAP)))
        code, data = run_json(capsys, "verify", "--matrix", str(path), "--checks", "entangling")
        assert code == 1 and not data["pass"]

    def test_extraspecial_family_checks(self, capsys):
        code, data = run_json(
            capsys,
            "verify", "--family", "extraspecial-bell", "--n", "3",
            "--checks", "braid,string,extraspecial",
        )
        assert code == 0 and data["pass"]

    def test_conjugation_check(self, capsys):
        code, data = run_json(
            capsys, "verify", "--family", "ivanov", "--n", "4", "--checks", "conjugation"
        )
        assert code == 0
        conj = data["checks"][0]
        assert conj["params"]["t_squared_is_identity"] is False

    def test_default_checks_applied(self, capsys):
        code, data = run_json(capsys, "verify", "--family", "temperley-lieb", "--n", "4")
        assert code == 0
        assert [c["check"] for c in data["checks"]] == ["temperley-lieb"]

    def test_fibonacci_default_skips_order_but_allows_it(self, capsys):
        code, data = run_json(capsys, "verify", "--family", "fibonacci")
        assert code == 0
        assert [c["check"] for c in data["checks"]] == ["braid-relations"]
        # order 20 exceeds the cap of 16: explicit request reports it and fails
        code, data = run_json(capsys, "verify", "--family", "fibonacci", "--checks", "order")
        assert code == 1
        orders = [w["detail"]["order"] for w in data["checks"][0]["witnesses"]]
        assert orders == ["exceeds cap"] * 2

    def test_jones_and_quaternion_triple_orders(self, capsys):
        code, data = run_json(capsys, "verify", "--family", "jones", "--n", "4")
        assert code == 0
        by_check = {c["check"]: c for c in data["checks"]}
        orders = [w["detail"]["order"] for w in by_check["generator-order"]["witnesses"]]
        assert orders == [16] * 3
        code, data = run_json(capsys, "verify", "--family", "quaternion-triple")
        assert code == 0
        by_check = {c["check"]: c for c in data["checks"]}
        orders = [w["detail"]["order"] for w in by_check["generator-order"]["witnesses"]]
        assert orders == [8] * 3

    def test_build_all_families(self, capsys):
        for family, n in (
            ("ivanov-circular", "5"),
            ("extraspecial-bell", "3"),
            ("jones", "4"),
            ("quaternion-triple", None),
        ):
            argv = ["build-rep", "--family", family] + (["--n", n] if n else [])
            code, data = run_json(capsys, *argv)
            assert code == 0 and data["braid_residual"] < 1e-10

    def test_malformed_matrix_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--matrix", str(bad), "--checks", "ybe"])
        assert exc.value.code == 2

    def test_inapplicable_check_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--family", "ivanov", "--n", "4", "--checks", "ybe"])
        assert exc.value.code == 2

    def test_requires_exactly_one_source(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--checks", "braid"])
        assert exc.value.code == 2


class TestEvolve:
    def test_linear_function(self, capsys):
        code, data = run_json(
            capsys,
            "evolve", "--n", "4", "--k", "1", "--fn", "linear",
            "--samples", "5001", "--t1", "0.5",
        )
        assert code == 0 and data["pass"]
        assert data["residual"] < 1e-6

    def test_schedule_file(self, capsys, tmp_path):
        times = np.linspace(0.0, 1.0, 1001)
        sched = {"times": list(times), "thetas": list(np.sin(times))}
        path = tmp_path / "sched.json"
        path.write_text(json.dumps(sched))
        code, data = run_json(
            capsys, "evolve", "--n", "4", "--k", "2", "--schedule", str(path), "--tol", "1e-4"
        )
        assert code == 0 and data["residual"] < 1e-4

    def test_missing_source_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["evolve", "--n", "4", "--k", "1"])
        assert exc.value.code == 2


class TestScanGap:
    def test_line_scan_minimum_at_equal_couplings(self, capsys):
        code, data = run_json(
            capsys,
            "scan-gap", "--N", "4", "--boundary", "periodic",
            "--t1", "0:2:21", "--t2", "1",
        )
        assert code == 0
        points = data["points"]
        assert len(points) == 21
        gaps = [p["gap"] for p in points]
        assert gaps.index(min(gaps)) == 10
        assert min(gaps) < 1e-8

    def test_single_point(self, capsys):
        code, data = run_json(
            capsys, "scan-gap", "--N", "2", "--boundary", "open", "--t1", "1", "--t2", "0.5"
        )
        assert code == 0 and len(data["points"]) == 1

    def test_csv_format(self, capsys):
        code, out = run(
            capsys,
            "scan-gap", "--N", "2", "--boundary", "open",
            "--t1", "0:1:3", "--t2", "1", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "theta1_dot,theta2_dot,gap,N,boundary"
        assert len(lines) == 4
        assert lines[1].endswith(",2,open")

    def test_dimension_guard(self, capsys):
        code = main(["scan-gap", "--N", "20", "--boundary", "open", "--t1", "1", "--t2", "1"])
        capsys.readouterr()
        assert code == 1

    def test_malformed_grid_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan-gap", "--N", "2", "--t1", "0:2", "--t2", "1"])
        assert exc.value.code == 2


class TestExport:
    @pytest.mark.parametrize("what", ["r-gate", "b-ii", "bell-m", "bell-a", "bell-b", "swap"])
    def test_exports_square_matrix(self, capsys, what):
        code, data = run_json(capsys, "export", "--what", what)
        assert code == 0
        assert data["rows"] == data["cols"] == 4
        assert data["name"] == what


def test_deterministic_output(capsys):
    _, first = run(capsys, "build-rep", "--family", "ivanov", "--n", "4")
    _, second = run(capsys, "build-rep", "--family", "ivanov", "--n", "4")
    assert first == second
    _, a = run(capsys, "scan-gap", "--N", "2", "--t1", "0:1:5", "--t2", "1")
    _, b = run(capsys, "scan-gap", "--N", "2", "--t1", "0:1:5", "--t2", "1")
    assert a == b
