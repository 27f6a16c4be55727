import csv
import io
import json
import math
import os
import subprocess
import sys

import pytest

from mlverify.cli import main, report_from_json, report_to_json
from mlverify.registry import parse_complex


def mlv(*args, env=None):
    return subprocess.run([sys.executable, "-m", "mlverify", *args], capture_output=True,
                          text=True, env={**os.environ, **(env or {})})


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_ml_erfc(self, capsys):
        code, out, _ = run(capsys, "eval", "ml", "0.5", "1", "-1")
        assert code == 0
        assert parse_complex(out).real == pytest.approx(math.e * math.erfc(1), rel=1e-14)

    def test_zeta2(self, capsys):
        _, out, _ = run(capsys, "eval", "hurwitz_zeta", "2", "1")
        assert parse_complex(out) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    def test_gamma_half(self, capsys):
        _, out, _ = run(capsys, "eval", "gamma", "0.5")
        assert parse_complex(out) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_negative_and_imaginary_literals(self, capsys):
        code, out, _ = run(capsys, "eval", "lerch_phi", "-0.5", "2", "1+i")
        assert code == 0
        assert math.isfinite(parse_complex(out).real)

    def test_pole_is_usage_error(self, capsys):
        code, _, err = run(capsys, "eval", "gamma", "0")
        assert code == 2
        assert "pole" in err

    def test_bad_literal(self, capsys):
        assert run(capsys, "eval", "gamma", "two")[0] == 2

    def test_wrong_arity(self, capsys):
        assert run(capsys, "eval", "ml", "0.5")[0] == 2


class TestVerify:
    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "DI-DEGEN")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1"
        assert doc["summary"]["pass"] == doc["summary"]["total"] >= 1
        res = doc["results"][0]
        assert parse_complex(res["rhs"]) == pytest.approx(math.pi)

    def test_round_trip(self, capsys):
        _, out, _ = run(capsys, "verify", "GM-LAPLACE-ML")
        rep = report_from_json(out)
        assert json.loads(report_to_json(rep)) == json.loads(out)

    def test_deterministic(self, capsys):
        outs = []
        for _ in range(2):
            _, out, _ = run(capsys, "verify", "DI-PI24", "GM-LAPLACE")
            doc = json.loads(out)
            outs.append(doc["results"])
        assert outs[0] == outs[1]

    def test_jobs_match_serial(self, capsys):
        _, a, _ = run(capsys, "verify", "DI-PI24", "GM-LAPLACE-ML", "GM-MITT3")
        _, b, _ = run(capsys, "verify", "DI-PI24", "GM-LAPLACE-ML", "GM-MITT3", "--jobs", "2")
        assert json.loads(a)["results"] == json.loads(b)["results"]

    def test_failure_exit(self, capsys, monkeypatch):
        # a starved quadrature depth cannot reach the closed form
        monkeypatch.setenv("MLV_QUAD_MAX_LEVEL", "3")
        code, out, _ = run(capsys, "verify", "DI-CATALAN")
        assert code == 1
        assert json.loads(out)["summary"]["fail"] >= 1

    def test_params_file(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("m = 0.3\nb = 0.5\nc = 2\n")
        code, out, _ = run(capsys, "verify", "DI-DEGEN", "--params", str(f))
        assert code == 0
        assert parse_complex(json.loads(out)["results"][0]["params"]["m"]) == 0.3

    def test_domain_exit(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("m = 0.9\n")
        code, out, _ = run(capsys, "verify", "DI-DEGEN", "--params", str(f))
        assert code == 2
        assert json.loads(out)["results"][0]["status"] == "domain-violation"

    def test_unknown_id(self, capsys):
        assert run(capsys, "verify", "NOPE")[0] == 2

    def test_no_ids(self, capsys):
        assert run(capsys, "verify")[0] == 2

    def test_quad_tol_echoed(self, capsys):
        _, out, _ = run(capsys, "verify", "GM-LAPLACE-ML", "--quad-tol", "1e-10")
        quad = json.loads(out)["config"]["quad"]
        assert float(quad["rel_tol"]) == 1e-10 == float(quad["outer_rel_tol"])

    def test_env_level_cap_echoed(self, capsys, monkeypatch):
        monkeypatch.setenv("MLV_QUAD_MAX_LEVEL", "5")
        _, out, _ = run(capsys, "verify", "GM-LAPLACE-ML")
        assert json.loads(out)["config"]["quad"]["max_level"] == 5


class TestSweep:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "DI-PI24", "--param", "b",
                           "--values=0.3,0.5,0.8", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 3
        assert float(rows[0]["max_deviation"]) < 1e-4

    def test_json(self, capsys):
        code, out, _ = run(capsys, "sweep", "DI-CATALAN", "--param", "b", "--values=0.4,0.6")
        doc = json.loads(out)
        assert code == 0
        assert float(doc["sweep"]["max_deviation"]) < 1e-4

    def test_rhs_param_refused(self, capsys):
        code, _, err = run(capsys, "sweep", "DI-DEGEN", "--param", "m", "--values=0.2,0.3")
        assert code == 2

    def test_fixed(self, capsys):
        code, out, _ = run(capsys, "sweep", "DI-PHI-INV", "--param", "b", "--values=0.4,0.6",
                           "--fixed", "m=0.3", "--fixed", "a=i")
        assert code == 0
        assert json.loads(out)["results"][0]["params"]["a"] == "0+1i"


class TestTable:
    def test_csv_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(r["row"]) for r in rows] == list(range(1, 13))
        assert all(r["status"] == "pass" for r in rows)
        assert list(rows[0]) == ["row", "id", "closed_form", "lhs", "rhs", "rel_err", "status"]


class TestPlot:
    def _rows(self, text):
        return list(csv.DictReader(io.StringIO(text)))

    def test_exponential_column(self, capsys):
        code, out, _ = run(capsys, "plot-ml", "--b", "1", "--u", "0:10:11")
        assert code == 0
        for r in self._rows(out):
            assert float(r["value"]) == pytest.approx(math.exp(-float(r["u"])), rel=1e-12)

    def test_defaults(self, capsys):
        _, out, _ = run(capsys, "plot-ml")
        rows = self._rows(out)
        assert {r["b"] for r in rows} == {"0.25", "0.5", "0.75", "1"}
        assert all(float(r["value"]) == 1.0 for r in rows if float(r["u"]) == 0)
        half = [r for r in rows if r["b"] == "0.5" and float(r["u"]) == 10]
        assert float(half[0]["value"]) == pytest.approx(0.05614099274382259, rel=1e-12)

    def test_file_output(self, tmp_path, capsys):
        f = tmp_path / "ml.csv"
        assert run(capsys, "plot-ml", "--out", str(f))[0] == 0
        assert f.read_text().startswith("b,u,value")

    def test_unwritable(self, tmp_path, capsys):
        bad = tmp_path / "missing" / "ml.csv"
        assert run(capsys, "plot-ml", "--out", str(bad))[0] == 2

    @pytest.mark.parametrize("u", ["5", "1:0", "0:1:0", "a:b"])
    def test_bad_grid(self, u, capsys):
        assert run(capsys, "plot-ml", "--u", u)[0] == 2


class TestList:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "list", "--format", "json")
        assert code == 0
        assert len(json.loads(out)) >= 30


def test_module_entry_point():
    p = mlv("eval", "gamma", "5")
    assert p.returncode == 0
    assert parse_complex(p.stdout).real == pytest.approx(24.0, rel=1e-15)


def test_bad_subcommand():
    assert mlv("frobnicate").returncode == 2
