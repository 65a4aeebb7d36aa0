import csv
import io
import json

import jsonschema
import pytest

from girthlab import schemas
from girthlab.cli import main
from girthlab.formats import alist_edges, read_alist
from girthlab.graph import make_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report_of(err):
    report = json.loads(err.strip().splitlines()[-1])
    jsonschema.validate(report, schemas.RUN_REPORT)
    jsonschema.validate(report["result"], schemas.PAYLOADS[report["command"]])
    # and back again
    assert json.loads(json.dumps(report)) == report
    return report


class TestGirth:
    @pytest.mark.parametrize(
        "argv, want",
        [
            (("--k", "3", "--q", "3"), "8"),
            (("--k", "5", "--q", "7"), "10"),
            (("--k", "9", "--q", "3", "--max-length", "12"), ">12"),
        ],
    )
    def test_examples(self, capsys, argv, want):
        code, out, err = run(capsys, "girth", *argv, "--workers", "1")
        assert code == 0
        assert out == want + "\n"
        rep = report_of(err)
        assert rep["result"]["display"] == want
        assert rep["graph"]["modulus_str"] == "x"

    def test_extension_field_header(self, capsys):
        code, _, err = run(capsys, "girth", "--k", "3", "--q", "9")
        rep = report_of(err)
        assert code == 0
        assert rep["graph"]["modulus"] == [1, 0, 1]
        assert rep["graph"]["modulus_str"] == "x^2 + 1"
        assert (rep["graph"]["p"], rep["graph"]["m"]) == (3, 2)

    @pytest.mark.parametrize("argv", [("--k", "3", "--q", "6"), ("--k", "1", "--q", "3"), ("--k", "3", "--q", "3", "--max-length", "9")])
    def test_bad_parameters(self, capsys, argv):
        code, out, err = run(capsys, "girth", *argv)
        assert code == 2 and out == ""
        assert err.startswith("girthlab: ")

    def test_argparse_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["girth", "--k", "3"])
        assert exc.value.code == 2


class TestCycles:
    def test_json_records(self, capsys):
        code, out, err = run(capsys, "cycles", "--k", "3", "--q", "3", "--length", "8")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8
        g = make_graph(3, 3)
        for line in lines:
            rec = json.loads(line)
            jsonschema.validate(rec, schemas.CYCLE_RECORD)
            assert len(rec["type"]) == 8 and len(rec["vertices"]) == 8
            verts = [g.decode(idx, pos % 2) for pos, idx in enumerate(rec["vertices"])]
            assert verts[0] == verts[1] == g.zero
            assert all(
                g.is_adjacent(verts[2 * j], verts[2 * j + 1])
                and g.is_adjacent(verts[(2 * j + 2) % 8], verts[2 * j + 1])
                for j in range(4)
            )
        assert report_of(err)["result"]["count"] == 8

    def test_empty(self, capsys):
        code, out, err = run(capsys, "cycles", "--k", "5", "--q", "3", "--length", "10")
        assert code == 0 and out == ""
        assert report_of(err)["result"]["count"] == 0

    def test_count_160(self, capsys):
        _, out, _ = run(capsys, "cycles", "--k", "3", "--q", "5", "--length", "8")
        assert len(out.splitlines()) == 160

    def test_csv(self, capsys):
        code, out, err = run(capsys, "cycles", "--k", "3", "--q", "3", "--length", "8", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0] == ["type", "vertices"]
        assert len(rows) == 9
        _, jout, _ = run(capsys, "cycles", "--k", "3", "--q", "3", "--length", "8")
        recs = [json.loads(line) for line in jout.splitlines()]
        assert [[int(x) for x in r[0].split()] for r in rows[1:]] == [r["type"] for r in recs]

    def test_deterministic(self, capsys):
        argv = ("cycles", "--k", "4", "--q", "4", "--length", "8", "--workers", "2")
        _, a, _ = run(capsys, *argv)
        _, b, _ = run(capsys, *argv)
        assert a == b and a

    def test_odd_length(self, capsys):
        code, _, _ = run(capsys, "cycles", "--k", "3", "--q", "3", "--length", "7")
        assert code == 2


class TestVerify:
    def test_ten_cycle_suite(self, capsys):
        code, out, err = run(capsys, "verify", "--theorem", "3", "--k", "5", "--q", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines and all(line.startswith("PASS ") for line in lines)
        assert report_of(err)["result"]["passed"] is True

    def test_rho(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "rho", "--q", "7")
        assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())

    @pytest.mark.parametrize(
        "argv",
        [
            ("--theorem", "2", "--k", "4", "--q", "3"),
            ("--theorem", "3", "--k", "4", "--q", "5"),
            ("--theorem", "4", "--k", "10"),
            ("--theorem", "4", "--k", "5", "--q", "5"),
            ("--theorem", "rho"),
        ],
    )
    def test_out_of_range(self, capsys, argv):
        code, out, _ = run(capsys, "verify", *argv)
        assert code == 2 and out == ""

    @pytest.mark.parametrize(
        "argv",
        [
            ("--theorem", "1", "--k", "6", "--q", "4"),
            ("--theorem", "2", "--k", "4", "--q", "5"),
            ("--theorem", "4", "--k", "4"),
            ("--theorem", "4", "--k", "9"),
        ],
    )
    def test_passes(self, capsys, argv):
        code, out, err = run(capsys, "verify", *argv)
        assert code == 0, out
        report_of(err)

    def test_failure_exit_code(self, capsys, monkeypatch):
        from girthlab import cli
        from girthlab.verify import Check

        monkeypatch.setattr(cli, "run_checks", lambda *a, **kw: [Check("ok", True), Check("bad", False, "(1, 2)")])
        code, out, err = run(capsys, "verify", "--theorem", "rho", "--q", "3")
        assert code == 1
        assert out.splitlines()[1] == "FAIL bad  counterexample: (1, 2)"
        assert report_of(err)["result"]["passed"] is False


class TestExport:
    def test_alist_header(self, capsys):
        code, out, err = run(capsys, "export", "--k", "2", "--q", "2", "--format", "alist")
        assert code == 0
        assert out.splitlines()[:2] == ["4 4", "2 2"]
        assert report_of(err)["result"]["edges"] == 8

    def test_edgelist(self, capsys):
        _, out, _ = run(capsys, "export", "--k", "3", "--q", "3", "--format", "edgelist")
        assert len(out.splitlines()) == 81

    def test_file_round_trip(self, capsys, tmp_path):
        path = tmp_path / "l43.alist"
        code, out, err = run(capsys, "export", "--k", "4", "--q", "3", "--out", str(path))
        assert code == 0 and out == ""
        assert report_of(err)["result"]["path"] == str(path)
        g = make_graph(4, 3)
        with open(path) as fh:
            _, _, cols, rows = read_alist(fh)
        edges = alist_edges(cols, rows)
        want = {
            (i, g.encode(g.right_neighbor(g.decode_left(i), c))) for i in range(g.side_size) for c in range(3)
        }
        assert edges == want

    def test_size_limit(self, capsys):
        code, out, err = run(capsys, "export", "--k", "7", "--q", "8")
        assert code == 3 and out == ""
        assert "limit" in err

    def test_io_error(self, capsys, tmp_path):
        bad = tmp_path / "missing" / "x.alist"
        code, _, err = run(capsys, "export", "--k", "2", "--q", "2", "--out", str(bad))
        assert code == 2
        assert "No such file or directory" in err


class TestWorkers:
    def test_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("GIRTHLAB_WORKERS", "3")
        _, _, err = run(capsys, "girth", "--k", "3", "--q", "3")
        assert report_of(err)["workers"] == 3
        _, _, err = run(capsys, "girth", "--k", "3", "--q", "3", "--workers", "2")
        assert report_of(err)["workers"] == 2

    def test_bad_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GIRTHLAB_WORKERS", "many")
        code, _, _ = run(capsys, "girth", "--k", "3", "--q", "3")
        assert code == 2
