import json

import pytest

from leavitt.cli import main

TOEPLITZ = {
    "vertices": ["v", "w"],
    "edges": [{"name": "c", "source": "v", "range": "v"},
              {"name": "e", "source": "v", "range": "w"}],
}
LOOP = {
    "vertices": ["v"],
    "edges": [{"name": "c", "source": "v", "range": "v"}],
}


@pytest.fixture
def toeplitz_file(tmp_path):
    path = tmp_path / "toeplitz.json"
    path.write_text(json.dumps(TOEPLITZ))
    return str(path)


@pytest.fixture
def loop_file(tmp_path):
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(LOOP))
    return str(path)


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, json.loads(out)


def test_check_l(capsys, toeplitz_file, loop_file):
    rc, out = run(capsys, ["check-l", toeplitz_file])
    assert rc == 0
    assert out["condition"] == "L" and out["holds"] is True
    rc, out = run(capsys, ["check-l", loop_file])
    assert rc == 0  # negative answers still exit 0
    assert out["holds"] is False
    assert out["witness"]["cycle"]["edges"] == ["c"]


def test_check_k_both_methods(capsys, toeplitz_file):
    rc, direct = run(capsys, ["check-k", toeplitz_file])
    assert rc == 0 and direct["holds"] is False and direct["method"] == "direct"
    rc, quot = run(capsys, ["check-k", toeplitz_file, "--method", "quotients"])
    assert rc == 0 and quot["holds"] is False and quot["method"] == "quotients"


def test_hsat(capsys, toeplitz_file):
    rc, out = run(capsys, ["hsat", toeplitz_file])
    assert rc == 0
    assert out["sets"] == [[], ["w"], ["v", "w"]]


def test_quotient(capsys, toeplitz_file):
    rc, out = run(capsys, ["quotient", toeplitz_file, "--h", "w"])
    assert rc == 0
    assert out["vertices"] == ["v"]
    assert out["edges"] == [{"name": "c", "source": "v", "range": "v"}]
    assert out["provenance"] == {"vertices": {}, "edges": {}}


def test_eval_and_equal(capsys, toeplitz_file):
    rc, out = run(capsys, ["eval", toeplitz_file, "v - ee*"])
    assert rc == 0
    assert out["element"] == "v - ee*"
    rc, out = run(capsys, ["equal", toeplitz_file, "ee* + cc*", "v"])
    assert rc == 0 and out["equal"] is True
    rc, out = run(capsys, ["equal", toeplitz_file, "v", "w"])
    assert rc == 0 and out["equal"] is False


def test_reduce(capsys, toeplitz_file):
    rc, out = run(capsys, ["reduce", toeplitz_file, "v - c"])
    assert rc == 0
    assert out == {"mu": "e", "nu": "e",
                   "outcome": {"kind": "vertex", "vertex": "w", "scalar": "1"}}


def test_zorn(capsys, toeplitz_file):
    rc, out = run(capsys, ["zorn", toeplitz_file, "v - c"])
    assert rc == 0
    assert out["b"] == "ee*"
    assert out["checks"] == {"idempotent": True, "nonzero": True, "bab": True}


def test_zorn_obstruction_exit_4(capsys, loop_file):
    rc, out = run(capsys, ["zorn", loop_file, "v - c"])
    assert rc == 4
    assert out["error"]["code"] == "ExitlessCycleObstruction"
    assert out["error"]["cycle"]["edges"] == ["c"]


def test_bab_and_ideal_idem(capsys, toeplitz_file):
    rc, out = run(capsys, ["bab", toeplitz_file, "v - c"])
    assert rc == 0 and out["b"] == "ee*"
    rc, out = run(capsys, ["ideal-idem", toeplitz_file, "v - c"])
    assert rc == 0 and out["idempotent"] == "-cee* + ee*"


def test_laurent(capsys, loop_file):
    rc, out = run(capsys, ["laurent", loop_file, "--vertex", "v", "v - c"])
    assert rc == 0
    assert out["poly"] == {"0": "1", "1": "-1"}
    assert out["rendered"] == "1 - x"


def test_verify(capsys, toeplitz_file):
    rc, out = run(capsys, ["verify", toeplitz_file, "--trials", "5", "--seed", "7"])
    assert rc == 0
    assert out["passed"] == 5 and out["failed"] == 0


def test_field_flag(capsys, toeplitz_file):
    rc, out = run(capsys, ["eval", toeplitz_file, "v - c", "--field", "fp:5"])
    assert rc == 0
    assert out["element"] == "v + 4 c"
    rc, out = run(capsys, ["eval", toeplitz_file, "v", "--field", "fp:6"])
    assert rc == 3
    assert out["error"]["code"] == "NonPrimeModulus"


def test_usage_error(capsys):
    rc, out = run(capsys, [])
    assert rc == 2
    assert out["error"]["code"] == "UsageError"


def test_missing_file(capsys):
    rc, out = run(capsys, ["check-l", "/nonexistent/graph.json"])
    assert rc == 3
    assert out["error"]["code"] == "FileNotFound"


def test_parse_error_exit_3(capsys, toeplitz_file, tmp_path):
    rc, out = run(capsys, ["eval", toeplitz_file, "v +"])
    assert rc == 3 and out["error"]["code"] == "SyntaxError"
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    rc, out = run(capsys, ["check-l", str(bad)])
    assert rc == 3 and out["error"]["code"] == "SyntaxError"


def test_pretty_flag(capsys, toeplitz_file):
    rc = main(["check-l", toeplitz_file, "--pretty"])
    out = capsys.readouterr().out
    assert rc == 0 and out.startswith("{\n")


def test_determinism(capsys, toeplitz_file):
    first = None
    for _ in range(2):
        rc = main(["verify", toeplitz_file, "--trials", "20", "--seed", "11"])
        assert rc == 0
        text = capsys.readouterr().out
        if first is None:
            first = text
        else:
            assert text == first
