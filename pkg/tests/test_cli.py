import json

import jsonschema
import pytest

from diffmix.cli import main
from diffmix.report import SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json", "-")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


@pytest.mark.parametrize("argv,expected", [
    (("gen", "--family", "A", "--n", "2"), "y5*y9 + y10*y18"),
    (("gen", "--family", "u", "--n", "0"), "y0*y1"),
])
def test_gen(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [
    ("gen", "--family", "A", "--n", "0"),
    ("gen", "--family", "B", "--n", "1"),
    ("gen", "--family", "u", "--n", "-1"),
    ("acc", "--m-max", "0"),
    ("acc", "--m-max", "31"),
    ("check", "irreducible", "--m", "2", "--samples", "5"),
    ("check", "slice", "--poly", "y0*y1 +", "--m", "1"),
    ("check", "slice", "--poly", "y0*y1*y2", "--m", "1"),
    ("check", "remark32", "--max", "2"),
    ("nonsense",),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_check_remark32(capsys):
    code, data = run_json(capsys, "check", "remark32", "--max", "20")
    assert code == 0 and data["status"] == "verified"
    assert data["payload"][0]["details"]["tuples_checked"] == 21 * 20 * 19 * 18


def test_check_slice_nonmember(capsys):
    code, data = run_json(capsys, "check", "slice", "--poly", "y5*y9+y10*y18", "--m", "1")
    assert code == 1 and data["status"] == "violated"
    reason = data["payload"][0]["reason"]
    assert reason["monomial"] == "y5*y9" and reason["eord"] == 4


def test_check_slice_member(capsys):
    code, data = run_json(capsys, "check", "slice", "--poly", "y3*y4 + y5*y7", "--m", "1")
    assert code == 0
    assert data["payload"][0]["coefficients"] == [{"i": 1, "j": 3, "lambda": "1"}]


def test_check_irreducible_seeded_and_deterministic(capsys):
    argv = ("check", "irreducible", "--m", "4", "--shifts", "16", "--samples", "1000",
            "--seed", "42")
    code, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    assert code == 0 and a["seed"] == 42
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


@pytest.mark.parametrize("sub", [("eords", "--n-max", "12"), ("injectivity",),
                                 ("lemma34", "--m", "1", "--iters", "2")])
def test_other_checks_verified(capsys, sub):
    code, data = run_json(capsys, "check", *sub)
    assert code == 0 and data["status"] == "verified"


def test_acc(capsys):
    code, data = run_json(capsys, "acc", "--m-max", "6")
    assert code == 0 and len(data["payload"]) == 6
    assert all(c["strict"] for c in data["payload"])
    first = data["payload"][0]
    assert first["max_eord_bound"] == 2 and first["separator_eords"] == [4, 8]


def test_shuffle_zero_iters_echoes_S(capsys):
    code, data = run_json(capsys, "shuffle", "--m", "1", "--iters", "0")
    assert code == 0
    assert data["payload"][0]["generators"] == ["y0*y1 + y2*y4"]


def test_shuffle_snapshots(capsys, tmp_path):
    code, data = run_json(capsys, "shuffle", "--m", "1", "--iters", "2", "--max-index", "40",
                          "--snapshot-dir", str(tmp_path))
    assert code == 0
    sizes = [p["size"] for p in data["payload"] if p["kind"] == "stage"]
    assert sizes == sorted(sizes) and len(sizes) == 3
    stage0 = (tmp_path / "stage_0.txt").read_text().split("\n")
    assert stage0[0] == "y0*y1 + y2*y4"
    lines = (tmp_path / "stage_2.txt").read_text().strip().split("\n")
    assert len(lines) == sizes[2]


def test_shuffle_m2_monotone(capsys):
    code, data = run_json(capsys, "shuffle", "--m", "2", "--iters", "1", "--max-index", "60")
    mono = next(p for p in data["payload"] if p["kind"] == "monotone")
    assert code == 0 and mono["sizes"] == sorted(mono["sizes"])


def test_json_file_output(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "acc", "--m-max", "2", "--json", str(path))
    assert code == 0 and "verified" in out
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)
