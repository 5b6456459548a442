import json
import subprocess
import sys

import pytest

from nsgp.cli import run


def call(capsys, *args):
    code = run(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = call(capsys, "info", "--gens", "5,8,17,19", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["frobenius"] == 14 and data["multiplicity"] == 5
    assert data["gamma"] == [5, 8, 10, 13, 15] and data["lead"] == [0, 5, 8, 10, 13, 15]
    code, out, _ = call(capsys, "info", "--gens", "1", "--format", "json")
    assert code == 0 and json.loads(out)["frobenius"] == -1


@pytest.mark.parametrize("args", [
    ["info", "--gens", "4,6"],
    ["info", "--gens", "x"],
    ["info"],
    ["chain", "build", "--family", "6,10,0"],
    ["chain", "build", "--gens", "1"],
    ["resolve", "--gens", "3,4,5", "--simple", "9"],
    ["resolve", "--gens", "3,4,5", "--simple", "1", "--truncation", "2"],
    ["nonsense"],
])
def test_bad_input_exits_2(capsys, args):
    code, _, _ = call(capsys, *args)
    assert code == 2


@pytest.mark.parametrize("flag,family,length", [("--greedy", "6,10,2", 4), ("--lazy", "6,10,1", 8)])
def test_chain_lengths(capsys, flag, family, length):
    code, out, _ = call(capsys, "chain", "build", flag, "--family", family, "--format", "json")
    assert code == 0 and json.loads(out)["length"] == length


def test_chain_file_roundtrip(capsys, tmp_path):
    code, out, _ = call(capsys, "chain", "build", "--lazy", "--gens", "2,3", "--format", "json")
    data = json.loads(out)
    assert data["length"] == 2
    path = tmp_path / "chain.json"
    path.write_text(out)
    code, out, _ = call(capsys, "order", "show", "--chain-file", str(path))
    assert code == 0 and out.splitlines()[1].split() == ["R1", "m1"]


def test_order_build_json(capsys):
    code, out, _ = call(capsys, "order", "build", "--greedy", "--gens", "3,4,5")
    data = json.loads(out)
    assert [[c["symbol"] for c in row] for row in data["radical"]] == [["m1", "m1"], ["R2", "m2"]]


def test_resolve_and_gldim(capsys):
    code, out, _ = call(capsys, "resolve", "--lazy", "--family", "6,10,2", "--simple", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["length"] == 2 and data["certificate"]["ok"]
    assert [f["indices"] for f in data["frames"]] == [[1], [5, 8], [9]]
    code, out, _ = call(capsys, "gldim", "--greedy", "--family", "8,13,3", "--format", "json",
                        "--field", "prime:1000003")
    assert code == 0 and json.loads(out)["global_dimension"] == 2


def test_env_truncation(capsys, monkeypatch):
    monkeypatch.setenv("NSGP_TRUNCATION", "3")
    code, _, err = call(capsys, "resolve", "--gens", "3,4,5", "--simple", "1")
    assert code == 2 and "TruncationOverflow" in err
    monkeypatch.setenv("NSGP_TRUNCATION", "60")
    code, _, _ = call(capsys, "resolve", "--gens", "3,4,5", "--simple", "1")
    assert code == 0


def _complex(sign):
    entry = lambda r, c, d, num=1: {"row": r, "col": c, "terms": [{"deg": d, "num": num, "den": 1}]}
    return {
        "family": "6,10,3", "construction": "greedy",
        "frames": [[3], [2, 4], [3]],
        "maps": [[entry(1, 1, 0), entry(1, 2, 3)], [entry(1, 1, 3), entry(2, 1, 0, sign)]],
        "augmentation": 3,
    }


def test_check_complex(capsys, tmp_path):
    good, bad = tmp_path / "good.json", tmp_path / "bad.json"
    good.write_text(json.dumps(_complex(-1)))
    bad.write_text(json.dumps(_complex(1)))
    code, out, _ = call(capsys, "check", "--complex", str(good), "--format", "json")
    assert code == 0 and json.loads(out)["exact"]
    code, out, _ = call(capsys, "check", "--complex", str(bad), "--format", "json")
    assert code == 3 and not json.loads(out)["exact"]


def test_verify_is_deterministic(capsys):
    code, first, _ = call(capsys, "verify", "--suite", "greedy", "--max-i", "3", "--format", "json")
    _, second, _ = call(capsys, "verify", "--suite", "greedy", "--max-i", "3", "--format", "json")
    assert code == 0 and first == second
    report = json.loads(first)
    assert report["summary"]["fail"] == 0
    assert all(c["locus"] and c["provenance"] for c in report["checks"])


def test_verify_lazy_reports_noted_length(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "lazy", "--max-i", "3", "--format", "json")
    report = json.loads(out)
    noted = [c for c in report["checks"] if c["status"] == "discrepancy-noted"]
    assert code == 0 and len(noted) == 1
    assert noted[0]["expected"] == 8 and noted[0]["computed"] == 9


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "nsgp.cli", "info", "--gens", "4,6"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
