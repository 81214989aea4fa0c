from __future__ import annotations

import subprocess
import sys

import pytest

from bvgroup.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_nf(capsys):
    assert run(["nf", "f0 F0"], capsys)[:2] == (0, "T: ()\nB: D^0 |\nTb: ()\n")
    assert run(["nf", "b0"], capsys)[1] == "T: (()())\nB: D^1 |\nTb: (()())\n"
    assert run(["nf", "f1 f0"], capsys)[1] == run(["nf", "f0 f2"], capsys)[1]


def test_nf_parse_error(capsys, tmp_path):
    code, _, err = run(["nf", "f0 q1"], capsys)
    assert code == 2 and "line 1, column 4" in err
    p = tmp_path / "bad.txt"
    p.write_text("T: (()())\nB: s1\nTb: (()()\n")
    code, _, err = run(["nf", f"@{p}"], capsys)
    assert code == 2 and "line 3" in err
    code, _, err = run(["nf", f"@{tmp_path / 'missing.txt'}"], capsys)
    assert code == 2


def test_eq(capsys):
    assert run(["eq", "b0 b0", ""], capsys)[:2] == (1, "different\n")
    assert run(["eq", "a0", "b0 f0 B1"], capsys)[:2] == (0, "equal\n")
    assert run(["eq", "f0", "f0"], capsys)[:2] == (0, "equal\n")
    assert run(["eq", "f0", "x"], capsys)[0] == 2


def test_mul_and_inv(capsys, tmp_path):
    e = "a1 B0 f2"
    _, text, _ = run(["nf", e], capsys)
    (tmp_path / "e.txt").write_text(text)
    _, inv_text, _ = run(["inv", f"@{tmp_path / 'e.txt'}"], capsys)
    (tmp_path / "inv.txt").write_text(inv_text)
    _, prod, _ = run(["mul", f"@{tmp_path / 'e.txt'}", f"@{tmp_path / 'inv.txt'}"], capsys)
    assert prod == "T: ()\nB: D^0 |\nTb: ()\n"
    assert run(["inv", f"@{tmp_path / 'inv.txt'}"], capsys)[1] == text
    assert run(["mul", "f0", "f1"], capsys)[1] == run(["nf", "f0 f1"], capsys)[1]


def test_relcheck(capsys):
    code, out, _ = run(["relcheck", "--max-index", "3"], capsys)
    assert code == 0
    assert out.splitlines()[-1].startswith("total:") and "FAIL" not in out
    with pytest.raises(SystemExit) as info:
        main(["relcheck", "--max-index", "1"])
    assert info.value.code == 2


def test_aag(capsys):
    argv = ["aag", "--seed", "1", "--alice-set", "2", "--alice-len", "2", "--bob-set", "2", "--bob-len", "2", "--gen-len", "3"]
    code, out, _ = run(argv, capsys)
    assert code == 0 and out.rstrip().endswith("secrets match")
    assert run(argv, capsys)[1] == out
    code, out, _ = run(["aag", "--alice-len", "0", "--bob-len", "0", "--gen-len", "3"], capsys)
    secret = out.split("# shared_secret_alice\n")[1].splitlines()[:3]
    assert secret == ["T: ()", "B: D^0 |", "Tb: ()"]
    assert run(["aag", "--alice-set", "0", "--alice-len", "2"], capsys)[0] == 2


def test_bench(capsys):
    code, out, _ = run(["bench", "--sizes", "8", "--trials", "1", "--csv"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "size,mode,trials,median_micros"
    assert len(lines) == 2
    size, mode, trials, micros = lines[1].split(",")
    assert (size, mode, trials) == ("8", "nf", "1") and float(micros) > 0
    with pytest.raises(SystemExit):
        main(["bench", "--sizes", "0"])
    with pytest.raises(SystemExit):
        main(["bench", "--mode", "slow"])


def test_fast_mode_is_not_slower():
    from bvgroup.bench import run_benchmark

    nf = run_benchmark([48], trials=5, mode="nf")[0]
    fast = run_benchmark([48], trials=5, mode="fast")[0]
    assert fast.median_bits == nf.median_bits  # same seeded inputs
    assert fast.median_micros <= nf.median_micros


def test_unknown_flag_and_module_entry():
    with pytest.raises(SystemExit):
        main(["nf", "f0", "--bogus"])
    done = subprocess.run([sys.executable, "-m", "bvgroup", "nf", "b0"], capture_output=True, text=True)
    assert done.returncode == 0 and "D^1 |" in done.stdout
