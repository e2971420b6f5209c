import json

import pytest

from laptop_balance.cli import SUBCOMMANDS, print_usage, run


def test_solve(tmp_path, capsys):
    out = tmp_path / "out.json"
    code = run(["solve", "--laptop-length", "1.5", "--table-w", "2", "--table-h", "2", "--json", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["min_area"] == pytest.approx(0.25, abs=5e-4)
    line = capsys.readouterr().out.strip()
    assert line.startswith("min_area=") and " pose=(" in line


def test_verify_bounds():
    args = "verify --kind bounds --laptop-length 1.5 --table-w 1 --table-h 1.5 --samples 100000 --seed 7"
    assert run(args.split()) == 0


def test_verify_failure_exit_code():
    assert run("verify --kind constancy --laptop-length 1 --table-w 0.6 --table-h 0.6".split()) == 1


def test_verify_wrong_regime_is_invalid():
    assert run("verify --kind bounds --laptop-length 1.5 --table-w 0.5 --table-h 1".split()) == 2


def test_classify(capsys):
    assert run("classify --laptop-length 1.2 --table-w 0.3 --table-h 0.4".split()) == 0
    assert capsys.readouterr().out.strip() == "FullTable"


def test_sweep_outputs(tmp_path):
    j, c = tmp_path / "s.json", tmp_path / "s.csv"
    argv = f"sweep --laptop-length 1.5 --sizes 0.3,0.8x1.2 --grid-xy 16 --grid-theta 32 --json {j} --csv {c}".split()
    assert run(argv) == 0
    assert len(json.loads(j.read_text())) == 2
    assert len(c.read_text().splitlines()) == 3


def test_render(tmp_path):
    svg = tmp_path / "f.svg"
    assert run(f"render --laptop-length 1.5 --table-w 2 --table-h 2 --cx 0 --cy 0 --theta 2.356194490192345 --svg {svg}".split()) == 0
    assert "area = 0.2500" in svg.read_text()


def test_no_arguments(capsys):
    assert run([]) == 2
    assert "usage:" in capsys.readouterr().err


def test_help(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    for name in SUBCOMMANDS:
        assert f"laptop-balance {name}" in out


def test_usage_lists_defaults():
    text = print_usage()
    assert "(default: 64)" in text and "(default: 96)" in text
    assert print_usage() == text


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--laptop-length", "1.5", "--table-w", "2"],
        ["solve", "--laptop-length", "0.5", "--table-w", "2", "--table-h", "2"],
        ["solve", "--laptop-length", "1.5", "--table-w", "-2", "--table-h", "2"],
        ["solve", "--bogus"],
        ["frobnicate"],
    ],
)
def test_invalid_arguments(argv, capsys):
    assert run(argv) == 2
    assert "usage:" in capsys.readouterr().err


def test_byte_identical_outputs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = "solve --laptop-length 1.3 --table-w 0.7 --table-h 0.9 --grid-xy 16 --grid-theta 32 --seed 3 --json".split()
    assert run(base + [str(a)]) == 0 and run(base + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
