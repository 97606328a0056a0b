import json
import subprocess
import sys

import pytest

from qplane.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_act_xp_on_y(capsys):
    assert run(capsys, "act", "--n", "3", "--h", "X+", "--m", "y") == (0, "x\n", "")


def test_pair_k_a(capsys):
    assert run(capsys, "pair", "--n", "3", "--h", "K", "--f", "a") == (0, "q\n", "")


def test_decompose_n5_text(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "5", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "M = N_irr + N_4 + N_3 + N_2 + N_1"
    labels = [line.split()[0] for line in lines[2:]]
    assert labels == ["5", "4", "3", "2", "1"]


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["n"] == 3 and data["verb"] == "decompose"
    assert [s["label"] for s in data["result"]["summands"]] == [3, 2, 1]


def test_normalize(capsys):
    assert run(capsys, "normalize", "--n", "3", "y x")[1] == "(-1 - q)*x y\n"


def test_d_and_wzmul(capsys):
    assert run(capsys, "d", "--n", "3", "--u", "x y")[1] == "(-1 - q)*y dx + x dy\n"
    assert run(capsys, "wzmul", "--n", "5", "--u", "dy", "--v", "dx")[1] == "-q*dx dy\n"


def test_act_on_form(capsys):
    assert run(capsys, "act", "--n", "3", "--h", "X-", "--m", "dx")[1] == "dy\n"


def test_cohomology(capsys):
    assert run(capsys, "cohomology", "--n", "3")[1] == "h0 = 1  h1 = 2  h2 = 1\n"


def test_structure_no_chains(capsys):
    code, out, _ = run(capsys, "structure", "--n", "3", "--no-chains")
    assert code == 0
    assert out.splitlines()[0] == "blocks: M_3 dim 9, M_2|1 dim 18"


def test_env_default(capsys, monkeypatch):
    monkeypatch.setenv("QPLANE_N", "5")
    code, out, _ = run(capsys, "pair", "--h", "K", "--f", "a", "--format", "json")
    assert json.loads(out)["n"] == 5


def test_parse_error_exit(capsys):
    code, out, err = run(capsys, "normalize", "--algebra", "hopf", "K x")
    assert code == 2 and out == ""
    assert "plane atom 'x' in hopf expression at byte 2" in err


def test_usage_errors(capsys):
    assert run(capsys, "normalize", "--n", "4", "x")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["act", "--h", "K"])
    assert info.value.code == 1


def test_act_rejects_hopf_target(capsys):
    assert run(capsys, "act", "--h", "K", "--m", "K")[0] == 1


@pytest.mark.parametrize("n", ["3", "5"])
def test_selftest_exit_zero(capsys, n):
    code, out, _ = run(capsys, "selftest", "--n", n)
    assert code == 0, out
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_selftest_marks_skips(capsys):
    code, out, _ = run(capsys, "selftest", "--n", "7")
    assert code == 0
    skipped = [line for line in out.splitlines() if line.startswith("SKIP")]
    assert len(skipped) == 2
    assert not any(line.startswith("FAIL") for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qplane", "act", "--n", "3", "--h", "X+",
                           "--m", "y"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x\n"
