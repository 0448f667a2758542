import io
import json
import subprocess
import sys

import pytest

from cli_corpus import CORPUS
from freepoisson import cli
from freepoisson.dependence import InconsistencyError


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", CORPUS, ids=lambda c: " ".join(c.argv))
def test_corpus_exit_codes_and_text(case):
    code, out, err = invoke(case.argv)
    assert code == case.code, err
    assert case.text in out
    if code == 2:
        assert out == "" and err.startswith("error:")


@pytest.mark.parametrize("case", [c for c in CORPUS if c.check], ids=lambda c: " ".join(c.argv))
def test_corpus_json_round_trips(case):
    code, out, _ = invoke(case.argv + ["--json"])
    assert code == case.code
    assert case.check(json.loads(out))


def test_spec_examples():
    assert invoke(["pdep", "x1", "x1^2+1"])[:2] == (0, "dependent\n  bracket: True\n  {f,g} = 0\n")
    code, out, _ = invoke(["member", "--gen", "h(x1)", "--gen", "h(x2)", "--elem", "h(x1*x2)"])
    assert code == 0 and "cofactor[0] = (x2)*h[]" in out and "cofactor[1] = (x1)*h[]" in out
    code, out, _ = invoke(["aut", "--f", "x2", "--g", "x1", "--p", "x2", "--q", "x1"])
    assert code == 0 and out.startswith("automorphism")


def test_negative_values_need_equals_sign():
    code, out, _ = invoke(["apply", "--f=-x1", "--g", "x2", "x1*x2"])
    assert code == 0 and out.strip() == "-x1*x2"
    code, out, _ = invoke(["canon", "--", "-x1"])
    assert code == 0 and out.strip() == "-x1"


def test_alphabet_option():
    assert invoke(["canon", "-n", "3", "x3"])[:2] == (0, "x3\n")
    assert invoke(["canon", "-n", "0", "x1"])[0] == 2
    assert invoke(["aut", "-n", "3", "--f", "x1", "--g", "x2", "--p", "x1", "--q", "x2"])[0] == 2


def test_deg_of_zero_in_json():
    code, out, _ = invoke(["deg", "--json", "0"])
    assert code == 0 and json.loads(out)["deg"] == "-inf"


def test_internal_failures_exit_three(monkeypatch):
    def broken(*args, **kwargs):
        raise InconsistencyError("methods disagree")

    monkeypatch.setattr(cli, "poisson_dependent", broken)
    code, out, err = invoke(["pdep", "x1", "x2", "--method", "all"])
    assert code == 3 and "methods disagree" in err and out == ""


def test_help_exits_cleanly():
    assert invoke(["--help"])[0] == 0
    assert invoke([])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "freepoisson", "bracket", "x1", "x2"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and proc.stdout.strip() == "e[12]"
