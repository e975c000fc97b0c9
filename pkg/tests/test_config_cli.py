import json
import re
import subprocess
import sys

import pytest

from orecode.cli import main
from orecode.config import load_config, parse_config, shipped_configs
from orecode.errors import ConfigError, UnknownSubject
from orecode.explain import SUBJECTS, explain

GOOD = """
# a comment
[row]
label = toy
p = 2
m = 3
modulus = x^3 + x + 1
s = 1
n = 30
beta = w
generators = w^2*x + 1;
    1
expected_classical = [60,59,1]
expected_quantum = [[60,58,1]]
"""


def test_parse_good_config_with_continuation():
    cfg = parse_config(GOOD, "toy.cfg")
    (row,) = cfg.rows
    assert row.generators == ["w^2*x + 1", "1"]
    assert row.q == 8 and row.expected_quantum == (60, 58, 1) and row.line == 3


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("[row]\nlabel = a\np = 2\nm = 1\nn = 3\ns = 1\ngenerators = 1\n", 1, "s+1 = 2"),
        ("[row]\nlabel = a\np = x\nm = 1\nn = 3\n", 1, "p must be an integer"),
        ("[row]\nlabel = a\nbogus = 1\n", 3, "unknown key"),
        ("label = a\n", 1, "outside"),
        ("[row]\nlabel = a\nlabel = b\n", 3, "duplicate"),
        ("[sec]\n", 1, "unknown section"),
        ("[row]\nlabel = a\np = 2\n", 1, "missing key 'm'"),
        ("[row]\nnot a pair\n", 2, "key = value"),
        (
            "[row]\nlabel=a\np=2\nm=1\nn=7\nkind=theta\ngenerators=1\nexpected_classical=[7,4,3]\nexpected_quantum=[[7,2,3]]\n",
            1,
            "2k-n",
        ),
        ("[row]\nlabel=a\np=2\nm=1\nn=7\nkind=theta\ngenerators=1;1\n", 1, "exactly one"),
    ],
)
def test_config_errors_carry_file_and_line(text, line, fragment):
    with pytest.raises(ConfigError) as ei:
        parse_config(text, "bad.cfg")
    msg = str(ei.value)
    assert msg.startswith(f"bad.cfg:{line}:") and fragment in msg


def test_shipped_configs_load():
    rows = [r for p in shipped_configs() for r in load_config(p).rows]
    assert len(rows) == 12
    assert len({r.label for r in rows}) == 12
    with pytest.raises(ConfigError):
        load_config("/nonexistent/file.cfg")


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def kv(text):
    out = {}
    for line in text.splitlines():
        if " = " in line:
            k, v = line.split(" = ", 1)
            out[k.strip()] = v.strip()
    return out


def test_cli_field_and_skew(capsys):
    code, out, _ = run(["field", "--q", "GF(8)", "--element", "w^3"], capsys)
    assert code == 0 and kv(out)["w^3.inverse"] == "w^4"
    code, out, _ = run(["skew", "mul", "--field", "F8", "--beta", "w", "--a", "x", "--b", "w"], capsys)
    assert code == 0 and kv(out)["product"] == "w^2*x + w^5"
    code, out, _ = run(["skew", "divmod", "--q", "8", "--beta", "w", "--f", "x^30 - 1", "--g", "w^2*x + 1"], capsys)
    assert kv(out)["remainder"] == "0"
    code, out, _ = run(["skew", "central", "--q", "8", "--beta", "w", "--f", "x"], capsys)
    assert code == 0 and kv(out)["central"] == "false"


def test_cli_code_commands(capsys):
    code, out, _ = run(["code", "build", "--q", "8", "--beta", "w", "--n", "30", "--gens", "w^2*x + 1"], capsys)
    assert code == 0 and kv(out)["k"] == "29"
    code, out, _ = run(
        ["code", "dualcheck", "--q", "49", "--modulus", "x^2 + 6*x + 3", "--beta", "w^2", "--n", "14",
         "--gens", "w^39*x^2 + w^3*x + w^17"],
        capsys,
    )
    assert code == 0 and kv(out)["dual_containing"] == "true"
    code, out, _ = run(["code", "search", "--q", "8", "--beta", "w", "--n", "30", "--max-deg", "1"], capsys)
    assert code == 0 and "x + w^5" in out


def test_cli_gray_distance_quantum(capsys):
    gens = "w^2*x + 1; w*x^2 + w^4*x + w^6; w^4*x^2 + w^3*x + w; x^2 + w^2*x + w^4"
    code, out, _ = run(["gray", "dualcheck", "--q", "8", "--modulus", "x^3 + x + 1", "--beta", "w", "--n", "30",
                        "--gens", gens, "--matrix", "1 w w^3 1; w 1 1 w^3; w^3 1 1 w; 1 w^3 w 1"], capsys)
    assert code == 0 and kv(out) == {"c_G": "1", "duality_commutes": "true"}
    code, out, err = run(["gray", "dualcheck", "--q", "4", "--beta", "w", "--n", "6", "--gens", "1; 1",
                          "--matrix", "1 1; 0 1"], capsys)
    assert code == 2 and err.startswith("error: GrayMatrixError") and "Traceback" not in err
    code, out, _ = run(["distance", "--q", "2", "--parity", "--matrix", "1 0 1 0 1 0 1; 0 1 1 0 0 1 1; 0 0 0 1 1 1 1"], capsys)
    assert code == 0 and kv(out)["d"] == "3"
    code, out, _ = run(["quantum", "params", "--n", "120", "--k", "114", "--d", "4", "--q", "8"], capsys)
    assert kv(out)["quantum"] == "[[120,108,4]]_8"
    code, out, _ = run(["quantum", "css", "--toy", "hamming7"], capsys)
    assert code == 0 and kv(out)["distinct_X_syndromes"] == "true"
    code, out, _ = run(["quantum", "verify-operators", "--p", "2", "--m", "2"], capsys)
    assert code == 0 and kv(out)["passed"] == "true"


def test_cli_typed_error_exit_2(capsys):
    code, _, err = run(["code", "build", "--q", "8", "--beta", "w", "--n", "30", "--gens", "x^3 + w"], capsys)
    assert code == 2 and err.startswith("error: NotAFactor")
    code, _, err = run(["skew", "mul", "--q", "8", "--a", "y", "--b", "1"], capsys)
    assert code == 2 and "UnknownSymbol" in err
    code, _, err = run(["field", "--q", "6"], capsys)
    assert code == 2


def test_cli_json_output(capsys):
    code, out, _ = run(["field", "--q", "9", "--element", "w", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["q"] == 9 and data["w.inverse"] == "w^7"


def test_reproduce_deterministic_and_json(capsys):
    args = ["reproduce", "--row", "F49-n14", "--row", "(60,4)", "--no-timestamp"]
    c1, out1, _ = run(args, capsys)
    c2, out2, _ = run(args, capsys)
    assert out1 == out2 and "[row F49-n14]" in out1 and "[row (60,4)]" in out1
    c3, out3, _ = run(args + ["--json"], capsys)
    recs = [json.loads(line) for line in out3.splitlines() if line.strip()]
    assert [r["label"] for r in recs][:2] == ["F49-n14", "(60,4)"]


def test_console_script_module_entry():
    res = subprocess.run([sys.executable, "-m", "orecode.cli", "explain", "--list"], capture_output=True, text=True)
    assert res.returncode == 0 and "dual-containing" in res.stdout


def test_explain_texts():
    for subject in SUBJECTS:
        text = explain(subject)
        assert text.strip()
        assert re.search(r"\b[A-Z][a-z]+ \d+(\.\d+)+", text) is None  # no numbered citations
    with pytest.raises(UnknownSubject) as ei:
        explain("nonsense")
    assert "nonsense" in str(ei.value)
