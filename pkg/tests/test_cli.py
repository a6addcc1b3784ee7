import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from riordan.cli import main

GOLDEN = Path(__file__).parent / "golden" / "demo_paper.txt"


@pytest.fixture(scope="module")
def schema():
    text = resources.files("riordan").joinpath("schemas/cli_output.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show_pascal(capsys):
    code, out, _ = run(capsys, "show", "pascal", "--b", "1", "--ring", "Q", "--size", "4")
    assert code == 0
    assert out.endswith("[ 1  0  0  0]\n[ 1 -1  0  0]\n[ 1 -2  1  0]\n[ 1 -3  3 -1]\n")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "r2z3")
    assert code == 0
    assert out.splitlines() == [
        "2 equivalence classes",
        "class 1: image {E, I1, I2, I3, y1, y2}, 6 generator pairs",
        "class 2: image {2I1, 2I2, 2I3, E, y1, y2}, 6 generator pairs",
    ]


def test_order_exceeds_cutoff(capsys):
    code, out, _ = run(capsys, "order", "--ring", "Q", "--cutoff", "64", "P0*P1")
    assert (code, out) == (0, "exceeds cutoff 64\n")


def test_order_finite(capsys):
    code, out, _ = run(capsys, "order", "--ring", "Zmod:3", "dihedral(3,1,1,1).r1 * dihedral(3,1,1,1).r2")
    assert (code, out) == (0, "order 3\n")


def test_mul_and_inv(capsys):
    code, out, _ = run(capsys, "mul", "P1", "P2", "P5", "P4", "--size", "3", "--precision", "8")
    assert code == 0
    assert "g = 1 + O(t^8)" in out and "f = t + O(t^8)" in out
    code, out, _ = run(capsys, "inv", "pascal", "--precision", "4")
    assert code == 0 and "g = 1 - t + t^2 - t^3 + O(t^4)" in out


def test_involution_checks_exit_codes(capsys):
    assert run(capsys, "check-involution", "P1")[0] == 0
    assert run(capsys, "check-involution", "pascal")[0] == 1
    assert run(capsys, "check-involution", "I", "--strict")[0] == 1
    assert run(capsys, "check-pseudo", "pascal")[0] == 0
    assert run(capsys, "check-pseudo", "P1")[0] == 1


def test_verify_builtin_and_file(capsys, tmp_path):
    images = ["dihedral(3,1,1,1).r2", "dihedral(3,1,1,1).r1"]
    code, out, _ = run(capsys, "verify", "--ring", "Zmod:3", "--presentation", "S3", "--images", *images)
    assert code == 0
    assert "overall: verified" in out and "faithful (dihedral normal forms distinct): yes" in out
    f = tmp_path / "s3.cox"
    f.write_text("generators 2;\nm 1 2 = 3;\n")
    code, out, _ = run(capsys, "verify", "--ring", "Zmod:3", "--presentation", str(f), "--images", *images, "--truncate", "--size", "5")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--presentation", "S3", "--images", "P1", "P2")
    assert code == 1 and "(r1 r2)^3 = 1: FAILS" in out


def test_verify_reports_unbounded(capsys):
    code, out, _ = run(capsys, "verify", "--presentation", "Dinfty", "--images", "delta(0,-1)", "delta(1,-1)")
    assert code == 0 and "unbounded" in out


def test_enumerate_and_closure(capsys):
    code, out, _ = run(capsys, "enumerate", "--size", "2", "--ring", "Zmod:3")
    assert code == 0 and out.startswith("12 elements, order profile {1:1, 2:7, 3:2, 6:2}")
    code, out, _ = run(capsys, "closure", "--ring", "Zmod:3", "[[2,2],[0,1]]", "[[1,0],[2,2]]")
    assert code == 0 and out.startswith("6 elements")
    code, out, _ = run(capsys, "closure", "--ring", "Zmod:5", "--size", "5", "dihedral(5,1,1,1).r1", "dihedral(5,1,1,1).r2")
    assert code == 0 and out.startswith("10 elements")


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "--ring", "Zmod:3", "--from", "[[2,0],[2,1]]", "[[2,0],[0,1]]", "--to", "[[2,2],[0,1]]", "[[1,0],[2,2]]")
    assert code == 0 and out == "T =\n[0 1]\n[1 1]\n"
    code, out, _ = run(capsys, "conjugate", "--ring", "Zmod:3", "--size", "2", "--from", "dihedral(3,1,1,1).r2", "dihedral(3,1,1,1).r1", "--to", "[[2,2],[0,1]]", "[[1,0],[2,2]]")
    assert code == 1 and out == "no conjugator exists\n"


@pytest.mark.parametrize("argv", [
    ["show", "P1 *"],
    ["show", "Q7"],
    ["show", "P1", "--ring", "Zmod:1"],
    ["show", "P1", "--precision", "65"],
    ["show", "P1", "--precision", "4", "--size", "5"],
    ["enumerate", "--ring", "Zmod:3"],
    ["enumerate", "--size", "2"],
    ["closure", "P1"],
    ["frobnicate"],
    ["classify", "r3z3"],
    ["verify", "--presentation", "X9", "--images", "P1"],
    ["verify", "--presentation", "S3", "--images", "P1"],
    ["enumerate", "--size", "3", "--ring", "Zmod:5", "--budget", "10"],
    ["show", "diag(0,1)"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_demo_golden(capsys):
    code, out, _ = run(capsys, "demo", "paper")
    assert code == 0
    assert out == GOLDEN.read_text()
    assert run(capsys, "demo", "paper")[1] == out


def test_demo_contents(capsys):
    out = run(capsys, "demo", "paper")[1]
    assert "s2s1s2 <-> r2r1r2:\n[1 0 0 0 0]\n[0 2 0 0 0]\n[0 0 1 0 0]\n[0 0 0 2 0]\n[0 0 0 0 1]" in out
    assert "T = [[0, 1], [1, 1]] validates: yes" in out
    assert "m=1: -1, m=2: -2, m=3: -3, m=4: -4, m=5: -5, m=6: -6" in out


JSON_COMMANDS = [
    ["show", "pascal", "--size", "3"],
    ["show", "P -2 * P(1/2)"],
    ["mul", "P1", "P2"],
    ["inv", "pascal", "--size", "2"],
    ["order", "P1"],
    ["order", "P0*P1", "--cutoff", "8"],
    ["check-involution", "P1", "--strict"],
    ["check-pseudo", "pascal"],
    ["verify", "--presentation", "Dinfty", "--images", "delta(0,-1)", "delta(1,-1)"],
    ["verify", "--ring", "Zmod:3", "--presentation", "S3", "--images", "dihedral(3,1,1,1).r2", "dihedral(3,1,1,1).r1"],
    ["enumerate", "--ring", "Zmod:3", "--size", "2"],
    ["closure", "--ring", "Zmod:3", "[[2,2],[0,1]]", "[[1,0],[2,2]]"],
    ["conjugate", "--ring", "Zmod:3", "--from", "[[2,0],[2,1]]", "[[2,0],[0,1]]", "--to", "[[2,2],[0,1]]", "[[1,0],[2,2]]"],
    ["conjugate", "--ring", "Zmod:3", "--from", "[[1,0],[2,2]]", "--to", "[[2,2],[0,1]]"],
    ["classify", "r2z3"],
    ["demo", "paper"],
]


@pytest.mark.parametrize("argv", JSON_COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_json_output_matches_schema(capsys, schema, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code in (0, 1)
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["command"] == argv[0]


def test_schema_rejects_malformed_payload(schema):
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"command": "order", "expr": "P1"}, schema)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "riordan", "order", "P1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "order 2\n"
