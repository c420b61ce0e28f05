import json

import pytest

from heckeq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm-t1", "--order", "60", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert set(row) == {"id", "mode", "order", "status", "mismatch", "elapsed_ms"}
    assert (row["id"], row["status"], row["order"], row["mismatch"]) == ("thm-t1", "VERIFIED", 60, None)


def test_control_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "--id", "liu-412-uncorrected", "--order", "40",
                       "--format", "json")
    assert code == 1
    [row] = json.loads(out)
    assert row["status"] == "MISMATCH"
    assert row["mismatch"] == {"exponent": 1, "dega": 0, "degb": 0, "lhs": "1/1", "rhs": "-1/1"}


def test_text_output(capsys):
    code, out, _ = run(capsys, "verify", "--id", "liu-412-uncorrected", "--order", "40")
    assert code == 1 and "MISMATCH" in out and "first difference at q^1" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "no-such-id"],
    ["verify", "--id", "thm-t1", "--order", "3"],
    ["verify"],
    ["inequality", "--id", "nope"],
    ["expand", "nosuch"],
    ["verify", "--id", "thm-t1", "-j", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2


def test_suggestion(capsys):
    code, _, err = run(capsys, "verify", "--id", "thm-tl")
    assert code == 2 and "thm-t1" in err


def test_glob_and_manifest(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--id", "liu-41[23]", "--order", "30", "--format", "json")
    assert code == 0 and [r["id"] for r in json.loads(out)] == ["liu-412", "liu-413"]
    manifest = tmp_path / "ids.txt"
    manifest.write_text("# two checks\nthm-t1\ncor-c1  # trailing comment\n")
    out_file = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--manifest", str(manifest), "--order", "30",
                     "--format", "json", "-o", str(out_file))
    assert code == 0
    assert [r["id"] for r in json.loads(out_file.read_text())] == ["cor-c1", "thm-t1"]


def test_finite_n_max(capsys):
    code, out, _ = run(capsys, "verify", "--id", "eq-1-6", "--n-max", "4", "--format", "json")
    assert code == 0 and json.loads(out)[0]["order"] == 4


def test_inequality(capsys):
    code, out, _ = run(capsys, "inequality", "--id", "thm-t4-1-4-1", "--max-n", "200",
                       "--bridge-order", "60", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert row["status"] == "NONNEGATIVE" and row["bridge"]["status"] == "VERIFIED"


def test_list_and_expand(capsys):
    code, out, _ = run(capsys, "list", "--filter", "liu-*", "--format", "json")
    assert code == 0 and {r["id"] for r in json.loads(out)} == {"liu-412", "liu-413", "liu-414"}
    code, out, _ = run(capsys, "expand", "partitions", "--order", "8", "--format", "json")
    assert code == 0
    assert [t["coeff"] for t in json.loads(out)["terms"]] == ["1/1", "1/1", "2/1", "3/1", "5/1",
                                                              "7/1", "11/1", "15/1"]
    code, out, _ = run(capsys, "expand", "--id", "thm-t1", "--order", "10")
    assert code == 0 and out.startswith("thm-t1:lhs")
