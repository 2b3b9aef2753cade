import json
import subprocess
import sys

import pytest

from realization.cli import main

CORRUPT = """flavor: simplicial
gen a dim 0
gen b dim 0
gen e dim 1
gen g dim 1
gen x dim 2
face e 0 = b
face e 1 = a
face g 0 = b
face g 1 = b
face x 0 = e
face x 1 = g
face x 2 = e
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_valid_simplex(capsys):
    code, out, _ = run(capsys, "validate", "delta2")
    assert code == 0 and "ok" in out


def test_corrupted_faces(tmp_path, capsys):
    f = tmp_path / "bad.pres"
    f.write_text(CORRUPT)
    code, out, _ = run(capsys, "validate", str(f), "--format", "json-lines")
    (rec,) = records(out)
    assert code == 1
    assert rec["status"] == "fail" and rec["relation"] == "S-1" and rec["generator"] == "x"


def test_missing_reflection_is_a_parse_error(tmp_path, capsys):
    f = tmp_path / "now.pres"
    f.write_text("flavor: dihedral\ngen v dim 0\nt v = v\n")
    code, out, err = run(capsys, "validate", str(f))
    assert code == 2 and out == "" and "missing w" in err


@pytest.mark.parametrize(
    "a,b,d",
    [
        ("simplex 1 (3/10)", "simplex 1 (1/2)", "1/5"),
        ("simplex 1 (1/2)", "simplex 1 (1/2)", "0"),
        ('@ {cuts: [], elem: "v0"}', '@ {cuts: [], elem: "v1"}', "1"),
    ],
)
def test_distance(capsys, a, b, d):
    code, out, _ = run(capsys, "distance", "delta1", a, b)
    assert code == 0 and out.strip() == d


def test_distance_json_is_exact(capsys):
    _, out, _ = run(capsys, "distance", "delta1", "simplex 1 (3/10)", "simplex 1 (1/2)",
                    "--format", "json-lines")
    (rec,) = records(out)
    assert rec["record"] == "distance" and rec["distance"] == "1/5"


def test_act_identity(capsys):
    _, out, _ = run(capsys, "act", "delta1", "pl interval [(0,0), (1,1)]", "simplex 1 (1/3)")
    assert out.strip() == '@ {cuts: [1/3], elem: "v0_1"}'


def test_act_interval_map(capsys):
    _, out, _ = run(capsys, "act", "delta1", "pl interval [(0,0), (1/2,1/4), (1,1)]", "simplex 1 (1/2)")
    assert out.strip() == '@ {cuts: [1/4], elem: "v0_1"}'


def test_act_reflection(capsys):
    _, a, _ = run(capsys, "act", "dih1", "pl circle - [(0,0)]", "dihedral 1 (0, 1/3)")
    _, b, _ = run(capsys, "act", "dih1", "pl circle + [(0,0)]", "dihedral 1 - (0, -1/3)")
    assert a == b and "e0_1_t0w" in a


def test_verify_axioms_dihedral(capsys):
    code, out, _ = run(capsys, "verify", "axioms", "--flavor", "D", "--max-level", "3", "--word-len", "3")
    assert code == 0 and out.splitlines()[-1] == "axioms: PASS"


def test_verify_products(capsys):
    code, out, _ = run(capsys, "verify", "products", "--format", "json-lines")
    recs = records(out)
    facts = {r["fact"]: r["value"] for r in recs if r["record"] == "fact"}
    assert code == 0
    assert facts["nondegenerate cells"] == {"0": 4, "1": 5, "2": 2}


def test_verify_sdr_on_cyclic(capsys):
    code, out, _ = run(capsys, "verify", "sdr", "lambda1", "--r", "2", "--samples", "20")
    assert code == 0 and out.splitlines()[-1] == "sdr: PASS"


def test_word_normal_form(capsys):
    code, out, _ = run(capsys, "verify", "axioms", "--word", "t t t", "--level", "1",
                       "--flavor", "C", "--format", "json-lines")
    (rec,) = records(out)
    assert code == 0 and rec["power"] == 1 and rec["status"] == "pass"


def test_bad_word(capsys):
    code, _, err = run(capsys, "verify", "axioms", "--word", "d0 d0", "--level", "1")
    assert code == 2 and err.startswith("error:")


def test_fixed_points_under_the_rotation_subgroup(capsys):
    code, out, _ = run(capsys, "fixed-points", "dih1_mod_d2", "--group", "C", "--format", "json-lines")
    recs = records(out)
    assert recs[0]["sizes"] == [2, 4, 6, 8]
    assert code == 1 and recs[-1]["relation"] == "SD-3"


def test_fixed_points_under_the_full_group(capsys):
    code, out, _ = run(capsys, "fixed-points", "dih1_mod_d2", "--format", "json-lines")
    assert code == 0 and records(out)[0]["sizes"] == [2, 2, 2, 2]


def test_subdivide_point(capsys):
    # s2 s1 v0_1 is (0, 1, 1, 1), so only the first of the three cuts survives
    code, out, _ = run(capsys, "subdivide", "delta1", "--r", "2", "--point", '@ {cuts: [1/3], elem: "s2 s1 v0_1"}')
    assert code == 0
    assert out.splitlines()[-1].endswith('= @ {cuts: [1/6], elem: "v0_1"}')


def test_env_cap(monkeypatch, capsys):
    monkeypatch.setenv("REALIZATION_CAP", "9")
    code, _, err = run(capsys, "validate", "delta2")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("REALIZATION_CAP", "1")
    code, out, _ = run(capsys, "subdivide", "lambda1", "--format", "json-lines")
    assert code == 0 and len(records(out)[0]["sizes"]) == 1


def test_flag_beats_env(monkeypatch, capsys):
    monkeypatch.setenv("REALIZATION_CAP", "9")
    assert run(capsys, "validate", "delta2", "--cap", "4")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "nosuch"],
        ["distance", "delta1", "simplex 1 (2)", "simplex 1 (1/2)"],
        ["act", "delta1", "pl interval [(0,0), (1/2,1), (1,1/2)]", "simplex 1 (1/2)"],
        ["frobnicate"],
        ["verify", "sdr", "--r", "0"],
        ["distance", "delta1", "simplex 1 (1/2)", "simplex 1 (1/3)", "--bound", "15"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_too_many_cuts(capsys):
    cuts = ", ".join(f"{k}/16" for k in range(1, 16))
    assert run(capsys, "distance", "delta1", f'@ {{cuts: [{cuts}], elem: "v0_1"}}', "simplex 1 (1/2)")[0] == 2


def test_output_is_deterministic(capsys):
    argv = ["verify", "metric", "--samples", "10", "--seed", "5", "--format", "json-lines"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "realization.cli", "distance", "delta1",
                           "simplex 1 (3/10)", "simplex 1 (1/2)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/5"
