import json

import pytest

from invword.cli import main
from invword.constructor import replay, witness_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_matrix_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--group", "sl", "--n", "2",
                       "--q", "5", "--matrix", "1,1;0,1")
    assert code == 0
    w = witness_from_json(out.strip())
    assert replay(w).ok
    path = tmp_path / "w.json"
    path.write_text(out.strip())
    code, out, _ = run(capsys, "verify", "--witness", str(path))
    assert code == 0 and out.startswith("ok length=")


def test_construct_perm(capsys):
    code, out, _ = run(capsys, "construct", "--group", "alt", "--n", "6",
                       "--perm", "(1,2,3,4,5)")
    assert code == 0
    obj = json.loads(out)
    assert obj["group"] == {"family": "Alt", "n": 6}
    assert len(obj["steps"]) == 2


def test_construct_usage_errors(capsys):
    code, _, err = run(capsys, "construct", "--group", "sl", "--n", "2",
                       "--q", "5", "--matrix", "2,0;0,1")
    assert code == 2 and "determinant" in err
    code, _, err = run(capsys, "construct", "--group", "sl", "--n", "2",
                       "--q", "5", "--matrix", "not a matrix")
    assert code == 2
    code, _, err = run(capsys, "construct", "--group", "sl", "--n", "3",
                       "--q", "5", "--matrix", "1,1;0,1")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "construct", "--group", "sl", "--n", "2",
                       "--q", "5")
    assert code == 2
    code, _, err = run(capsys, "construct", "--group", "alt", "--n", "6",
                       "--perm", "(1,2)")
    assert code == 2 and "odd" in err


def test_construct_unreachable_exits_one(capsys):
    code, out, err = run(capsys, "construct", "--group", "sl", "--n", "2",
                         "--q", "2", "--matrix", "0,1;1,1")
    assert code == 1
    assert json.loads(out.splitlines()[-1]) == {"unreachable": True}


def test_verify_tampered_exits_one(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--group", "sl", "--n", "2",
                       "--q", "7", "--matrix", "2,0;0,4")
    obj = json.loads(out)
    orig = obj["steps"][0]["c"]
    obj["steps"][0]["c"] = "1,0;3,1" if orig != "1,0;3,1" else "1,0;5,1"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", "--witness", str(path))
    assert code == 1 and out.startswith("violation")


def test_verify_unreadable_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--witness",
                       str(tmp_path / "absent.json"))
    assert code == 2
    path = tmp_path / "junk.json"
    path.write_text("{]")
    code, _, err = run(capsys, "verify", "--witness", str(path))
    assert code == 2


def test_survey_alt(capsys):
    code, out, _ = run(capsys, "survey", "--family", "alt", "--n", "5..6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family\tn\tq\trep\tsize\tdist\td_max"
    d_max = {line.split("\t")[1]: line.split("\t")[6] for line in lines[1:]}
    assert d_max == {"5": "3", "6": "2"}


def test_survey_psl2(capsys):
    code, out, _ = run(capsys, "survey", "--family", "psl2", "--q", "5,7")
    assert code == 0
    rows = [l.split("\t") for l in out.strip().splitlines()[1:]]
    assert all(int(r[6]) <= 3 for r in rows)


def test_survey_sl2_reports_unreachable_none(capsys):
    code, out, _ = run(capsys, "survey", "--family", "sl2", "--q", "2")
    assert code == 0
    assert "None" in out


def test_charsum_positive(capsys):
    code, out, _ = run(capsys, "charsum", "--q", "5")
    assert code == 0
    rows = [l.split("\t") for l in out.strip().splitlines()[1:]]
    assert rows and all(int(r[2]) > 0 for r in rows)


def test_charsum_rejects_even_q(capsys):
    code, _, err = run(capsys, "charsum", "--q", "4")
    assert code == 2 and "odd" in err


def test_bounds_csv_and_verdicts(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "sp-even")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,params,numerator,denominator,verdict"
    fails = [l for l in lines[1:] if l.endswith("FAIL")]
    assert sorted(l.split(",")[1] for l in fails) == ["2:2", "3:2"]


def test_bounds_all_families_exit_zero(capsys):
    for fam in ("gl-mn", "gl-m1", "gu-i", "gu-ii", "sp-odd", "o"):
        code, out, _ = run(capsys, "bounds", "--family", fam)
        assert code == 0, fam


def test_orbdiam(capsys):
    code, out, _ = run(capsys, "orbdiam", "--t", "alt5")
    assert code == 0
    assert out.strip() == "orbdiam=3 d_t=3 half_lower=True upper_72x=True"


def test_usage_exit_codes():
    with pytest.raises(SystemExit) as ei:
        main(["survey"])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        main(["bogus"])
    assert ei.value.code == 2
