import json
import random
import subprocess
import sys

import pytest

from ellquartic.algebra import RatFunc, gf2k
from ellquartic.cli import LiteralError, main, parse_literal
from ellquartic.quartic import forward_transform, random_admissible_witness
from ellquartic.report import Report, validate_report
from ellquartic.suites import iso_base

F4 = gf2k(2)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    d = json.loads(out)
    validate_report(d)
    return code, d


def test_literals():
    w = F4.gen
    assert parse_literal("w^2 + w", F4) == w * w + w
    assert parse_literal("3", F4) == 1
    assert parse_literal("-w", F4) == w
    t = RatFunc.t(F4)
    assert parse_literal("w^2*t + 1", F4, with_t=True) == w * w * t + 1
    assert parse_literal("(t^3 + t)/(t + w)", F4, with_t=True) == (t ** 3 + t) / (t + w)
    for bad in ("t", "x", "w^^2", "w ** t", "1/0", "f(w)"):
        with pytest.raises(LiteralError):
            parse_literal(bad, F4)


def test_verify_torsion(capsys):
    code, d = run_json(capsys, "verify", "--suite", "torsion", "--k", "2")
    assert code == 0
    assert d["schema"] == "report-v1"
    assert d["params"]["defaults"] == {"k": 2, "seed": 0, "prec": 16}
    assert d["summary"]["fail"] == 0 and d["summary"]["pass"] > 0
    assert [c["id"] for c in d["checks"]] == sorted(c["id"] for c in d["checks"])


def test_verify_intersection(capsys):
    code, d = run_json(capsys, "verify", "--suite", "intersection")
    assert code == 0
    assert all(c["status"] == "pass" for c in d["checks"])


def test_unknown_suite_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2 and "unknown suite" in err and out == ""


def test_bad_k_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--k", "17"])
    assert exc.value.code == 2


def test_report_round_trip(capsys):
    _, d = run_json(capsys, "verify", "--suite", "series")
    r = Report.from_dict(d)
    assert r.to_dict() == d


def test_count(capsys):
    code, d = run_json(capsys, "count", "0", "w", "1", "1")
    assert code == 0
    assert d["result"]["#Q"] == d["result"]["#E"] and d["result"]["equal"]
    assert d["result"]["label"] == "genus-one"
    _, d = run_json(capsys, "count", "0, w, 1, 0")
    assert d["result"]["label"] == "nodal-rational" and d["result"]["genus"] == 0
    _, d = run_json(capsys, "count", "0", "w", "0", "1")
    assert d["result"]["label"] == "reducible-with-double-line"


def test_count_parse_failure(capsys):
    code, _, err = run(capsys, "count", "0", "w", "1", "q")
    assert code == 2 and "unsupported" in err


def test_fibre_actions(capsys):
    code, d = run_json(capsys, "fibre", "data/pencil_Sprime.json", "classify")
    assert code == 0 and d["result"] == ["Ẽ7", "Ã1"]
    code, d = run_json(capsys, "fibre", "pencil_S_resolved.json", "contract", "Z")
    assert code == 0 and d["result"]["minimal"] is True
    _, d = run_json(capsys, "fibre", "pencil_S_resolved.json", "genus")
    assert set(d["result"].values()) == {1}
    _, d = run_json(capsys, "fibre", "pencil_S_resolved.json", "minimal")
    assert d["result"] == {"S-bar fibre over (1:0)": False, "S-bar fibre over (0:1)": True}
    _, d = run_json(capsys, "fibre", "pencil_S_resolved.json", "solve")
    assert d["result"][0]["components"][-1]["self_intersection"] == -1


def test_fibre_malformed_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"name": 3}')
    code, _, err = run(capsys, "fibre", str(p), "classify")
    assert code == 2 and err


def test_fibre_contract_errors(capsys):
    assert run(capsys, "fibre", "pencil_S_resolved.json", "contract", "Q9")[0] == 2
    assert run(capsys, "fibre", "pencil_S_resolved.json", "contract", "A1")[0] == 2


def test_iso(capsys):
    q1 = iso_base(F4)
    q2 = forward_transform(q1, random_admissible_witness(q1, random.Random(4)))
    left = ", ".join(str(v) for v in q1.as_tuple())
    right = ", ".join(str(v) for v in q2.as_tuple())
    code, d = run_json(capsys, "iso", left, right)
    assert code == 0 and d["result"]["status"] == "isomorphic"
    assert d["checks"][0]["status"] == "pass"
    _, d = run_json(capsys, "iso", left, "t, t^3 + t, 1, t + 1")
    assert d["result"]["decision"] == "not isomorphic (eta)"
    _, d = run_json(capsys, "iso", left, "t + 1/(t + 1), t^3 + t, 1, t")
    assert d["result"]["decision"] == "undecided: unsupported fragment"


def test_delta(capsys):
    code, d = run_json(capsys, "delta", "0", "w", "1", "1")
    assert code == 0
    assert d["result"]["moving_singularity"]["blowup"] == 2
    _, d = run_json(capsys, "delta", "0", "w", "1", "0")
    assert sorted(p["delta"] for p in d["result"]["singular_points"]) == [1, 2]


def test_series(capsys):
    code, d = run_json(capsys, "series", "tate13", "w", "1", "--prec", "8")
    assert code == 0
    assert d["result"]["s"]["coefficients"][3:5] == ["1", "1"]
    assert run(capsys, "series", "y", "1")[0] == 2
    _, d = run_json(capsys, "series", "branch", "0", "w", "1", "1")
    # z starts with b^(1/2), and w^(1/2) = w + 1 in GF(4)
    assert d["result"]["z"]["coefficients"][0] == "w + 1"


def test_text_output(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series", "--text")
    assert code == 0 and "PASS  series/tate13" in out


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "ellquartic.cli", "fibre", "pencil_Sprime.json", "classify", "--text"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "Ẽ7" in r.stdout
