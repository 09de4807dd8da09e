"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see one PASS/FAIL line per criterion.
"""

import random
import subprocess
import sys

import pytest

from ellquartic.algebra import gf2k
from ellquartic.suites import (
    EXPECTED_GENUS,
    EXPECTED_REJECTIONS,
    delta_report,
    discriminant_scaling,
    fibre_sample,
    intersection_report,
    iso_forward_pairs,
    iso_rejections,
    local_expansions,
    morphism_report,
    node_delta,
    normal_form_discriminants,
    series_coefficients,
    tangent_report,
    taxonomy_sweep,
    torsion_report,
)
from ellquartic.models import QuarticParams
from ellquartic.symbolic import FAMILIES, family_checks, verify_symbolic_suite


def _record(n, title, ok, detail=""):
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    print(line)
    assert ok, line


def test_01_discriminants():
    forms = normal_form_discriminants()
    good, n = discriminant_scaling(3, 0, 500)
    _record(1, "discriminants of normal forms, mu^12 scaling over GF(8)(t)",
            all(forms.values()) and good == n == 500, f"{good}/{n}")


def test_02_series():
    coeffs = series_coefficients()
    bad = [name for name, (got, want) in coeffs.items() if got != want]
    rng = random.Random(0)
    for _ in range(20):
        bad += [name for name, (got, want) in local_expansions(gf2k(4), rng).items() if got != want]
    _record(2, "printed series coefficients", not bad and len(coeffs) == 7,
            f"{len(coeffs)} symbolic expansions, 4 more at 20 points over GF(16)")


def test_03_morphisms():
    failures = []
    for k in (2, 3):
        for q in fibre_sample(k, 0, "acceptance", 5):
            failures += [(k, str(q), name) for name, ok in morphism_report(q).items() if not ok]
    _record(3, "phi bijective, Frobenius composites, distinguished points over GF(4) and GF(8)",
            not failures, f"failures {failures}" if failures else "10 fibres")


def test_04_torsion():
    failures = []
    for k in (2, 4):
        for q in fibre_sample(k, 0, "acceptance-torsion", 3):
            failures += [(k, name) for name, (ok, _) in torsion_report(q).items() if not ok]
    _record(4, "unique 2-torsion point, 4-torsion equals inflections over GF(4) and GF(16)",
            not failures, f"failures {failures}" if failures else "6 fibres")


def test_05_delta():
    bad = []
    for k in (2, 3):
        for q in fibre_sample(k, 0, "acceptance-delta", 3):
            db, ds, _ = delta_report(q)
            if not db == ds == 2:
                bad.append(("moving", str(q), db, ds))
            d = node_delta(QuarticParams(q.a, q.b, q.c, q.e * 0))
            if d != 1:
                bad.append(("node", str(q), d))
    bad += [("sweep", str(q)) for q, lab, g in taxonomy_sweep(2) if EXPECTED_GENUS[lab] != g]
    _record(5, "delta 2 at the moving singularity, 1 at the node, taxonomy sweep", not bad, str(bad) if bad else "")


def test_06_strangeness_and_inflections():
    (strange,) = family_checks("strangeness")
    results = [tangent_report(q) for q in fibre_sample(3, 0, "acceptance-tangent", 5)]
    ok = strange.target.is_zero() and all(a and b for a, b, _ in results)
    _record(6, "dQ/dz = 0 and tangent profiles over GF(8)", ok)


def test_07_symbolic_suite():
    res = verify_symbolic_suite(seed=0)
    mutants = {f: verify_symbolic_suite(seed=0, points=5, mutate=f) for f in FAMILIES}
    controls = all(not m.family_passed(f) for f, m in mutants.items())
    _record(7, "seven identity families certified, each with a failing mutation",
            res.all_passed and controls and {c.family for c in res.checks} == set(FAMILIES),
            f"{len(res.checks)} identities")


def test_08_intersection_theory():
    rep = intersection_report()
    bad = [name for name, (ok, _) in rep.items() if not ok]
    _record(8, "self-intersections, genus, contraction, Kodaira types, cover map", not bad, str(bad) if bad else "")


def test_09_isomorphism_decision():
    ok, n = iso_forward_pairs(2, 0, 100)
    rej = iso_rejections(2)
    good = ok == n == 100 and rej["eta"] == EXPECTED_REJECTIONS["eta"] and rej["c-ratio"] == EXPECTED_REJECTIONS["c-ratio"]
    _record(9, "forward pairs recognized, eta and c-ratio rejections", good, f"{ok}/{n}")


def _verify_all():
    r = subprocess.run([sys.executable, "-m", "ellquartic.cli", "verify", "--suite", "all", "--seed", "0"],
                       capture_output=True)
    return r.returncode, r.stdout


def test_10_determinism():
    (c1, out1), (c2, out2) = _verify_all(), _verify_all()
    _record(10, "verify --suite all --seed 0 is byte-identical across runs",
            out1 == out2 and c1 == c2 == 0 and len(out1) > 0, f"{len(out1)} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q"]))
