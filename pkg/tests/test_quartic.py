import random

import pytest

from ellquartic.algebra import RatFunc, gf2k
from ellquartic.curves import ReducibleCurveError
from ellquartic.models import CaseAParams, QuarticParams, quartic_of
from ellquartic.projective import NotOnCurveError, ProjPoint
from ellquartic.quartic import (
    DegenerateFibreError,
    build_case_a_model,
    build_cubic,
    build_quartic,
    fibre_taxonomy,
    forward_transform,
    geometric_genus_of_fibre,
    inflection_points,
    isomorphism_decide,
    normalize_q_rational,
    order2_point,
    phi,
    phi_inverse,
    psi_inverse_expression,
    random_admissible_witness,
    rational_model_form,
    singular_point,
    tangent_profile,
    transported_add,
    transported_order,
    verify_witness,
)
from ellquartic.suites import (
    EXPECTED_GENUS,
    fibre_sample,
    iso_base,
    morphism_report,
    taxonomy_sweep,
    torsion_report,
    tangent_report,
)

F4 = gf2k(2)
W = F4.gen


def test_frozen_counts_gf4():
    q = QuarticParams(F4.zero, W, F4.one, F4.one)
    assert build_quartic(q).count_points() == 8
    assert build_cubic(q.a, q.eta).count_points() == 8


@pytest.mark.parametrize("k", [2, 3])
def test_morphisms_exhaustive(k):
    for q in fibre_sample(k, 0, "test-morphisms", 5):
        assert all(morphism_report(q).values()), q


def test_phi_rejects_points_off_the_quartic():
    q = QuarticParams(F4.zero, W, F4.one, F4.one)
    with pytest.raises(NotOnCurveError):
        phi(q, ProjPoint(F4.one, F4.zero, F4.zero))


def test_phi_inverse_needs_c():
    q = QuarticParams(F4.zero, W, F4.zero, F4.one)
    with pytest.raises(DegenerateFibreError):
        phi_inverse(q, ProjPoint(F4.zero, F4.one, F4.zero))


@pytest.mark.parametrize("k", [2, 4])
def test_torsion_exhaustive(k):
    for q in fibre_sample(k, 1, "test-torsion", 2):
        for name, (ok, detail) in torsion_report(q).items():
            assert ok, (q, name, detail)


def test_transported_group_neutral_is_singular_point():
    q = QuarticParams(W, W, F4.one, W + 1)
    S = singular_point(q)
    for P in build_quartic(q).enumerate_points():
        assert transported_add(q, P, S) == P
    assert transported_order(q, order2_point(q)) == 2


def test_inflection_formula_gf8():
    for q in fibre_sample(3, 2, "test-tangent", 3):
        allowed, four, _ = tangent_report(q)
        assert allowed and four
        inf = inflection_points(q)
        assert len(inf.points) == 2
        for P in inf.points:
            assert tangent_profile(q, P)[0] == (4,)


def test_taxonomy_sweep_matches_genus():
    sweep = taxonomy_sweep(2)
    assert len(sweep) == 27
    for q, label, genus in sweep:
        assert EXPECTED_GENUS[label] == genus, q
    labels = {label for _, label, _ in sweep}
    assert labels == set(EXPECTED_GENUS)


def test_fibre_genus_helpers():
    assert geometric_genus_of_fibre(QuarticParams(F4.zero, W, F4.one, F4.one)) == 1
    assert fibre_taxonomy(QuarticParams(F4.zero, W, F4.zero, F4.one)) == "reducible-with-double-line"
    with pytest.raises(ReducibleCurveError):
        geometric_genus_of_fibre(QuarticParams(F4.zero, W, F4.zero, F4.one))


def test_psi_inverse_expression():
    assert psi_inverse_expression(seed=1, points=20).passed
    assert not psi_inverse_expression(seed=1, points=20, drop_e_term=True).passed


# isomorphisms over GF(4)(t)


def test_forward_pairs_recognized():
    q1 = iso_base(F4)
    rng = random.Random(5)
    for _ in range(20):
        w = random_admissible_witness(q1, rng)
        q2 = forward_transform(q1, w)
        assert verify_witness(q1, q2, w)
        d = isomorphism_decide(q1, q2)
        assert d.isomorphic and verify_witness(q1, q2, d.witness)


def test_witness_by_substitution():
    q1 = iso_base(F4)
    t = RatFunc.t(F4)
    w = random_admissible_witness(q1, random.Random(9))
    q2 = forward_transform(q1, w)
    x, y, z = t + 1, t ** 2, t ** 3 + t * t + 1
    lhs = quartic_of(q1, x, y + w.sigma * x, w.alpha * z + w.beta * y + w.gamma * x)
    assert lhs == w.alpha ** 2 * quartic_of(q2, x, y, z)


def test_rejection_reasons():
    q1 = iso_base(F4)
    t = RatFunc.t(F4)
    assert str(isomorphism_decide(q1, QuarticParams(q1.a, q1.b, q1.c, q1.e + 1))) == "not isomorphic (eta)"
    d = isomorphism_decide(q1, QuarticParams(q1.a, q1.b, q1.c * t, q1.e / t))
    assert d.reason == "c-ratio"
    d = isomorphism_decide(q1, QuarticParams(q1.a + 1 / (t + 1), q1.b, q1.c, q1.e))
    assert d.status == "undecided"


def test_square_b_is_rejected():
    t = RatFunc.t(F4)
    one = RatFunc.const(F4, 1)
    q = QuarticParams(t, t * t, one, t)
    with pytest.raises(ValueError):
        isomorphism_decide(q, q)


def test_rational_normalization():
    t = RatFunc.t(F4)
    x, y, z = t + 1, t ** 2, t ** 3 + t * t + 1
    for a in (t, t ** 2 + 1):
        s = t * t + 1
        q = QuarticParams(a, t, t ** 3 + 1, 1 / (t + s * s))
        nm = normalize_q_rational(q)
        p = nm.params
        assert p.c == p.b * p.eta
        assert verify_witness(q, p, nm.witness)
        assert p.b * quartic_of(p, x, y, z) == rational_model_form(p, x, y, z)
    one = RatFunc.const(F4, 1)
    # b + 1/e = t + 1 is not a square
    assert normalize_q_rational(QuarticParams(t, t, one, one)) is None


# case (a)


def test_case_a_singular_points_lie_on_D():
    m = build_case_a_model(CaseAParams(W, F4.one, W, W * W, F4.one))
    rep = m.singular_report()
    assert len(rep) == 2
    for P, D, delta in rep:
        assert D == 0
        assert delta == 2


def test_case_a_needs_a():
    with pytest.raises(ValueError):
        build_case_a_model(CaseAParams(F4.zero, F4.one, F4.one, F4.one, F4.one))
