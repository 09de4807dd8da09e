import random

import pytest

from ellquartic.algebra import PolyContext, RatFunc, gf2k
from ellquartic.elliptic import (
    SingularCurveError,
    TransformParams,
    compose,
    discriminant,
    group_add,
    infinity,
    j_invariant,
    negate,
    normal_form,
    on_curve,
    point_order,
    transform,
)
from ellquartic.models import WeierstrassCoeffs
from ellquartic.quartic import build_cubic
from ellquartic.suites import (
    discriminant_scaling,
    normal_form_discriminants,
    random_transform,
    random_weierstrass,
)


def test_normal_form_discriminants_symbolic():
    assert normal_form_discriminants() == {"j=0": True, "j!=0": True, "j-square": True}


def test_discriminant_scaling_small_batch():
    assert discriminant_scaling(2, 7, 40) == (40, 40)


def test_compose_matches_sequential_transforms():
    F = gf2k(2)
    rng = random.Random(3)
    for _ in range(10):
        w = random_weierstrass(F, rng)
        p1, p2 = random_transform(F, rng), random_transform(F, rng)
        assert transform(transform(w, p1), p2) == transform(w, compose(p1, p2))


def test_normal_form_tags():
    F = gf2k(3)
    t = RatFunc.t(F)
    one, zero = RatFunc.const(F, 1), RatFunc.const(F, 0)
    tag, nf, p = normal_form(WeierstrassCoeffs(zero, t, t + 1, t, one))
    assert tag == "j=0" and nf.a1 == 0 and nf.a2 == 0
    tag, nf, p = normal_form(WeierstrassCoeffs(one, t, zero, zero, t))
    assert tag == "j!=0" and nf.as_tuple()[2:4] == (zero, zero)
    tag, nf, p = normal_form(WeierstrassCoeffs(one, t, zero, zero, t * t))
    assert tag == "j-square" and nf.a6 == 0


def test_singular_curve_rejected():
    F = gf2k(2)
    w = WeierstrassCoeffs(F.one, F.zero, F.zero, F.zero, F.zero)
    with pytest.raises(SingularCurveError):
        j_invariant(w)


def test_j_invariant_of_eta_form():
    F = gf2k(3)
    eta = F.gen
    w = WeierstrassCoeffs.eta_form(F.one, eta)
    assert j_invariant(w) == (eta * eta).inverse()


def test_group_law_over_gf8():
    F = gf2k(3)
    w = WeierstrassCoeffs.eta_form(F.gen, F.one)
    pts = build_cubic(F.gen, F.one).enumerate_points()
    n = len(pts)
    O = infinity(F)
    for P in pts:
        assert on_curve(w, P)
        assert group_add(w, P, negate(w, P)) == O
        assert group_add(w, P, O) == P
        assert n % point_order(w, P) == 0
    rng = random.Random(0)
    for _ in range(30):
        P, Q, R = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        assert group_add(w, group_add(w, P, Q), R) == group_add(w, P, group_add(w, Q, R))


def test_transform_params_need_unit():
    F = gf2k(2)
    with pytest.raises(ValueError):
        TransformParams(F.zero, F.zero, F.zero, F.zero)


def test_discriminant_polynomial_identity_under_translation():
    ctx = PolyContext("a1 a2 a3 a4 a6 r s t")
    a1, a2, a3, a4, a6, r, s, t = ctx.gens()
    w = WeierstrassCoeffs(a1, a2, a3, a4, a6)
    p = TransformParams(ctx.one(), r, s, t)
    assert discriminant(transform(w, p)) == discriminant(w)
