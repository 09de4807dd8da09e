import random

import pytest

from ellquartic.algebra import gf2k
from ellquartic.models import QuarticParams, WeierstrassCoeffs, quartic_of, weierstrass_affine
from ellquartic.series import (
    EXACT,
    LaurentSeries,
    branch_parametrization,
    expand_tate13,
    expand_y_at_infinity,
)
from ellquartic.suites import local_expansions, series_coefficients


@pytest.mark.parametrize("name", sorted(series_coefficients()))
def test_printed_coefficients(name):
    got, want = series_coefficients()[name]
    assert got == want


def test_laurent_arithmetic():
    F = gf2k(2)
    t = LaurentSeries.t(F.one, 20)
    f = t.shift(-2) + F.gen
    g = f.inverse()
    assert (f * g).truncate(10) == LaurentSeries([F.one], 0, 10, F.one)
    # squaring doubles the known precision in characteristic 2
    assert f.square().prec > (f * f).prec
    assert (f * f) == f.square().truncate((f * f).prec)
    assert f.square().sqrt() == f


def test_exact_series_has_infinite_precision():
    F = gf2k(2)
    s = LaurentSeries([F.one, F.gen], -1, EXACT, F.one)
    assert s.prec == EXACT
    assert s.valuation() == -1


def test_y_expansion_satisfies_the_cubic():
    F = gf2k(3)
    w = WeierstrassCoeffs(F.one, F.gen, F.gen + 1, F.one, F.gen ** 3)
    y = expand_y_at_infinity(w, 12)
    x = y.shift(1)
    # y^2 is known below t^(prec - 3), the cubic in x to about the same order
    r = weierstrass_affine(w, x, y)
    assert all(c == 0 for c in r.coefficient_list(r.start, 6))


def test_tate13_starts_at_order_three():
    F = gf2k(2)
    s = expand_tate13(F.gen, F.one, 10)
    assert s.valuation() == 3


def test_branch_lies_on_the_quartic():
    F = gf2k(2)
    q = QuarticParams(F.gen, F.gen, F.one, F.gen + 1)
    x, y, z = branch_parametrization(q, 20)
    assert quartic_of(q, x, y, z).is_zero()
    assert z.coefficient(0) == q.b.sqrt()


def test_branch_needs_precision():
    F = gf2k(2)
    with pytest.raises(ValueError):
        branch_parametrization(QuarticParams(F.one, F.one, F.one, F.one), 3)


@pytest.mark.parametrize("k", [3, 5])
def test_expansions_at_finite_points(k):
    rng = random.Random(k)
    for _ in range(10):
        for name, (got, want) in local_expansions(gf2k(k), rng).items():
            assert got == want, name
