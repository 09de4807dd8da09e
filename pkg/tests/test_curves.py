from ellquartic.algebra import gf2k
from ellquartic.curves import (
    PlaneCurve,
    delta_blowup,
    delta_semigroup,
    geometric_genus,
    integrality,
    multiplicity_sequence,
    xyz_context,
)
from ellquartic.models import cubic_form, quartic_form
from ellquartic.projective import ProjPoint
from ellquartic.series import LaurentSeries

F = gf2k(2)
W = F.gen


def _curve(form):
    return PlaneCurve(form)


def test_cusp_and_node():
    x, y, z = xyz_context(F).gens()
    cusp = _curve(y * y * z + x ** 3)
    O = ProjPoint(F.zero, F.zero, F.one)
    assert delta_blowup(cusp, O) == 1
    assert integrality(cusp).status == "integral"
    assert geometric_genus(cusp) == 0


def test_klein_quartic_is_smooth():
    x, y, z = xyz_context(F).gens()
    klein = _curve(x ** 3 * y + y ** 3 * z + z ** 3 * x)
    assert klein.singular_points() == []
    assert geometric_genus(klein) == 3


def test_reducible_control():
    # x^4 + y^4 + x z^3 + y z^3 = (x + y)(...) is not integral
    x, y, z = xyz_context(F).gens()
    C = _curve(x ** 4 + y ** 4 + x * z ** 3 + y * z ** 3)
    assert integrality(C).status != "integral"


def test_quartic_moving_singularity():
    C = PlaneCurve.from_function(F, quartic_form, F.zero, W, F.one, F.one)
    S = C.singular_points()
    assert S == [ProjPoint(F.zero, W, F.one)]
    assert delta_blowup(C, S[0]) == 2
    assert multiplicity_sequence(C, S[0])[0] == 2
    assert geometric_genus(C) == 1


def test_nodal_fibre():
    C = PlaneCurve.from_function(F, quartic_form, F.zero, W, F.one, F.zero)
    rep = integrality(C)
    assert rep.status == "integral"
    assert sorted(rep.deltas) == [1, 2]


def test_double_line_fibre():
    C = PlaneCurve.from_function(F, quartic_form, F.zero, W, F.zero, F.one)
    assert integrality(C).status in ("reducible", "non-reduced")


def test_semigroup_delta():
    t = LaurentSeries.t(F.one, 30)
    assert delta_semigroup(t ** 2, t ** 3) == 1
    assert delta_semigroup(t, t) == 0
    assert delta_semigroup(t ** 2, t ** 5) == 2


def test_point_count_of_cubic():
    E = PlaneCurve.from_function(F, cubic_form, F.one, F.one)
    assert E.count_points() == len(E.enumerate_points())
