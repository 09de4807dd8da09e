"""Quartic models Q_(a,b,c,e) and their maps to the cubics E_(a, ce).

Fibre-level code works with GF(2^k) parameters.  The isomorphism decision and
the rational normalization work over GF(2^k)(t).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from .algebra.gf import GF2k, GFElement, NotASquareError, common_field, gf2k
from .algebra.ratfunc import PoleError, RatFunc, artin_schreier_solve
from .curves import PlaneCurve, delta_blowup, geometric_genus
from .elliptic import group_add, infinity, multiply, on_curve
from .models import (
    CaseAParams,
    QuarticParams,
    WeierstrassCoeffs,
    ZSquaredModel,
    cubic_form,
    quartic_form,
    quartic_of,
    quartic_w,
    weierstrass_form,
)
from .projective import NotOnCurveError, ProjPoint

__all__ = [
    "DegenerateFibreError", "build_quartic", "build_cubic", "cubic_of", "root_params",
    "frobenius_params", "singular_point", "order2_point", "phi", "phi_inverse", "psi",
    "psi_section_composite", "PsiInverseReport", "psi_inverse_expression",
    "transported_add", "transported_multiply", "transported_order",
    "Inflections", "inflection_points", "tangent_profile", "fibre_taxonomy",
    "geometric_genus_of_fibre", "IsoWitness", "IsoDecision", "isomorphism_decide",
    "forward_transform", "random_admissible_witness", "verify_witness",
    "NormalizedModel", "normalize_q_rational", "rational_model_form",
    "CaseAModel", "build_case_a_model",
]


class DegenerateFibreError(ValueError):
    """The operation needs c != 0 (and e != 0 where stated)."""


def _field_of(*vals) -> GF2k:
    fields = [v.field for v in vals if isinstance(v, GFElement)]
    if not fields:
        raise TypeError("parameters must contain field elements")
    return common_field(*fields)


def _lift(q: QuarticParams, F: GF2k) -> QuarticParams:
    return q.map(lambda v: v.embed(F) if isinstance(v, GFElement) else F(int(v) & 1))


def _align(q: QuarticParams, *points: ProjPoint):
    F = common_field(_field_of(*q.as_tuple()), *(P.field for P in points))
    return (_lift(q, F), F) + tuple(P.embed(F) for P in points)


def root_params(q: QuarticParams) -> QuarticParams:
    """(a^(1/2), b^(1/2), c^(1/2), e^(1/2)), written (A, B, C, E) below."""
    return q.map(lambda v: v.sqrt())


def frobenius_params(q: QuarticParams) -> QuarticParams:
    return q.map(lambda v: v * v)


# constructors -------------------------------------------------------------------


def build_quartic(q: QuarticParams) -> PlaneCurve:
    F = _field_of(*q.as_tuple())
    return PlaneCurve.from_function(F, quartic_of, _lift(q, F))


def build_cubic(a, eta) -> PlaneCurve:
    F = _field_of(a, eta)
    lift = (lambda v: v.embed(F) if isinstance(v, GFElement) else F(int(v) & 1))
    return PlaneCurve.from_function(F, cubic_form, lift(a), lift(eta))


def cubic_of(q: QuarticParams) -> WeierstrassCoeffs:
    """Target of phi: y^2 + x y = x^3 + a x^2 + c e x."""
    return WeierstrassCoeffs.eta_form(q.a, q.eta)


def singular_point(q: QuarticParams) -> ProjPoint:
    q, F = _align(q)
    return ProjPoint(F.zero, F.one, q.b.sqrt())


def order2_point(q: QuarticParams) -> ProjPoint:
    q, F = _align(q)
    if q.e == 0:
        raise DegenerateFibreError("e = 0")
    return ProjPoint(F.zero, F.one, q.b.sqrt() + q.e.sqrt().inverse())


def _special_image(q: QuarticParams, F: GF2k) -> ProjPoint:
    """(0 : E : 1 + B E), the point over (0 : 0 : 1)."""
    E = q.e.sqrt()
    return ProjPoint(F.zero, E, F.one + q.b.sqrt() * E)


# morphisms -------------------------------------------------------------------------


def phi(q: QuarticParams, P: ProjPoint) -> ProjPoint:
    """The map Q_(a,b,c,e) -> E_(a, ce)."""
    q, F, P = _align(q, P)
    x, y, z = P
    if quartic_of(q, x, y, z) != 0:
        raise NotOnCurveError(f"{P} is not on the quartic {q}")
    w = quartic_w(q.a, q.b, x, y, z)
    first = (q.c * x * x, q.c * x * y, w)
    if any(v != 0 for v in first):
        return ProjPoint(*first)
    h = q.e * w + y * y + x * y + q.a * x * x
    second = (x * h, y * h, x ** 3)
    if any(v != 0 for v in second):
        return ProjPoint(*second)
    raise DegenerateFibreError(f"both assignments vanish at {P}")


def phi_inverse(q: QuarticParams, R: ProjPoint) -> ProjPoint:
    q, F, R = _align(q, R)
    if q.c == 0:
        raise DegenerateFibreError("phi is not invertible when c = 0")
    if not on_curve(cubic_of(q), R):
        raise NotOnCurveError(f"{R} is not on E_(a, ce)")
    x, y, z = R
    if x == 0 and y == 0:
        return _special_image(q, F)
    A, B, C, _ = root_params(q).as_tuple()
    return ProjPoint(x, y, B * y + A * B * x + C * (x * z).sqrt())


def psi(q: QuarticParams, P: ProjPoint) -> ProjPoint:
    """The map E_(A, (ce)^(1/2)) -> Q_(a,b,c,e); phi o psi is the Frobenius of the cubic."""
    q, F, P = _align(q, P)
    A, B, C, _ = root_params(q).as_tuple()
    x, y, z = P
    if cubic_form(A, q.eta.sqrt(), x, y, z) != 0:
        raise NotOnCurveError(f"{P} is not on E_(A, H)")
    if x == 0 and y == 0:
        return _special_image(q, F)
    return ProjPoint(x * x, y * y, B * y * y + A * B * x * x + C * x * z)


def psi_section_composite(q: QuarticParams, P: ProjPoint) -> ProjPoint:
    """psi for the squared parameters after phi; equals P with squared coordinates."""
    return psi(frobenius_params(q), phi(q, P))


@dataclass(frozen=True)
class PsiInverseReport:
    symbolic: bool
    numeric: bool
    points_checked: int

    @property
    def passed(self) -> bool:
        return self.symbolic and self.numeric


def psi_inverse_expression(seed: int = 0, points: int = 50, drop_e_term: bool = False) -> PsiInverseReport:
    """Check (x y)^(1/2) = C x^2 / L + y + A x + E L on Q, where L = z + B y + A B x.

    Symbolically (C x^2 + L (y + A x + E L))^2 + x y L^2 equals the quartic form;
    numerically the identity is evaluated at points of random fibres over GF(16)
    with L != 0.
    """
    from .algebra.mpoly import PolyContext, check_certificate

    def rhs(A, B, C, E, x, y, z):
        L = z + B * y + A * B * x
        e_term = 0 if drop_e_term else E * L
        return C * x * x + L * (y + A * x + e_term), L

    ctx = PolyContext("A B C E x y z")
    A, B, C, E, x, y, z = ctx.gens()
    num, L = rhs(A, B, C, E, x, y, z)
    Q = quartic_form(A * A, B * B, C * C, E * E, x, y, z)
    symbolic = check_certificate(num * num + x * y * L * L, [Q], [ctx.one()])

    rng = random.Random(seed)
    F = gf2k(4)
    checked = 0
    numeric = True
    while checked < points:
        q = QuarticParams(F.random(rng), F.random(rng, True), F.random(rng, True), F.random(rng, True))
        roots = root_params(q).as_tuple()
        pts = [P for P in build_quartic(q).enumerate_points() if rhs(*roots, *P)[1] != 0]
        for P in rng.sample(pts, min(len(pts), points - checked)):
            n, Lv = rhs(*roots, *P)
            if (n / Lv) ** 2 != P.x * P.y:
                numeric = False
            checked += 1
    return PsiInverseReport(symbolic, numeric, checked)


# transported group law ---------------------------------------------------------------


def _check_smooth(q):
    if q.c == 0 or q.e == 0:
        raise DegenerateFibreError("the group law needs c e != 0")


def transported_add(q: QuarticParams, P1: ProjPoint, P2: ProjPoint) -> ProjPoint:
    """Sum on Q whose neutral element is the singular point."""
    q, F, P1, P2 = _align(q, P1, P2)
    _check_smooth(q)
    E = cubic_of(q)
    return phi_inverse(q, group_add(E, phi(q, P1), phi(q, P2)))


def transported_multiply(q: QuarticParams, n: int, P: ProjPoint) -> ProjPoint:
    q, F, P = _align(q, P)
    _check_smooth(q)
    return phi_inverse(q, multiply(cubic_of(q), n, phi(q, P)))


def transported_order(q: QuarticParams, P: ProjPoint, bound: int = 10_000):
    q, F, P = _align(q, P)
    _check_smooth(q)
    E = cubic_of(q)
    R0 = phi(q, P)
    O = infinity(F)
    R = R0
    for n in range(1, bound + 1):
        if R == O:
            return n
        R = group_add(E, R, R0)
    return "exceeds bound"


@dataclass(frozen=True)
class Inflections:
    points: tuple
    field: GF2k


def inflection_points(q: QuarticParams) -> Inflections:
    """The two points with y^2 + x y + a x^2 = 0 and z = (a^2 b^2 + c/e)^(1/4) x + B y.

    Moves to GF(2^(2k)) when u^2 + u + a has no root in GF(2^k).
    """
    q, F = _align(q)
    _check_smooth(q)
    if F.artin_schreier_root(q.a.v) is None:
        F = gf2k(2 * F.k)
        q = _lift(q, F)
    u0 = F(F.artin_schreier_root(q.a.v))
    r = (q.a * q.a * q.b * q.b + q.c / q.e).sqrt().sqrt()
    B = q.b.sqrt()
    pts = tuple(ProjPoint(F.one, u, r + B * u) for u in (u0, u0 + 1))
    return Inflections(tuple(sorted(pts, key=ProjPoint.sort_key)), F)


def tangent_profile(q: QuarticParams, P: ProjPoint):
    """(sorted multiplicities, meets the singular point?) for the tangent at a smooth P."""
    C = build_quartic(q)
    prof = C.line_intersection_profile(C.tangent_line(P))
    S = singular_point(q)
    mults = tuple(sorted((m for _, m in prof), reverse=True))
    return mults, any(R == S for R, _ in prof)


# fibre taxonomy -----------------------------------------------------------------------


def fibre_taxonomy(q: QuarticParams) -> str:
    if q.c == 0:
        return "reducible-with-double-line"
    if q.e == 0:
        return "nodal-rational"
    return "genus-one"


def geometric_genus_of_fibre(q: QuarticParams, bound: int = 4) -> int:
    """Arithmetic genus 3 minus the delta invariants of all singular points.

    Raises ReducibleCurveError for fibres that are not integral.
    """
    return geometric_genus(build_quartic(q), bound)


# isomorphism decision over GF(2^k)(t) -------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """x = x', y = y' + sigma x', z = alpha z' + beta y' + gamma x'."""

    alpha: Any
    sigma: Any
    beta: Any
    gamma: Any

    def as_tuple(self):
        return (self.alpha, self.sigma, self.beta, self.gamma)


@dataclass(frozen=True)
class IsoDecision:
    status: str  # "isomorphic", "not isomorphic" or "undecided"
    reason: str = ""
    witness: IsoWitness | None = None

    @property
    def isomorphic(self) -> bool:
        return self.status == "isomorphic"

    def __str__(self):
        if self.isomorphic:
            return "isomorphic"
        if self.status == "undecided":
            return f"undecided: {self.reason}"
        return f"not isomorphic ({self.reason})"


def _sqrt_or_none(v):
    try:
        return v.sqrt()
    except NotASquareError:
        return None


def _check_arithmetic(q: QuarticParams):
    if q.c == 0 or q.e == 0:
        raise ValueError(f"{q}: c and e must be nonzero")
    if _sqrt_or_none(q.b) is not None:
        raise ValueError(f"{q}: b must be a non-square")


def forward_transform(q: QuarticParams, w: IsoWitness) -> QuarticParams:
    """Parameters of the model obtained from q by the coordinate change w."""
    al2 = w.alpha * w.alpha
    return QuarticParams(
        q.a + w.sigma + w.sigma * w.sigma,
        (q.b + w.beta * w.beta) / al2,
        q.c / al2,
        q.e * al2,
    )


def verify_witness(q1: QuarticParams, q2: QuarticParams, w: IsoWitness) -> bool:
    """Check that substituting w into the quartic of q1 gives alpha^2 times that of q2.

    Comparing coefficients of monomials reduces this to the five relations below.
    """
    al, s, be, ga = w.as_tuple()
    if al == 0:
        return False
    al2 = al * al
    return (
        al2 * q2.b == q1.b + be * be
        and al2 * q2.a * q2.b == ga * ga + q1.b * s * s + q1.a * q1.b
        and al2 * q2.c == q1.c
        and q2.e == q1.e * al2
        and q2.a == q1.a + s + s * s
    )


def isomorphism_decide(q1: QuarticParams, q2: QuarticParams) -> IsoDecision:
    _check_arithmetic(q1)
    _check_arithmetic(q2)
    if q1.eta != q2.eta:
        return IsoDecision("not isomorphic", "eta")
    alpha = _sqrt_or_none(q1.c / q2.c)
    if alpha is None:
        return IsoDecision("not isomorphic", "c-ratio")
    beta = _sqrt_or_none(q1.b + alpha * alpha * q2.b)
    if beta is None:
        return IsoDecision("not isomorphic", "b-condition")
    try:
        s0 = artin_schreier_solve(q1.a + q2.a)
    except PoleError:
        return IsoDecision("undecided", "unsupported fragment")
    if s0 is None:
        return IsoDecision("not isomorphic", "artin-schreier")
    b2 = beta * beta
    for sigma in (s0, s0 + 1):
        gamma = _sqrt_or_none(b2 * sigma * sigma + (q1.b + b2) * sigma + q1.a * b2)
        if gamma is None:
            continue
        w = IsoWitness(alpha, sigma, beta, gamma)
        if not verify_witness(q1, q2, w):  # pragma: no cover - would be a bug
            raise AssertionError(f"witness {w} fails re-verification")
        return IsoDecision("isomorphic", "", w)
    return IsoDecision("not isomorphic", "gamma")


def _random_poly(F: GF2k, rng: random.Random, deg: int, nonzero=False) -> RatFunc:
    while True:
        f = RatFunc.from_coeffs(F, [F.random(rng) for _ in range(deg + 1)])
        if not (nonzero and f == 0):
            return f


def random_admissible_witness(q: QuarticParams, rng: random.Random, deg: int = 2) -> IsoWitness:
    """A random coordinate change that respects the model, for q over GF(2^k)(t).

    gamma^2 = beta^2 a' + b sigma must be a square.  Writing b sigma = u0^2 + t u1^2
    and a' = p0^2 + t p1^2 forces beta = u1/p1 whenever a' is not a square.
    """
    F = q.a.field if isinstance(q.a, RatFunc) else q.b.field
    while True:
        sigma = _random_poly(F, rng, deg)
        a2 = q.a + sigma + sigma * sigma
        u0, u1 = (q.b * sigma).square_decompose()
        p0, p1 = a2.square_decompose()
        if p1 == 0:
            continue
        beta = u1 / p1
        gamma = u0 + p0 * beta
        alpha = _random_poly(F, rng, deg, nonzero=True)
        return IsoWitness(alpha, sigma, beta, gamma)


# rational normalization ------------------------------------------------------------


@dataclass(frozen=True)
class NormalizedModel:
    params: QuarticParams
    witness: IsoWitness

    def form(self, x, y, z):
        return rational_model_form(self.params, x, y, z)


def rational_model_form(q: QuarticParams, x, y, z):
    """b^2 eta x^4 + (z^2 + b y^2 + a b x^2)(z^2 + b x y); equals b times the quartic when c = b eta."""
    return q.b * q.b * q.eta * x ** 4 + quartic_w(q.a, q.b, x, y, z) * (z * z + q.b * x * y)


def normalize_q_rational(q: QuarticParams) -> NormalizedModel | None:
    """Move to c = b eta when b + 1/e is a square, otherwise return None."""
    beta = _sqrt_or_none(q.b + 1 / q.e)
    if beta is None:
        return None
    b2 = beta * beta
    one = q.e ** 0
    sigma = q.a * b2 / (q.b + b2)
    w = IsoWitness(one, sigma, beta, beta * sigma)
    return NormalizedModel(forward_transform(q, w), w)


# case (a) ----------------------------------------------------------------------


@dataclass(frozen=True)
class CaseAModel:
    """y^2 + a y = x^3 + a4 x + a6 with z^2 = b x^2 + x/a + d, and its plane sextic in (y, z)."""

    params: CaseAParams
    weierstrass: WeierstrassCoeffs
    conic: ZSquaredModel

    def numerator(self, y, z, w=1):
        p, c = self.params, self.conic.c
        return c * (z * z + p.d * w * w) + p.b * p.b * (y * y + p.a * y * w + p.a6 * w * w)

    def denominator(self, y, z, w=1):
        p, c = self.params, self.conic.c
        return p.b * (z * z + p.d * w * w) + (c * c + p.b * p.b * p.a4) * w * w

    def sextic(self, y, z, w=1):
        """(z^2 + d) D^2 + b N^2 + c D N, homogenized with w."""
        p, c = self.params, self.conic.c
        N, D = self.numerator(y, z, w), self.denominator(y, z, w)
        return (z * z + p.d * w * w) * D * D + p.b * w * w * N * N + c * w * w * D * N

    def cubic_curve(self) -> PlaneCurve:
        p = self.params
        F = _field_of(p.a, p.a4, p.a6, p.b, p.d)
        return PlaneCurve.from_function(F, lambda x, y, z: weierstrass_form(self.weierstrass, x, y, z))

    def sextic_curve(self) -> PlaneCurve:
        """The sextic with plane coordinates (x, y, z) standing for (y, z, w)."""
        p = self.params
        F = _field_of(p.a, p.a4, p.a6, p.b, p.d)
        return PlaneCurve.from_function(F, lambda x, y, z: self.sextic(x, y, z))

    def singular_report(self, bound: int = 2):
        """Affine singular points of the sextic with D at each and the delta invariant."""
        C = self.sextic_curve()
        out = []
        for P in C.singular_points(bound):
            if P.z == 0:
                continue
            G = common_field(C.field, P.field)
            big = build_case_a_model(self.params.map(lambda v: v.embed(G)))
            R = P.embed(G)
            out.append((P, big.denominator(R.x, R.y, R.z), delta_blowup(C, P)))
        return out


def build_case_a_model(p: CaseAParams) -> CaseAModel:
    if p.a == 0:
        raise ValueError("case (a) needs a != 0")
    return CaseAModel(p, p.weierstrass(), ZSquaredModel.case_a(p))
