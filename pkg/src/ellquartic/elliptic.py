"""Weierstrass cubics in characteristic 2: invariants, coordinate changes, group law."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra.gf import NotASquareError
from .models import WeierstrassCoeffs, weierstrass_form
from .projective import NotOnCurveError, ProjPoint, cross, dot

__all__ = [
    "WeierstrassCoeffs", "TransformParams", "SingularCurveError", "NotOnCurveError",
    "discriminant", "j_invariant", "transform", "transform_scaled", "compose",
    "normal_form", "gradient", "on_curve", "negate", "group_add", "multiply", "point_order",
    "INFINITY_COORDS", "infinity",
]

INFINITY_COORDS = (0, 1, 0)


class SingularCurveError(ArithmeticError):
    """The operation needs a smooth cubic (nonzero discriminant)."""


@dataclass(frozen=True)
class TransformParams:
    """x = mu^2 x' + rho,  y = mu^3 y' + sigma mu^2 x' + tau."""

    mu: Any
    rho: Any
    sigma: Any
    tau: Any

    def __post_init__(self):
        if self.mu == 0:
            raise ValueError("mu must be nonzero")

    @classmethod
    def identity(cls, one) -> "TransformParams":
        z = one * 0
        return cls(one, z, z, z)

    def as_tuple(self):
        return (self.mu, self.rho, self.sigma, self.tau)


def discriminant(w: WeierstrassCoeffs):
    a1, a2, a3, a4, a6 = w.as_tuple()
    a1_2 = a1 * a1
    a1_4 = a1_2 * a1_2
    return (
        a1_4 * a1_2 * a6 + a1_4 * a1 * a3 * a4 + a1_4 * a2 * a3 * a3
        + a1_4 * a4 * a4 + a1_2 * a1 * a3 ** 3 + a3 ** 4
    )


def j_invariant(w: WeierstrassCoeffs):
    d = discriminant(w)
    if d == 0:
        raise SingularCurveError(f"discriminant of {w} vanishes")
    return w.a1 ** 12 / d


def transform_scaled(w: WeierstrassCoeffs, p: TransformParams):
    """(mu a1', mu^2 a2', mu^3 a3', mu^4 a4', mu^6 a6') without any division."""
    a1, a2, a3, a4, a6 = w.as_tuple()
    r, s, t = p.rho, p.sigma, p.tau
    return (
        a1,
        a2 + s * a1 + r + s * s,
        a3 + r * a1,
        a4 + s * a3 + (t + r * s) * a1 + r * r,
        a6 + r * a4 + r * r * a2 + r ** 3 + t * a3 + t * t + r * t * a1,
    )


def transform(w: WeierstrassCoeffs, p: TransformParams) -> WeierstrassCoeffs:
    n1, n2, n3, n4, n6 = transform_scaled(w, p)
    mu = p.mu
    if mu == 1:
        return WeierstrassCoeffs(n1, n2, n3, n4, n6)
    m2 = mu * mu
    return WeierstrassCoeffs(n1 / mu, n2 / m2, n3 / (m2 * mu), n4 / (m2 * m2), n6 / (m2 * m2 * m2))


def compose(p1: TransformParams, p2: TransformParams) -> TransformParams:
    """The single change of coordinates equal to applying p1, then p2."""
    m1 = p1.mu
    m1_2 = m1 * m1
    return TransformParams(
        m1 * p2.mu,
        p1.rho + m1_2 * p2.rho,
        p1.sigma + m1 * p2.sigma,
        p1.tau + m1_2 * m1 * p2.tau + p1.sigma * m1_2 * p2.rho,
    )


def normal_form(w: WeierstrassCoeffs):
    """Return (tag, normalized coefficients, params) with transform(w, params) == normalized.

    Tags: ``"j=0"`` for (0, 0, a3, a4, a6), ``"j!=0"`` for (1, a2, 0, 0, a6) and
    ``"j-square"`` for (1, a2, 0, a4, 0), used whenever a6 of the middle form has a
    square root in the working field.
    """
    d = discriminant(w)
    if d == 0:
        raise SingularCurveError(f"discriminant of {w} vanishes")
    a1, a2, a3, a4, a6 = w.as_tuple()
    one = a1 * 0 + 1
    zero = one * 0
    if a1 == 0:
        p = TransformParams(one, a2, zero, zero)
        return "j=0", transform(w, p), p
    rho = a3 / a1
    p = TransformParams(a1, rho, zero, (a4 + rho * rho) / a1)
    mid = transform(w, p)
    try:
        root = mid.a6.sqrt()
    except NotASquareError:
        return "j!=0", mid, p
    q = TransformParams(one, zero, zero, root)
    return "j-square", transform(mid, q), compose(p, q)


# group law ------------------------------------------------------------------


def gradient(w: WeierstrassCoeffs, P):
    x, y, z = P
    return (
        x * x + w.a1 * y * z + w.a4 * z * z,
        w.a1 * x * z + w.a3 * z * z,
        y * y + w.a1 * x * y + w.a2 * x * x + w.a6 * z * z,
    )


def on_curve(w: WeierstrassCoeffs, P: ProjPoint) -> bool:
    return weierstrass_form(w, *P) == 0


def negate(w: WeierstrassCoeffs, P: ProjPoint) -> ProjPoint:
    x, y, z = P
    return ProjPoint(x, y + w.a1 * x + w.a3 * z, z)


def _third_point(w, P: ProjPoint, Q: ProjPoint) -> ProjPoint:
    """Third intersection of the line PQ (tangent if P == Q) with the cubic.

    Restricting the cubic F to l*P + m*Q gives
    l^2 m (grad F(P).Q) + l m^2 (grad F(Q).P) when P, Q lie on it, so the
    remaining root is (grad F(Q).P : grad F(P).Q).
    """
    if P != Q:
        g2 = dot(gradient(w, P), Q.coords)
        g1 = dot(gradient(w, Q), P.coords)
        coords = tuple(g1 * p + g2 * q for p, q in zip(P, Q))
    else:
        tangent = gradient(w, P)
        if all(c == 0 for c in tangent):
            raise SingularCurveError(f"{P} is a singular point")
        F = P.field
        # any second point on the tangent line
        for e in ((F.one, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one)):
            D = cross(tangent, e)
            if any(c != 0 for c in D) and any(c != 0 for c in cross(D, P.coords)):
                break
        fd = weierstrass_form(w, *D)
        gd = dot(gradient(w, D), P.coords)
        coords = tuple(fd * p + gd * d for p, d in zip(P, D))
    if all(c == 0 for c in coords):
        raise SingularCurveError("line through the points lies on the curve")
    return ProjPoint(*coords)


def group_add(w: WeierstrassCoeffs, P: ProjPoint, Q: ProjPoint) -> ProjPoint:
    """Chord-tangent sum with neutral element (0 : 1 : 0)."""
    for R in (P, Q):
        if not on_curve(w, R):
            raise NotOnCurveError(f"{R} is not on the curve {w}")
    return negate(w, _third_point(w, P, Q))


def infinity(field) -> ProjPoint:
    return ProjPoint(field.zero, field.one, field.zero)


def multiply(w: WeierstrassCoeffs, n: int, P: ProjPoint) -> ProjPoint:
    R = infinity(P.field)
    if n < 0:
        n, P = -n, negate(w, P)
    while n:
        if n & 1:
            R = group_add(w, R, P)
        n >>= 1
        if n:
            P = group_add(w, P, P)
    return R


def point_order(w: WeierstrassCoeffs, P: ProjPoint, bound: int = 10_000):
    """Least n <= bound with n P = O, or the string ``"exceeds bound"``."""
    if not on_curve(w, P):
        raise NotOnCurveError(f"{P} is not on the curve {w}")
    O = infinity(P.field)
    R = P
    for n in range(1, bound + 1):
        if R == O:
            return n
        R = group_add(w, R, P)
    return "exceeds bound"
