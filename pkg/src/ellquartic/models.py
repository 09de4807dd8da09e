"""Parameter records and the defining forms, written over any coefficient ring.

Every form here is a plain function of ring elements, so the same code
evaluates at field values, builds MPoly identities, and substitutes series.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any


def _ring_zero(x):
    return x * 0


@dataclass(frozen=True)
class WeierstrassCoeffs:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def map(self, f) -> "WeierstrassCoeffs":
        return WeierstrassCoeffs(*(f(v) for v in self.as_tuple()))

    @classmethod
    def eta_form(cls, a, eta) -> "WeierstrassCoeffs":
        """y^2 + x y = x^3 + a x^2 + eta x, the cubic E_(a, eta)."""
        z = _ring_zero(a)
        return cls(z + 1, a, z, eta, z)

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.as_tuple()) + "]"


@dataclass(frozen=True)
class QuarticParams:
    """(a, b, c, e) of the quartic c x^4 + W (e W + y^2 + x y + a x^2), W = z^2 + b y^2 + a b x^2."""

    a: Any
    b: Any
    c: Any
    e: Any

    @property
    def eta(self):
        return self.c * self.e

    def as_tuple(self):
        return (self.a, self.b, self.c, self.e)

    def map(self, f) -> "QuarticParams":
        return QuarticParams(*(f(v) for v in self.as_tuple()))

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


@dataclass(frozen=True)
class CaseAParams:
    """y^2 + a y = x^3 + a4 x + a6 together with z^2 = b x^2 + x/a + d."""

    a: Any
    a4: Any
    a6: Any
    b: Any
    d: Any

    def weierstrass(self) -> WeierstrassCoeffs:
        z = _ring_zero(self.a)
        return WeierstrassCoeffs(z, z, self.a, self.a4, self.a6)

    def map(self, f) -> "CaseAParams":
        return CaseAParams(f(self.a), f(self.a4), f(self.a6), f(self.b), f(self.d))


@dataclass(frozen=True)
class ZSquaredModel:
    """z^2 = b0 y^2 + b1 x y + b2 x^2 + b3 y + c x + d over a Weierstrass cubic."""

    w: WeierstrassCoeffs
    b0: Any
    b1: Any
    b2: Any
    b3: Any
    c: Any
    d: Any

    @classmethod
    def case_a(cls, p: CaseAParams) -> "ZSquaredModel":
        z = _ring_zero(p.a)
        return cls(p.weierstrass(), z, z, p.b, z, 1 / p.a, p.d)

    def conic(self, x, y):
        return self.b0 * y * y + self.b1 * x * y + self.b2 * x * x + self.b3 * y + self.c * x + self.d


def param_names(record) -> list[str]:
    return [f.name for f in fields(record)]


# forms ----------------------------------------------------------------------


def quartic_w(a, b, x, y, z):
    return z * z + b * y * y + a * b * x * x


def quartic_form(a, b, c, e, x, y, z):
    w = quartic_w(a, b, x, y, z)
    return c * x ** 4 + w * (e * w + y * y + x * y + a * x * x)


def quartic_of(q: QuarticParams, x, y, z):
    return quartic_form(q.a, q.b, q.c, q.e, x, y, z)


def cubic_form(a, eta, x, y, z):
    """y^2 z + x y z + x^3 + a x^2 z + eta x z^2."""
    return y * y * z + x * y * z + x ** 3 + a * x * x * z + eta * x * z * z


def weierstrass_form(w: WeierstrassCoeffs, x, y, z):
    return (
        y * y * z + w.a1 * x * y * z + w.a3 * y * z * z
        + x ** 3 + w.a2 * x * x * z + w.a4 * x * z * z + w.a6 * z ** 3
    )


def weierstrass_affine(w: WeierstrassCoeffs, x, y):
    return y * y + w.a1 * x * y + w.a3 * y + x ** 3 + w.a2 * x * x + w.a4 * x + w.a6
