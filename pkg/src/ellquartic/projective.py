"""Points of the projective plane over GF(2^k)."""

from __future__ import annotations

from .algebra.gf import GF2k, GFElement


class NotOnCurveError(ValueError):
    """A point was expected to lie on a curve and does not."""


class ProjPoint:
    """(x : y : z) scaled so that the last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        coords = (x, y, z)
        F = next((c.field for c in coords if isinstance(c, GFElement)), None)
        if F is None:
            raise TypeError("ProjPoint needs field elements")
        coords = tuple(c if isinstance(c, GFElement) else F(int(c) & 1) for c in coords)
        for c in coords:
            if c.field is not F:
                raise TypeError("coordinates from different fields")
        i = max((j for j in range(3) if coords[j]), default=None)
        if i is None:
            raise ValueError("(0 : 0 : 0) is not a projective point")
        if coords[i].v != 1:
            inv = coords[i].inverse()
            coords = tuple(c * inv for c in coords)
        self.coords = coords

    @property
    def field(self) -> GF2k:
        return self.coords[0].field

    @property
    def x(self):
        return self.coords[0]

    @property
    def y(self):
        return self.coords[1]

    @property
    def z(self):
        return self.coords[2]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.field is not other.field:
            from .algebra.gf import common_field

            big = common_field(self.field, other.field)
            return self.embed(big).coords == other.embed(big).coords
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.k,) + tuple(c.v for c in self.coords))

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def sort_key(self):
        return tuple(c.v for c in self.coords)

    def embed(self, big: GF2k) -> "ProjPoint":
        if big is self.field:
            return self
        return ProjPoint(*(c.embed(big) for c in self.coords))

    def frobenius(self, times: int = 1) -> "ProjPoint":
        return ProjPoint(*(c.frobenius(times) for c in self.coords))

    def is_rational_over(self, d: int) -> bool:
        """True when all normalized coordinates lie in GF(2^d)."""
        return all(self.field.in_subfield(c.v, d) for c in self.coords)


def all_points(F: GF2k):
    """Every point of P^2(F) in normalized form: q^2 + q + 1 of them."""
    one, zero = F.one, F.zero
    for x in F.elements():
        for y in F.elements():
            yield ProjPoint(x, y, one)
    for x in F.elements():
        yield ProjPoint(x, one, zero)
    yield ProjPoint(one, zero, zero)


def cross(u, v):
    """Cross product; in characteristic 2 it is also the line through two points."""
    return (
        u[1] * v[2] + u[2] * v[1],
        u[2] * v[0] + u[0] * v[2],
        u[0] * v[1] + u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
