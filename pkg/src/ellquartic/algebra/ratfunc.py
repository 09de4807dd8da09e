"""The rational function field GF(2^k)(t) in canonical form."""

from __future__ import annotations

from .gf import GF2k, GFElement, NotASquareError
from .upoly import UPoly


class PoleError(ValueError):
    """An operation restricted to polynomials received a proper fraction."""


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        F = num.field
        if den is None:
            den = UPoly.const(F, 1)
        if den.field is not F:
            raise TypeError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = UPoly.const(F, 1)
        elif den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc()
        if lc != 1:
            inv = F.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    # constructors ------------------------------------------------------------

    @classmethod
    def t(cls, field: GF2k) -> "RatFunc":
        return cls(UPoly.x(field))

    @classmethod
    def const(cls, field: GF2k, v) -> "RatFunc":
        return cls(UPoly.const(field, v))

    @classmethod
    def from_coeffs(cls, field: GF2k, num, den=None) -> "RatFunc":
        return cls(UPoly(field, num), None if den is None else UPoly(field, den))

    @property
    def field(self) -> GF2k:
        return self.num.field

    # predicates --------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.degree <= 0

    def constant_value(self) -> GFElement:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.coeff(0)

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = str(self.num)
        if self.is_polynomial():
            return n
        if len(self.num.c) - self.num.c.count(0) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __hash__(self):
        return hash((self.num, self.den))

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    # arithmetic --------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise TypeError(f"mixing {self.field} and {other.field} rational functions")
            return other
        if isinstance(other, (UPoly, GFElement)) or (isinstance(other, int) and not isinstance(other, bool)):
            return RatFunc(UPoly.const(self.field, 0) + other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    # char-2 structure --------------------------------------------------------

    def is_square(self) -> bool:
        return ratfunc_is_square(self) is not None

    def sqrt(self) -> "RatFunc":
        r = ratfunc_is_square(self)
        if r is None:
            raise NotASquareError(f"{self} is not a square in {self.field}(t)")
        return r

    def square_decompose(self) -> tuple["RatFunc", "RatFunc"]:
        """(u0, u1) with self = u0^2 + t*u1^2; unique since {1, t} is a K^2-basis of K."""
        pq = self.num * self.den
        F = self.field
        s = F.sqrt
        even = UPoly._raw(F, tuple(s(v) for v in pq.c[0::2]))
        odd = UPoly._raw(F, tuple(s(v) for v in pq.c[1::2]))
        return RatFunc(even, self.den), RatFunc(odd, self.den)

    def embed(self, big: GF2k) -> "RatFunc":
        return RatFunc(self.num.embed(big), self.den.embed(big))

    def __call__(self, x: GFElement) -> GFElement:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {x}")
        return self.num(x) / d


def ratfunc_is_square(f: RatFunc) -> RatFunc | None:
    """The square root of f in GF(2^k)(t), or None if f is not a square.

    In canonical form num and den are coprime, so f is a square exactly when
    both are, which happens iff num*den has only even exponents.
    """
    if not (f.num * f.den).is_square():
        return None
    return RatFunc(f.num.sqrt(), f.den.sqrt())


def artin_schreier_solve(r: RatFunc) -> RatFunc | None:
    """A polynomial s with s^2 + s = r, or None when r is not of that form.

    Only polynomial r is supported; the returned s has the smaller constant term
    of the two solutions s, s + 1.
    """
    if not r.is_polynomial():
        raise PoleError(f"Artin-Schreier solving needs a polynomial, got {r}")
    F = r.field
    rem = list(r.num.c)
    sol = [0] * (len(rem) // 2 + 1)
    n = len(rem) - 1
    while n > 0:
        if rem[n] == 0:
            n -= 1
            continue
        if n % 2:
            return None
        m = n // 2
        c = F.sqrt(rem[n])
        sol[m] ^= c
        rem[n] ^= F.mul(c, c)
        rem[m] ^= c
        n -= 1
    c0 = F.artin_schreier_root(rem[0] if rem else 0)
    if c0 is None:
        return None
    sol[0] ^= c0
    return RatFunc(UPoly(F, sol))
