"""Dense univariate polynomials over GF(2^k), with root finding and factoring."""

from __future__ import annotations

import random

from .gf import GF2k, GFElement, NotASquareError


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class UPoly:
    """Polynomial sum c_i X^i with raw coefficients c_i in ``field``."""

    __slots__ = ("field", "c")

    def __init__(self, field: GF2k, coeffs):
        self.field = field
        self.c = _trim([x.v if isinstance(x, GFElement) else int(x) for x in coeffs])

    @classmethod
    def _raw(cls, field, c):
        p = cls.__new__(cls)
        p.field = field
        p.c = _trim(list(c)) if (c and c[-1] == 0) else tuple(c)
        return p

    @classmethod
    def x(cls, field):
        return cls._raw(field, (0, 1))

    @classmethod
    def const(cls, field, v):
        v = v.v if isinstance(v, GFElement) else v
        return cls._raw(field, (v,) if v else ())

    @classmethod
    def monomial(cls, field, n, v=1):
        v = v.v if isinstance(v, GFElement) else v
        return cls._raw(field, (0,) * n + (v,)) if v else cls._raw(field, ())

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def lc(self) -> int:
        return self.c[-1]

    def coeff(self, i) -> GFElement:
        return GFElement(self.field, self.c[i] if i < len(self.c) else 0)

    def coefficients(self) -> list[GFElement]:
        return [GFElement(self.field, v) for v in self.c]

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self, var="t"):
        if not self.c:
            return "0"
        parts = []
        for i in reversed(range(len(self.c))):
            v = self.c[i]
            if not v:
                continue
            cs = str(GFElement(self.field, v))
            if i == 0:
                parts.append(cs)
                continue
            mon = var if i == 1 else f"{var}^{i}"
            if v == 1:
                parts.append(mon)
            elif " + " in cs:
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field is other.field and self.c == other.c
        if isinstance(other, int):
            return self.c == ((other & 1,) if other & 1 else ())
        if isinstance(other, GFElement):
            return self.c == ((other.v,) if other.v else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.field.k, self.c))

    def _lift(self, other):
        if isinstance(other, UPoly):
            if other.field is not self.field:
                raise TypeError("polynomials over different fields")
            return other
        if isinstance(other, GFElement):
            if other.field is not self.field and other.field.k != 1:
                raise TypeError("scalar from a different field")
            return UPoly.const(self.field, other.v)
        if isinstance(other, int):
            return UPoly.const(self.field, other & 1)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, v in enumerate(b):
            r[i] ^= v
        return UPoly._raw(self.field, _trim(r))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return UPoly._raw(self.field, ())
        mul = self.field.mul
        r = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        r[i + j] ^= mul(a, b)
        return UPoly._raw(self.field, _trim(r))

    __rmul__ = __mul__

    def scale(self, v: int) -> "UPoly":
        mul = self.field.mul
        return UPoly._raw(self.field, _trim([mul(v, a) for a in self.c]))

    def __pow__(self, e: int):
        r = UPoly.const(self.field, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def divmod(self, d: "UPoly"):
        if not d.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.c)
        dd = len(d.c) - 1
        if len(r) - 1 < dd:
            return UPoly._raw(F, ()), self
        inv = F.inv(d.c[-1])
        q = [0] * (len(r) - dd)
        mul = F.mul
        for i in range(len(r) - 1, dd - 1, -1):
            v = r[i]
            if v:
                f = mul(v, inv)
                q[i - dd] = f
                for j, b in enumerate(d.c):
                    if b:
                        r[i - dd + j] ^= mul(f, b)
        return UPoly._raw(F, _trim(q)), UPoly._raw(F, _trim(r[:dd]))

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def __mod__(self, d):
        return self.divmod(d)[1]

    def monic(self) -> "UPoly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while b.c:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UPoly":
        # char 2: only odd-degree terms survive
        return UPoly._raw(self.field, _trim([self.c[i] if i % 2 else 0 for i in range(1, len(self.c))]))

    def __call__(self, x):
        """Horner evaluation at a field element (or anything supporting + and *)."""
        if isinstance(x, GFElement) and x.field is self.field:
            F = self.field
            r = 0
            for v in reversed(self.c):
                r = F.mul(r, x.v) ^ v
            return GFElement(F, r)
        acc = None
        for v in reversed(self.c):
            cv = GFElement(self.field, v)
            acc = cv if acc is None else acc * x + cv
        return GFElement(self.field, 0) if acc is None else acc

    def is_square(self) -> bool:
        return all(v == 0 for v in self.c[1::2])

    def sqrt(self) -> "UPoly":
        if not self.is_square():
            raise NotASquareError(f"{self} is not a square")
        s = self.field.sqrt
        return UPoly._raw(self.field, tuple(s(v) for v in self.c[0::2]))

    def frobenius_coeffs(self) -> "UPoly":
        """Apply x -> x^2 to every coefficient."""
        F = self.field
        return UPoly._raw(self.field, tuple(F.mul(v, v) for v in self.c))

    def embed(self, big: GF2k) -> "UPoly":
        if big is self.field:
            return self
        tab = self.field.embedding_table(big)
        return UPoly._raw(big, tuple(tab[v] for v in self.c))

    def powmod(self, e: int, m: "UPoly") -> "UPoly":
        r = UPoly.const(self.field, 1)
        b = self % m
        while e:
            if e & 1:
                r = (r * b) % m
            b = (b * b) % m
            e >>= 1
        return r

    # factoring ---------------------------------------------------------------

    def squarefree_decomposition(self) -> list[tuple["UPoly", int]]:
        """Pairs (g, e) with self = lc * prod g^e, each g squarefree, monic, coprime."""
        if self.degree < 1:
            return []
        f = self.monic()
        out: list[tuple[UPoly, int]] = []
        d = f.derivative()
        g = f.gcd(d)
        w = f // g
        i = 1
        while w.degree > 0:
            y = w.gcd(g)
            z = w // y
            if z.degree > 0:
                out.append((z.monic(), i))
            i += 1
            w = y
            g = g // y
        if g.degree > 0:
            for h, e in g.monic().sqrt().squarefree_decomposition():
                out.append((h, 2 * e))
        merged: dict[UPoly, int] = {}
        for h, e in out:
            merged[h] = merged.get(h, 0) + e
        return sorted(merged.items(), key=lambda p: (p[1], p[0].degree, p[0].c))

    def distinct_degree(self) -> list[tuple["UPoly", int]]:
        """Distinct-degree factorization of a monic squarefree polynomial."""
        F = self.field
        f = self
        out = []
        x = UPoly.x(F)
        h = x
        d = 0
        while f.degree >= 2 * (d + 1):
            d += 1
            h = h.powmod(F.order, f)
            g = (h + x).gcd(f)
            if g.degree > 0:
                out.append((g, d))
                f = f // g
                h = h % f
        if f.degree > 0:
            out.append((f.monic(), f.degree))
        return out

    def equal_degree(self, d: int, rng=None) -> list["UPoly"]:
        """Split a monic squarefree product of degree-d irreducibles."""
        n = self.degree
        if n == d:
            return [self]
        F = self.field
        rng = rng or random.Random(0x5EED)
        m = F.k * d
        while True:
            a = UPoly._raw(F, _trim([rng.randrange(F.order) for _ in range(n)]))
            if a.degree < 1:
                continue
            # absolute trace from GF(2^(k d)) down to GF(2)
            t = a
            s = a
            for _ in range(m - 1):
                s = (s * s) % self
                t = t + s
            g = t.gcd(self)
            if 0 < g.degree < n:
                return g.equal_degree(d, rng) + (self // g).equal_degree(d, rng)

    def factor(self) -> list[tuple["UPoly", int]]:
        """Irreducible monic factors with multiplicities, deterministically ordered."""
        out = []
        for g, e in self.squarefree_decomposition():
            for h, d in g.distinct_degree():
                for p in h.equal_degree(d):
                    out.append((p.monic(), e))
        return sorted(out, key=lambda p: (p[0].degree, p[0].c, p[1]))

    def roots(self) -> list[GFElement]:
        """Distinct roots in the coefficient field, sorted by raw value."""
        if self.degree < 1:
            return []
        F = self.field
        f = self.monic()
        x = UPoly.x(F)
        g = (x.powmod(F.order, f) + x).gcd(f)
        if g.degree < 1:
            return []
        lin = g.equal_degree(1)
        return sorted((GFElement(F, p.monic().c[0]) for p in lin), key=lambda e: e.v)
