"""Truncated Laurent series in one variable t with exact coefficients.

Coefficients may come from any ring in this package (GF(2^k), GF(2^k)(t) or an
MPoly context); a series only needs ``+``, ``*``, equality with 0 and, for
square roots, ``.sqrt()``.
"""

from __future__ import annotations

import math

from .models import QuarticParams, WeierstrassCoeffs, ZSquaredModel

DEFAULT_PREC = 32
EXACT = math.inf


class PrecisionError(ValueError):
    """A coefficient beyond the known precision was requested."""


class LaurentSeries:
    """sum_{n >= start} coeffs[n - start] t^n, known for orders < prec.

    ``prec`` may be :data:`EXACT` for finite expressions.
    """

    __slots__ = ("start", "coeffs", "prec", "one")

    def __init__(self, coeffs, start: int = 0, prec=EXACT, one=None):
        coeffs = list(coeffs)
        if one is None:
            if not coeffs:
                raise ValueError("need a coefficient or an explicit one")
            one = coeffs[0] ** 0 if not isinstance(coeffs[0], int) else 1
        if prec is not EXACT and prec != EXACT:
            del coeffs[max(0, prec - start):]
        # strip leading zeros so start is the valuation
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        start += i
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            start = prec if prec != EXACT else 0
        self.start = start
        self.coeffs = coeffs
        self.prec = prec
        self.one = one

    # construction ------------------------------------------------------------

    @classmethod
    def monomial(cls, c, n: int, prec=EXACT, one=None):
        return cls([c], n, prec, one)

    @classmethod
    def t(cls, one, prec=EXACT):
        return cls([one], 1, prec, one)

    def _const(self, c):
        return LaurentSeries([c], 0, EXACT, self.one)

    @property
    def zero_elt(self):
        return self.one * 0

    # inspection --------------------------------------------------------------

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def valuation(self):
        return self.start if self.coeffs else self.prec

    def __getitem__(self, n: int):
        if n >= self.prec:
            raise PrecisionError(f"coefficient of t^{n} unknown (precision {self.prec})")
        i = n - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.zero_elt

    def coefficient(self, n: int):
        return self[n]

    def coefficient_list(self, lo: int, hi: int) -> list:
        return [self[n] for n in range(lo, hi)]

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            n = self.start + i
            cs = str(c)
            mon = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif " + " in cs:
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        tail = f"O(t^{self.prec})" if self.prec != EXACT else ""
        if not parts:
            return tail or "0"
        return " + ".join(parts + ([tail] if tail else []))

    # arithmetic --------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, LaurentSeries):
            return other
        return self._const(other)

    def __eq__(self, other):
        o = self._lift(other)
        if self.prec != o.prec:
            return False
        return self.start == o.start and self.coeffs == o.coeffs if self.coeffs or o.coeffs else True

    def __hash__(self):
        return hash((self.start, len(self.coeffs), self.prec))

    def __add__(self, other):
        o = self._lift(other)
        prec = min(self.prec, o.prec)
        lo = min(self.start, o.start)
        hi = max(self.start + len(self.coeffs), o.start + len(o.coeffs))
        if prec != EXACT:
            hi = min(hi, prec)
        z = self.zero_elt
        out = []
        for n in range(lo, hi):
            i, j = n - self.start, n - o.start
            a = self.coeffs[i] if 0 <= i < len(self.coeffs) else z
            b = o.coeffs[j] if 0 <= j < len(o.coeffs) else z
            out.append(a + b)
        return LaurentSeries(out, lo, prec, self.one)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            if other == 0:
                return LaurentSeries([], 0, self.prec, self.one) if self.prec == EXACT else \
                    LaurentSeries([], self.prec, self.prec, self.one)
            return LaurentSeries([c * other for c in self.coeffs], self.start, self.prec, self.one)
        o = other
        v1, v2 = self.valuation(), o.valuation()
        prec = min(self.prec + v2, o.prec + v1)
        if not self.coeffs or not o.coeffs:
            return LaurentSeries([], 0, prec, self.one)
        start = v1 + v2
        n_terms = len(self.coeffs) + len(o.coeffs) - 1
        if prec != EXACT:
            n_terms = min(n_terms, prec - start)
        z = self.zero_elt
        out = []
        a, b = self.coeffs, o.coeffs
        for n in range(max(n_terms, 0)):
            acc = z
            for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
                acc = acc + a[i] * b[n - i]
            out.append(acc)
        return LaurentSeries(out, start, prec, self.one)

    def __rmul__(self, other):
        return self * other

    def square(self) -> "LaurentSeries":
        """Exact in characteristic 2: the square of sum c_n t^n is sum c_n^2 t^(2n)."""
        out = []
        z = self.zero_elt
        for c in self.coeffs:
            out.extend((c * c, z))
        return LaurentSeries(out, 2 * self.start, 2 * self.prec, self.one)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = self._const(self.one)
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b.square()
        return r

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by t^n."""
        return LaurentSeries(self.coeffs, self.start + n, self.prec + n, self.one)

    def truncate(self, prec: int) -> "LaurentSeries":
        return LaurentSeries(self.coeffs, self.start, min(prec, self.prec), self.one)

    def inverse(self, prec=None) -> "LaurentSeries":
        """1/self; exact inputs need an explicit ``prec`` for the result."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series with no known nonzero term")
        v = self.start
        rel = (self.prec - v) if self.prec != EXACT else None
        if prec is not None:
            rel = prec + v if rel is None else min(rel, prec + v)
        if rel is None:
            raise PrecisionError("inverse of an exact series needs a target precision")
        c0inv = self.one / self.coeffs[0]
        a = self.coeffs
        out = [c0inv]
        for n in range(1, rel):
            acc = self.zero_elt
            for i in range(1, min(n, len(a) - 1) + 1):
                acc = acc + a[i] * out[n - i]
            out.append(acc * c0inv)
        return LaurentSeries(out, -v, rel - v, self.one)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self * (self.one / other)

    def is_square(self) -> bool:
        if self.start % 2 or any(c != 0 for c in self.coeffs[1::2]):
            return False
        try:
            for c in self.coeffs[0::2]:
                c.sqrt()
        except (ArithmeticError, AttributeError):
            return False
        return True

    def sqrt(self) -> "LaurentSeries":
        if self.start % 2 or any(c != 0 for c in self.coeffs[1::2]):
            raise ValueError("series with odd-order terms has no square root")
        prec = self.prec if self.prec == EXACT else -((-self.prec) // 2)
        return LaurentSeries([c.sqrt() for c in self.coeffs[0::2]], self.start // 2, prec, self.one.sqrt())

    def map_coefficients(self, f) -> "LaurentSeries":
        return LaurentSeries([f(c) for c in self.coeffs], self.start, self.prec, f(self.one))


# expansions -----------------------------------------------------------------


def _u_coefficients(w: WeierstrassCoeffs, n_terms: int):
    """Coefficients u_0..u_{n-1} of u = t^3 y with x = t y on the Weierstrass curve.

    Clearing denominators gives u^2 w' = a1 t u^2 + a2 t^2 u^2 + a3 t^3 u +
    a4 t^4 u + a6 t^6 with u = 1 + w'; since u^2 = 1 + w'^2 the left side is
    w' + w'^3.  Each term on the right except w'^3 carries a factor t, and
    squares in characteristic 2 only touch even orders, so the coefficient of
    t^n depends on earlier coefficients alone.
    """
    one = w.a1 * 0 + 1
    zero = one * 0
    u = [one]
    sq = {0: one}  # coefficients of u^2, only even orders

    def usq(m):
        return sq.get(m, zero) if m >= 0 else zero

    def uu(m):
        return u[m] if 0 <= m < len(u) else zero

    for n in range(1, n_terms):
        c = w.a1 * usq(n - 1) + w.a2 * usq(n - 2) + w.a3 * uu(n - 3) + w.a4 * uu(n - 4)
        if n == 6:
            c = c + w.a6
        # [t^n] w'^3 = sum_j w'_{n-2j} w'_j^2 with j >= 1 and n - 2j >= 1
        j = 1
        while n - 2 * j >= 1:
            c = c + u[n - 2 * j] * sq[2 * j]
            j += 1
        u.append(c)
        if 2 * n < n_terms + 1:
            sq[2 * n] = c * c
    return u, one


def expand_y_at_infinity(w: WeierstrassCoeffs, prec: int = DEFAULT_PREC) -> LaurentSeries:
    """y as a Laurent series in t = x/y at the point at infinity, known below t^prec."""
    if prec < -3:
        raise ValueError("precision must be at least -3")
    u, one = _u_coefficients(w, prec + 3)
    return LaurentSeries(u, -3, prec, one)


def expand_z_squared(model: ZSquaredModel, prec: int = DEFAULT_PREC) -> LaurentSeries:
    """Laurent expansion of b0 y^2 + b1 x y + b2 x^2 + b3 y + c x + d in t."""
    # y starts at t^-3, so y^2 needs y to relative precision prec + 6
    y = expand_y_at_infinity(model.w, prec + 6)
    x = y.shift(1)
    y2 = y.square()
    r = y2 * model.b0 + (y2.shift(1)) * model.b1 + y2.shift(2) * model.b2 + y * model.b3 + x * model.c
    r = r + LaurentSeries([model.d], 0, EXACT, y.one)
    return r.truncate(prec)


def expand_tate13(a_root, eta_root, prec: int = DEFAULT_PREC) -> LaurentSeries:
    """s' = z'/y' in t' = x'/y' on the cubic E_(a_root, eta_root)."""
    w = WeierstrassCoeffs.eta_form(a_root, eta_root)
    # s' = t^3 / u and u = 1 + O(t)
    u, one = _u_coefficients(w, max(prec - 3, 1))
    return LaurentSeries(u, 0, max(prec - 3, 1), one).inverse().shift(3)


def branch_parametrization(q: QuarticParams, prec: int = DEFAULT_PREC):
    """(x(t), y(t), z(t)) of the unibranch singular point (0:1:b^(1/2)) of the quartic.

    Obtained from the cubic E_(a^(1/2), (ce)^(1/2)) by
    (t : 1 : s) -> (t^2 : 1 : B + A B t^2 + C t s) with A, B, C the square
    roots of a, b, c.
    """
    if prec < 6:
        raise ValueError("branch parametrization needs prec >= 6")
    A, B, C = q.a.sqrt(), q.b.sqrt(), q.c.sqrt()
    H = q.eta.sqrt()
    s = expand_tate13(A, H, prec - 1)
    one = s.one
    x = LaurentSeries([one], 2, EXACT, one)
    y = LaurentSeries([one], 0, EXACT, one)
    const = LaurentSeries([B, 0 * one, A * B], 0, EXACT, one)
    z = const + s.shift(1) * C
    return x.truncate(prec), y.truncate(prec), z.truncate(prec)
