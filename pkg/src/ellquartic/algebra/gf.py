"""Finite fields GF(2^k) and their elements.

Elements are polynomials over GF(2) reduced modulo a fixed irreducible of
degree k, stored as the integer whose bits are the coefficients.  The moduli
for k <= 16 are the Conway polynomials, so that the generator of GF(2^m) maps
to a power of the generator of GF(2^n) whenever m divides n.
"""

from __future__ import annotations

from functools import lru_cache

# Conway polynomials over GF(2), bit i is the coefficient of X^i.
CONWAY = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10001101111,
    11: 0b100000000101,
    12: 0b1000011101011,
    13: 0b10000000011011,
    14: 0b100000010101001,
    15: 0b1000000000110101,
    16: 0b10000000000101101,
}

# Fields up to this degree get log/antilog tables.
_TABLE_LIMIT = 16


class NotASquareError(ArithmeticError):
    """Raised when a square root is requested from a non-square."""


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _gf2_poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, clmod(a, b)
    return a


def _gf2_powmod_x(e: int, m: int) -> int:
    """X^(2^e) mod m."""
    r = 0b10
    for _ in range(e):
        r = clmod(clmul(r, r), m)
    return r


def is_irreducible_gf2(m: int) -> bool:
    """Rabin's test for a GF(2) polynomial given as a bitmask."""
    n = m.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if _gf2_powmod_x(n, m) != 0b10:
        return False
    primes = {p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))}
    for p in primes:
        h = _gf2_powmod_x(n // p, m) ^ 0b10
        if _gf2_poly_gcd(m, h) != 1:
            return False
    return True


def default_modulus(k: int) -> int:
    if k in CONWAY:
        return CONWAY[k]
    # smallest irreducible of degree k, scanning odd bitmasks upward
    m = (1 << k) | 1
    while not is_irreducible_gf2(m):
        m += 2
    return m


class GF2k:
    """The field GF(2^k).  Use :func:`gf2k` to get the shared instance."""

    def __init__(self, k: int, modulus: int | None = None):
        if k < 1:
            raise ValueError("degree must be positive")
        self.k = k
        self.order = 1 << k
        self.modulus = default_modulus(k) if modulus is None else modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._embeddings: dict[int, list[int]] = {}
        self.zero = GFElement(self, 0)
        self.one = GFElement(self, 1)

    def __repr__(self):
        return f"GF(2^{self.k})"

    def __reduce__(self):
        return (gf2k, (self.k,))

    # raw integer arithmetic -------------------------------------------------

    def _tables(self):
        if self._exp is None:
            q1 = self.order - 1
            exp = [0] * (2 * q1)
            log = [0] * self.order
            # the Conway generator is primitive; search otherwise
            g = 2 if self.k > 1 else 1
            while True:
                x = 1
                ok = True
                for i in range(q1):
                    exp[i] = x
                    log[x] = i
                    x = self.mul_slow(x, g)
                    if x == 1 and i < q1 - 1:
                        ok = False
                        break
                if ok:
                    break
                g += 1
            for i in range(q1, 2 * q1):
                exp[i] = exp[i - q1]
            self._exp, self._log = exp, log
        return self._exp, self._log

    def mul_slow(self, a: int, b: int) -> int:
        return clmod(clmul(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k > _TABLE_LIMIT:
            return self.mul_slow(a, b)
        exp, log = self._tables()
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k > _TABLE_LIMIT:
            return self.pow(a, self.order - 2)
        exp, log = self._tables()
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.k <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[(log[a] * e) % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul_slow(r, a)
            a = self.mul_slow(a, a)
            e >>= 1
        return r

    def sqrt(self, a: int) -> int:
        # Frobenius is a bijection; its inverse is x -> x^(2^(k-1))
        for _ in range(self.k - 1):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2), returned as 0 or 1."""
        t, x = 0, a
        for _ in range(self.k):
            t ^= x
            x = self.mul(x, x)
        return t

    def frob(self, a: int, times: int = 1) -> int:
        for _ in range(times):
            a = self.mul(a, a)
        return a

    # element construction ---------------------------------------------------

    def __call__(self, v) -> "GFElement":
        if isinstance(v, GFElement):
            if v.field is self:
                return v
            raise TypeError(f"element of {v.field} is not in {self}")
        if isinstance(v, int):
            if not 0 <= v < self.order:
                raise ValueError(f"{v} out of range for {self}")
            return GFElement(self, v)
        raise TypeError(f"cannot coerce {type(v).__name__} into {self}")

    @property
    def gen(self) -> "GFElement":
        return GFElement(self, 2 if self.k > 1 else 1)

    def elements(self):
        for v in range(self.order):
            yield GFElement(self, v)

    def nonzero_elements(self):
        for v in range(1, self.order):
            yield GFElement(self, v)

    def random(self, rng, nonzero: bool = False) -> "GFElement":
        lo = 1 if nonzero else 0
        return GFElement(self, rng.randrange(lo, self.order))

    def artin_schreier_root(self, a: int) -> int | None:
        """Least s (as an integer) with s^2 + s = a, or None when Tr(a) = 1."""
        if self.trace(a):
            return None
        # x -> x^2 + x is GF(2)-linear; solve bit by bit via Gaussian elimination
        k = self.k
        cols = [self.mul(1 << i, 1 << i) ^ (1 << i) for i in range(k)]
        # rows of augmented system: for each output bit r, sum_i s_i*cols[i]_r = a_r
        rows = []
        for r in range(k):
            row = 0
            for i in range(k):
                if (cols[i] >> r) & 1:
                    row |= 1 << i
            rows.append((row, (a >> r) & 1))
        sol_rows = []
        pivots = []
        for row, rhs in rows:
            for (prow, prhs), p in zip(sol_rows, pivots):
                if (row >> p) & 1:
                    row ^= prow
                    rhs ^= prhs
            if row == 0:
                if rhs:
                    return None
                continue
            p = row.bit_length() - 1
            new_rows = []
            for (prow, prhs) in sol_rows:
                if (prow >> p) & 1:
                    prow ^= row
                    prhs ^= rhs
                new_rows.append((prow, prhs))
            sol_rows = new_rows + [(row, rhs)]
            pivots.append(p)
        s = 0
        for (row, rhs), p in zip(sol_rows, pivots):
            if rhs:
                s |= 1 << p
        # free variables are zero; the other solution is s ^ 1
        return min(s, s ^ 1)

    # subfields and embeddings ----------------------------------------------

    def embedding_table(self, big: "GF2k") -> list[int]:
        """Raw images of all elements of self inside ``big`` (k | big.k)."""
        if big.k % self.k:
            raise ValueError(f"{self} does not embed in {big}")
        tab = self._embeddings.get(big.k)
        if tab is not None:
            return tab
        if big is self:
            tab = list(range(self.order))
        else:
            alpha = self._generator_image(big)
            powers = [1]
            for _ in range(1, self.k):
                powers.append(big.mul(powers[-1], alpha))
            tab = []
            for v in range(self.order):
                r, i = 0, 0
                while v:
                    if v & 1:
                        r ^= powers[i]
                    v >>= 1
                    i += 1
                tab.append(r)
        self._embeddings[big.k] = tab
        return tab

    def _generator_image(self, big: "GF2k") -> int:
        def is_root(x):
            acc, xp = 0, 1
            for i in range(self.k + 1):
                if (self.modulus >> i) & 1:
                    acc ^= xp
                xp = big.mul(xp, x)
            return acc == 0

        if self.k == 1:
            return 1
        # roots lie in the subfield of order 2^self.k; walk it via powers of a generator
        cof = (big.order - 1) // (self.order - 1)
        for x in range(2, big.order):
            h = big.pow(x, cof)
            y = h
            for _ in range(self.order - 1):
                if is_root(y):
                    return y
                y = big.mul(y, h)
        raise ArithmeticError("no root of the modulus found")  # pragma: no cover

    def in_subfield(self, a: int, d: int) -> bool:
        """True when a lies in the subfield GF(2^d) (d | k)."""
        return self.frob(a, d) == a


@lru_cache(maxsize=None)
def gf2k(k: int) -> GF2k:
    """Shared instance of GF(2^k) with the deterministic modulus."""
    return GF2k(k)



def _coerce(field: GF2k, other):
    if isinstance(other, GFElement):
        if other.field is field:
            return other.v
        if other.field.k == 1:
            return other.v
        if field.k == 1 and other.field.k != 1:
            return None
        raise TypeError(f"mixing elements of {field} and {other.field}")
    if isinstance(other, int) and not isinstance(other, bool):
        return other & 1
    return None


class GFElement:
    __slots__ = ("field", "v")

    def __init__(self, field: GF2k, v: int):
        self.field = field
        self.v = v

    def __repr__(self):
        return f"{self.field!r}({self})"

    def __str__(self):
        if self.v == 0:
            return "0"
        terms = []
        for i in reversed(range(self.v.bit_length())):
            if (self.v >> i) & 1:
                terms.append("1" if i == 0 else ("w" if i == 1 else f"w^{i}"))
        return " + ".join(terms)

    def __hash__(self):
        return hash((self.field.k, self.v))

    def __eq__(self, other):
        o = _coerce(self.field, other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __bool__(self):
        return self.v != 0

    def is_zero(self) -> bool:
        return self.v == 0

    def _promoted(self, other):
        """self pushed into a larger field when self lives in GF(2)."""
        if self.field.k == 1 and isinstance(other, GFElement):
            return GFElement(other.field, self.v)
        return None

    def __add__(self, other):
        o = _coerce(self.field, other)
        if o is None:
            p = self._promoted(other)
            return NotImplemented if p is None else p + other
        return GFElement(self.field, self.v ^ o)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = _coerce(self.field, other)
        if o is None:
            p = self._promoted(other)
            return NotImplemented if p is None else p * other
        return GFElement(self.field, self.field.mul(self.v, o))

    __rmul__ = __mul__

    def inverse(self) -> "GFElement":
        return GFElement(self.field, self.field.inv(self.v))

    def __truediv__(self, other):
        o = _coerce(self.field, other)
        if o is None:
            p = self._promoted(other)
            return NotImplemented if p is None else p / other
        return GFElement(self.field, self.field.mul(self.v, self.field.inv(o)))

    def __rtruediv__(self, other):
        o = _coerce(self.field, other)
        if o is None:
            return NotImplemented
        return GFElement(self.field, self.field.mul(o, self.field.inv(self.v)))

    def __pow__(self, e: int):
        return GFElement(self.field, self.field.pow(self.v, e))

    def sqrt(self) -> "GFElement":
        return GFElement(self.field, self.field.sqrt(self.v))

    def trace(self) -> int:
        return self.field.trace(self.v)

    def frobenius(self, times: int = 1) -> "GFElement":
        return GFElement(self.field, self.field.frob(self.v, times))

    def embed(self, big: GF2k) -> "GFElement":
        if big is self.field:
            return self
        return GFElement(big, self.field.embedding_table(big)[self.v])


def field_sqrt(x: GFElement) -> GFElement:
    """The unique square root of x in its field."""
    return x.sqrt()


def common_field(*fields: GF2k) -> GF2k:
    """Smallest field GF(2^n) containing all the given fields."""
    from math import lcm

    n = 1
    for f in fields:
        n = lcm(n, f.k)
    return gf2k(n)


GF2 = gf2k(1)
