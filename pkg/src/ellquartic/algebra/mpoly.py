"""Sparse multivariate polynomials over GF(2^k) in a fixed list of named variables.

Exponent vectors are packed into a single integer, 16 bits per variable with the
first declared variable in the most significant slot.  Adding packed integers
multiplies monomials, and comparing them is lexicographic order with
``names[0] > names[1] > ...``.
"""

from __future__ import annotations

from .gf import GF2, GF2k, GFElement, NotASquareError

_BITS = 16
_MASK = (1 << _BITS) - 1


class ContextMismatch(TypeError):
    """Operands live in different variable contexts."""


class PolyContext:
    """An ordered tuple of variable names over a coefficient field."""

    def __init__(self, names, field: GF2k = GF2):
        names = tuple(names.split()) if isinstance(names, str) else tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.field = field
        self.n = len(names)
        self._index = {v: i for i, v in enumerate(names)}
        self._shift = [(self.n - 1 - i) * _BITS for i in range(self.n)]

    def __repr__(self):
        return f"PolyContext({' '.join(self.names)!r}, {self.field!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self.names}") from None

    def pack(self, exps) -> int:
        m = 0
        for i, e in enumerate(exps):
            if e:
                m |= e << self._shift[i]
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> s) & _MASK for s in self._shift)

    def exponent(self, m: int, i: int) -> int:
        return (m >> self._shift[i]) & _MASK

    def var(self, name: str) -> "MPoly":
        return MPoly(self, {1 << self._shift[self.index(name)]: 1})

    def gens(self) -> tuple["MPoly", ...]:
        return tuple(self.var(v) for v in self.names)

    def const(self, v) -> "MPoly":
        if isinstance(v, GFElement):
            v = v.v
        else:
            v = int(v) & 1
        return MPoly(self, {0: v} if v else {})

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {0: 1})

    def monomial(self, exps, coeff: int = 1) -> "MPoly":
        return MPoly(self, {self.pack(exps): coeff} if coeff else {})


class MPoly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PolyContext, terms: dict[int, int]):
        self.ctx = ctx
        self.terms = terms

    # coercion ----------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.ctx is not self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return {0: 1} if other & 1 else {}
        if isinstance(other, GFElement):
            if other.field is not self.ctx.field and other.field.k != 1:
                raise ContextMismatch(f"scalar from {other.field} in {self.ctx}")
            return {0: other.v} if other.v else {}
        return None

    # basic protocol ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mon = []
            for name, e in zip(self.ctx.names, self.ctx.unpack(m)):
                if e == 1:
                    mon.append(name)
                elif e:
                    mon.append(f"{name}^{e}")
            cs = str(GFElement(self.ctx.field, c))
            if not mon:
                parts.append(cs)
            elif c == 1:
                parts.append("*".join(mon))
            else:
                parts.append(f"({cs})*" + "*".join(mon))
        return " + ".join(parts)

    # ring operations ---------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = dict(self.terms)
        for m, c in o.items():
            v = r.get(m, 0) ^ c
            if v:
                r[m] = v
            else:
                r.pop(m, None)
        return MPoly(self.ctx, r)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o
        if len(a) < len(b):
            a, b = b, a
        r: dict[int, int] = {}
        get = r.get
        if self.ctx.field.k == 1:
            for mb in b:
                for ma in a:
                    m = ma + mb
                    if get(m):
                        del r[m]
                    else:
                        r[m] = 1
        else:
            mul = self.ctx.field.mul
            for mb, cb in b.items():
                for ma, ca in a.items():
                    m = ma + mb
                    v = get(m, 0) ^ mul(ca, cb)
                    if v:
                        r[m] = v
                    else:
                        r.pop(m, None)
        return MPoly(self.ctx, r)

    __rmul__ = __mul__

    def square(self) -> "MPoly":
        # Frobenius is additive in characteristic 2
        mul = self.ctx.field.mul
        return MPoly(self.ctx, {2 * m: mul(c, c) for m, c in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        r = MPoly(self.ctx, {0: 1})
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b.square()
        return r

    def scale(self, c: int) -> "MPoly":
        if not c:
            return MPoly(self.ctx, {})
        mul = self.ctx.field.mul
        return MPoly(self.ctx, {m: mul(c, v) for m, v in self.terms.items()})

    def __truediv__(self, other):
        # exact division by a nonzero scalar only
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if set(o) != {0}:
            raise TypeError("MPoly division is only defined by nonzero constants")
        return self.scale(self.ctx.field.inv(o[0]))

    # structure ---------------------------------------------------------------

    def sqrt(self) -> "MPoly":
        s = self.ctx.field.sqrt
        r = {}
        for m, c in self.terms.items():
            if any(e % 2 for e in self.ctx.unpack(m)):
                raise NotASquareError(f"{self} is not a square")
            r[m >> 1] = s(c)
        return MPoly(self.ctx, r)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(self.ctx.unpack(m)) for m in self.terms)
        i = self.ctx.index(name)
        return max(self.ctx.exponent(m, i) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        seen = 0
        for m in self.terms:
            seen |= m
        return tuple(v for i, v in enumerate(self.ctx.names) if self.ctx.exponent(seen, i))

    def is_homogeneous(self, names=None) -> bool:
        idx = [self.ctx.index(v) for v in (names or self.ctx.names)]
        degs = {sum(self.ctx.exponent(m, i) for i in idx) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self) -> int:
        return max(self.terms)

    def coefficient(self, exps) -> GFElement:
        return GFElement(self.ctx.field, self.terms.get(self.ctx.pack(exps), 0))

    def coeffs_in(self, name: str) -> dict[int, "MPoly"]:
        """Decompose as sum over e of coeff_e * name^e."""
        i = self.ctx.index(name)
        sh = self.ctx._shift[i]
        out: dict[int, dict[int, int]] = {}
        for m, c in self.terms.items():
            e = (m >> sh) & _MASK
            out.setdefault(e, {})[m - (e << sh)] = c
        return {e: MPoly(self.ctx, t) for e, t in out.items()}

    def derivative(self, name: str) -> "MPoly":
        i = self.ctx.index(name)
        sh = self.ctx._shift[i]
        unit = 1 << sh
        return MPoly(self.ctx, {m - unit: c for m, c in self.terms.items() if ((m >> sh) & _MASK) % 2})

    def substitute(self, mapping: dict) -> "MPoly":
        """Replace variables by MPolys (or scalars) of the target context.

        The target context is taken from the first MPoly value; unmapped
        variables must exist in it under the same name.
        """
        target = next((v.ctx for v in mapping.values() if isinstance(v, MPoly)), self.ctx)
        images = []
        for name in self.ctx.names:
            if name in mapping:
                v = mapping[name]
                images.append(v if isinstance(v, MPoly) else target.const(v))
            else:
                images.append(target.var(name))
        return self._eval(images, target.one(), target.zero())

    def __call__(self, **values):
        return self.evaluate(values)

    def evaluate(self, values: dict):
        """Evaluate at ring elements given per variable name (all variables needed
        unless the polynomial does not involve them)."""
        used = self.variables()
        missing = [v for v in used if v not in values]
        if missing:
            raise KeyError(f"no value for {missing}")
        sample = next((values[v] for v in used), None)
        if isinstance(sample, GFElement):
            F = sample.field
            one, zero = F.one, F.zero
        elif sample is None:
            c = self.terms.get(0, 0)
            return GFElement(self.ctx.field, c)
        else:
            one, zero = sample ** 0, sample * 0
        images = [values.get(v, zero) for v in self.ctx.names]
        return self._eval(images, one, zero)

    def _eval(self, images, one, zero):
        n = self.ctx.n
        powers: list[dict[int, object]] = [{0: one} for _ in range(n)]

        def pw(i, e):
            cache = powers[i]
            r = cache.get(e)
            if r is None:
                r = pw(i, e - 1) * images[i]
                cache[e] = r
            return r

        F = self.ctx.field
        acc = zero
        for m, c in self.terms.items():
            t = None
            for i, e in enumerate(self.ctx.unpack(m)):
                if e:
                    t = pw(i, e) if t is None else t * pw(i, e)
            cv = GFElement(F, c)
            if t is None:
                acc = acc + one * cv
            else:
                acc = acc + (t if c == 1 else t * cv)
        return acc


def reduce_triangular(f: MPoly, gens: list[tuple[str, MPoly]]):
    """Normal form of f modulo generators monic in distinct leading variables.

    ``gens`` lists pairs (v_i, g_i) where g_i is monic in v_i of degree d_i and
    involves no leading variable of a later pair.  Under a lex order with the
    later leading variables largest, the leading monomials v_i^{d_i} are
    pairwise coprime, so the g_i form a Groebner basis and the remainder is
    zero exactly when f lies in the ideal.

    Returns (quotients, remainder) with f = sum q_i g_i + remainder.
    """
    leads = [v for v, _ in gens]
    for i, (v, g) in enumerate(gens):
        d = g.degree(v)
        top = g.coeffs_in(v)[d]
        if top != 1:
            raise ValueError(f"generator {i} is not monic in {v}")
        later = set(leads[i + 1:])
        if later & set(g.variables()):
            raise ValueError(f"generator {i} involves a later leading variable")
    quotients = [f.ctx.zero() for _ in gens]
    rem = f
    for i in reversed(range(len(gens))):
        v, g = gens[i]
        d = g.degree(v)
        tail = g + f.ctx.var(v) ** d  # v^d == tail modulo g
        parts = rem.coeffs_in(v)
        top = max(parts) if parts else -1
        if top < d:
            continue
        vpow = [f.ctx.one()]
        for _ in range(top):
            vpow.append(vpow[-1] * f.ctx.var(v))
        q = f.ctx.zero()
        for e in range(top, d - 1, -1):
            c = parts.pop(e, None)
            if c is None or c.is_zero():
                continue
            # c v^e = c v^(e-d) g + c v^(e-d) tail
            mult = c * vpow[e - d]
            q = q + mult
            red = mult * tail
            for e2, c2 in red.coeffs_in(v).items():
                parts[e2] = parts[e2] + c2 if e2 in parts else c2
        quotients[i] = quotients[i] + q
        rem = f.ctx.zero()
        for e, c in parts.items():
            if not c.is_zero():
                rem = rem + c * vpow[e] if e < len(vpow) else rem + c * f.ctx.var(v) ** e
    return quotients, rem


def check_certificate(f: MPoly, gens: list[MPoly], quotients: list[MPoly]) -> bool:
    """Independently verify f == sum q_i g_i."""
    acc = f.ctx.zero()
    for q, g in zip(quotients, gens):
        acc = acc + q * g
    return acc == f
