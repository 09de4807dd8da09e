"""Plane projective curves over GF(2^k): points, tangents, singularities, delta invariants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra.gf import GF2k, GFElement, common_field, gf2k
from .algebra.mpoly import MPoly, PolyContext
from .algebra.upoly import UPoly
from .projective import NotOnCurveError, ProjPoint, cross
from .series import EXACT, LaurentSeries, PrecisionError

DEFAULT_SEARCH_BOUND = 4
_MAX_BLOWUPS = 48


class SingularPointError(ValueError):
    """A smooth point was required."""


class LineComponentError(ValueError):
    """The line is a component of the curve."""


class NonIsolatedSingularityError(ArithmeticError):
    """Blowing up does not terminate: the curve has a multiple component through the point."""


class NonReducedError(ArithmeticError):
    """The curve has a multiple component, so its singular locus is not finite."""


class ReducibleCurveError(ValueError):
    pass


@lru_cache(maxsize=None)
def xyz_context(field: GF2k) -> PolyContext:
    return PolyContext("x y z", field)


@lru_cache(maxsize=None)
def _uv_context(field: GF2k) -> PolyContext:
    return PolyContext("u v", field)


@lru_cache(maxsize=None)
def _st_context(field: GF2k) -> PolyContext:
    return PolyContext("s t", field)


def embed_poly(p: MPoly, ctx: PolyContext) -> MPoly:
    """Same polynomial with coefficients pushed into ctx.field (same variable names)."""
    if p.ctx is ctx:
        return p
    tab = p.ctx.field.embedding_table(ctx.field)
    if p.ctx.names != ctx.names:
        raise ValueError("embedding needs matching variable names")
    return MPoly(ctx, {m: tab[c] for m, c in p.terms.items()})


def _min_degree(p: MPoly) -> int:
    return min(sum(p.ctx.unpack(m)) for m in p.terms)


class PlaneCurve:
    """The zero set of a nonzero homogeneous form in x, y, z."""

    def __init__(self, form: MPoly):
        if form.is_zero():
            raise ValueError("the zero form defines no curve")
        if form.ctx.names != ("x", "y", "z"):
            raise ValueError("forms must be written in x, y, z")
        if not form.is_homogeneous():
            raise ValueError(f"{form} is not homogeneous")
        self.form = form
        self.degree = form.degree()
        self._embedded: dict[int, PlaneCurve] = {}
        self._grad = None

    @classmethod
    def from_function(cls, field: GF2k, fn, *params) -> "PlaneCurve":
        """Build from ``fn(*params, x, y, z)`` evaluated on the generators of F[x, y, z]."""
        x, y, z = xyz_context(field).gens()
        return cls(fn(*params, x, y, z))

    @property
    def field(self) -> GF2k:
        return self.form.ctx.field

    def __repr__(self):
        return f"PlaneCurve({self.form} over {self.field})"

    def __eq__(self, other):
        return isinstance(other, PlaneCurve) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def embed(self, big: GF2k) -> "PlaneCurve":
        if big is self.field:
            return self
        c = self._embedded.get(big.k)
        if c is None:
            c = PlaneCurve(embed_poly(self.form, xyz_context(big)))
            self._embedded[big.k] = c
        return c

    def _align(self, P: ProjPoint) -> tuple["PlaneCurve", ProjPoint]:
        if P.field is self.field:
            return self, P
        big = common_field(self.field, P.field)
        return self.embed(big), P.embed(big)

    def gradient_forms(self):
        if self._grad is None:
            self._grad = tuple(self.form.derivative(v) for v in "xyz")
        return self._grad

    def __call__(self, P: ProjPoint) -> GFElement:
        C, P = self._align(P)
        return C.form.evaluate(dict(zip("xyz", P.coords)))

    def contains(self, P: ProjPoint) -> bool:
        return self(P) == 0

    def gradient(self, P: ProjPoint):
        C, P = self._align(P)
        vals = dict(zip("xyz", P.coords))
        return tuple(g.evaluate(vals) if not g.is_zero() else P.field.zero for g in C.gradient_forms())

    # local analysis ----------------------------------------------------------

    def local_equation(self, P: ProjPoint) -> MPoly:
        """Dehomogenize at the last nonzero coordinate of P and move P to (u, v) = (0, 0)."""
        C, P = self._align(P)
        F = P.field
        i = max(j for j in range(3) if P.coords[j])
        j1, j2 = [j for j in range(3) if j != i]
        ctx = _uv_context(F)
        u, v = ctx.gens()
        images = [None, None, None]
        images[i] = ctx.one()
        images[j1] = u + P.coords[j1]
        images[j2] = v + P.coords[j2]
        return C.form.substitute(dict(zip("xyz", images)))

    def multiplicity(self, P: ProjPoint) -> int:
        g = self.local_equation(P)
        if g.is_zero():
            raise ValueError("form vanishes identically near the point")
        return _min_degree(g)

    def is_singular_point(self, P: ProjPoint) -> tuple[bool, int]:
        """(singular?, multiplicity) for a point on the curve."""
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on the curve")
        sing = all(g == 0 for g in self.gradient(P))
        return sing, self.multiplicity(P)

    def tangent_line(self, P: ProjPoint):
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on the curve")
        g = self.gradient(P)
        if all(c == 0 for c in g):
            raise SingularPointError(f"{P} is a singular point")
        return g

    # lines -------------------------------------------------------------------

    def restrict_to_line(self, L):
        """(binary form g(s, t), P1, P2) with the line parametrized as s*P1 + t*P2."""
        F = next(c.field for c in L if isinstance(c, GFElement))
        L = tuple(c if isinstance(c, GFElement) else F(int(c) & 1) for c in L)
        C = self.embed(common_field(self.field, F)) if F.k % self.field.k else self.embed(F)
        F = C.field
        L = tuple(c.embed(F) for c in L)
        i = next(j for j in range(3) if L[j])
        basis = []
        for j in range(3):
            if j == i:
                continue
            vec = [F.zero, F.zero, F.zero]
            vec[j] = F.one
            vec[i] = L[j] / L[i]
            basis.append(tuple(vec))
        ctx = _st_context(F)
        s, t = ctx.gens()
        images = [s * basis[0][r] + t * basis[1][r] for r in range(3)]
        g = C.form.substitute(dict(zip("xyz", images)))
        return g, basis[0], basis[1]

    def line_is_component(self, L) -> bool:
        return self.restrict_to_line(L)[0].is_zero()

    def line_intersection_profile(self, L) -> list[tuple[ProjPoint, int]]:
        """Intersection points of the curve with the line L, with multiplicities.

        Points come over the extension GF(2^(k r)) in which they are rational.
        """
        g, P1, P2 = self.restrict_to_line(L)
        if g.is_zero():
            raise LineComponentError(f"line {L} is a component of the curve")
        F = g.ctx.field
        d = self.degree
        coeffs = [0] * (d + 1)
        for m, c in g.terms.items():
            es, _ = g.ctx.unpack(m)
            coeffs[es] = c
        G = UPoly(F, coeffs)
        out: list[tuple[ProjPoint, int]] = []
        if G.degree < d:
            out.append((ProjPoint(*P1), d - G.degree))
        for p, e in G.factor():
            big = gf2k(F.k * p.degree)
            for r in p.embed(big).roots():
                out.append((ProjPoint(*(r * a.embed(big) + b.embed(big) for a, b in zip(P1, P2))), e))
        out.sort(key=lambda pe: (-pe[1], pe[0].field.k, pe[0].sort_key()))
        return out

    # point sets --------------------------------------------------------------

    def _row_polys(self, form: MPoly, F: GF2k):
        """Coefficients of form(x, y, 1) as a polynomial in y, each a UPoly in x."""
        rows: dict[int, list[int]] = {}
        for m, c in form.terms.items():
            ex, ey, _ = form.ctx.unpack(m)
            lst = rows.setdefault(ey, [])
            if len(lst) <= ex:
                lst.extend([0] * (ex + 1 - len(lst)))
            lst[ex] ^= c
        return {ey: UPoly(F, lst) for ey, lst in rows.items()}

    def _line_at_infinity(self, form: MPoly, F: GF2k) -> UPoly:
        """form(x, 1, 0) as a UPoly in x."""
        lst = []
        for m, c in form.terms.items():
            ex, _, ez = form.ctx.unpack(m)
            if ez == 0:
                if len(lst) <= ex:
                    lst.extend([0] * (ex + 1 - len(lst)))
                lst[ex] ^= c
        return UPoly(F, lst)

    def _scan(self, F: GF2k, forms) -> list[ProjPoint]:
        """Common zeros over F of the given forms (first form nonzero)."""
        forms = [f for f in forms if not f.is_zero()]
        rows = [self._row_polys(f, F) for f in forms]
        out = []
        for x0 in F.elements():
            g = None
            for r in rows:
                deg = max(r)
                c = [0] * (deg + 1)
                for ey, px in r.items():
                    c[ey] = px(x0).v
                h = UPoly(F, c)
                g = h if g is None else g.gcd(h)
            if g.is_zero():
                raise NonReducedError(f"the whole line x = {x0} z lies in the locus")
            for y0 in g.roots():
                out.append(ProjPoint(x0, y0, F.one))
        g = None
        for f in forms:
            h = self._line_at_infinity(f, F)
            g = h if g is None else g.gcd(h)
        if g.is_zero():
            raise NonReducedError("the line at infinity lies in the locus")
        for x0 in g.roots():
            out.append(ProjPoint(x0, F.one, F.zero))
        P = ProjPoint(F.one, F.zero, F.zero)
        if all(f.evaluate({"x": F.one, "y": F.zero, "z": F.zero}) == 0 for f in forms):
            out.append(P)
        return out

    def enumerate_points(self, field: GF2k | None = None) -> list[ProjPoint]:
        """All points over ``field`` (default: the curve's field), sorted."""
        F = field or self.field
        C = self.embed(F) if F is not self.field else self
        if F.k % self.field.k:
            raise ValueError(f"{self.field} does not embed in {F}")
        pts = C._scan_all(F)
        return sorted(pts, key=ProjPoint.sort_key)

    def _scan_all(self, F):
        # a whole line of the curve is fine here; collect rows with zero restriction
        rows = self._row_polys(self.form, F)
        out = []
        deg = max(rows)
        for x0 in F.elements():
            c = [0] * (deg + 1)
            for ey, px in rows.items():
                c[ey] = px(x0).v
            h = UPoly(F, c)
            ys = list(F.elements()) if h.is_zero() else h.roots()
            out.extend(ProjPoint(x0, y0, F.one) for y0 in ys)
        h = self._line_at_infinity(self.form, F)
        xs = list(F.elements()) if h.is_zero() else h.roots()
        out.extend(ProjPoint(x0, F.one, F.zero) for x0 in xs)
        if self.form.evaluate({"x": F.one, "y": F.zero, "z": F.zero}) == 0:
            out.append(ProjPoint(F.one, F.zero, F.zero))
        return out

    def count_points(self, field: GF2k | None = None) -> int:
        return len(self.enumerate_points(field))

    def singular_points(self, bound: int = DEFAULT_SEARCH_BOUND) -> list[ProjPoint]:
        """Singular points over GF(2^(k m)) for all m <= bound, each in its minimal field."""
        k = self.field.k
        degrees = [m for m in range(1, bound + 1) if not any(n % m == 0 for n in range(m + 1, bound + 1))]
        found: dict[ProjPoint, None] = {}
        for m in sorted(degrees, reverse=True):
            F = gf2k(k * m)
            C = self.embed(F)
            for P in C._scan(F, [C.form, *C.gradient_forms()]):
                found.setdefault(descend(P), None)
        return sorted(found, key=lambda P: (P.field.k, P.sort_key()))


def descend(P: ProjPoint) -> ProjPoint:
    """The same point written over the smallest field containing its coordinates."""
    F = P.field
    for d in range(1, F.k + 1):
        if F.k % d == 0 and P.is_rational_over(d):
            if d == F.k:
                return P
            small = gf2k(d)
            inv = {v: i for i, v in enumerate(small.embedding_table(F))}
            return ProjPoint(*(small(inv[c.v]) for c in P.coords))
    return P  # pragma: no cover


# delta invariants -------------------------------------------------------------


def _tangent_cone(g: MPoly, m: int):
    """Directions of the degree-m part of g in (u, v): (multiplicity of u = 0, g_m(1, s))."""
    F = g.ctx.field
    coeffs = [0] * (m + 1)
    for mono, c in g.terms.items():
        eu, ev = g.ctx.unpack(mono)
        if eu + ev == m:
            coeffs[ev] = c
    G = UPoly(F, coeffs)
    return m - G.degree, G


def _blowup_chart(g: MPoly, m: int, swap: bool) -> MPoly:
    """Strict transform in the chart v = s u (or u = r v when ``swap``), as a poly in (u, s)."""
    ctx = g.ctx
    out = {}
    for mono, c in g.terms.items():
        eu, ev = ctx.unpack(mono)
        if swap:
            new = (eu, eu + ev - m)  # u = r v: (r, v) stored in (u, v) slots
        else:
            new = (eu + ev - m, ev)
        out[ctx.pack(new)] = c
    return MPoly(ctx, out)


def _delta_at_origin(g: MPoly, depth: int = 0) -> int:
    m = _min_degree(g)
    if m <= 1:
        return 0
    if depth > _MAX_BLOWUPS:
        raise NonIsolatedSingularityError("multiplicity does not drop after repeated blowups")
    total = m * (m - 1) // 2
    vert, G = _tangent_cone(g, m)
    if vert:
        total += _delta_at_origin(_blowup_chart(g, m, swap=True), depth + 1)
    h = _blowup_chart(g, m, swap=False)
    F = g.ctx.field
    for p, _ in G.factor():
        r = p.degree
        big = gf2k(F.k * r)
        lam = p.embed(big).roots()[0]
        ctx = _uv_context(big)
        hb = embed_poly(h, ctx)
        u, v = ctx.gens()
        shifted = hb.substitute({"u": u, "v": v + lam})
        # the r conjugate infinitely near points all contribute the same amount
        total += r * _delta_at_origin(shifted, depth + 1)
    return total


def delta_blowup(C: PlaneCurve, P: ProjPoint) -> int:
    """delta = sum of m(m-1)/2 over the point and all its infinitely near points."""
    if not C.contains(P):
        raise NotOnCurveError(f"{P} is not on the curve")
    return _delta_at_origin(C.local_equation(P))


def multiplicity_sequence(C: PlaneCurve, P: ProjPoint) -> list[int]:
    """Multiplicities along the first branch of infinitely near points (for reporting)."""
    g = C.local_equation(P)
    seq = []
    for _ in range(_MAX_BLOWUPS):
        m = _min_degree(g)
        if m <= 1:
            break
        seq.append(m)
        vert, G = _tangent_cone(g, m)
        if vert:
            g = _blowup_chart(g, m, swap=True)
            continue
        p = G.factor()[0][0]
        big = gf2k(g.ctx.field.k * p.degree)
        lam = p.embed(big).roots()[0]
        ctx = _uv_context(big)
        u, v = ctx.gens()
        g = embed_poly(_blowup_chart(g, m, swap=False), ctx).substitute({"u": u, "v": v + lam})
    return seq


def delta_semigroup(x: LaurentSeries, z: LaurentSeries) -> int:
    """delta of a branch t -> (x(t), z(t)) from its value semigroup.

    Elements of the local ring of the branch below order N are combinations of
    monomials x^i z^j of order < N, so Gaussian elimination on their truncated
    expansions yields the semigroup below N.  The conductor is certified by a
    run of min(S - {0}) consecutive values.
    """
    vx, vz = x.valuation(), z.valuation()
    if not (isinstance(vx, int) and isinstance(vz, int)) or vx < 1 or vz < 1:
        raise ValueError("both components need positive order")
    N = min(x.prec, z.prec)
    if N == EXACT:
        N = 2 * vx * vz + 2
    N = int(N)
    one = x.one
    rows: dict[int, list] = {}  # leading order -> reduced row, indexed by order
    xp = LaurentSeries([one], 0, EXACT, one)
    i = 0
    while i * vx < N:
        mono = xp
        j = 0
        while i * vx + j * vz < N:
            vec = [mono[n] if n < mono.prec else None for n in range(N)]
            if None in vec:
                raise PrecisionError("series precision too small for the requested bound")
            _insert_row(rows, vec)
            mono = (mono * z).truncate(N)
            j += 1
        xp = (xp * x).truncate(N)
        i += 1
    S = sorted(rows)
    mult = min(s for s in S if s > 0) if any(s > 0 for s in S) else None
    if mult is None:
        raise PrecisionError("no positive values found below the bound")
    run_start, run = None, 0
    prev = None
    for s in S:
        run = run + 1 if prev is not None and s == prev + 1 else 1
        prev = s
        if run >= mult:
            run_start = s - mult + 1
            break
    if run_start is None:
        raise PrecisionError(f"conductor not certified below order {N}")
    return sum(1 for n in range(run_start) if n not in rows)


def _insert_row(rows: dict, vec: list):
    vec = list(vec)
    while True:
        lead = next((n for n, c in enumerate(vec) if c != 0), None)
        if lead is None:
            return
        if lead not in rows:
            inv = 1 / vec[lead]
            rows[lead] = [c * inv for c in vec]
            return
        piv = rows[lead]
        f = vec[lead]
        vec = [a + f * b for a, b in zip(vec, piv)]


# global invariants ---------------------------------------------------------------


@dataclass(frozen=True)
class IntegralityReport:
    status: str  # "integral", "reducible" or "non-reduced"
    singular_points: tuple
    deltas: tuple
    reason: str = ""

    @property
    def total_delta(self) -> int:
        return sum(self.deltas)


def _tangent_cone_lines(C: PlaneCurve, P: ProjPoint):
    """Lines through P along the tangent-cone directions, one per Galois orbit."""
    C2, P = C._align(P)
    g = C2.local_equation(P)
    m = _min_degree(g)
    vert, G = _tangent_cone(g, m)
    i = max(j for j in range(3) if P.coords[j])
    j1, j2 = [j for j in range(3) if j != i]
    dirs = []
    F = P.field
    if vert:
        dirs.append((F, F.zero, F.one))
    for p, _ in G.factor():
        big = gf2k(F.k * p.degree)
        dirs.append((big, big.one, p.embed(big).roots()[0]))
    lines = []
    for big, a, b in dirs:
        D = [big.zero, big.zero, big.zero]
        D[j1], D[j2] = a, b
        lines.append(cross(P.embed(big).coords, tuple(D)))
    return lines


def integrality(C: PlaneCurve, bound: int = DEFAULT_SEARCH_BOUND) -> IntegralityReport:
    """Decide whether a plane curve of degree <= 4 is integral.

    A multiple component makes the singular locus infinite.  A reduced
    reducible curve G H has sum delta >= deg G deg H, which exceeds the
    arithmetic genus unless one factor is a line meeting a cubic; such a
    line passes through two singular points or lies in a tangent cone.
    """
    if C.degree > 4:
        raise ValueError("integrality test implemented for degree <= 4")
    try:
        sing = C.singular_points(bound)
    except NonReducedError as exc:
        return IntegralityReport("non-reduced", (), (), str(exc))
    if len(sing) > comb(C.degree, 2):
        return IntegralityReport("non-reduced", (), (), f"{len(sing)} singular points found")
    try:
        deltas = tuple(delta_blowup(C, P) for P in sing)
    except NonIsolatedSingularityError as exc:
        return IntegralityReport("non-reduced", tuple(sing), (), str(exc))
    pa = (C.degree - 1) * (C.degree - 2) // 2
    if sum(deltas) > pa:
        return IntegralityReport("reducible", tuple(sing), deltas, "delta exceeds arithmetic genus")
    candidates = []
    for a in range(len(sing)):
        for b in range(a + 1, len(sing)):
            F = common_field(sing[a].field, sing[b].field)
            candidates.append(cross(sing[a].embed(F).coords, sing[b].embed(F).coords))
        candidates.extend(_tangent_cone_lines(C, sing[a]))
    for L in candidates:
        if C.line_is_component(L):
            return IntegralityReport("reducible", tuple(sing), deltas, f"line component {L}")
    return IntegralityReport("integral", tuple(sing), deltas)


def geometric_genus(C: PlaneCurve, bound: int = DEFAULT_SEARCH_BOUND) -> int:
    rep = integrality(C, bound)
    if rep.status != "integral":
        raise ReducibleCurveError(f"curve is {rep.status}: {rep.reason}")
    return (C.degree - 1) * (C.degree - 2) // 2 - rep.total_delta
