"""Polynomial identities behind the models, checked with explicit certificates.

Each check asks whether a target polynomial lies in an ideal.  The answer is a
list of quotients with target == sum q_i g_i, found by triangular reduction
when the generators allow it and written down by hand otherwise.  Every
certificate is then re-checked independently, both symbolically and by
evaluation at random points over GF(16).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra.gf import gf2k
from .algebra.mpoly import MPoly, PolyContext, check_certificate, reduce_triangular
from .models import cubic_form, quartic_form, quartic_w

NUMERIC_FIELD_DEGREE = 4
FAMILIES = (
    "case-a", "case-b", "morphisms", "frobenius", "strangeness", "pencil", "birational",
)


@dataclass(frozen=True)
class IdentityCheck:
    family: str
    name: str
    target: MPoly
    generators: tuple
    quotients: tuple
    expect_member: bool = True
    remainder: MPoly | None = None

    @property
    def certified(self) -> bool:
        """Symbolic verdict: certificate holds, or for a non-member the remainder is nonzero."""
        if self.expect_member:
            return check_certificate(self.target, list(self.generators), list(self.quotients))
        return self.remainder is not None and not self.remainder.is_zero()

    def numeric_check(self, rng: random.Random, points: int) -> bool:
        """Evaluate target - sum q_i g_i at random GF(16) points."""
        if not self.expect_member:
            return True
        F = gf2k(NUMERIC_FIELD_DEGREE)
        names = self.target.ctx.names
        for _ in range(points):
            vals = {n: F.random(rng) for n in names}
            acc = self.target.evaluate(vals)
            for q, g in zip(self.quotients, self.generators):
                acc = acc + q.evaluate(vals) * g.evaluate(vals)
            if acc != 0:
                return False
        return True


@dataclass
class SuiteResult:
    checks: list[IdentityCheck]
    numeric: dict = field(default_factory=dict)

    def passed(self, check: IdentityCheck) -> bool:
        return check.certified and self.numeric.get(check.name, True)

    @property
    def all_passed(self) -> bool:
        return all(self.passed(c) for c in self.checks)

    def family_passed(self, family: str) -> bool:
        return all(self.passed(c) for c in self.checks if c.family == family)


def _triangular(family, name, target, gens) -> IdentityCheck:
    # a nonzero remainder leaves a certificate that fails check_certificate
    quotients, rem = reduce_triangular(target, gens)
    return IdentityCheck(family, name, target, tuple(p for _, p in gens), tuple(quotients), True, rem)


def _explicit(family, name, target, gens, quotients) -> IdentityCheck:
    return IdentityCheck(family, name, target, tuple(gens), tuple(quotients))


def _zero(family, name, target) -> IdentityCheck:
    return IdentityCheck(family, name, target, (), ())


def _nonmember(family, name, target, gens) -> IdentityCheck:
    _, rem = reduce_triangular(target, gens)
    return IdentityCheck(family, name, target, tuple(p for _, p in gens), (), False, rem)


def _bump(p: MPoly, mutate: bool, *names) -> MPoly:
    """Flip the coefficient of the monomial prod(names) when mutating."""
    if not mutate:
        return p
    m = p.ctx.one()
    for n in names:
        m = m * p.ctx.var(n)
    return p + m


# families -------------------------------------------------------------------------


def case_a_checks(mutate: bool = False) -> list[IdentityCheck]:
    """Elimination of x from y^2 + a y = x^3 + a4 x + a6 and z^2 = b x^2 + c x + d."""
    ctx = PolyContext("a a4 a6 b c d x y z")
    a, a4, a6, b, c, d, x, y, z = ctx.gens()
    g1 = x ** 3 + a4 * x + a6 + y * y + a * y
    g2 = z * z + b * x * x + c * x + d
    gens = [("x", g1), ("z", g2)]
    N = c * (z * z + d) + b * b * (y * y + a * y + a6)
    D = b * (z * z + d) + c * c + b * b * a4
    sextic = (z * z + d) * D * D + b * N * N + c * D * N
    return [
        _triangular("case-a", "case-a/x-elimination", x * D + N, gens),
        _triangular("case-a", "case-a/sextic", _bump(sextic, mutate, "y", "z"), gens),
        _zero("case-a", "case-a/sextic-dy", sextic.derivative("y") + a * b * b * c * D),
        _zero("case-a", "case-a/sextic-dz", sextic.derivative("z")),
    ]


def case_b_checks(mutate: bool = False) -> list[IdentityCheck]:
    """The quartic relation between v = y/x and w = z/x, and the (x, z) sextic."""
    ctx = PolyContext("a b b2 c d e D eta v w x y z")
    a, b, b2, c, d, e, Dl, eta, v, w, x, y, z = ctx.gens()
    P = w * w + b * v * v + a * b
    s = v * v + v + a
    H = c * c + eta * P * P + c * P * s
    rel = [("eta", eta + x * s + x * x), ("c", c + x * P)]
    W = quartic_w(a, b, x, y, z)
    homog = c * c * x ** 4 + eta * W * W + c * W * (y * y + x * y + a * x * x) + c * quartic_form(a, b, c, e, x, y, z)
    g1 = y * y + x * y + x ** 3 + a * x * x + Dl
    g2 = z * z + b * y * y + b2 * x * x + c * x + d
    sextic = (
        z ** 4 + b * x * x * z * z + b * b * x ** 6 + (a * a * b * b + b2 * b2 + b * b2) * x ** 4
        + b * c * x ** 3 + (c * c + b * d) * x * x + (d + b * Dl) ** 2
    )
    return [
        _triangular("case-b", "case-b/vw-quartic", H, rel),
        _triangular("case-b", "case-b/homogenized-quartic", homog, [("eta", eta + c * e)]),
        _triangular("case-b", "case-b/sextic", _bump(sextic, mutate, "x", "z"), [("y", g1), ("z", g2)]),
    ]


def _root_context():
    ctx = PolyContext("A B C E x y z")
    return ctx, ctx.gens()


def morphism_checks(mutate: bool = False) -> list[IdentityCheck]:
    """phi lands on the cubic, its two formulas agree, and psi lands on the quartic."""
    ctx, (A, B, C, E, x, y, z) = _root_context()
    a, b, c, e = A * A, B * B, C * C, E * E
    Q = quartic_form(a, b, c, e, x, y, z)
    W = quartic_w(a, b, x, y, z)
    h = e * W + y * y + x * y + a * x * x
    first = (c * x * x, c * x * y, W)
    second = (x * h, y * h, x ** 3)
    G = cubic_form(A, C * E, x, y, z)
    psi_img = (x * x, y * y, B * y * y + A * B * x * x + C * x * z)
    out = [
        _explicit("morphisms", "morphisms/phi-first",
                  _bump(cubic_form(a, c * e, *first), mutate, "x", "y", "z"), [Q], [c * c * x * x]),
        _explicit("morphisms", "morphisms/phi-second", cubic_form(a, c * e, *second), [Q], [e * x ** 3 * h]),
    ]
    cross = (
        first[1] * second[2] + first[2] * second[1],
        first[2] * second[0] + first[0] * second[2],
        first[0] * second[1] + first[1] * second[0],
    )
    for label, comp, q in zip("xyz", cross, (y, x, ctx.zero())):
        out.append(_explicit("morphisms", f"morphisms/phi-agree-{label}", comp, [Q], [q]))
    out.append(_explicit("morphisms", "morphisms/psi", quartic_form(a, b, c, e, *psi_img), [G], [c * x * x * G]))
    return out


def frobenius_checks(mutate: bool = False) -> list[IdentityCheck]:
    """phi after psi, and psi (squared parameters) after phi, both square the coordinates."""
    ctx, (A, B, C, E, x, y, z) = _root_context()
    a, b, c = A * A, B * B, C * C
    X, Y, Z = x * x, y * y, B * y * y + A * B * x * x + C * x * z
    phi_psi = (c * X * X, c * X * Y, quartic_w(a, b, X, Y, Z))
    U, V, T = c * x * x, c * x * y, quartic_w(a, b, x, y, z)
    psi_phi = (U * U, V * V, b * V * V + a * b * U * U + c * U * T)
    out = []
    for label, comp, sq in zip("xyz", phi_psi, (x, y, z)):
        target = comp + c * x * x * sq * sq
        if label == "z":
            target = _bump(target, mutate, "z")
        out.append(_zero("frobenius", f"frobenius/phi-psi-{label}", target))
    for label, comp, sq in zip("xyz", psi_phi, (x, y, z)):
        out.append(_zero("frobenius", f"frobenius/psi-phi-{label}", comp + c * c * x * x * sq * sq))
    return out


def strangeness_checks(mutate: bool = False) -> list[IdentityCheck]:
    ctx = PolyContext("a b c e x y z")
    a, b, c, e, x, y, z = ctx.gens()
    Q = _bump(quartic_form(a, b, c, e, x, y, z), mutate, "x", "x", "x", "z")
    return [_zero("strangeness", "strangeness/dQ-dz", Q.derivative("z"))]


def pencil_checks(mutate: bool = False) -> list[IdentityCheck]:
    """The pencil s t x^4 + (s z^2 + t y^2)(s z^2 + t x y) at (s, t) = (1, b) against Q_(0, b, 1, e)."""
    ctx = PolyContext("b e x y z")
    b, e, x, y, z = ctx.gens()
    surface = b * x ** 4 + (z * z + b * y * y) * (z * z + b * x * y)
    diff = _bump(surface + b * quartic_form(0, b, 1, e, x, y, z), mutate, "x", "y", "z", "z")
    W = quartic_w(0, b, x, y, z)
    return [_explicit("pencil", "pencil/specialization", diff, [b * e + 1], [W * W])]


def birational_checks(mutate: bool = False) -> list[IdentityCheck]:
    """(t x^2 y^3 : s x^5 : t y^4 z) in the chart x = s = 1, t = b.

    With u = b y^3 and v = b y^4 z the relation below recovers y, hence z and b,
    from (u, v).
    """
    ctx = PolyContext("b y z")
    b, y, z = ctx.gens()
    S = b + (z * z + b * y * y) * (z * z + b * y)
    u, v = b * y ** 3, b * y ** 4 * z
    inv = y * u ** 3 * (u ** 3 + u * u + v * v) + v * v * (v * v + u ** 3)
    gens = [("z", S)]
    out = [_triangular("birational", "birational/inverse", _bump(inv, mutate, "y"), gens)]
    for label, coord in zip("uvw", (u, ctx.one(), v)):
        out.append(_nonmember("birational", f"birational/nonvanishing-{label}", coord, gens))
    return out


_BUILDERS = {
    "case-a": case_a_checks,
    "case-b": case_b_checks,
    "morphisms": morphism_checks,
    "frobenius": frobenius_checks,
    "strangeness": strangeness_checks,
    "pencil": pencil_checks,
    "birational": birational_checks,
}


def family_checks(family: str, mutate: bool = False) -> list[IdentityCheck]:
    return _BUILDERS[family](mutate)


def verify_symbolic_suite(seed: int = 0, points: int = 20, mutate: str | None = None) -> SuiteResult:
    """Run all seven families; ``mutate`` names one family whose main target is perturbed."""
    if mutate is not None and mutate not in _BUILDERS:
        raise KeyError(mutate)
    rng = random.Random(seed)
    checks = []
    for fam in FAMILIES:
        checks.extend(_BUILDERS[fam](fam == mutate))
    res = SuiteResult(checks)
    for c in checks:
        res.numeric[c.name] = c.numeric_check(rng, points)
    return res
