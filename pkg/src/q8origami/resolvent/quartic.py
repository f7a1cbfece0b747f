"""Resolvents of a monic quartic r and of the octic r(x^2).

For roots r1..r4 of r, write s1..s6 for the six pairwise products arranged
so that s1*s2 = s3*s4 = s5*s6 = r1*r2*r3*r4. The two-set resolvent k has
roots s1..s6; the degree-12 resolvent h has the 12 roots s_i + s_j + s_l
where the triple contains exactly one complementary pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..elimination import discriminant, resultant
from ..forms import form
from ..polyring import MultiPoly, RewriteRule, divrem, from_univariate, reduce, var


@dataclass(frozen=True)
class Quartic:
    """Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0."""

    c3: MultiPoly
    c2: MultiPoly
    c1: MultiPoly
    c0: MultiPoly

    def __post_init__(self):
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, MultiPoly.lift(getattr(self, name)))

    @classmethod
    def symbolic(cls) -> "Quartic":
        return cls(var("c3"), var("c2"), var("c1"), var("c0"))

    @classmethod
    def from_poly(cls, p: MultiPoly, v: str = "x") -> "Quartic":
        cs = p.coeffs(v)
        if len(cs) != 5:
            raise ValueError(f"expected a quartic in {v}, got degree {len(cs) - 1}")
        lead = cs[4]
        if not lead.is_constant():
            raise ValueError("leading coefficient must be a constant")
        if lead != 1:
            cs = [c / lead for c in cs]
        return cls(cs[3], cs[2], cs[1], cs[0])

    @classmethod
    def from_roots(cls, roots) -> "Quartic":
        x = var("x")
        p = MultiPoly.const(1)
        for r in roots:
            p = p * (x - MultiPoly.lift(r))
        return cls.from_poly(p)

    @property
    def is_numeric(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return (self.c3, self.c2, self.c1, self.c0)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c.constant_value()) for c in self.coeffs)

    @property
    def elementary(self) -> tuple[MultiPoly, ...]:
        """e1..e4 of the roots."""
        return (-self.c3, self.c2, -self.c1, self.c0)

    def substitution(self) -> dict[str, MultiPoly]:
        """Map from c0..c3 and e1..e4 symbols to this quartic's values."""
        e1, e2, e3, e4 = self.elementary
        return {"c3": self.c3, "c2": self.c2, "c1": self.c1, "c0": self.c0,
                "e1": e1, "e2": e2, "e3": e3, "e4": e4}

    def as_poly(self, v: str = "x") -> MultiPoly:
        return from_univariate([self.c0, self.c1, self.c2, self.c3, 1], v)

    def octic(self, v: str = "x") -> MultiPoly:
        """r(x^2)."""
        x = var(v)
        return self.as_poly(v).substitute(v, x**2)

    def scaled(self, lam) -> "Quartic":
        """lam^4 r(x / lam), whose roots are lam times those of r."""
        lam = MultiPoly.lift(lam)
        return Quartic(self.c3 * lam, self.c2 * lam**2, self.c1 * lam**3, self.c0 * lam**4)


def two_set_resolvent(r: Quartic, v: str = "x") -> MultiPoly:
    """Degree-6 polynomial whose roots are the products r_i r_j (i < j)."""
    c3, c2, c1, c0 = r.coeffs
    cs = [
        c0**3,
        -(c0**2) * c2,
        c0 * (c1 * c3 - c0),
        -c0 * (c3**2 - 2 * c2) - c1**2,
        c1 * c3 - c0,
        -c2,
        MultiPoly.const(1),
    ]
    return from_univariate(cs, v)


def resolvent_cubic(r: Quartic, v: str = "t") -> MultiPoly:
    """Cubic with roots r1 r2 + r3 r4, r1 r3 + r2 r4, r1 r4 + r2 r3."""
    c3, c2, c1, c0 = r.coeffs
    cs = [-(c3**2 * c0 - 4 * c2 * c0 + c1**2), c1 * c3 - 4 * c0, -c2, MultiPoly.const(1)]
    return from_univariate(cs, v)


@dataclass(frozen=True)
class QuadraticPair:
    """p1 = x^2 - sum1 x + product1 and p2 = x^2 - sum2 x + product2."""

    sum1: MultiPoly
    product1: MultiPoly
    sum2: MultiPoly
    product2: MultiPoly

    @property
    def p1(self) -> MultiPoly:
        x = var("x")
        return x**2 - self.sum1 * x + self.product1

    @property
    def p2(self) -> MultiPoly:
        x = var("x")
        return x**2 - self.sum2 * x + self.product2

    @property
    def d1(self) -> MultiPoly:
        return self.sum1**2 - 4 * self.product1

    @property
    def d2(self) -> MultiPoly:
        return self.sum2**2 - 4 * self.product2


def p1_p2(r: Quartic) -> QuadraticPair:
    """The quadratics p1, p2 from the symmetric-function formulas."""
    sub = r.substitution()
    sum1 = form("SUM1").compose(sub)
    sum2 = form("SUM2").compose(sub)
    product2 = form("PRODUCT2").compose(sub)
    product1 = form("G2").compose(sub) - sum2 * form("PRODUCT1_COFACTOR").compose(sub)
    return QuadraticPair(sum1, product1, sum2, product2)


def degree12_resolvent(r: Quartic, v: str = "x") -> MultiPoly:
    """h(x) = Res_t(RC(t), q_t(x - t)), with RC the resolvent cubic and
    q_t(y) = k(y) / (y^2 - t y + c0) computed in Q[t]/RC(t)."""
    t, y, x = var("t"), var("y"), var(v)
    for c in r.coeffs:
        if {"t", "y", v} & set(c.variables()):
            raise ValueError("quartic coefficients must not involve t, y or the output variable")
    rc = resolvent_cubic(r, "t")
    rule = RewriteRule("t", 3, t**3 - rc)
    k = two_set_resolvent(r, "y")
    quo, rem = divrem(k, y**2 - t * y + r.c0, "y")
    quo = reduce(quo, rule)
    if reduce(rem, rule):
        raise ArithmeticError("k is not divisible by y^2 - t y + c0 modulo the resolvent cubic")
    shifted = reduce(quo.substitute("y", x - t), rule)
    if shifted.degree("t") < 1:
        return shifted**3
    return resultant(rc, shifted, "t")


def octic_discriminant(r: Quartic) -> MultiPoly:
    """Discriminant of r(x^2)."""
    return discriminant(r.octic("x"), "x")


@dataclass(frozen=True)
class ResolventBundle:
    k: MultiPoly
    p1: MultiPoly
    p2: MultiPoly
    h: MultiPoly
    D: MultiPoly
    d1: MultiPoly
    d2: MultiPoly
    pair: QuadraticPair


def resolvent_bundle(r: Quartic) -> ResolventBundle:
    pair = p1_p2(r)
    return ResolventBundle(
        k=two_set_resolvent(r),
        p1=pair.p1,
        p2=pair.p2,
        h=degree12_resolvent(r),
        D=octic_discriminant(r),
        d1=pair.d1,
        d2=pair.d2,
        pair=pair,
    )


@lru_cache(maxsize=1)
def generic_degree12_resolvent() -> MultiPoly:
    """h with c0..c3 left symbolic."""
    return degree12_resolvent(Quartic.symbolic())


def common_sextic(h: MultiPoly, v: str = "x") -> MultiPoly:
    """The monic S = x^6 + s5 x^5 + ... + s2 x^2 with h - S^2 of degree < 8.

    When h = (S + v1 x + v3)(S + v2 x + v4), this recovers S from the four
    leading coefficients of h.
    """
    hc = h.coeffs(v)
    if len(hc) != 13:
        raise ValueError("expected a degree-12 polynomial")
    lead = [hc[12 - i] for i in range(5)]  # coefficients of x^12 .. x^8
    if lead[0] != 1:
        raise ValueError("expected a monic polynomial")
    s5 = lead[1] / 2
    s4 = (lead[2] - s5**2) / 2
    s3 = (lead[3] - 2 * s5 * s4) / 2
    s2 = (lead[4] - 2 * s5 * s3 - s4**2) / 2
    return from_univariate([0, 0, s2, s3, s4, s5, 1], v)
