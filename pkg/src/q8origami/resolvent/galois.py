"""Galois-group certificates for small degrees, Frobenius cycle-type
evidence, and the Hol(Q8) versus S2 wr S4 test for octics r(x^2)."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce as fold
from math import gcd, isqrt, lcm
from typing import Any

from ..elimination import discriminant
from ..exactnum import (
    factor, is_square, next_prime, primes_from, same_square_class, squarefree_part,
)
from ..polyring import MultiPoly, from_univariate, var
from . import modp
from .quartic import Quartic, p1_p2, resolvent_cubic


def univariate_coeffs(p: MultiPoly, v: str = "x") -> list[Fraction]:
    """Rational coefficients of a univariate polynomial, lowest degree first."""
    others = set(p.variables()) - {v}
    if others:
        raise ValueError(f"expected a polynomial in {v} only, found {sorted(others)}")
    return [Fraction(c.constant_value()) for c in p.coeffs(v)]


def _as_coeffs(f, v: str = "x") -> list[Fraction]:
    if isinstance(f, MultiPoly):
        return univariate_coeffs(f, v)
    if isinstance(f, Quartic):
        return univariate_coeffs(f.as_poly("x"), "x")
    out = [Fraction(c) for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def integer_coeffs(coeffs: list[Fraction]) -> list[int]:
    """Primitive integer multiple of a rational coefficient list."""
    den = fold(lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = fold(gcd, ints, 0) or 1
    if ints[-1] < 0:
        g = -g
    return [i // g for i in ints]


def _eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(f, v: str = "x") -> list[Fraction]:
    """Distinct rational roots.

    The polynomial is made monic and integral by x = y / L (L the leading
    coefficient), so rational roots become integer roots bounded by the
    Cauchy bound B. Roots modulo a prime above 2B then pin them down exactly.
    """
    coeffs = _as_coeffs(f, v)
    roots: set[Fraction] = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    n = len(coeffs) - 1
    if n < 1:
        return sorted(roots)
    ints = integer_coeffs(coeffs)
    lead = ints[-1]
    monic = [ints[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    bound = 1 + max(abs(c) for c in monic[:-1])
    p = next_prime(2 * bound + 1)
    for res in modp.roots([c % p for c in monic], p):
        y = res if res <= p // 2 else res - p
        if _eval(monic, y) == 0:
            roots.add(Fraction(y, lead))
    return sorted(roots)


class CubicGroup(enum.Enum):
    S3 = "S3"
    C3 = "C3"
    REDUCIBLE = "REDUCIBLE"


def cubic_group(f, v: str = "x") -> CubicGroup:
    coeffs = _as_coeffs(f, v)
    if len(coeffs) != 4:
        raise ValueError("expected a cubic")
    if rational_roots(coeffs):
        return CubicGroup.REDUCIBLE
    disc = discriminant(from_univariate(coeffs, "x"), "x").constant_value()
    return CubicGroup.C3 if is_square(disc) else CubicGroup.S3


def cubic_galois(a, b) -> CubicGroup:
    """Galois group of x^3 + a x + b over Q."""
    return cubic_group([Fraction(b), Fraction(a), Fraction(0), Fraction(1)])


@dataclass(frozen=True)
class QuarticVerdict:
    is_s4: bool
    reason: str

    @property
    def group(self) -> str:
        return "S4" if self.is_s4 else "NOT_S4"


def quartic_galois(f, v: str = "x") -> QuarticVerdict:
    """S4 certificate: no rational root, resolvent cubic without rational
    root, and non-square discriminant."""
    coeffs = _as_coeffs(f, v)
    if len(coeffs) != 5:
        raise ValueError("expected a quartic")
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    if rational_roots(coeffs):
        return QuarticVerdict(False, "quartic has a rational root")
    q = Quartic(coeffs[3], coeffs[2], coeffs[1], coeffs[0])
    if rational_roots(resolvent_cubic(q, "t"), "t"):
        return QuarticVerdict(False, "resolvent cubic has a rational root")
    disc = discriminant(from_univariate(coeffs, "x"), "x").constant_value()
    if is_square(disc):
        return QuarticVerdict(False, "discriminant is a square")
    return QuarticVerdict(True, "irreducible resolvent cubic and non-square discriminant")


# modular evidence --------------------------------------------------------

def _good_primes(ints: list[int], disc: int, start: int = 3):
    lead = ints[-1]
    for p in primes_from(start):
        if lead % p and disc % p:
            yield p


def _integer_discriminant(ints: list[int]) -> int:
    return int(discriminant(from_univariate(ints, "x"), "x").constant_value())


def subset_sums(degrees) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


@dataclass
class IrreducibilityEvidence:
    proved: bool
    possible_factor_degrees: set[int]
    primes_used: list[int]


def irreducibility_evidence(f, v: str = "x", max_primes: int = 60) -> IrreducibilityEvidence:
    """Degree-set test: a factor over Q of degree m must show up as a subset
    sum of the factor degrees modulo every good prime. If only 0 and deg f
    survive, f is irreducible."""
    coeffs = _as_coeffs(f, v)
    ints = integer_coeffs(coeffs)
    n = len(ints) - 1
    disc = _integer_discriminant(ints)
    if disc == 0:
        return IrreducibilityEvidence(False, set(range(n + 1)), [])
    possible = set(range(n + 1))
    used = []
    for p in _good_primes(ints, disc):
        if len(used) >= max_primes:
            break
        used.append(p)
        possible &= subset_sums(modp.degree_multiset([c % p for c in ints], p))
        if possible <= {0, n}:
            return IrreducibilityEvidence(True, possible, used)
    return IrreducibilityEvidence(False, possible, used)


def irreducible_over_quadratic(f: MultiPoly, D, v: str = "x", t: str = "t",
                               max_primes: int = 60) -> IrreducibilityEvidence:
    """Degree-set test for f over Q(sqrt D), with ``t`` standing for sqrt D.

    At a prime p where D is a nonzero square, reducing t to a square root of
    D mod p sends Q(sqrt D)[x] factorizations to F_p[x] factorizations, so
    the same subset-sum argument applies.
    """
    D = Fraction(D)
    cs = f.coeffs(v)
    n = len(cs) - 1
    den = fold(lcm, (Fraction(c).denominator for cc in cs for _, c in cc.terms()), 1)
    ints = [[(e.get(t, 0), int(c * den)) for e, c in cc.terms()] for cc in cs]
    possible = set(range(n + 1))
    used = []
    for p in primes_from(3):
        if len(used) >= max_primes:
            break
        if D.numerator % p == 0 or D.denominator % p == 0 or den % p == 0:
            continue
        dp = D.numerator * pow(D.denominator, -1, p) % p
        if pow(dp, (p - 1) // 2, p) != 1:
            continue
        root = modp.roots([-dp % p, 0, 1], p)[0]
        fp = [sum(c * pow(root, k, p) for k, c in terms) % p for terms in ints]
        if fp[-1] == 0 or not modp.is_squarefree(fp, p):
            continue
        used.append(p)
        possible &= subset_sums(modp.degree_multiset(fp, p))
        if possible <= {0, n}:
            return IrreducibilityEvidence(True, possible, used)
    return IrreducibilityEvidence(False, possible, used)


def _zmul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _centered(f, m):
    return [c % m if c % m <= m // 2 else c % m - m for c in f]


def hensel_lift(f: list[int], A: list[int], B: list[int], p: int, bound: int):
    """Lift f = A B mod p (f monic integral, A, B monic and coprime mod p)
    to f = A B mod p^k with p^k > bound. Returns (A, B, p^k)."""
    _, s, t = modp.ext_gcd(A, B, p)
    A, B, m = list(A), list(B), p
    while m <= bound:
        prod = _zmul(A, B)
        err = [((f[i] if i < len(f) else 0) - (prod[i] if i < len(prod) else 0)) // m % p
               for i in range(len(f))]
        err = modp.trim(err)
        q, r = modp.divmod_(modp.mul(t, err, p), A, p)
        dB = modp.add(modp.mul(s, err, p), modp.mul(q, B, p), p)
        A = [(A[i] if i < len(A) else 0) + m * (r[i] if i < len(r) else 0) for i in range(len(A))]
        B = [(B[i] if i < len(B) else 0) + m * (dB[i] if i < len(dB) else 0) for i in range(len(B))]
        m *= p
        A, B = [c % m for c in A], [c % m for c in B]
    return A, B, m


def _divides(g: list[int], f: list[int]) -> bool:
    """Does the monic integer polynomial g divide f over Z?"""
    f = list(f)
    dg = len(g) - 1
    for i in range(len(f) - 1 - dg, -1, -1):
        c = f[i + dg]
        if c:
            for j in range(dg + 1):
                f[i + j] -= c * g[j]
    return not any(f[:dg])


def factor_search_evidence(f, v: str = "x", max_primes: int = 60) -> IrreducibilityEvidence:
    """Irreducibility proof for a monic integral polynomial by exhaustive
    recombination: degree sets mod good primes narrow the possible factor
    degrees, then at one prime every product of modular factors of an
    allowed degree is Hensel-lifted past the coefficient bound and tried as
    an exact divisor over Z."""
    from itertools import combinations

    ev = irreducibility_evidence(f, v, max_primes)
    if ev.proved or not ev.primes_used:
        return ev
    ints = integer_coeffs(_as_coeffs(f, v))
    if ints[-1] != 1:
        return ev
    n = len(ints) - 1
    degs = sorted(d for d in ev.possible_factor_degrees if 0 < d <= n // 2)
    # the prime with the fewest modular factors keeps the search smallest
    p = min(ev.primes_used, key=lambda q: len(modp.degree_multiset([c % q for c in ints], q)))
    factors = modp.factor([c % p for c in ints], p)
    norm = isqrt(sum(c * c for c in ints)) + 1
    bound = 2 * 2**n * norm
    for size in range(1, len(factors) // 2 + 1):
        for pick in combinations(range(len(factors)), size):
            A = [1]
            for i in pick:
                A = modp.mul(A, factors[i], p)
            if len(A) - 1 not in degs and n - (len(A) - 1) not in degs:
                continue
            B = [1]
            for i in range(len(factors)):
                if i not in pick:
                    B = modp.mul(B, factors[i], p)
            LA, LB, m = hensel_lift(ints, A, B, p, bound)
            if _divides(_centered(LA, m), ints) or _divides(_centered(LB, m), ints):
                return IrreducibilityEvidence(False, ev.possible_factor_degrees, ev.primes_used)
    return IrreducibilityEvidence(True, {0, n}, ev.primes_used + [p])


@dataclass
class CycleTypeReport:
    rows: list[tuple[int, tuple[int, ...]]]
    skipped: list[int]

    @property
    def aggregate(self) -> Counter:
        return Counter(m for _, m in self.rows)

    def multisets(self) -> set[tuple[int, ...]]:
        return {m for _, m in self.rows}

    def outside(self, cycle_types) -> set[tuple[int, ...]]:
        return self.multisets() - set(cycle_types)

    def within(self, cycle_types) -> bool:
        return not self.outside(cycle_types)

    def to_dict(self) -> dict[str, Any]:
        agg = self.aggregate
        return {
            "rows": [{"prime": p, "degree_multiset": list(m)} for p, m in self.rows],
            "aggregate": {" ".join(map(str, m)): agg[m] for m in sorted(agg)},
            "skipped": list(self.skipped),
        }


def frobenius_report(f, prime_count: int = 200, v: str = "x") -> CycleTypeReport:
    """Factor-degree multisets of f modulo the first ``prime_count`` primes
    that divide neither the discriminant nor the leading coefficient."""
    coeffs = _as_coeffs(f, v)
    ints = integer_coeffs(coeffs)
    disc = _integer_discriminant(ints)
    if disc == 0:
        raise ValueError("frobenius_report needs a squarefree polynomial")
    rows, skipped = [], []
    p = 1
    while len(rows) < prime_count:
        p = next_prime(p)
        if ints[-1] % p == 0 or disc % p == 0:
            skipped.append(p)
            continue
        rows.append((p, modp.degree_multiset([c % p for c in ints], p)))
    return CycleTypeReport(rows, skipped)


def is_irreducible_mod(f, p: int, v: str = "x") -> bool:
    ints = integer_coeffs(_as_coeffs(f, v))
    return modp.degree_multiset([c % p for c in ints], p) == (len(ints) - 1,)


# the octic classification --------------------------------------------------

class Verdict(enum.Enum):
    HOL_Q8_COMPATIBLE = "HOL_Q8_COMPATIBLE"
    WREATH = "WREATH"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Classification:
    verdict: Verdict
    reasons: list[str] = field(default_factory=list)
    D: Fraction | None = None
    d1: Fraction | None = None
    d2: Fraction | None = None
    squarefree: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        def fmt(q):
            return None if q is None else str(q)

        return {
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
            "D": fmt(self.D),
            "d1": fmt(self.d1),
            "d2": fmt(self.d2),
            "squarefree_parts": dict(self.squarefree),
        }


def classify_octic(r: Quartic) -> Classification:
    """Decide whether the Galois group of r(x^2) is compatible with Hol(Q8)
    or is the full S2 wr S4, by comparing the quadratic fields of D, d1, d2.
    """
    if not r.is_numeric:
        raise ValueError("classification needs rational coefficients")
    octic = r.octic("x")
    reasons: list[str] = []
    cubic = cubic_group(resolvent_cubic(r, "t"), "t")
    if cubic is not CubicGroup.S3:
        return Classification(Verdict.INCONCLUSIVE, [f"resolvent cubic group is {cubic.value}, not S3"])
    ev = irreducibility_evidence(octic)
    if not ev.proved:
        return Classification(Verdict.INCONCLUSIVE, [
            "could not certify that r(x^2) is irreducible "
            f"(possible factor degrees {sorted(ev.possible_factor_degrees)})"])
    reasons.append(f"r(x^2) irreducible: degree sets modulo primes {ev.primes_used}")
    D = Fraction(discriminant(octic, "x").constant_value())
    if is_square(D):
        return Classification(Verdict.INCONCLUSIVE, ["disc(r(x^2)) is a square"], D=D)
    pair = p1_p2(r)
    d1 = Fraction(pair.d1.constant_value())
    d2 = Fraction(pair.d2.constant_value())
    if d1 * d2 == 0:
        return Classification(Verdict.INCONCLUSIVE, ["degenerate: d1 * d2 = 0"], D=D, d1=d1, d2=d2)
    if is_square(d1) or is_square(d2):
        return Classification(Verdict.INCONCLUSIVE,
                              ["d1 or d2 is a rational square, so h already splits over Q"],
                              D=D, d1=d1, d2=d2)
    same1 = same_square_class(d1, D)
    same2 = same_square_class(d2, D)
    sq = {}
    try:
        sq = {"D": squarefree_part(D), "d1": squarefree_part(d1), "d2": squarefree_part(d2)}
    except ValueError:
        pass  # the square-class test above does not need factorizations
    if same1 and same2:
        reasons.append("d1, d2 and D define the same quadratic field, so h factors over Q(sqrt D)")
        verdict = Verdict.HOL_Q8_COMPATIBLE
    else:
        reasons.append("d1 or d2 is not in the square class of D, so h stays irreducible over Q(sqrt D)")
        verdict = Verdict.WREATH
    return Classification(verdict, reasons, D=D, d1=d1, d2=d2, squarefree=sq)


def factored(q) -> str:
    q = Fraction(q)
    s = factor(q.numerator).render()
    if q.denominator != 1:
        s += " / " + factor(q.denominator).render()
    return s


__all__ = [
    "CubicGroup", "QuarticVerdict", "CycleTypeReport", "Verdict", "Classification",
    "rational_roots", "cubic_galois", "cubic_group", "quartic_galois",
    "irreducibility_evidence", "irreducible_over_quadratic", "factor_search_evidence", "hensel_lift", "frobenius_report", "classify_octic",
    "univariate_coeffs", "is_irreducible_mod", "factored",
]
