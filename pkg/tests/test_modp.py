import random
from itertools import product

import pytest

from q8origami.polyring import parse
from q8origami.resolvent import modp
from q8origami.resolvent.galois import (
    factor_search_evidence, frobenius_report, hensel_lift, integer_coeffs, irreducibility_evidence,
    irreducible_over_quadratic, is_irreducible_mod, subset_sums,
)


def brute_roots(f, p):
    return [x for x in range(p) if modp.evaluate(f, x, p) == 0]


def brute_irreducible_count(d, p):
    # number of monic irreducibles of degree d over F_p via Gauss's formula
    from q8origami.exactnum import factor
    def mobius(n):
        if n == 1:
            return 1
        f = dict(factor(n).factors)
        return 0 if any(e > 1 for e in f.values()) else (-1) ** len(f)
    return sum(mobius(d // k) * p**k for k in range(1, d + 1) if d % k == 0) // d


def test_divmod_and_gcd():
    p = 13
    f = modp.mul([1, 1], [2, 0, 1], p)
    q, r = modp.divmod_(f, [1, 1], p)
    assert q == [2, 0, 1] and r == []
    assert modp.gcd(f, modp.mul([1, 1], [5, 1], p), p) == [1, 1]
    with pytest.raises(ZeroDivisionError):
        modp.divmod_(f, [], p)


def test_ext_gcd_bezout():
    rng = random.Random(3)
    p = 31
    for _ in range(20):
        f = modp.trim([rng.randrange(p) for _ in range(6)])
        g = modp.trim([rng.randrange(p) for _ in range(4)])
        if not f or not g:
            continue
        d, s, t = modp.ext_gcd(f, g, p)
        assert modp.add(modp.mul(s, f, p), modp.mul(t, g, p), p) == d
        assert d == modp.gcd(f, g, p)


def test_roots_match_brute_force():
    rng = random.Random(5)
    for p in (7, 31, 101):
        for _ in range(10):
            f = modp.trim([rng.randrange(p) for _ in range(6)] + [1])
            assert modp.roots(f, p) == brute_roots(f, p)


def test_factor_product_and_degrees():
    rng = random.Random(8)
    p = 17
    for _ in range(20):
        f = [rng.randrange(p) for _ in range(7)] + [1]
        if not modp.is_squarefree(f, p):
            continue
        fs = modp.factor(f, p)
        acc = [1]
        for g in fs:
            acc = modp.mul(acc, g, p)
            assert modp.degree_multiset(g, p) == (modp.degree(g),)
        assert acc == f
        assert tuple(sorted(modp.degree(g) for g in fs)) == modp.degree_multiset(f, p)


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (3, 3), (5, 2)])
def test_degree_multiset_counts_irreducibles(p, d):
    count = 0
    for tail in product(range(p), repeat=d):
        f = list(tail) + [1]
        if f[0] and modp.degree_multiset(f, p) == (d,):
            count += 1
    # every irreducible of degree > 1 has nonzero constant term
    assert count == brute_irreducible_count(d, p)


def test_reduce_coeffs():
    from fractions import Fraction
    assert modp.reduce_coeffs([Fraction(1, 2), 3, 0], 7) == [4, 3]
    with pytest.raises(ZeroDivisionError):
        modp.reduce_coeffs([Fraction(1, 7)], 7)


def test_subset_sums():
    assert subset_sums((2, 2, 4, 4)) == {0, 2, 4, 6, 8, 10, 12}
    assert subset_sums((12,)) == {0, 12}


def test_irreducibility_evidence():
    assert irreducibility_evidence(parse("x^5 - x - 1")).proved
    ev = irreducibility_evidence(parse("(x^2 + 1)*(x^3 - 2)"))
    assert not ev.proved and {2, 3} <= ev.possible_factor_degrees
    # x^4 + 1 splits modulo every prime, so degree sets cannot prove it
    assert not irreducibility_evidence(parse("x^4 + 1")).proved


def test_factor_search_evidence():
    assert factor_search_evidence(parse("x^4 + 1")).proved
    assert factor_search_evidence(parse("x^4 - 10*x^2 + 1")).proved
    assert not factor_search_evidence(parse("(x^2 - 3*x + 7)*(x^2 + 5*x - 11)")).proved


def test_hensel_lift_is_exact_modulo_power():
    f = integer_coeffs([-2, 0, 0, 0, 1])  # x^4 - 2
    p = 7
    fs = modp.factor([c % p for c in f], p)
    A, B = fs[0], [1]
    for g in fs[1:]:
        B = modp.mul(B, g, p)
    LA, LB, m = hensel_lift(f, A, B, p, 10**30)
    assert m > 10**30
    prod = [0] * (len(LA) + len(LB) - 1)
    for i, a in enumerate(LA):
        for j, b in enumerate(LB):
            prod[i + j] += a * b
    assert all((prod[i] - f[i]) % m == 0 for i in range(len(f)))


def test_irreducible_over_quadratic():
    # x^2 - 2 is irreducible over Q(sqrt 3) but not over Q(sqrt 2)
    assert irreducible_over_quadratic(parse("x^2 - 2"), 3).proved
    assert not irreducible_over_quadratic(parse("x^2 - t^2"), 2).proved


def test_frobenius_report_and_irreducible_mod():
    rep = frobenius_report(parse("x^3 - 2"), 30)
    assert len(rep.rows) == 30 and 2 in rep.skipped and 3 in rep.skipped
    assert rep.multisets() <= {(1, 2), (3,), (1, 1, 1)}
    assert rep.within([(1, 2), (3,), (1, 1, 1)])
    assert is_irreducible_mod(parse("x^2 + 1"), 7)
    with pytest.raises(ValueError):
        frobenius_report(parse("(x - 1)^2"))
