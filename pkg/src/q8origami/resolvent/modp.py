"""Dense univariate polynomials over F_p.

Polynomials are lists of ints in [0, p), lowest degree first, with no
trailing zeros. The zero polynomial is the empty list.
"""
from __future__ import annotations

import random
from fractions import Fraction


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def reduce_coeffs(coeffs, p: int) -> list[int]:
    """Map rational coefficients (lowest first) into F_p."""
    out = []
    for c in coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return trim(out)


def degree(f: list[int]) -> int:
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return [], trim(f)
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = f[i + dg] * inv % p
        q[i] = c
        if c:
            for j in range(dg + 1):
                f[i + j] = (f[i + j] - c * g[j]) % p
    return trim(q), trim(f[:dg])


def mod(f, g, p):
    return divmod_(f, g, p)[1]


def gcd(f, g, p):
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def powmod(base, e: int, m, p):
    result = [1]
    base = mod(base, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), m, p)
    return result


def derivative(f, p):
    return trim([i * f[i] % p for i in range(1, len(f))])


def evaluate(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_squarefree(f, p) -> bool:
    return degree(gcd(f, derivative(f, p), p)) == 0


def distinct_degree_factorization(f, p) -> list[tuple[int, list[int]]]:
    """Pairs (d, g) where g is the product of all degree-d irreducible
    factors of the squarefree polynomial f."""
    f = monic(f, p)
    out = []
    h = [0, 1]
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if degree(g) > 0:
            out.append((d, g))
            f = divmod_(f, g, p)[0]
            h = mod(h, f, p)
    if degree(f) > 0:
        out.append((degree(f), f))
    return out


def degree_multiset(f, p) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of squarefree f mod p."""
    degs = []
    for d, g in distinct_degree_factorization(f, p):
        degs.extend([d] * (degree(g) // d))
    return tuple(sorted(degs))


def roots(f, p, seed: int = 0) -> list[int]:
    """All roots of f in F_p (p odd), by Cantor-Zassenhaus splitting."""
    f = monic(trim(list(f)), p)
    if degree(f) < 1:
        return []
    g = gcd(f, sub(powmod([0, 1], p, f, p), [0, 1], p), p)
    rng = random.Random(seed)
    out: list[int] = []
    stack = [g]
    while stack:
        g = stack.pop()
        dg = degree(g)
        if dg == 0:
            continue
        if dg == 1:
            out.append(-g[0] * pow(g[1], -1, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            t = sub(powmod([a, 1], (p - 1) // 2, g, p), [1], p)
            s = gcd(g, t, p)
            if 0 < degree(s) < dg:
                stack.append(s)
                stack.append(divmod_(g, s, p)[0])
                break
    return sorted(out)


def ext_gcd(f, g, p):
    """(d, s, t) with s f + t g = d = gcd(f, g), d monic."""
    r0, r1 = trim(list(f)), trim(list(g))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _equal_degree_split(g, d, p, rng):
    """Split a product of distinct degree-d irreducibles into its factors."""
    if degree(g) == d:
        return [g]
    while True:
        a = trim([rng.randrange(p) for _ in range(degree(g))])
        if degree(a) < 1:
            continue
        t = sub(powmod(a, (p**d - 1) // 2, g, p), [1], p)
        s = gcd(g, t, p)
        if 0 < degree(s) < degree(g):
            return (_equal_degree_split(s, d, p, rng)
                    + _equal_degree_split(divmod_(g, s, p)[0], d, p, rng))


def factor(f, p, seed: int = 0) -> list[list[int]]:
    """Monic irreducible factors of the squarefree polynomial f (p odd)."""
    rng = random.Random(seed)
    out = []
    for d, g in distinct_degree_factorization(f, p):
        out.extend(_equal_degree_split(g, d, p, rng))
    return sorted(out)
