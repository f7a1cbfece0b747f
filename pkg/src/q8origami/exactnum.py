"""Exact integer and rational helpers: square tests, squarefree parts and
integer factorization used for factored-form reporting.

Arbitrary precision comes from Python's ``int`` and ``fractions.Fraction``;
this module adds the number-theoretic utilities on top of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Rational = Union[int, Fraction]

# Deterministic Miller-Rabin witnesses; correct for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Extra fixed bases used above that bound (probabilistic from there on).
_MR_EXTRA = (43, 47, 53, 59, 61, 67, 71)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 10_000
DEFAULT_EFFORT = 200_000


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)


def as_rational(q) -> Rational:
    """Normalize ints, Fractions and ``"p/q"`` strings to int or Fraction."""
    if isinstance(q, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(q, int):
        return q
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    if isinstance(q, str):
        value = Fraction(q.strip())
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"cannot interpret {q!r} as an exact rational")


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if n < 0:
        raise DomainError("isqrt of a negative number")
    return math.isqrt(n)


def _is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_square(q) -> bool:
    """True iff ``q`` is the square of a rational number."""
    q = Fraction(as_rational(q))
    return _is_square_int(q.numerator) and _is_square_int(q.denominator)


def rational_sqrt(q) -> Fraction:
    """Exact square root of a rational square; raises if ``q`` is not one."""
    q = Fraction(as_rational(q))
    if not is_square(q):
        raise DomainError(f"{q} is not a rational square")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def same_square_class(p, q) -> bool:
    """Whether nonzero rationals p and q differ by a rational square factor.

    This is a factorization-free test: p/q is a square iff p*q is.
    """
    p, q = Fraction(as_rational(p)), Fraction(as_rational(q))
    if p == 0 or q == 0:
        raise DomainError("square classes are defined for nonzero values")
    return is_square(p * q)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin test; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in SMALL_PRIMES[:60]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_LIMIT else _MR_BASES + _MR_EXTRA
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest probable prime strictly greater than n."""
    c = max(n + 1, 2)
    if c > 2 and c % 2 == 0:
        c += 1
    while not is_probable_prime(c):
        c += 1 if c == 2 else 2
    return c


def primes_from(start: int = 2) -> Iterator[int]:
    """Yield the primes >= start in increasing order."""
    p = start - 1
    while True:
        p = next_prime(p)
        yield p


def _brent_rho(n: int, budget: int) -> tuple[int | None, int]:
    """Find a nontrivial factor of composite odd n; returns (factor, work)."""
    used = 0
    for c in range(1, 40):
        y, r, q, g = 2, 1, 1, 1
        m = 64
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            used += r
            r *= 2
            if used > budget:
                return None, used
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g, used
    return None, used


@dataclass(frozen=True)
class FactoredInteger:
    """Signed prime factorization with an honest leftover cofactor."""

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def value(self) -> int:
        out = self.sign * self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def __int__(self) -> int:
        return self.value

    def render(self, sep: str = " * ") -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(str(self.cofactor))
        body = sep.join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body

    def __str__(self) -> str:
        return self.render()


def factor(n: int, effort_bound: int = DEFAULT_EFFORT) -> FactoredInteger:
    """Factor a nonzero integer.

    Trial division handles primes below 10^4, then Brent's rho splits what is
    left. Anything rho cannot split inside ``effort_bound`` iterations ends up
    in ``cofactor``.
    """
    if n == 0:
        raise DomainError("cannot factor zero")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    leftover = 1
    stack = [n] if n > 1 else []
    budget = effort_bound
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d, used = _brent_rho(m, budget) if budget > 0 else (None, 0)
        budget -= used
        if d is None:
            leftover *= m
        else:
            stack.extend((d, m // d))
    return FactoredInteger(sign, tuple(sorted(found.items())), leftover)


def factor_rational(q, effort_bound: int = DEFAULT_EFFORT) -> str:
    """Render a rational as factored numerator over factored denominator."""
    q = Fraction(as_rational(q))
    if q == 0:
        return "0"
    num = factor(q.numerator, effort_bound).render()
    if q.denominator == 1:
        return num
    return f"{num} / ({factor(q.denominator, effort_bound).render()})"


def squarefree_part(q, effort_bound: int = DEFAULT_EFFORT) -> int:
    """The squarefree integer s with q = s * (rational square), sign kept."""
    q = Fraction(as_rational(q))
    if q == 0:
        raise DomainError("squarefree part of zero is undefined")
    n = q.numerator * q.denominator
    f = factor(n, effort_bound)
    s = f.sign
    for p, e in f.factors:
        if e % 2:
            s *= p
    if f.cofactor != 1:
        # An unsplit cofactor is fine when it is a perfect square; otherwise
        # we cannot certify which of its primes appear to odd powers.
        if not _is_square_int(f.cofactor):
            if is_probable_prime(f.cofactor):
                s *= f.cofactor
            else:
                raise DomainError(f"could not factor cofactor {f.cofactor}")
    return s
