"""Resultants and discriminants via fraction-free determinants.

Everything goes through the Sylvester matrix (rows of A first, then rows of
B) so the sign convention is the textbook one: Res(x - u, x - v) = u - v.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactnum import DomainError
from .polyring import MultiPoly, exact_div, symbol_name


@dataclass(frozen=True)
class SylvesterProblem:
    A: MultiPoly
    B: MultiPoly
    var: str
    degA: int
    degB: int

    @classmethod
    def build(cls, A: MultiPoly, B: MultiPoly, var: str) -> "SylvesterProblem":
        var = symbol_name(var)
        A, B = MultiPoly.lift(A), MultiPoly.lift(B)
        # true degrees of the given (possibly specialized) inputs
        degA, degB = A.degree(var), B.degree(var)
        if degA < 1 or degB < 1:
            raise DomainError(f"resultant needs positive degree in {var} (got {degA}, {degB})")
        return cls(A, B, var, degA, degB)

    def matrix(self) -> list[list[MultiPoly]]:
        return sylvester_matrix(self.A, self.B, self.var)


def sylvester_matrix(A: MultiPoly, B: MultiPoly, var: str) -> list[list[MultiPoly]]:
    ac = A.coeffs(var)[::-1]  # leading coefficient first
    bc = B.coeffs(var)[::-1]
    m, n = len(ac) - 1, len(bc) - 1
    size = m + n
    zero = MultiPoly()
    rows = []
    for i in range(n):
        rows.append([zero] * i + ac + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + bc + [zero] * (size - n - 1 - i))
    return rows


def _int_content(p: MultiPoly) -> int:
    g = 0
    for _, c in p._t.items():
        if not isinstance(c, int):
            return 1
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def bareiss_det(matrix: list[list]) -> MultiPoly:
    """Determinant by fraction-free Bareiss elimination.

    Rows that have not served as pivots yet get their integer content pulled
    out (and multiplied back into the result) to keep coefficients small. The
    pivot in each column is the nonzero candidate with the fewest terms.
    """
    M = [[MultiPoly.lift(e) for e in row] for row in matrix]
    n = len(M)
    if n == 0:
        return MultiPoly.const(1)
    if any(len(row) != n for row in M):
        raise DomainError("determinant of a non-square matrix")
    rational = any(not e.is_integral() for row in M for e in row)
    sign = 1
    pulled = Fraction(1)
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if M[i][k]]
        if not candidates:
            return MultiPoly()
        piv = min(candidates, key=lambda i: (len(M[i][k]), i))
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                num = pk * row_i[j]
                if mik and row_k[j]:
                    num = num - mik * row_k[j]
                row_i[j] = exact_div(num, prev) if not prev.is_constant() or prev != 1 else num
            row_i[k] = MultiPoly()
        prev = pk
        if not rational:
            # content stripping on rows below the pivot only; these rows get
            # multiplied by pk again at the next step, which keeps the
            # Bareiss divisions exact.
            for i in range(k + 1, n):
                g = 0
                for j in range(k + 1, n):
                    e = M[i][j]
                    if e:
                        g = gcd(g, _int_content(e))
                        if g == 1:
                            break
                if g > 1:
                    M[i] = [e.scale(Fraction(1, g)) for e in M[i]]
                    pulled *= g
    return M[n - 1][n - 1].scale(pulled * sign)


def resultant(A: MultiPoly, B: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of A and B with respect to ``var``."""
    prob = SylvesterProblem.build(A, B, var)
    return bareiss_det(prob.matrix())


def discriminant(A: MultiPoly, var: str) -> MultiPoly:
    """(-1)^(n(n-1)/2) / a_n * Res(A, A')."""
    var = symbol_name(var)
    A = MultiPoly.lift(A)
    n = A.degree(var)
    if n < 2:
        raise DomainError("discriminant needs degree >= 2")
    res = resultant(A, A.derivative(var), var)
    lead = A.leading_coeff(var)
    out = exact_div(res, lead)
    return -out if (n * (n - 1) // 2) % 2 else out
