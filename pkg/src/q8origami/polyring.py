"""Sparse multivariate polynomials over Q with a fixed symbol universe.

Monomials are packed into a single Python int, one 12-bit field per symbol,
with the highest-precedence symbol in the most significant field. Integer
comparison of packed keys is then exactly the lexicographic term order
x > y > alpha > w > z > a > b > (auxiliary symbols).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exactnum import as_rational, factor

# Precedence order, highest first. The trailing symbols are auxiliaries for
# resolvent work: t is the resolvent-cubic variable, c0..c3 quartic
# coefficients, e1..e4 elementary symmetric values, v1..v4 roots of p1, p2.
SYMBOLS = (
    "x", "y", "alpha", "w", "z", "a", "b",
    "t", "c3", "c2", "c1", "c0", "e1", "e2", "e3", "e4", "v1", "v2", "v3", "v4",
)
RENDER_ORDER = (
    "c0", "c1", "c2", "c3", "e1", "e2", "e3", "e4", "v1", "v2", "v3", "v4",
    "t", "a", "b", "z", "w", "alpha", "y", "x",
)
ALIASES = {"α": "alpha", "θ": "t"}

_WIDTH = 12
_MASK = (1 << _WIDTH) - 1
_NVARS = len(SYMBOLS)
_MAX_EXP = (1 << (_WIDTH - 1)) - 1
_SHIFT = {s: (_NVARS - 1 - i) * _WIDTH for i, s in enumerate(SYMBOLS)}
_GUARD = sum(1 << (_SHIFT[s] + _WIDTH - 1) for s in SYMBOLS)

Coeff = Union[int, Fraction]


class PolyError(ValueError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class InexactDivision(PolyError):
    """Raised by exact_div; ``remainder`` is a nonzero witness."""

    def __init__(self, remainder: "MultiPoly"):
        super().__init__(f"division is not exact; remainder {remainder}")
        self.remainder = remainder


def _canon(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def symbol_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in _SHIFT:
        raise PolyError(f"unknown symbol {name!r}")
    return name


def _exp(key: int, var: str) -> int:
    return (key >> _SHIFT[var]) & _MASK


def _unpack(key: int) -> dict[str, int]:
    out = {}
    for s in SYMBOLS:
        e = (key >> _SHIFT[s]) & _MASK
        if e:
            out[s] = e
    return out


def _pack(exps: Mapping[str, int]) -> int:
    key = 0
    for s, e in exps.items():
        if e < 0:
            raise PolyError("negative exponent")
        if e > _MAX_EXP:
            raise PolyError(f"exponent {e} exceeds {_MAX_EXP}")
        if e:
            key += e << _SHIFT[symbol_name(s)]
    return key


class MultiPoly:
    """Immutable sparse polynomial: packed monomial -> nonzero rational."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        self._t: dict[int, Coeff] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self._t[k] = _canon(c)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Coeff]) -> "MultiPoly":
        p = object.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_rational(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        return cls._raw({_pack({symbol_name(name): power}): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Coeff]]) -> "MultiPoly":
        d: dict[int, Coeff] = {}
        for exps, c in terms:
            k = _pack(exps)
            d[k] = d.get(k, 0) + as_rational(c)
        return cls({k: c for k, c in d.items() if c})

    @classmethod
    def lift(cls, v) -> "MultiPoly":
        return v if isinstance(v, MultiPoly) else cls.const(v)

    # inspection ---------------------------------------------------------
    def terms(self) -> list[tuple[dict[str, int], Coeff]]:
        """Terms in decreasing lexicographic order."""
        return [(_unpack(k), self._t[k]) for k in sorted(self._t, reverse=True)]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise PolyError(f"{self} is not a constant")
        return self._t.get(0, 0)

    def constant_term(self) -> Coeff:
        return self._t.get(0, 0)

    def variables(self) -> tuple[str, ...]:
        used = 0
        for k in self._t:
            used |= k
        return tuple(s for s in SYMBOLS if (used >> _SHIFT[s]) & _MASK)

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if not self._t:
            return -1
        sh = _SHIFT[symbol_name(var)]
        return max((k >> sh) & _MASK for k in self._t)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(sum(_unpack(k).values()) for k in self._t)

    def leading_term(self) -> tuple[dict[str, int], Coeff]:
        k = max(self._t)
        return _unpack(k), self._t[k]

    def coefficient(self, monomial: Mapping[str, int] | None = None) -> Coeff:
        return self._t.get(_pack(monomial or {}), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._t.values())

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        if len(self._t) < len(other._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        d = dict(big)
        for k, c in small.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = _canon(v)
            else:
                d.pop(k, None)
        return MultiPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = as_rational(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({k: _canon(v * c) for k, v in self._t.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                return self.scale(cb) if b is other._t else other.scale(cb)
            d = {ka + kb: _canon(ca * cb) for ka, ca in a.items()}
            self._check_guard(d)
            return MultiPoly._raw(d)
        d: dict[int, Coeff] = {}
        get = d.get
        bitems = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bitems:
                k = ka + kb
                d[k] = get(k, 0) + ca * cb
        out = {k: _canon(c) for k, c in d.items() if c}
        self._check_guard(out)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    @staticmethod
    def _check_guard(d: dict[int, Coeff]) -> None:
        acc = 0
        for k in d:
            acc |= k
        if acc & _GUARD:
            raise PolyError(f"exponent overflow (max {_MAX_EXP} per symbol)")

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a non-negative integer")
        if n == 0:
            return MultiPoly.const(1)
        if len(self._t) == 1:
            (k, c), = self._t.items()
            if any(e * n > _MAX_EXP for e in _unpack(k).values()):
                raise PolyError(f"exponent overflow (max {_MAX_EXP} per symbol)")
            return MultiPoly._raw({k * n: _canon(c**n)})
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.is_constant() and other:
                return self.scale(Fraction(1) / Fraction(other.constant_value()))
            return exact_div(self, other)
        other = as_rational(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / Fraction(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: _canon(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # univariate views ---------------------------------------------------
    def coeffs(self, var: str) -> list["MultiPoly"]:
        """Coefficients in ``var`` indexed by power (index 0 = constant)."""
        var = symbol_name(var)
        sh = _SHIFT[var]
        buckets: dict[int, dict[int, Coeff]] = {}
        for k, c in self._t.items():
            e = (k >> sh) & _MASK
            buckets.setdefault(e, {})[k - (e << sh)] = c
        if not buckets:
            return [MultiPoly()]
        top = max(buckets)
        return [MultiPoly._raw(buckets[i]) if i in buckets else MultiPoly() for i in range(top + 1)]

    def leading_coeff(self, var: str) -> "MultiPoly":
        return self.coeffs(var)[-1]

    def derivative(self, var: str) -> "MultiPoly":
        var = symbol_name(var)
        sh = _SHIFT[var]
        d = {}
        for k, c in self._t.items():
            e = (k >> sh) & _MASK
            if e:
                d[k - (1 << sh)] = c * e
        return MultiPoly._raw(d)

    # substitution -------------------------------------------------------
    def substitute(self, var: str, value) -> "MultiPoly":
        return self.compose({var: value})

    def compose(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Simultaneous substitution of polynomials (or numbers) for symbols."""
        if not mapping:
            return self
        names = [symbol_name(v) for v in mapping]
        values = {symbol_name(v): MultiPoly.lift(val) for v, val in mapping.items()}
        shifts = [(_SHIFT[v], v) for v in names]
        groups: dict[tuple[int, ...], dict[int, Coeff]] = {}
        for k, c in self._t.items():
            exps = []
            rest = k
            for sh, _ in shifts:
                e = (k >> sh) & _MASK
                exps.append(e)
                rest -= e << sh
            groups.setdefault(tuple(exps), {})[rest] = c
        cache: dict[tuple[str, int], MultiPoly] = {}

        def power(v: str, e: int) -> MultiPoly:
            if e == 0:
                return MultiPoly.const(1)
            hit = cache.get((v, e))
            if hit is None:
                hit = values[v] if e == 1 else power(v, e - 1) * values[v]
                cache[(v, e)] = hit
            return hit

        total: dict[int, Coeff] = {}
        for exps, rest in groups.items():
            part = MultiPoly._raw(rest)
            for (sh, v), e in zip(shifts, exps):
                if e:
                    part = part * power(v, e)
            for k, c in part._t.items():
                total[k] = total.get(k, 0) + c
        return MultiPoly({k: c for k, c in total.items() if c})

    def evaluate(self, mapping: Mapping[str, object]) -> Coeff:
        return self.compose(mapping).constant_value()

    # content ------------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        from math import gcd

        if not self._t:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._t.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # rendering ----------------------------------------------------------
    def render(self, factored: bool = False) -> str:
        return render(self, factored=factored)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)!r})"


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def symbols(names: str) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.var(n) for n in names.replace(",", " ").split())


def const(c) -> MultiPoly:
    return MultiPoly.const(c)


def from_univariate(coeffs: list, var: str) -> MultiPoly:
    """Inverse of ``to_univariate``: sum of coeffs[i] * var^i."""
    out = MultiPoly()
    sh = _SHIFT[symbol_name(var)]
    d: dict[int, Coeff] = {}
    for i, c in enumerate(coeffs):
        c = MultiPoly.lift(c)
        for k, v in c._t.items():
            if (k >> sh) & _MASK:
                raise PolyError(f"coefficient already involves {var}")
            d[k + (i << sh)] = v
    out = MultiPoly._raw(d)
    MultiPoly._check_guard(d)
    return out


def to_univariate(p: MultiPoly, var: str) -> list[MultiPoly]:
    return p.coeffs(var)


def derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.derivative(var)


def substitute(p: MultiPoly, var: str, value) -> MultiPoly:
    return p.substitute(var, value)


# rewriting --------------------------------------------------------------

@dataclass(frozen=True)
class RewriteRule:
    """Rewrites var^power to ``replacement`` (which has lower degree in var)."""

    var: str
    power: int
    replacement: MultiPoly

    def __post_init__(self):
        object.__setattr__(self, "var", symbol_name(self.var))
        object.__setattr__(self, "replacement", MultiPoly.lift(self.replacement))
        if self.power < 1:
            raise PolyError("rule power must be positive")
        if self.replacement.degree(self.var) >= self.power:
            raise PolyError("replacement must have lower degree in the ruled variable")

    def __str__(self) -> str:
        return f"{self.var}^{self.power} -> {self.replacement}"


def _apply_rule(p: MultiPoly, rule: RewriteRule) -> MultiPoly | None:
    sh = _SHIFT[rule.var]
    keep: dict[int, Coeff] = {}
    high: dict[int, dict[int, Coeff]] = {}
    for k, c in p._t.items():
        e = (k >> sh) & _MASK
        if e >= rule.power:
            q, r = divmod(e, rule.power)
            high.setdefault(q, {})[k - ((e - r) << sh)] = c
        else:
            keep[k] = c
    if not high:
        return None
    out = MultiPoly._raw(keep)
    repl_pow = rule.replacement
    for q in range(1, max(high) + 1):
        if q > 1:
            repl_pow = repl_pow * rule.replacement
        if q in high:
            out = out + MultiPoly._raw(high[q]) * repl_pow
    return out


def reduce(p: MultiPoly, rules: Iterable[RewriteRule] | RewriteRule) -> MultiPoly:
    """Normal form of ``p`` modulo the given monic single-variable relations."""
    if isinstance(rules, RewriteRule):
        rules = [rules]
    rules = list(rules)
    if len({r.var for r in rules}) != len(rules):
        raise PolyError("rewrite rules must act on distinct variables")
    changed = True
    while changed:
        changed = False
        for rule in rules:
            nxt = _apply_rule(p, rule)
            if nxt is not None:
                p = nxt
                changed = True
    return p


# division ---------------------------------------------------------------

def _main_var(q: MultiPoly) -> str:
    used = 0
    for k in q._t:
        used |= k
    for s in SYMBOLS:
        if (used >> _SHIFT[s]) & _MASK:
            return s
    raise PolyError("constant divisor has no main variable")


class _NotDivisible(Exception):
    pass


def _div_rec(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if not p:
        return p
    if q.is_constant():
        return p.scale(Fraction(1) / Fraction(q.constant_value()))
    if len(q._t) == 1:
        (kq, cq), = q._t.items()
        inv = Fraction(1) / Fraction(cq)
        d = {}
        for k, c in p._t.items():
            # a borrow out of any field clears that field's guard bit
            if ((k | _GUARD) - kq) & _GUARD != _GUARD:
                raise _NotDivisible
            r = k - kq
            d[r] = _canon(c * inv)
        return MultiPoly._raw(d)
    v = _main_var(q)
    pc = p.coeffs(v)
    qc = q.coeffs(v)
    n = len(qc) - 1
    if len(pc) - 1 < n:
        raise _NotDivisible
    lead = qc[-1]
    rem = list(pc)
    quot = [MultiPoly()] * (len(pc) - n)
    for i in range(len(pc) - 1 - n, -1, -1):
        c = rem[i + n]
        if not c:
            continue
        qi = _div_rec(c, lead)
        quot[i] = qi
        for j in range(n):
            if qc[j]:
                rem[i + j] = rem[i + j] - qi * qc[j]
    if any(rem[j] for j in range(n)):
        raise _NotDivisible
    return from_univariate(quot, v)


def division_remainder(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Remainder of multivariate division of p by q in lex order."""
    lk = max(q._t)
    lc = q._t[lk]
    lexp = _unpack(lk)
    r = p
    rem: dict[int, Coeff] = {}
    while r:
        k = max(r._t)
        c = r._t[k]
        exps = _unpack(k)
        if all(exps.get(s, 0) >= e for s, e in lexp.items()):
            shift = k - lk
            factor_ = MultiPoly._raw({shift: _canon(Fraction(c) / lc)})
            r = r - factor_ * q
        else:
            rem[k] = c
            r = r - MultiPoly._raw({k: c})
    return MultiPoly._raw(rem)


def exact_div(p: MultiPoly, q) -> MultiPoly:
    """Quotient p / q, which must be exact; raises InexactDivision otherwise."""
    q = MultiPoly.lift(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    try:
        return _div_rec(p, q)
    except _NotDivisible:
        pass
    raise InexactDivision(division_remainder(p, q))


def divrem(p: MultiPoly, q: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """Division with remainder in ``var`` by a divisor whose leading
    coefficient in ``var`` is a nonzero constant."""
    qc = q.coeffs(var)
    lead = qc[-1]
    if not lead.is_constant() or not lead:
        raise PolyError("divisor must have a constant leading coefficient")
    inv = Fraction(1) / Fraction(lead.constant_value())
    n = len(qc) - 1
    rem = p.coeffs(var)
    if len(rem) - 1 < n:
        return MultiPoly(), p
    quot = [MultiPoly()] * (len(rem) - n)
    for i in range(len(rem) - 1 - n, -1, -1):
        c = rem[i + n]
        if not c:
            continue
        qi = c.scale(inv)
        quot[i] = qi
        for j in range(n + 1):
            if qc[j]:
                rem[i + j] = rem[i + j] - qi * qc[j]
    return from_univariate(quot, var), from_univariate(rem[:n] or [MultiPoly()], var)


# text form --------------------------------------------------------------

def _monomial_text(exps: Mapping[str, int]) -> str:
    parts = []
    for s in RENDER_ORDER:
        e = exps.get(s, 0)
        if e == 1:
            parts.append(s)
        elif e:
            parts.append(f"{s}^{e}")
    return "*".join(parts)


def _coeff_text(c: Coeff, factored: bool) -> str:
    c = Fraction(c)
    if factored:
        num = factor(c.numerator).render(sep="*")
        if c.denominator == 1:
            return num
        return f"{num}/({factor(c.denominator).render(sep='*')})" if c.denominator != 1 else num
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_terms(p: MultiPoly, factored: bool = False) -> list[str]:
    """Signed term strings in canonical order (first has no leading '+')."""
    out = []
    for exps, c in p.terms():
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial_text(exps)
        if mono and mag == 1:
            body = mono
        else:
            body = _coeff_text(mag, factored)
            if mono:
                if factored and ("*" in body or "/" in body) and Fraction(mag).denominator != 1:
                    body = f"({body})"
                body = f"{body}*{mono}"
        out.append(("-" if neg else "+") + body)
    return out


def render(p: MultiPoly, factored: bool = False, width: int | None = None) -> str:
    """Canonical text form; ``factored`` shows integer coefficients as prime
    powers; ``width`` wraps long output at term boundaries."""
    terms = render_terms(p, factored)
    if not terms:
        return "0"
    pieces = []
    for i, t in enumerate(terms):
        sign, body = t[0], t[1:]
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f"{sign} {body}")
    if width is None:
        return " ".join(pieces)
    lines, cur = [], ""
    for piece in pieces:
        if cur and len(cur) + 1 + len(piece) > width:
            lines.append(cur)
            cur = piece
        else:
            cur = f"{cur} {piece}" if cur else piece
    lines.append(cur)
    return "\n".join(lines)


# parsing ----------------------------------------------------------------

_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("sym", text[i:j], i))
            i = j
        elif ch in _OPS:
            toks.append(("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            kind, val, _ = self.peek()
            if kind in ("int", "sym") or val == "(":
                self.fail("implicit multiplication is not allowed")
            self.fail(f"unexpected token {val!r}")
        return out

    def expr(self) -> MultiPoly:
        out = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> MultiPoly:
        out = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                out = out * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    self.fail("division only by nonzero constants", op_tok)
                out = out.scale(Fraction(1) / Fraction(rhs.constant_value()))
        return out

    def unary(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "int":
                self.take()
                e = int(tok[1])
            elif tok[1] == "(":
                self.take()
                t2 = self.take()
                if t2[0] != "int" or self.peek()[1] != ")":
                    self.fail("exponent must be a non-negative integer", t2)
                self.take()
                e = int(t2[1])
            else:
                self.fail("exponent must be a non-negative integer")
            return base**e
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return MultiPoly.const(int(val))
        if kind == "sym":
            name = ALIASES.get(val, val)
            if name not in _SHIFT:
                raise ParseError(f"unknown symbol {val!r}", pos, self.text)
            return MultiPoly.var(name)
        if val == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos, self.text)


def parse(text: str) -> MultiPoly:
    """Parse an expression over the symbol universe into a MultiPoly."""
    return _Parser(text).parse()

