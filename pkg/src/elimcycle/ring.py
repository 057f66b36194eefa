"""Sparse multivariate polynomials over Q.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients. The public ring is Q[x, y, z]; longer exponent tuples are
only used internally (elimination of an auxiliary variable).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import PolySyntaxError, UnknownVariableError

VARS = ("x", "y", "z")
NVARS = 3

Exp = tuple


@lru_cache(maxsize=None)
def grevlex_key(e: Exp):
    """Sort key for graded reverse lexicographic order, x > y > z.

    Keys are flat integer tuples so that negating them reverses the order.
    """
    return (sum(e),) + tuple(-v for v in reversed(e))


@lru_cache(maxsize=None)
def elim_key(e: Exp):
    """Block order eliminating the first variable, grevlex on the rest."""
    return (e[0],) + grevlex_key(e[1:])


def _divides(a: Exp, b: Exp) -> bool:
    return all(i <= j for i, j in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(i, j) for i, j in zip(a, b))


def _sub(a: Exp, b: Exp) -> Exp:
    return tuple(i - j for i, j in zip(a, b))


def _add(a: Exp, b: Exp) -> Exp:
    return tuple(i + j for i, j in zip(a, b))


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int = NVARS) -> "Poly":
        return cls({(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int = NVARS) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, e: Exp, c=1) -> "Poly":
        return cls({tuple(e): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @property
    def nvars(self) -> int:
        for e in self._terms:
            return len(e)
        return NVARS

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c, e: Exp | None = None) -> "Poly":
        """Return c * x^e * self."""
        c = Fraction(c)
        if not c:
            return Poly()
        if e is None:
            return Poly._raw({m: c * v for m, v in self._terms.items()})
        return Poly._raw({_add(m, e): c * v for m, v in self._terms.items()})

    def lead(self, key: Callable = grevlex_key):
        """Leading (exponent, coefficient) under ``key``."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Poly._raw(out)

    def monic(self, key: Callable = grevlex_key) -> "Poly":
        _, c = self.lead(key)
        return self.scale(1 / c)

    def divmod(self, d: "Poly", key: Callable = grevlex_key):
        """Division by a single polynomial; remainder is 0 iff d divides self."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        de, dc = d.lead(key)
        work = dict(self._terms)
        q: dict = {}
        r: dict = {}
        while work:
            e = max(work, key=key)
            c = work[e]
            if _divides(de, e):
                m = _sub(e, de)
                f = c / dc
                q[m] = q.get(m, 0) + f
                for te, tc in d._terms.items():
                    k = _add(te, m)
                    s = work.get(k, 0) - f * tc
                    if s:
                        work[k] = s
                    else:
                        work.pop(k, None)
            else:
                r[e] = c
                del work[e]
        return Poly(q), Poly._raw(r)

    def exact_div(self, d: "Poly") -> "Poly | None":
        q, r = self.divmod(d)
        return None if r else q

    def extend(self, front: int = 1) -> "Poly":
        """Prepend ``front`` zero exponents (adds auxiliary variables)."""
        z = (0,) * front
        return Poly._raw({z + e: c for e, c in self._terms.items()})

    def drop(self, front: int = 1) -> "Poly":
        return Poly._raw({e[front:]: c for e, c in self._terms.items()})

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = VARS if self.nvars == NVARS else tuple(f"v{i}" for i in range(self.nvars))
        parts = []
        for e in sorted(self._terms, key=grevlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly(value) -> Poly:
    """Coerce a string, number or Poly into a Poly."""
    if isinstance(value, Poly):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    return Poly.constant(value)


X, Y, Z = (Poly.var(i) for i in range(NVARS))


def is_local_unit(p: Poly) -> bool:
    """True iff p does not vanish at the origin."""
    return p.constant_term() != 0


def factor_out(den: Poly, t: Poly) -> tuple[int, Poly]:
    """Split den = t**k * residual with t not dividing residual, k maximal."""
    if den.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if t.is_zero() or is_local_unit(t):
        raise ValueError("factor must be a nonzero non-unit")
    k = 0
    while True:
        q = den.exact_div(t)
        if q is None:
            return k, den
        den = q
        k += 1


def jacobian_det_at_origin(fs: Iterable[Poly]) -> Fraction:
    rows = [[p.diff(i).constant_term() for i in range(NVARS)] for p in fs]
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


# -- parser -----------------------------------------------------------------

class _Parser:
    # expr   := term (('+' | '-') term)*
    # term   := unary ('*' unary)*
    # unary  := ('+' | '-') unary | power
    # power  := atom ('^' INT)?
    # atom   := INT ('/' INT)? | VAR | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.tokens = self._lex(text)
        self.i = 0

    @staticmethod
    def _lex(text):
        tokens = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(("INT", int(text[i:j]), i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                name = text[i:j]
                if name not in VARS:
                    raise UnknownVariableError(f"unknown variable {name!r}", i)
                tokens.append(("VAR", VARS.index(name), i))
                i = j
            elif ch in "+-*^()/":
                tokens.append((ch, ch, i))
                i += 1
            else:
                raise PolySyntaxError(f"unexpected character {ch!r}", i)
        tokens.append(("END", None, n))
        return tokens

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "END" else repr(tok[0] if tok[0] != "INT" else str(tok[1]))
            raise PolySyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            if tok[0] in ("VAR", "INT", "("):
                raise PolySyntaxError("implicit multiplication is not allowed", tok[2])
            raise PolySyntaxError(f"unexpected {tok[0]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            _, k, _ = self.take("INT")
            base = base ** k
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "INT":
            self.take()
            c = Fraction(val)
            if self.peek()[0] == "/":
                self.take()
                _, d, dpos = self.take("INT")
                if d == 0:
                    raise PolySyntaxError("zero denominator", dpos)
                c = Fraction(val, d)
            return Poly.constant(c)
        if kind == "VAR":
            self.take()
            return Poly.var(val)
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "END" else repr(kind)
        raise PolySyntaxError(f"unexpected {what}", pos)


def parse_poly(text: str) -> Poly:
    """Parse a polynomial in x, y, z.

    Literals are integers or ``p/q``; operators are ``+ - * ^`` and
    parentheses. Implicit multiplication (``2x``) is rejected.
    """
    return _Parser(text).parse()
