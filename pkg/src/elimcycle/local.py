"""Fractions in localizations at primes through the origin, and elements of
the truncated rings R[eps]/(eps^(j+1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import LocalizationError, OrderMismatchError
from .groebner import IdealBasis, groebner, local_contains
from .ring import Poly, is_local_unit

FG, HG, MAX, GLOBAL = "FG", "HG", "MAX", "GLOBAL"


@dataclass(frozen=True)
class Prime:
    """A prime of the local ring at the origin, given by generators.

    ``MAX`` is the maximal ideal itself; membership there is vanishing at
    the origin.
    """

    tag: str
    generators: tuple
    basis: IdealBasis | None = field(default=None, compare=False, repr=False)

    @classmethod
    def make(cls, tag: str, generators: Sequence[Poly]) -> "Prime":
        gens = tuple(generators)
        return cls(tag, gens, None if tag == MAX else groebner(gens))

    def contains(self, p: Poly) -> bool:
        if is_local_unit(p):
            return False
        if self.tag == MAX:
            return True
        return local_contains(p, self.basis)


def _scalar_zero(c) -> bool:
    return c.is_zero() if isinstance(c, Poly) else c.num.is_zero()


class LocalFraction:
    """num/den in the localization at ``prime``; den must avoid the prime.

    Fractions are never reduced. Equality is cross-multiplication.
    """

    __slots__ = ("num", "den", "prime")

    def __init__(self, num: Poly, den: Poly, prime: Prime, *, check: bool = True):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if not isinstance(den, Poly):
            den = Poly.constant(den)
        if check and prime.contains(den):
            raise LocalizationError(f"denominator {den} lies in prime {prime.tag}")
        self.num = num
        self.den = den
        self.prime = prime

    @property
    def prime_tag(self) -> str:
        return self.prime.tag

    @classmethod
    def of(cls, p: Poly, prime: Prime) -> "LocalFraction":
        return cls(p, Poly.constant(1), prime, check=False)

    def relocalize(self, prime: Prime) -> "LocalFraction":
        """View this fraction in another localization (denominator re-verified)."""
        return LocalFraction(self.num, self.den, prime)

    def _lift(self, other):
        if isinstance(other, LocalFraction):
            if other.prime.tag != self.prime.tag:
                raise LocalizationError(
                    f"cannot combine fractions at {self.prime.tag} and {other.prime.tag}"
                )
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return LocalFraction.of(other if isinstance(other, Poly) else Poly.constant(other), self.prime)
        return None

    # A product of denominators avoiding a prime avoids it too, so results
    # of arithmetic are not re-checked here; frac_arith re-checks.

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return LocalFraction(self.num + o.num, self.den, self.prime, check=False)
        return LocalFraction(self.num * o.den + o.num * self.den, self.den * o.den, self.prime,
                             check=False)

    __radd__ = __add__

    def __neg__(self):
        return LocalFraction(-self.num, self.den, self.prime, check=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return LocalFraction(self.num * o.num, self.den * o.den, self.prime, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, LocalFraction) else other
        if o is None:
            return NotImplemented
        if o.prime.tag != self.prime.tag:
            return False
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> Poly | None:
        """The polynomial this fraction equals, when den divides num exactly."""
        return self.num.exact_div(self.den)

    def __repr__(self):
        return f"LocalFraction({self}, {self.prime.tag})"

    def __str__(self):
        if self.den == Poly.constant(1):
            return str(self.num)
        return f"({self.num})/({self.den})"


def frac_arith(op: str, a: LocalFraction, b: LocalFraction) -> LocalFraction:
    if a.prime.tag != b.prime.tag:
        raise LocalizationError("fractions live in different localizations")
    if op == "add":
        r = a + b
    elif op == "sub":
        r = a - b
    elif op == "mul":
        r = a * b
    else:
        raise ValueError(f"unknown operation {op!r}")
    if a.prime.contains(r.den):
        raise LocalizationError(f"denominator {r.den} lies in prime {a.prime.tag}")
    return r


def _prime_of(coeffs):
    prime = None
    for c in coeffs:
        if isinstance(c, LocalFraction):
            if prime is not None and prime.tag != c.prime.tag:
                raise LocalizationError("mixed localizations in one element")
            prime = c.prime
    return prime


class EpsElement:
    """c0 + c1*eps + ... + cj*eps^j, truncated at eps^(j+1).

    Coefficients are Polys, or LocalFractions over one common prime; a
    single fraction promotes every polynomial coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = [Poly.constant(c) if isinstance(c, (int, Fraction)) else c for c in coeffs]
        if not coeffs:
            raise ValueError("an element needs at least the eps^0 coefficient")
        prime = _prime_of(coeffs)
        if prime is not None:
            coeffs = [LocalFraction.of(c, prime) if isinstance(c, Poly) else c for c in coeffs]
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, c, order: int) -> "EpsElement":
        return cls([c] + [Poly()] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def prime(self) -> Prime | None:
        c = self.coeffs[0]
        return c.prime if isinstance(c, LocalFraction) else None

    def _check(self, other: "EpsElement"):
        if other.order != self.order:
            raise OrderMismatchError(f"orders {self.order} and {other.order} differ")

    def __add__(self, other):
        if not isinstance(other, EpsElement):
            return NotImplemented
        self._check(other)
        return EpsElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return EpsElement([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, EpsElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, EpsElement):
            return NotImplemented
        self._check(other)
        out = []
        for m in range(self.order + 1):
            acc = None
            for i in range(m + 1):
                term = self.coeffs[i] * other.coeffs[m - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return EpsElement(out)

    def truncate(self, j: int) -> "EpsElement":
        if j > self.order:
            raise OrderMismatchError(f"cannot truncate order {self.order} to {j}")
        return EpsElement(self.coeffs[: j + 1])

    def is_zero(self) -> bool:
        return all(_scalar_zero(c) for c in self.coeffs)

    def eps_part_zero(self) -> bool:
        return all(_scalar_zero(c) for c in self.coeffs[1:])

    def localize(self, prime: Prime) -> "EpsElement":
        out = []
        for c in self.coeffs:
            if isinstance(c, LocalFraction):
                out.append(c.relocalize(prime))
            else:
                out.append(LocalFraction.of(c, prime))
        return EpsElement(out)

    def __eq__(self, other):
        if not isinstance(other, EpsElement):
            return NotImplemented
        if other.order != self.order:
            return False
        return all(_coeff_eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"EpsElement({self})"

    def __str__(self):
        parts = []
        for m, c in enumerate(self.coeffs):
            if m and _scalar_zero(c):
                continue
            s = str(c)
            if m:
                s = f"({s})*eps" + (f"^{m}" if m > 1 else "")
            parts.append(s)
        return " + ".join(parts)


def _coeff_eq(a, b) -> bool:
    if isinstance(a, Poly) and isinstance(b, Poly):
        return a == b
    if isinstance(a, Poly):
        a, b = b, a
    return a == b


def eps_mul(a: EpsElement, b: EpsElement) -> EpsElement:
    return a * b
