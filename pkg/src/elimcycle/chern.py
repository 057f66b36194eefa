"""Chern-character representatives of deformed Koszul components.

For a component K(u + c1*eps + ... + cj*eps^j, v) at a prime, the
representative is the undeformed resolution F(u, v) together with one
one-form per eps order, the order-m form being cm * dv. Forms are kept
symbolic as (coefficient, v); they are expanded in dx, dy, dz only when a
boundary class is taken.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScopeError, ShapeError
from .koszul import PAIR, KoszulComplex
from .local import FG, HG
from .ring import Poly


@dataclass(frozen=True, eq=False)
class ChClass:
    prime_tag: str
    pair: tuple          # (u, v) as Polys
    forms: tuple         # ((coefficient, dvar), ...); coefficient Poly or LocalFraction

    @property
    def order(self) -> int:
        return len(self.forms)

    def __str__(self):
        u, v = self.pair
        body = ", ".join(f"({c})*d({dv})" for c, dv in self.forms) or "0"
        return f"Ch[F({u}, {v})@{self.prime_tag}; {body}]"

    def truncate(self, j: int) -> "ChClass":
        return ChClass(self.prime_tag, self.pair, self.forms[:j])


def _poly_part(c) -> Poly:
    if isinstance(c, Poly):
        return c
    p = c.as_poly()
    if p is None:
        raise ShapeError(f"eps^0 coefficient {c} is not a polynomial")
    return p


def ch_class(c: KoszulComplex) -> ChClass:
    if c.shape != PAIR or c.prime_tag not in (FG, HG):
        raise ShapeError("Ch is defined here for two-generator complexes at FG or HG")
    first, second = c.gens
    if not second.eps_part_zero():
        raise ScopeError("second generator carries an eps part; only f-deformations are covered")
    u = _poly_part(first.coeffs[0])
    v = _poly_part(second.coeffs[0])
    forms = tuple((coeff, v) for coeff in first.coeffs[1:])
    return ChClass(c.prime_tag, (u, v), forms)
