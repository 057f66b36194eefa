"""Koszul complexes over truncated (possibly localized) rings.

A complex is stored as its generators and shape; the differentials are
derived from them, listed left to right as they appear in the complex

    PAIR   on (u, v):    0 -> R --(v, -u)^T--> R^2 --(u, v)--> R
    TRIPLE on (f, g, h): 0 -> R --M1--> R^3 --M2--> R^3 --M3--> R

with M1 = (f, -g, h)^T, M2 = [[0, -h, -g], [-h, 0, f], [g, f, 0]] and
M3 = (f, g, h).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderMismatchError, ShapeError
from .local import GLOBAL, MAX, EpsElement, Prime
from .ring import Poly

PAIR, TRIPLE = "PAIR", "TRIPLE"


def _elem(x, order=0) -> EpsElement:
    if isinstance(x, EpsElement):
        return x
    return EpsElement.const(x, order)


def matmul(a, b):
    """Product of matrices given as tuples of rows of EpsElements."""
    n, k = len(a), len(a[0])
    if len(b) != k:
        raise ShapeError("matrix dimensions do not match")
    m = len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class KoszulComplex:
    shape: str
    prime_tag: str
    gens: tuple
    custom_diffs: tuple | None = None

    @property
    def ring_order(self) -> int:
        return self.gens[0].order

    @property
    def diffs(self) -> tuple:
        if self.custom_diffs is not None:
            return self.custom_diffs
        if self.shape == PAIR:
            u, v = self.gens
            return (((v,), (-u,)), ((u, v),))
        f, g, h = self.gens
        z = EpsElement.const(Poly(), self.ring_order)
        m1 = ((f,), (-g,), (h,))
        m2 = ((z, -h, -g), (-h, z, f), (g, f, z))
        m3 = ((f, g, h),)
        return (m1, m2, m3)

    def with_diffs(self, diffs) -> "KoszulComplex":
        """Same generators but explicit differentials (used to build bad complexes)."""
        return KoszulComplex(self.shape, self.prime_tag, self.gens, tuple(diffs))

    def __str__(self):
        return f"K({', '.join(str(g) for g in self.gens)})@{self.prime_tag}"


def koszul_pair(u, v, prime: "Prime | str" = GLOBAL) -> KoszulComplex:
    """Koszul complex on the ordered pair (u, v).

    Passing a ``Prime`` localizes polynomial entries there; a bare tag keeps
    entries as given.
    """
    u, v = _elem(u), _elem(v)
    if u.order != v.order:
        raise OrderMismatchError(f"generators have orders {u.order} and {v.order}")
    if isinstance(prime, Prime):
        prime_tag = prime.tag
    else:
        prime_tag, prime = prime, (u.prime or v.prime)
    if prime is not None:
        # GLOBAL means the local ring at the origin, so unit denominators are fine
        if prime.tag != prime_tag and not (prime_tag == GLOBAL and prime.tag == MAX):
            raise ShapeError(f"entries live at {prime.tag}, complex tagged {prime_tag}")
        u, v = u.localize(prime), v.localize(prime)
    return KoszulComplex(PAIR, prime_tag, (u, v))


def koszul_triple(f: Poly, g: Poly, h: Poly) -> KoszulComplex:
    """Koszul resolution of R/(f, g, h) with the sign layout M1, M2, M3."""
    from .setup import validate_setup

    validate_setup(f, g, h)
    return KoszulComplex(TRIPLE, GLOBAL, tuple(_elem(p) for p in (f, g, h)))


def verify_complex(c: KoszulComplex) -> bool:
    """Consecutive differentials compose to zero in the truncated ring."""
    d = c.diffs
    for first, second in zip(d, d[1:]):
        try:
            prod = matmul(second, first)
        except (ShapeError, OrderMismatchError):
            return False
        if not all(e.is_zero() for row in prod for e in row):
            return False
    return True


def truncate(c: KoszulComplex, j_target: int) -> KoszulComplex:
    """Pull back along X_j -> X_{j_target}: drop eps powers above j_target."""
    if j_target < 0 or j_target >= c.ring_order:
        raise OrderMismatchError(
            f"target order {j_target} must be below ring order {c.ring_order}"
        )
    gens = tuple(g.truncate(j_target) for g in c.gens)
    custom = None
    if c.custom_diffs is not None:
        custom = tuple(
            tuple(tuple(e.truncate(j_target) for e in row) for row in m) for m in c.custom_diffs
        )
    return KoszulComplex(c.shape, c.prime_tag, gens, custom)


def complexes_equal(a: KoszulComplex, b: KoszulComplex) -> bool:
    if (a.shape, a.prime_tag, a.ring_order) != (b.shape, b.prime_tag, b.ring_order):
        raise ShapeError("complexes differ in shape, localization or order")
    for ma, mb in zip(a.diffs, b.diffs):
        if len(ma) != len(mb) or len(ma[0]) != len(mb[0]):
            return False
        for ra, rb in zip(ma, mb):
            if not all(x == y for x, y in zip(ra, rb)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class CycleElement:
    """Formal sum over codimension-2 points, one complex per prime."""

    components: tuple

    def __post_init__(self):
        tags = [t for t, _ in self.components]
        if len(set(tags)) != len(tags):
            raise ShapeError("at most one component per prime")
        orders = {c.ring_order for _, c in self.components}
        if len(orders) > 1:
            raise OrderMismatchError("components have different ring orders")
        for t, c in self.components:
            if c.prime_tag != t:
                raise ShapeError(f"component tagged {t} holds a complex at {c.prime_tag}")

    @classmethod
    def of(cls, *complexes: KoszulComplex) -> "CycleElement":
        return cls(tuple((c.prime_tag, c) for c in complexes))

    def __getitem__(self, tag: str) -> KoszulComplex:
        for t, c in self.components:
            if t == tag:
                return c
        raise KeyError(tag)

    @property
    def ring_order(self) -> int:
        return self.components[0][1].ring_order if self.components else 0

    def truncate(self, j: int) -> "CycleElement":
        return CycleElement(tuple((t, truncate(c, j)) for t, c in self.components))


__all__ = [
    "PAIR", "TRIPLE", "KoszulComplex", "CycleElement", "koszul_pair",
    "koszul_triple", "verify_complex", "truncate", "complexes_equal", "matmul",
]
