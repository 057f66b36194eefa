"""Boundary classes at the origin and the d1 membership test.

A form (a/b) * dv at the prime (u, v) is pushed to the origin by clearing
the denominator onto the full sequence (u, v, t), t the remaining element
of (f, g, h). Since (f, g, h) generates the maximal ideal at the origin,
the resulting class in Omega^1 / (f, g, h) Omega^1 is read off by
evaluating its dx, dy, dz coefficients there. Reordering (u, v, t) to
(f, g, h) contributes the sign of the permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern import ChClass, ch_class
from .errors import ScopeError, ShapeError
from .koszul import TRIPLE, CycleElement, KoszulComplex, matmul
from .local import GLOBAL, EpsElement, LocalFraction
from .ring import NVARS, Poly, factor_out, is_local_unit
from .setup import NAMES, Setup

ZERO_VEC = (Fraction(0),) * NVARS


@dataclass(frozen=True)
class BoundaryClass:
    vectors: tuple            # one (vx, vy, vz) per eps order >= 1
    prime_tag: str
    ordering: tuple           # e.g. ("h", "g", "f")
    sign: int
    cleared: tuple = ()       # printable cleared forms, per order
    experimental: bool = False

    def is_zero(self) -> bool:
        return all(v == ZERO_VEC for v in self.vectors)


def permutation_sign(order) -> int:
    """Sign of the permutation taking ``order`` to ("f", "g", "h")."""
    idx = [NAMES.index(n) for n in order]
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def _num_den(c):
    if isinstance(c, LocalFraction):
        return c.num, c.den
    return c, Poly.constant(1)


def boundary_class(ch: ChClass, setup: Setup, allow_higher_power: bool = False) -> BoundaryClass:
    u, v = ch.pair
    try:
        nu, nv = setup.name_of(u), setup.name_of(v)
    except KeyError as exc:
        raise ShapeError(f"pair element {exc} is not one of f, g, h") from None
    if nu == nv:
        raise ShapeError("pair must consist of two distinct members of (f, g, h)")
    nt = next(n for n in NAMES if n not in (nu, nv))
    t = dict(zip(NAMES, setup.sequence()))[nt]
    ordering = (nu, nv, nt)
    sign = permutation_sign(ordering)

    vectors, cleared, beyond = [], [], False
    for coeff, dvar in ch.forms:
        num, den = _num_den(coeff)
        if num.is_zero():
            vectors.append(ZERO_VEC)
            cleared.append("0")
            continue
        k, residual = factor_out(den, t)
        if not is_local_unit(residual):
            raise ScopeError(
                f"denominator {den} is not a unit times a power of {nt} = {t}"
            )
        if k == 0:
            top = num * t
        elif k == 1:
            top = num
        else:
            if not allow_higher_power:
                raise ScopeError(f"denominator {den} has {nt}^{k}; only the first power is covered")
            top = num * t ** (k - 1)
            beyond = True
        r0 = residual.constant_term()
        vec = tuple(
            sign * (top * dvar.diff(i)).constant_term() / r0 for i in range(NVARS)
        )
        vectors.append(vec)
        sgn = "-" if sign < 0 else ""
        cleared.append(f"{sgn}(({top})/({residual}))*d({dvar})")
    return BoundaryClass(tuple(vectors), ch.prime_tag, ordering, sign, tuple(cleared), beyond)


def component_classes(cycle: CycleElement, setup: Setup, allow_higher_power: bool = False):
    return [
        (tag, boundary_class(ch_class(c), setup, allow_higher_power))
        for tag, c in cycle.components
    ]


def sum_vectors(classes, order: int):
    out = [list(ZERO_VEC) for _ in range(order)]
    for bc in classes:
        for m, vec in enumerate(bc.vectors):
            for i in range(NVARS):
                out[m][i] += vec[i]
    return [tuple(v) for v in out]


def d1_image(cycle: CycleElement, setup: Setup, allow_higher_power: bool = False):
    """Per eps order, the sum over components of their boundary vectors."""
    classes = [bc for _, bc in component_classes(cycle, setup, allow_higher_power)]
    return sum_vectors(classes, cycle.ring_order)


def d1_check(cycle: CycleElement, setup: Setup, allow_higher_power: bool = False) -> bool:
    return all(v == ZERO_VEC for v in d1_image(cycle, setup, allow_higher_power))


# -- the ladder between the resolutions of (f, g, h) and (h, g, f) -----------

def _const_matrix(rows):
    return tuple(tuple(EpsElement.const(Poly.constant(x), 0) for x in r) for r in rows)


PRINTED_W1 = ((0, 0, -1), (0, -1, 0), (1, 0, 0))
# the printed W1 needs its (3,1) entry negated for both left squares to commute
W1 = ((0, 0, -1), (0, -1, 0), (-1, 0, 0))
W2 = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def _equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def verify_w_diagram(setup: Setup, w1=W1, w2=W2) -> bool:
    """Check the chain map (-1, W1, W2, 1) between the two Koszul resolutions.

    Squares: N1*(-1) = W1*M1, N2*W1 = W2*M2, N3*W2 = M3.
    """
    f, g, h = (EpsElement.const(p, 0) for p in setup.sequence())
    m1, m2, m3 = KoszulComplex(TRIPLE, GLOBAL, (f, g, h)).diffs
    n1, n2, n3 = KoszulComplex(TRIPLE, GLOBAL, (h, g, f)).diffs
    W1m, W2m = _const_matrix(w1), _const_matrix(w2)
    minus_one = _const_matrix(((-1,),))
    return (
        _equal(matmul(n1, minus_one), matmul(W1m, m1))
        and _equal(matmul(n2, W1m), matmul(W2m, m2))
        and _equal(matmul(n3, W2m), m3)
    )
