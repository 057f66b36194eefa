"""Split a Koszul complex on (f*h + eps*w1 + ..., g) into its components at
the primes (f, g) and (h, g).

At (f, g) the factor h is a unit, so the first generator can be divided by
it; likewise f at (h, g). The components are built directly in their
rescaled form (g, -(q/h))^T, (q/h, g) and the recomposition identities are
checked separately by ``recompose_check``.
"""

from __future__ import annotations

from .errors import LocalizationError, ShapeError
from .koszul import PAIR, CycleElement, KoszulComplex, koszul_pair, verify_complex
from .local import FG, HG, EpsElement, LocalFraction, Prime
from .ring import Poly
from .setup import Setup


def _as_poly(c) -> Poly | None:
    if isinstance(c, Poly):
        return c
    return c.as_poly()


def divide_by_unit(q: EpsElement, d: Poly, prime: Prime) -> EpsElement:
    """q / d in the localization at ``prime``; d must avoid the prime.

    The eps^0 coefficient is divided exactly when possible, the others are
    left as unreduced fractions.
    """
    if prime.contains(d):
        raise LocalizationError(f"{d} is not a unit at {prime.tag}")
    out = []
    for m, c in enumerate(q.coeffs):
        if isinstance(c, LocalFraction):
            num, den = c.num, c.den
        else:
            num, den = c, Poly.constant(1)
        if m == 0 and den == Poly.constant(1):
            exact = num.exact_div(d)
            if exact is not None:
                out.append(LocalFraction.of(exact, prime))
                continue
        out.append(LocalFraction(num, den * d, prime))
    return EpsElement(out)


def decompose(L: KoszulComplex, setup: Setup) -> CycleElement:
    """Components of L = K(q, g) at (f, g) and (h, g)."""
    if L.shape != PAIR:
        raise ShapeError("decompose expects a two-generator Koszul complex")
    q, v = L.gens
    q0 = _as_poly(q.coeffs[0])
    if q0 is None or q0 != setup.f * setup.h:
        raise ShapeError("eps^0 part of the first generator must equal f*h")
    if _as_poly(v.coeffs[0]) != setup.g or not v.eps_part_zero():
        raise ShapeError("second generator must be g with no eps part")
    if not verify_complex(L):
        raise ShapeError("input is not a complex")
    fg, hg = setup.fg, setup.hg
    y_part = koszul_pair(divide_by_unit(q, setup.h, fg), v.localize(fg), fg)
    z_part = koszul_pair(divide_by_unit(q, setup.f, hg), v.localize(hg), hg)
    return CycleElement(((FG, y_part), (HG, z_part)))


def recompose_check(parts: CycleElement, L: KoszulComplex, setup: Setup) -> bool:
    """h * (component at FG) and f * (component at HG) both give back q."""
    q, v = L.gens
    for tag, factor in ((FG, setup.h), (HG, setup.f)):
        try:
            comp = parts[tag]
        except KeyError:
            return False
        prime = setup.primes[tag]
        u_loc, v_loc = comp.gens
        scaled = EpsElement.const(factor, q.order).localize(prime) * u_loc
        if not scaled == q.localize(prime):
            return False
        if not v_loc == v.localize(prime):
            return False
    return True
