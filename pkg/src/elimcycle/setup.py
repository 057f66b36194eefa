"""The regular system of parameters (f, g, h) at the origin."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SetupError
from .groebner import IdealBasis, local_contains
from .local import FG, HG, MAX, Prime
from .ring import Poly, jacobian_det_at_origin

NAMES = ("f", "g", "h")


@dataclass(frozen=True, eq=False)
class Setup:
    f: Poly
    g: Poly
    h: Poly
    primes: dict

    @property
    def fg(self) -> Prime:
        return self.primes[FG]

    @property
    def hg(self) -> Prime:
        return self.primes[HG]

    @property
    def maximal(self) -> Prime:
        return self.primes[MAX]

    @property
    def bases(self) -> dict[str, IdealBasis]:
        return {t: p.basis for t, p in self.primes.items() if p.basis is not None}

    def sequence(self) -> tuple[Poly, Poly, Poly]:
        return (self.f, self.g, self.h)

    def name_of(self, p: Poly) -> str:
        """Which of f, g, h the polynomial p is (first match)."""
        for name, q in zip(NAMES, self.sequence()):
            if q == p:
                return name
        raise KeyError(str(p))


def validate_setup(f: Poly, g: Poly, h: Poly) -> Setup:
    """Check that (f, g, h) is a regular system of parameters at the origin.

    Raises SetupError naming every failed condition.
    """
    failures = []
    for name, p in zip(NAMES, (f, g, h)):
        if p.constant_term() != 0:
            failures.append(f"{name} does not vanish at the origin")
    if jacobian_det_at_origin((f, g, h)) == 0:
        failures.append("Jacobian of (f, g, h) is singular at the origin")
    primes = {
        FG: Prime.make(FG, (f, g)),
        HG: Prime.make(HG, (h, g)),
        MAX: Prime.make(MAX, (f, g, h)),
    }
    if not failures:
        # with an invertible Jacobian both conditions hold; they are checked
        # anyway because the localizations below depend on them
        if local_contains(h, primes[FG].basis):
            failures.append("h lies in (f, g) locally")
        if local_contains(f, primes[HG].basis):
            failures.append("f lies in (h, g) locally")
    if failures:
        raise SetupError(failures)
    return Setup(f, g, h, primes)
