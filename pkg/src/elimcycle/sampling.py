"""Random polynomials and setups for property checks and the self-test."""

from __future__ import annotations

import random
from fractions import Fraction

from .ring import NVARS, Poly, X, Y, Z, jacobian_det_at_origin


def monomials(max_degree: int, min_degree: int = 0):
    out = []
    for d in range(min_degree, max_degree + 1):
        for i in range(d + 1):
            for j in range(d - i + 1):
                out.append((i, j, d - i - j))
    return out


def random_poly(rng: random.Random, max_degree: int = 4, nterms: int = 4,
                min_degree: int = 0, coeff_range: int = 5) -> Poly:
    monos = monomials(max_degree, min_degree)
    terms = {}
    for e in rng.sample(monos, min(nterms, len(monos))):
        c = rng.randint(-coeff_range, coeff_range)
        if rng.random() < 0.2:
            c = Fraction(c, rng.randint(1, 3))
        terms[e] = c
    return Poly(terms)


def random_unit(rng: random.Random, max_degree: int = 3, nterms: int = 3) -> Poly:
    """Random polynomial with nonzero constant term."""
    p = random_poly(rng, max_degree, nterms, min_degree=1)
    c = rng.choice([i for i in range(-4, 5) if i])
    return p + c


def random_setup_polys(rng: random.Random, extra_terms: int = 1, max_degree: int = 3):
    """(f, g, h) vanishing at the origin with invertible Jacobian there."""
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(NVARS)] for _ in range(3)]
        lin = [r[0] * X + r[1] * Y + r[2] * Z for r in rows]
        if jacobian_det_at_origin(lin) == 0:
            continue
        return tuple(
            p + random_poly(rng, max_degree, extra_terms, min_degree=2, coeff_range=3)
            for p in lin
        )
