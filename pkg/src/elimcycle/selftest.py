"""Built-in self test: ladder identities plus small randomized invariant suites."""

from __future__ import annotations

import random

from .boundary import d1_check, verify_w_diagram
from .decompose import decompose
from .eliminate import CASE_ONE, DeformationInput, build_L, classify
from .koszul import CycleElement, complexes_equal, koszul_pair, truncate, verify_complex
from .local import EpsElement, LocalFraction
from .ring import X, Y, Z, parse_poly
from .sampling import random_poly, random_setup_polys, random_unit
from .setup import validate_setup

BUILTIN_SETUPS = (
    ("x", "y", "z"),
    ("x + y^2", "y", "z + x*y"),
    ("x - z^2", "y + x*z", "z"),
    ("y", "z", "x"),
)


def _suite_ladder(rng):
    for gens in BUILTIN_SETUPS:
        s = validate_setup(*(parse_poly(p) for p in gens))
        if not verify_w_diagram(s):
            return False
    for _ in range(5):
        if not verify_w_diagram(validate_setup(*random_setup_polys(rng))):
            return False
    return True


def _suite_first_order(rng):
    s = validate_setup(X, Y, Z)
    for _ in range(10):
        w1 = random_poly(rng, 4)
        L1 = build_L(1, w1, None, s)
        if not (verify_complex(L1) and d1_check(decompose(L1, s), s)):
            return False
    return True


def _suite_second_order(rng):
    s = validate_setup(X, Y, Z)
    for _ in range(10):
        w1, w2 = random_poly(rng, 4), random_poly(rng, 4)
        L1, L2 = build_L(1, w1, None, s), build_L(2, w1, w2, s)
        if not (d1_check(decompose(L2, s), s) and complexes_equal(truncate(L2, 1), L1)):
            return False
    return True


def _suite_unit_denominator(rng):
    s = validate_setup(X, Y, Z)
    for _ in range(10):
        a1, b1 = random_poly(rng, 4), random_unit(rng)
        if classify(DeformationInput(a1, b1), s) != CASE_ONE:
            return False
        mu = koszul_pair(EpsElement([s.f, LocalFraction(a1, b1, s.fg)]),
                         EpsElement.const(s.g, 1), s.fg)
        if not d1_check(CycleElement.of(mu), s):
            return False
    return True


SUITES = (
    ("ladder (-1, W1, W2, 1) commutes", _suite_ladder),
    ("d1(L') = 0 for random w1", _suite_first_order),
    ("d1(L'') = 0 and L'' pulls back to L'", _suite_second_order),
    ("unit b1 gives a cycle mu(Y')", _suite_unit_denominator),
)


def run_selftest(out, seed: int = 0) -> int:
    rng = random.Random(seed)
    failed = 0
    for name, fn in SUITES:
        ok = fn(rng)
        failed += not ok
        out.write(f"{name}: {'PASS' if ok else 'FAIL'}\n")
    out.write("selftest: " + ("PASS" if not failed else f"{failed} suite(s) FAILED") + "\n")
    return 0 if not failed else 1
