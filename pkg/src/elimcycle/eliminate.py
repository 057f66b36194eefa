"""Case analysis and the replacement-cycle construction.

Given the curve Y = (f, g) near the origin and the first-order datum
f1 = a1/b1, either b1 is a unit at the origin (Case 1: K(f + eps*f1, g)
is already a cycle and lifts to second order) or b1 vanishes there
(Case 2). In Case 2, b1 = bf*f + bg*g + u*h^n; the deformation simplifies
to f + eps*a1/(u*h), the residual curve Z = (h, g) is added, and the
complex L' = K(f*h + eps*a1/u, g) splits into K(f + eps*a1/(u*h), g) at Y
and K(h + eps*a1/(u*f), g) at Z, whose boundary classes cancel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .boundary import ZERO_VEC, component_classes, d1_image, sum_vectors
from .decompose import decompose, recompose_check
from .errors import (
    CertificationError,
    ClassifyError,
    ElimError,
    ScopeError,
    WitnessError,
)
from .groebner import (
    gb_budget,
    ideal_contains,
    groebner,
    lift,
    local_contains,
    reduce_with_cofactors,
)
from .koszul import (
    CycleElement,
    KoszulComplex,
    complexes_equal,
    koszul_pair,
    truncate,
    verify_complex,
)
from .local import FG, GLOBAL, HG, EpsElement, LocalFraction, Prime, frac_arith
from .report import Report
from .ring import Poly, factor_out, is_local_unit
from .setup import Setup, validate_setup

CASE_ONE, CASE_TWO = "ONE", "TWO"

__all__ = [
    "CASE_ONE", "CASE_TWO", "DeformationInput", "Witness", "Setup",
    "validate_setup", "classify", "normalize_b1", "simplify_deformation",
    "construct_Z", "build_L", "run_pipeline", "run_checks",
]


@dataclass(frozen=True)
class Witness:
    bf: Poly
    bg: Poly
    u: Poly
    n: int
    source: str = "supplied"

    def as_dict(self) -> dict:
        return {"bf": str(self.bf), "bg": str(self.bg), "u": str(self.u),
                "n": self.n, "source": self.source}


@dataclass(frozen=True)
class DeformationInput:
    a1: Poly
    b1: Poly
    a2: Poly | None = None
    witness: Witness | None = None


def classify(d: DeformationInput, s: Setup) -> str:
    """Case ONE when b1 is a unit at the origin, TWO when it vanishes there."""
    if local_contains(d.b1, s.fg.basis):
        raise ClassifyError(f"b1 = {d.b1} lies in (f, g); f1 = a1/b1 is not defined at Y")
    return CASE_ONE if is_local_unit(d.b1) else CASE_TWO


def _witness_holds(b1: Poly, w: Witness, s: Setup) -> bool:
    return (b1 - w.bf * s.f - w.bg * s.g - w.u * s.h ** w.n).is_zero()


def _search_witness(b1: Poly, s: Setup) -> Witness | None:
    # reduce modulo (f, g) and read the remainder as u*h^n
    (bf, bg), r = reduce_with_cofactors(b1, (s.f, s.g))
    if not r.is_zero() and not is_local_unit(s.h):
        n, u = factor_out(r, s.h)
        if n >= 1 and is_local_unit(u):
            return Witness(bf, bg, u, n, "search:remainder")
    # otherwise take the largest n with b1 in (f, g, h^n) and lift
    cap = max(b1.degree(), 1) + 2
    n = 0
    while n < cap and ideal_contains(b1, groebner((s.f, s.g, s.h ** (n + 1)))):
        n += 1
    if n == 0:
        return None
    cofs = lift(b1, (s.f, s.g, s.h ** n))
    if cofs is None or not is_local_unit(cofs[2]):
        return None
    return Witness(cofs[0], cofs[1], cofs[2], n, "search:lift")


def normalize_b1(d: DeformationInput, s: Setup, allow_n_gt_1: bool = False) -> Witness:
    """Write b1 = bf*f + bg*g + u*h^n with u a unit; verified exactly."""
    if d.witness is not None:
        w = d.witness
        if w.n < 1:
            raise WitnessError("witness exponent n must be positive")
        if not _witness_holds(d.b1, w, s):
            raise WitnessError("supplied witness does not satisfy b1 = bf*f + bg*g + u*h^n")
        if not is_local_unit(w.u):
            raise WitnessError(f"supplied u = {w.u} is not a unit at the origin")
    else:
        w = _search_witness(d.b1, s)
        if w is None:
            raise ScopeError(
                "could not find b1 = bf*f + bg*g + u*h^n automatically; supply a witness"
            )
        assert _witness_holds(d.b1, w, s)
    if w.n > 1 and not allow_n_gt_1:
        raise ScopeError(f"b1 needs h^{w.n}; only n = 1 is covered (use --allow-n-gt-1)")
    return w


def simplify_deformation(d: DeformationInput, w: Witness, s: Setup) -> LocalFraction:
    """Certify (f + eps*a1/b1, g) = (f + eps*a1/(u*h^n), g) at Y; return a1/(u*h^n)."""
    fg = s.fg
    original = LocalFraction(d.a1, d.b1, fg)
    simplified = LocalFraction(d.a1, w.u * s.h ** w.n, fg)
    diff = frac_arith("sub", original, simplified)
    if not local_contains(diff.num, fg.basis):
        raise CertificationError(
            f"a1/b1 - a1/(u*h^n) has numerator {diff.num} outside (f, g)"
        )
    return simplified


def construct_Z(s: Setup) -> Prime:
    """The residual curve through the origin, cut out by (h, g)."""
    return s.hg


def build_L(order: int, w1, w2, s: Setup) -> KoszulComplex:
    """K(f*h + eps*w1 (+ eps^2*w2), g) over the local ring at the origin."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    coeffs = [s.f * s.h, w1]
    if order == 2:
        if w2 is None:
            raise ValueError("second order needs w2")
        coeffs.append(w2)
    q = EpsElement(coeffs)
    return koszul_pair(q, EpsElement.const(s.g, order), GLOBAL)


def _lift_const(p: Poly, order: int, prime: Prime) -> EpsElement:
    return EpsElement.const(p, order).localize(prime)


def _vec(v):
    return [str(x) for x in v]


class _Run:
    """Collects complexes, vectors and verdicts while the pipeline runs."""

    def __init__(self, report: Report):
        self.report = report
        self.complexes: dict[str, KoszulComplex] = {}

    def step(self, name: str, fn: Callable, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ElimError as exc:
            exc.step = name
            exc.report = self.report
            raise

    def keep(self, name: str, c: KoszulComplex) -> KoszulComplex:
        self.complexes[name] = c
        self.report.complexes[name] = _describe(c)
        return c

    def verdict(self, name: str, value: bool):
        self.report.verdicts[name] = bool(value)

    def vectors(self, name: str, vecs):
        self.report.vectors[name] = [_vec(v) for v in vecs]


def _describe(c: KoszulComplex) -> dict:
    return {
        "prime": c.prime_tag,
        "order": c.ring_order,
        "generators": [[str(x) for x in g.coeffs] for g in c.gens],
    }


def _setup_and_input(scenario):
    s = validate_setup(scenario.f, scenario.g, scenario.h)
    w = None
    if scenario.witness is not None:
        wt = scenario.witness
        w = Witness(wt["bf"], wt["bg"], wt["u"], wt["n"])
    d = DeformationInput(scenario.a1, scenario.b1, scenario.a2, w)
    return s, d


def _new_report(command: str, scenario) -> Report:
    r = Report(command=command)
    r.setup = {"f": str(scenario.f), "g": str(scenario.g), "h": str(scenario.h)}
    r.deformation = {
        "a1": str(scenario.a1),
        "b1": str(scenario.b1),
        "a2": None if scenario.a2 is None else str(scenario.a2),
    }
    return r


def _membership_warnings(run: _Run, d: DeformationInput, s: Setup):
    basis = s.fg.basis
    if local_contains(d.b1, basis) != ideal_contains(d.b1, basis):
        run.report.warnings.append(
            "membership of b1 in (f, g) differs between the local ring and the polynomial ring"
        )
    run.report.warnings.append(
        "(f, g) and (h, g) are prime in the local ring at the origin because (f, g, h) "
        "is a regular system of parameters; primality away from the origin is not checked"
    )
    run.report.warnings.append("d1 is evaluated at the origin only")


def run_pipeline(scenario) -> Report:
    """Full elimination run; raises ElimError (with ``.step``) on failure."""
    report = _new_report("eliminate", scenario)
    run = _Run(report)
    with gb_budget(scenario.max_gb_steps):
        s, d = run.step("validate_setup", _setup_and_input, scenario)
        case = run.step("classify", classify, d, s)
        report.case = case
        _membership_warnings(run, d, s)
        a2 = d.a2
        if a2 is None:
            a2 = Poly()
            report.warnings.append("a2 not given; using a2 = 0")
        if case == CASE_ONE:
            _case_one(run, d, s, a2, scenario)
        else:
            _case_two(run, d, s, a2, scenario)
        report.verdicts["complexes_verified"] = all(
            verify_complex(c) for c in run.complexes.values()
        )
    report._complex_objects = dict(run.complexes)
    return report


def _case_one(run: _Run, d, s: Setup, a2: Poly, scenario, order: int = 2):
    fg, allow = s.fg, scenario.allow_n_gt_1
    f1 = run.step("localize", LocalFraction, d.a1, d.b1, fg)
    run.report.coefficient = str(f1)
    mu_y = run.keep("mu(Y)", koszul_pair(_lift_const(s.f, 0, fg), _lift_const(s.g, 0, fg), fg))
    mu_y1 = run.keep("mu(Y')", koszul_pair(EpsElement([s.f, f1]), EpsElement.const(s.g, 1), fg))
    cyc1 = CycleElement.of(mu_y1)
    v1 = run.step("d1(mu(Y'))", d1_image, cyc1, s, allow)
    run.vectors("d1(mu(Y'))", v1)
    run.verdict("d1_muY1_zero", all(v == ZERO_VEC for v in v1))
    run.verdict("muY1_deforms_muY", complexes_equal(truncate(mu_y1, 0), mu_y))
    if order < 2:
        return
    mu_y2 = run.keep("mu(Y'')", koszul_pair(EpsElement([s.f, f1, a2]), EpsElement.const(s.g, 2), fg))
    v2 = run.step("d1(mu(Y''))", d1_image, CycleElement.of(mu_y2), s, allow)
    run.vectors("d1(mu(Y''))", v2)
    run.verdict("d1_muY2_zero", all(v == ZERO_VEC for v in v2))
    run.verdict("muY2_deforms_muY1", complexes_equal(truncate(mu_y2, 1), mu_y1))
    run.report.conclusions = [
        {"statement": "mu(Y') is a Milnor K-theoretic cycle",
         "holds": run.report.verdicts["d1_muY1_zero"]},
        {"statement": "mu(Y') deforms to second order as mu(Y'')",
         "holds": run.report.verdicts["d1_muY2_zero"] and run.report.verdicts["muY2_deforms_muY1"]},
    ]


def _case_two(run: _Run, d, s: Setup, a2: Poly, scenario, order: int = 2):
    allow = scenario.allow_n_gt_1
    report = run.report
    w = run.step("normalize_b1", normalize_b1, d, s, allow)
    report.witness = w.as_dict()
    run.verdict("witness_identity", _witness_holds(d.b1, w, s))
    if w.n > 1:
        report.warnings.append("n > 1 is outside the covered construction (experimental)")
    coeff = run.step("simplify_deformation", simplify_deformation, d, w, s)
    report.coefficient = str(coeff)
    run.verdict("simplification_certified", True)

    fg, hg = s.fg, construct_Z(s)
    mu_y1 = run.keep("mu(Y')", koszul_pair(EpsElement([s.f, coeff]), EpsElement.const(s.g, 1), fg))

    # standalone mu(Y'): the obstruction witness
    alone = run.step("d1(mu(Y'))", d1_image, CycleElement.of(mu_y1), s, allow)
    run.vectors("d1(mu(Y')) standalone", alone)
    obstructed = any(v != ZERO_VEC for v in alone)
    report.obstruction = {
        "vector": _vec(alone[0]),
        "obstructed": obstructed,
        "label": ("mu(Y') is not a Milnor K-theoretic cycle at x" if obstructed
                  else "mu(Y') is a Milnor K-theoretic cycle at x"),
    }
    if w.n > 1:
        raise _halt(run, "build_L", ScopeError(
            "the replacement cycle is only constructed for n = 1"))

    # w1 = a1/u lives in the local ring at the origin
    w1 = d.a1 if w.u == Poly.constant(1) else LocalFraction(d.a1, w.u, s.maximal)
    L = run.keep("L", koszul_pair(s.f * s.h, s.g, GLOBAL))
    L1 = run.keep("L'", build_L(1, w1, None, s))
    L2 = run.keep("L''", build_L(2, w1, a2, s))

    mu_y = run.keep("mu(Y)", koszul_pair(_lift_const(s.f, 0, fg), _lift_const(s.g, 0, fg), fg))
    mu_z = run.keep("mu(Z)", koszul_pair(_lift_const(s.h, 0, hg), _lift_const(s.g, 0, hg), hg))
    z_coeff = LocalFraction(d.a1, w.u * s.f, hg)
    mu_z1 = run.keep("mu(Z')", koszul_pair(EpsElement([s.h, z_coeff]), EpsElement.const(s.g, 1), hg))

    parts0 = run.step("decompose(L)", decompose, L, s)
    run.verdict("L_decomposes", recompose_check(parts0, L, s)
                and complexes_equal(parts0[FG], mu_y) and complexes_equal(parts0[HG], mu_z))
    run.verdict("L1_deforms_L", complexes_equal(truncate(L1, 0), L))

    parts1 = run.step("decompose(L')", decompose, L1, s)
    run.keep("L'|Y", parts1[FG])
    run.keep("L'|Z", parts1[HG])
    run.verdict("L1_recomposes", recompose_check(parts1, L1, s))
    run.verdict("L1_restricts_to_muY1", complexes_equal(parts1[FG], mu_y1))
    run.verdict("L1_at_Z_is_muZ1", complexes_equal(parts1[HG], mu_z1))

    classes = run.step("d1(L')", component_classes, parts1, s, allow)
    alpha, beta = dict(classes)[FG], dict(classes)[HG]
    report.vectors["boundary(alpha)"] = [_vec(v) for v in alpha.vectors]
    report.vectors["boundary(beta)"] = [_vec(v) for v in beta.vectors]
    run.verdict("boundaries_cancel", all(
        all(a + b == 0 for a, b in zip(va, vb)) for va, vb in zip(alpha.vectors, beta.vectors)
    ))
    v1 = sum_vectors([alpha, beta], 1)
    run.vectors("d1(L')", v1)
    run.verdict("d1_L1_zero", all(v == ZERO_VEC for v in v1))

    parts2 = run.step("decompose(L'')", decompose, L2, s)
    run.keep("L''|Y", parts2[FG])
    run.keep("L''|Z", parts2[HG])
    run.verdict("L2_recomposes", recompose_check(parts2, L2, s))
    v2 = run.step("d1(L'')", d1_image, parts2, s, allow)
    run.vectors("d1(L'')", v2)
    run.verdict("d1_L2_zero", all(v == ZERO_VEC for v in v2))
    run.verdict("L2_deforms_L1", complexes_equal(truncate(L2, 1), L1))

    # Z is kept fixed: mu(Z) lifted to orders 1 and 2 with zero eps part
    fixed = True
    for j in (1, 2):
        lifted = run.keep(f"mu(Z) order {j}", koszul_pair(
            _lift_const(s.h, j, hg), _lift_const(s.g, j, hg), hg))
        vz = d1_image(CycleElement.of(lifted), s, allow)
        fixed = fixed and lifted.gens[0].eps_part_zero() and all(v == ZERO_VEC for v in vz)
        fixed = fixed and complexes_equal(truncate(lifted, 0), mu_z)
    run.verdict("muZ_fixed", fixed)

    # (mu(Y') + mu(Z')) - mu(Z) restricts to mu(Y) + mu(Z) - mu(Z) = mu(Y)
    run.verdict("replacement_deforms_muY",
                complexes_equal(truncate(mu_y1, 0), mu_y) and complexes_equal(truncate(mu_z1, 0), mu_z))

    v = report.verdicts
    report.conclusions = [
        {"statement": "L' = mu(Y') + mu(Z') is a Milnor K-theoretic cycle and L'|_Y = mu(Y')",
         "holds": v["d1_L1_zero"] and v["L1_restricts_to_muY1"] and v["L1_at_Z_is_muZ1"]},
        {"statement": "L' extends to second order as L''",
         "holds": v["d1_L2_zero"] and v["L2_deforms_L1"]},
        {"statement": "mu(Z) extends to second order as itself (Z fixed)",
         "holds": v["muZ_fixed"]},
        {"statement": "(mu(Y') + mu(Z')) - mu(Z) is a first order deformation of mu(Y) "
                      "restricting to mu(Y') on Y and extending to second order",
         "holds": v["replacement_deforms_muY"] and v["d1_L1_zero"] and v["d1_L2_zero"]},
    ]


def _halt(run: _Run, step: str, exc: ElimError) -> ElimError:
    exc.step = step
    exc.report = run.report
    return exc


def run_checks(scenario, order: int = 1) -> Report:
    """Membership checks only: d1 of the standalone mu(Y') (and of L', L'' in Case 2)."""
    report = _new_report("check", scenario)
    run = _Run(report)
    with gb_budget(scenario.max_gb_steps):
        s, d = run.step("validate_setup", _setup_and_input, scenario)
        case = run.step("classify", classify, d, s)
        report.case = case
        a2 = d.a2 if d.a2 is not None else Poly()
        allow = scenario.allow_n_gt_1
        fg = s.fg
        if case == CASE_ONE:
            _case_one(run, d, s, a2, scenario, order=order)
        else:
            w = run.step("normalize_b1", normalize_b1, d, s, allow)
            report.witness = w.as_dict()
            coeff = run.step("simplify_deformation", simplify_deformation, d, w, s)
            report.coefficient = str(coeff)
            mu_y1 = run.keep("mu(Y')", koszul_pair(EpsElement([s.f, coeff]), EpsElement.const(s.g, 1), fg))
            v1 = run.step("d1(mu(Y'))", d1_image, CycleElement.of(mu_y1), s, allow)
            run.vectors("d1(mu(Y'))", v1)
            run.verdict("d1_muY1_zero", all(v == ZERO_VEC for v in v1))
            if w.n == 1:
                w1 = d.a1 if w.u == Poly.constant(1) else LocalFraction(d.a1, w.u, s.maximal)
                L1 = run.keep("L'", build_L(1, w1, None, s))
                vl = run.step("d1(L')", d1_image, decompose(L1, s), s, allow)
                run.vectors("d1(L')", vl)
                run.verdict("d1_L1_zero", all(v == ZERO_VEC for v in vl))
                if order == 2:
                    L2 = run.keep("L''", build_L(2, w1, a2, s))
                    vl2 = run.step("d1(L'')", d1_image, decompose(L2, s), s, allow)
                    run.vectors("d1(L'')", vl2)
                    run.verdict("d1_L2_zero", all(v == ZERO_VEC for v in vl2))
        report.verdicts["complexes_verified"] = all(
            verify_complex(c) for c in run.complexes.values()
        )
    report._complex_objects = dict(run.complexes)
    return report
