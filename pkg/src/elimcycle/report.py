"""Report structure and its text / JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

LABELS = {
    "witness_identity": "b1 = bf*f + bg*g + u*h^n",
    "simplification_certified": "(f + eps*a1/b1, g) = (f + eps*a1/(u*h^n), g)",
    "L_decomposes": "L = mu(Y) + mu(Z)",
    "L1_deforms_L": "L' pulls back to L",
    "L1_recomposes": "L' recomposes from its components",
    "L1_restricts_to_muY1": "L'|_Y = mu(Y')",
    "L1_at_Z_is_muZ1": "L'|_Z = mu(Z')",
    "boundaries_cancel": "boundary(alpha) = -boundary(beta)",
    "d1_L1_zero": "d1(L') = 0",
    "L2_recomposes": "L'' recomposes from its components",
    "d1_L2_zero": "d1(L'') = 0",
    "L2_deforms_L1": "L'' pulls back to L'",
    "muZ_fixed": "mu(Z) fixed through second order",
    "replacement_deforms_muY": "(mu(Y') + mu(Z')) - mu(Z) pulls back to mu(Y)",
    "d1_muY1_zero": "d1(mu(Y')) = 0",
    "d1_muY2_zero": "d1(mu(Y'')) = 0",
    "muY1_deforms_muY": "mu(Y') pulls back to mu(Y)",
    "muY2_deforms_muY1": "mu(Y'') pulls back to mu(Y')",
    "complexes_verified": "every constructed complex has d*d = 0",
}

CASE_TEXT = {
    "ONE": "CASE 1 (b1 is a unit at the origin)",
    "TWO": "CASE 2 (b1 vanishes at the origin)",
}


@dataclass
class Report:
    command: str
    case: str | None = None
    setup: dict = field(default_factory=dict)
    deformation: dict = field(default_factory=dict)
    witness: dict | None = None
    coefficient: str | None = None
    complexes: dict = field(default_factory=dict)
    vectors: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    obstruction: dict | None = None
    conclusions: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    error: dict | None = None
    _complex_objects: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.error is None and all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "case": self.case,
            "setup": self.setup,
            "deformation": self.deformation,
            "witness": self.witness,
            "simplified_coefficient": self.coefficient,
            "complexes": self.complexes,
            "vectors": self.vectors,
            "verdicts": self.verdicts,
            "obstruction": self.obstruction,
            "conclusions": self.conclusions,
            "warnings": self.warnings,
            "error": self.error,
            "all_pass": self.ok,
        }


def _fmt_vec(v) -> str:
    return "(" + ", ".join(v) + ")"


def emit_json(report: Report, exit_code: int | None = None) -> str:
    doc = report.to_dict()
    if exit_code is not None:
        doc["exit_code"] = exit_code
    return json.dumps(doc, indent=2) + "\n"


def emit_text(report: Report, exit_code: int | None = None) -> str:
    out = [f"command: {report.command}"]
    if report.case:
        out.append(CASE_TEXT[report.case])
    if report.setup:
        out.append("setup: " + ", ".join(f"{k} = {v}" for k, v in report.setup.items()))
    if report.deformation:
        out.append("deformation: " + ", ".join(
            f"{k} = {v}" for k, v in report.deformation.items() if v is not None))
    if report.witness:
        w = report.witness
        out.append(f"witness: b1 = ({w['bf']})*f + ({w['bg']})*g + ({w['u']})*h^{w['n']}"
                   f"  [{w['source']}]")
    if report.coefficient:
        out.append(f"f1 = {report.coefficient}")
    if report.complexes:
        out.append("complexes:")
        for name, c in report.complexes.items():
            gens = ", ".join(
                " + ".join(
                    [g[0]] + [f"({x})*eps" + (f"^{m}" if m > 1 else "")
                              for m, x in enumerate(g[1:], start=1) if x != "0"]
                ) for g in c["generators"]
            )
            out.append(f"  {name}: K({gens}) at {c['prime']}, order {c['order']}")
    if report.vectors:
        out.append("boundary vectors (dx, dy, dz):")
        for name, vecs in report.vectors.items():
            body = "; ".join(f"eps^{m}: {_fmt_vec(v)}" for m, v in enumerate(vecs, start=1))
            out.append(f"  {name}: {body or '(no eps part)'}")
    if report.obstruction:
        ob = report.obstruction
        out.append(f"obstruction witness: d1(mu(Y')) = {_fmt_vec(ob['vector'])}; {ob['label']}")
    if report.verdicts:
        out.append("checks:")
        for name, val in report.verdicts.items():
            out.append(f"  {LABELS.get(name, name)}: {'PASS' if val else 'FAIL'}")
    if report.conclusions:
        out.append("conclusions:")
        for c in report.conclusions:
            out.append(f"  [{'PASS' if c['holds'] else 'FAIL'}] {c['statement']}")
    if report.warnings:
        out.append("warnings:")
        out.extend(f"  - {w}" for w in report.warnings)
    if report.error:
        e = report.error
        out.append(f"ERROR at step {e['step']}: {e['kind']}: {e['message']}")
    out.append("result: " + ("ALL CHECKS PASS" if report.ok else "NOT ALL CHECKS PASS"))
    if exit_code is not None:
        out.append(f"exit code: {exit_code}")
    return "\n".join(out) + "\n"


def emit_report(report: Report, fmt: str = "text", exit_code: int | None = None) -> str:
    if fmt == "json":
        return emit_json(report, exit_code)
    if fmt == "text":
        return emit_text(report, exit_code)
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str) -> dict:
    """Read back a JSON report."""
    return json.loads(text)
