"""Scenario files.

A scenario is a YAML (or JSON) mapping::

    sequence:     {f: "x", g: "y", h: "z"}
    deformation:  {a1: "1", b1: "z"}
    second_order: {a2: "1"}                       # optional
    witness:      {bf: "0", bg: "0", u: "1", n: 1}  # optional
    options:      {max_gb_steps: 20000, allow_n_gt_1: false}  # optional
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import yaml

from .errors import PolySyntaxError, ScenarioError
from .groebner import DEFAULT_MAX_STEPS
from .ring import Poly, parse_poly

TOP_KEYS = ("sequence", "deformation", "second_order", "witness", "options")


@dataclass(frozen=True)
class Scenario:
    f: Poly
    g: Poly
    h: Poly
    a1: Poly
    b1: Poly
    a2: Poly | None = None
    witness: dict | None = None
    max_gb_steps: int = DEFAULT_MAX_STEPS
    allow_n_gt_1: bool = False

    def with_options(self, **kw) -> "Scenario":
        fields = dict(self.__dict__)
        fields.update(kw)
        return Scenario(**fields)


def _poly_at(block: dict, key: str, path: str) -> Poly:
    if key not in block:
        raise ScenarioError(f"missing key {path}.{key}")
    raw = block[key]
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ScenarioError(f"{path}.{key}: expected a polynomial string, got {raw!r}")
    try:
        return parse_poly(str(raw))
    except PolySyntaxError as exc:
        raise ScenarioError(f"{path}.{key}: {exc}") from exc


def _block(doc: dict, key: str, required: bool):
    if key not in doc:
        if required:
            raise ScenarioError(f"missing key {key}")
        return None
    block = doc[key]
    if not isinstance(block, dict):
        raise ScenarioError(f"{key} must be a mapping")
    return block


def scenario_from_dict(doc) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a mapping")
    unknown = sorted(set(doc) - set(TOP_KEYS))
    if unknown:
        raise ScenarioError(f"unknown top-level keys: {', '.join(map(str, unknown))}")
    seq = _block(doc, "sequence", True)
    dfm = _block(doc, "deformation", True)
    f, g, h = (_poly_at(seq, k, "sequence") for k in ("f", "g", "h"))
    a1 = _poly_at(dfm, "a1", "deformation")
    b1 = _poly_at(dfm, "b1", "deformation")

    a2 = None
    so = _block(doc, "second_order", False)
    if so is not None:
        a2 = _poly_at(so, "a2", "second_order")

    witness = None
    wb = _block(doc, "witness", False)
    if wb is not None:
        witness = {k: _poly_at(wb, k, "witness") for k in ("bf", "bg", "u")}
        n = wb.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ScenarioError("witness.n: expected a positive integer")
        witness["n"] = n

    opts = _block(doc, "options", False) or {}
    unknown = sorted(set(opts) - {"max_gb_steps", "allow_n_gt_1"})
    if unknown:
        raise ScenarioError(f"unknown options: {', '.join(map(str, unknown))}")
    steps = opts.get("max_gb_steps", DEFAULT_MAX_STEPS)
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise ScenarioError("options.max_gb_steps: expected a positive integer")
    allow = opts.get("allow_n_gt_1", False)
    if not isinstance(allow, bool):
        raise ScenarioError("options.allow_n_gt_1: expected a boolean")
    return Scenario(f, g, h, a1, b1, a2, witness, steps, allow)


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"{path}: not valid YAML/JSON: {exc}") from exc
    return scenario_from_dict(doc)
