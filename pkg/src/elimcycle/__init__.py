"""Exact obstruction elimination for curves in affine 3-space at the origin."""

from .boundary import (
    BoundaryClass,
    boundary_class,
    d1_check,
    d1_image,
    verify_w_diagram,
)
from .chern import ChClass, ch_class
from .decompose import decompose, recompose_check
from .eliminate import (
    CASE_ONE,
    CASE_TWO,
    DeformationInput,
    Witness,
    build_L,
    classify,
    construct_Z,
    normalize_b1,
    run_checks,
    run_pipeline,
    simplify_deformation,
)
from .groebner import IdealBasis, groebner, ideal_contains, local_contains
from .koszul import (
    CycleElement,
    KoszulComplex,
    complexes_equal,
    koszul_pair,
    koszul_triple,
    truncate,
    verify_complex,
)
from .local import FG, GLOBAL, HG, MAX, EpsElement, LocalFraction, Prime, eps_mul, frac_arith
from .report import Report, emit_report
from .ring import Poly, factor_out, is_local_unit, parse_poly
from .scenario import Scenario, load_scenario
from .setup import Setup, validate_setup

__version__ = "0.1.0"
