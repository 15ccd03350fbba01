"""Sharp displacement lower bounds for pairs of hyperbolic isometries.

Layers, bottom up: free group words and the canonical head table
(:mod:`.words`), cylinder tiling relations (:mod:`.relations`), the
compiled family of displacement bound functions on the simplex
(:mod:`.functions`), the analytic and numeric min-max solvers
(:mod:`.optimize`), upper half-space geometry and pair audits
(:mod:`.hypgeom`), and the verification checks (:mod:`.checks`).
"""

from .words import (
    IDENTITY,
    Letter,
    PsiTable,
    Word,
    enumerate_psi,
    enumerate_shift_words,
    invert,
    multiply,
    reduce_word,
    word_class,
    word_from_str,
    word_to_str,
)
from .relations import (
    Relation,
    derive_relation,
    enumerate_relations,
    sibling_relation,
    validate_relation,
)
from .functions import (
    FunctionSpec,
    compile_spec,
    dominant_specs,
    family_max,
    family_values,
    function_family,
    sigma,
    symmetry_permutations,
)
from .optimize import (
    SolveResult,
    analytic_solve,
    convexity_certificate,
    criticality_check,
    lift_symmetric,
    minmax_numeric,
    pn_coefficients,
    real_roots,
    solve_alpha,
)
from .hypgeom import (
    Geodesic,
    H3Point,
    MoebiusMap,
    audit_pair,
    axis,
    classify,
    common_perpendicular,
    displacement,
    dist,
    jorgensen_number,
    loxodromic_data,
    schottky_sample,
)
from .checks import run_checks

__version__ = "0.1.0"

__all__ = [
    "IDENTITY",
    "Letter",
    "PsiTable",
    "Word",
    "enumerate_psi",
    "enumerate_shift_words",
    "invert",
    "multiply",
    "reduce_word",
    "word_class",
    "word_from_str",
    "word_to_str",
    "Relation",
    "derive_relation",
    "enumerate_relations",
    "sibling_relation",
    "validate_relation",
    "FunctionSpec",
    "compile_spec",
    "dominant_specs",
    "family_max",
    "family_values",
    "function_family",
    "sigma",
    "symmetry_permutations",
    "SolveResult",
    "analytic_solve",
    "convexity_certificate",
    "criticality_check",
    "lift_symmetric",
    "minmax_numeric",
    "pn_coefficients",
    "real_roots",
    "solve_alpha",
    "Geodesic",
    "H3Point",
    "MoebiusMap",
    "audit_pair",
    "axis",
    "classify",
    "common_perpendicular",
    "displacement",
    "dist",
    "jorgensen_number",
    "loxodromic_data",
    "schottky_sample",
    "run_checks",
    "__version__",
]
