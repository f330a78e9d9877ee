"""Exact combinatorics of real roots for the infinite rank-2 systems H(a, b).

The public surface re-exports the working vocabulary: the System carrier,
the gamma / eta / delta / epsilon sequences, canonical real-root forms with
recognition and reflection, sum decision procedures, subsystem closures and
classification, and the brute-force oracles used for cross-verification.
"""

from .errors import (
    DegenerateSum,
    EmptyGenerators,
    InvalidIndex,
    InvalidParams,
    LiteralSyntaxError,
    NotRealMirror,
    NotRealRoot,
    PreconditionFailed,
    RootSystemError,
)
from .lattice import (
    System,
    Vec,
    general_reflection,
    height,
    integral_norm,
    is_negative,
    is_positive,
    scaled_pairing,
    simple_reflection,
)
from .oracle import (
    BoundedRootSet,
    brute_classify,
    brute_delta_re,
    brute_phi_closure,
    brute_root_scan,
    brute_simple_sum_neighbors,
    brute_sum_table,
    walk_coords,
)
from .roots import (
    FAMILIES,
    RealRoot,
    RootClass,
    classify,
    coords,
    enumerate_imaginary,
    enumerate_real,
    index_window,
    is_positive_root,
    length_class,
    negate,
    parse_root_literal,
    reflect,
    root_literal,
)
from .sequences import (
    delta,
    div_eta_eta,
    div_eta_gamma,
    div_gamma_eta,
    div_gamma_gamma,
    divrec_identity_check,
    epsilon,
    eta,
    gamma,
)
from .subsystems import (
    IndexSets,
    PhiType,
    Progression,
    SubsystemClass,
    delta_membership,
    delta_re_subsystem,
    generator_indices,
    line_roots,
    mirror_line,
    phi_classify,
    phi_closure,
    phi_membership,
    span_contains,
    sublattice_basis,
    subsystem_class,
)
from .sums import (
    norm_of_sum_check,
    positive_combinations,
    real_sum_pairs,
    simple_sum_neighbors,
    sum_classify,
    sum_length_rule,
)
from .verify import SUITES, SuiteReport, expand_window, grid_systems, run

__version__ = "0.1.0"

__all__ = [
    "BoundedRootSet",
    "DegenerateSum",
    "EmptyGenerators",
    "FAMILIES",
    "IndexSets",
    "InvalidIndex",
    "InvalidParams",
    "LiteralSyntaxError",
    "NotRealMirror",
    "NotRealRoot",
    "PhiType",
    "PreconditionFailed",
    "Progression",
    "RealRoot",
    "RootClass",
    "RootSystemError",
    "SUITES",
    "SubsystemClass",
    "SuiteReport",
    "System",
    "Vec",
    "brute_classify",
    "brute_delta_re",
    "brute_phi_closure",
    "brute_root_scan",
    "brute_simple_sum_neighbors",
    "brute_sum_table",
    "classify",
    "coords",
    "delta",
    "delta_membership",
    "delta_re_subsystem",
    "div_eta_eta",
    "div_eta_gamma",
    "div_gamma_eta",
    "div_gamma_gamma",
    "divrec_identity_check",
    "enumerate_imaginary",
    "enumerate_real",
    "epsilon",
    "eta",
    "expand_window",
    "gamma",
    "general_reflection",
    "generator_indices",
    "grid_systems",
    "height",
    "index_window",
    "integral_norm",
    "is_negative",
    "is_positive",
    "is_positive_root",
    "length_class",
    "line_roots",
    "mirror_line",
    "negate",
    "norm_of_sum_check",
    "parse_root_literal",
    "phi_classify",
    "phi_closure",
    "phi_membership",
    "positive_combinations",
    "real_sum_pairs",
    "reflect",
    "root_literal",
    "run",
    "scaled_pairing",
    "simple_reflection",
    "simple_sum_neighbors",
    "span_contains",
    "sublattice_basis",
    "subsystem_class",
    "sum_classify",
    "sum_length_rule",
    "walk_coords",
]
