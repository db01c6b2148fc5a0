"""symsod: semi-orthogonal decompositions of symmetric products of categories.

The package expands symmetric powers of expression trees over category
atoms into fully atomic components, and cross-checks the expansions against
exact combinatorial, generating-function, and character-theoretic oracles.
"""

from .expr import (
    Bullet,
    CatExpr,
    Component,
    ComponentList,
    Curve,
    Opaque,
    PHANTOM,
    POINT,
    Phantom,
    Point,
    Sod,
    Surface,
    Sym,
    SymCurve,
    SymPower,
    betti_of,
    blowup,
    canonicalize,
    equal_components,
    make_preset,
    surface_literal,
)
from .grammar import ParseError, parse_expr, render, render_text
from .invariants import (
    InvariantReport,
    euler_char,
    exceptional_length,
    hh_total_dim,
    invariant_report,
    phantom_audit,
)
from .partitions import (
    MultiplicityVector,
    Partition,
    WeakComposition,
    multiplicity_vectors,
    partition_count,
    partitions_of,
    q_length,
    weak_compositions,
)
from .rewrite import component_count, expand, expand_tail_first, sym_of_sod
from .series import (
    BettiVector,
    TruncatedSeries,
    eta_inverse_power,
    gottsche_series,
    macdonald_poincare,
    series_mul,
)
from .symgroup import (
    PermModule,
    Permutation,
    YoungPair,
    conjugacy_class_count,
    cycle_type,
    induction_invariance_check,
    invariant_dimension,
    symmetric_group,
    young_coset_reps,
    young_subgroup,
)
from .suites import run_suites

__version__ = "0.1.0"

__all__ = [
    "BettiVector", "Bullet", "CatExpr", "Component", "ComponentList", "Curve",
    "InvariantReport", "MultiplicityVector", "Opaque", "ParseError", "Partition",
    "PermModule", "Permutation", "PHANTOM", "Phantom", "POINT", "Point", "Sod",
    "Surface", "Sym", "SymCurve", "SymPower", "TruncatedSeries", "WeakComposition",
    "YoungPair", "betti_of", "blowup", "canonicalize", "component_count",
    "conjugacy_class_count", "cycle_type", "equal_components", "eta_inverse_power",
    "euler_char", "exceptional_length", "expand", "expand_tail_first",
    "gottsche_series", "hh_total_dim", "induction_invariance_check",
    "invariant_dimension", "invariant_report", "macdonald_poincare", "make_preset",
    "multiplicity_vectors", "parse_expr", "partition_count", "partitions_of",
    "phantom_audit", "q_length", "render", "render_text", "run_suites",
    "series_mul", "surface_literal", "sym_of_sod", "symmetric_group",
    "weak_compositions", "young_coset_reps", "young_subgroup",
]
