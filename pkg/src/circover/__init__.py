"""Exact toolkit for covering polyhedra of circular 0/1 matrices.

Everything runs over rational arithmetic: construction of instances and
their auxiliary digraph, membership and separation for the integer covering
hull, optimization slice by slice, circuit and minor inequalities, and a
brute-force oracle for cross-checking on small instances.
"""

from .errors import (
    BadParameters,
    BoundViolation,
    BudgetExceeded,
    CircoverError,
    DuplicateRow,
    EmptyColumnSet,
    InfeasiblePoint,
    IterationLimit,
    LimitExceeded,
    NegativeCoefficient,
    NegativeWeight,
    NoEssentialBullets,
    NonpositiveWinding,
    NotCirculantMinor,
    NotClosedPath,
    NotInterval,
    RedundantInequality,
    ReverseRowArcPresent,
)
from .rationals import (
    format_rational,
    format_rational_vector,
    parse_rational,
    parse_rational_vector,
)
from .matrices import (
    Circulant,
    CirculantMatch,
    CircularMatrix,
    Instance,
    SupportMatrix,
    circulant_isomorphic,
    circulant_matrix,
    circular_matrix,
    contract,
    cover_number,
    homogeneous_demands,
    interval_row,
    neighborhood_matrix,
    norm_col,
    web_neighborhoods,
)
from .digraph import (
    ARC_KINDS,
    FORWARD_ROW,
    FORWARD_SHORT,
    REVERSE_ROW,
    REVERSE_SHORT,
    Arc,
    AuxDigraph,
    CircuitEnumeration,
    ClosedPath,
    build_digraph,
    closed_path,
    enumerate_circuits,
    incidence_matrix,
)
from .lp import LPResult, lp_feasible, solve_lp
from .oracle import (
    DEFAULT_BUDGET,
    HullDescription,
    check_facet,
    check_validity,
    enumerate_minimal_covers,
    hull_facets,
    membership,
)
from .inequalities import (
    Block,
    BlockStructure,
    CandidateEnumeration,
    LinearInequality,
    MinorEnumeration,
    MinorWitness,
    NodeClasses,
    RowFamilyResult,
    bad_arcs,
    block_decomposition,
    circuit_inequality,
    classify_nodes,
    default_family_winding,
    enumerate_candidates_general,
    enumerate_circulant_minors,
    enumerate_facet_candidates,
    extract_minor,
    homogeneous_circuit_inequality,
    make_inequality,
    minor_inequalities,
    nonnegativity,
    row_family_inequality,
    row_inequalities,
)
from .separation import (
    CostAssignment,
    CutLoopResult,
    CutLoopStep,
    SeparationResult,
    assign_costs,
    cut_loop,
    negative_circuit,
    separate,
)
from .optimize import (
    OptimizationResult,
    SliceSolution,
    domination_solve,
    optimize,
    solve_slice,
)
from .jsonio import (
    inequality_json,
    load_instance,
    load_point,
    optimization_json,
    point_json,
    separation_json,
)

__version__ = "1.0.0"

__all__ = [
    "ARC_KINDS",
    "Arc",
    "AuxDigraph",
    "BadParameters",
    "Block",
    "BlockStructure",
    "BoundViolation",
    "BudgetExceeded",
    "CandidateEnumeration",
    "Circulant",
    "CirculantMatch",
    "CircuitEnumeration",
    "CircoverError",
    "CircularMatrix",
    "ClosedPath",
    "CostAssignment",
    "CutLoopResult",
    "CutLoopStep",
    "DEFAULT_BUDGET",
    "DuplicateRow",
    "EmptyColumnSet",
    "FORWARD_ROW",
    "FORWARD_SHORT",
    "HullDescription",
    "InfeasiblePoint",
    "Instance",
    "IterationLimit",
    "LPResult",
    "LimitExceeded",
    "LinearInequality",
    "MinorEnumeration",
    "MinorWitness",
    "NegativeCoefficient",
    "NegativeWeight",
    "NoEssentialBullets",
    "NodeClasses",
    "NonpositiveWinding",
    "NotCirculantMinor",
    "NotClosedPath",
    "NotInterval",
    "OptimizationResult",
    "REVERSE_ROW",
    "REVERSE_SHORT",
    "RedundantInequality",
    "ReverseRowArcPresent",
    "RowFamilyResult",
    "SeparationResult",
    "SliceSolution",
    "SupportMatrix",
    "assign_costs",
    "bad_arcs",
    "block_decomposition",
    "build_digraph",
    "check_facet",
    "check_validity",
    "circuit_inequality",
    "circulant_isomorphic",
    "circulant_matrix",
    "circular_matrix",
    "classify_nodes",
    "closed_path",
    "contract",
    "cover_number",
    "cut_loop",
    "default_family_winding",
    "domination_solve",
    "enumerate_candidates_general",
    "enumerate_circuits",
    "enumerate_circulant_minors",
    "enumerate_facet_candidates",
    "enumerate_minimal_covers",
    "extract_minor",
    "format_rational",
    "format_rational_vector",
    "homogeneous_circuit_inequality",
    "homogeneous_demands",
    "hull_facets",
    "incidence_matrix",
    "inequality_json",
    "interval_row",
    "load_instance",
    "load_point",
    "lp_feasible",
    "make_inequality",
    "membership",
    "minor_inequalities",
    "negative_circuit",
    "neighborhood_matrix",
    "nonnegativity",
    "norm_col",
    "optimization_json",
    "optimize",
    "parse_rational",
    "parse_rational_vector",
    "point_json",
    "row_family_inequality",
    "row_inequalities",
    "separate",
    "separation_json",
    "solve_lp",
    "solve_slice",
    "web_neighborhoods",
]
