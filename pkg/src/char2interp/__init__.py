"""Exact regularity decisions for bivariate interpolation in characteristic 2."""

from .derive import DerivedSet, derive, four_lift_cells, lift_pairs, lifts
from .diagram import (
    BlockCheck,
    Diagram,
    DivisionReport,
    block_support,
    parse_diagram,
    serialize_diagram,
    verify_division,
)
from .gf2 import Gf2kElement, Gf2Matrix, Gf2Vector, det_gf2k, kernel_basis, rank
from .lattice import (
    LucasVector,
    Point,
    PointMultiset,
    binom_mod2,
    box,
    degree_order_index,
    lucas_vector,
    parse_points,
    reduce_mod,
    triangle,
)
from .regularity import (
    KernelSolution,
    TauSplit,
    TheoremVerdict,
    TripleWitness,
    corollary1_filter,
    corollary2_filter,
    dependency_to_triple,
    is_m_independent,
    m_independence,
    minimal_dependent_subset,
    tau_decompose,
    theorem_check,
    triple_to_dependency,
)
from .scheme import (
    EvaluatedMatrix,
    McVerdict,
    Scheme,
    almost_regular_mc,
    build_matrix,
    parse_scheme,
    parse_scheme_file,
    single_point_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "BlockCheck",
    "DerivedSet",
    "Diagram",
    "DivisionReport",
    "EvaluatedMatrix",
    "Gf2Matrix",
    "Gf2Vector",
    "Gf2kElement",
    "KernelSolution",
    "LucasVector",
    "McVerdict",
    "Point",
    "PointMultiset",
    "Scheme",
    "TauSplit",
    "TheoremVerdict",
    "TripleWitness",
    "almost_regular_mc",
    "binom_mod2",
    "block_support",
    "box",
    "build_matrix",
    "corollary1_filter",
    "corollary2_filter",
    "degree_order_index",
    "dependency_to_triple",
    "derive",
    "det_gf2k",
    "four_lift_cells",
    "is_m_independent",
    "kernel_basis",
    "lift_pairs",
    "lifts",
    "lucas_vector",
    "m_independence",
    "minimal_dependent_subset",
    "parse_diagram",
    "parse_points",
    "parse_scheme",
    "parse_scheme_file",
    "rank",
    "reduce_mod",
    "serialize_diagram",
    "single_point_consistency",
    "tau_decompose",
    "theorem_check",
    "triangle",
    "triple_to_dependency",
    "verify_division",
]
