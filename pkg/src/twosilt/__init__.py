"""twosilt: two-term silting/tilting combinatorics for preprojective algebras
of Dynkin type.

The package classifies two-term silting complexes by Weyl-group g-matrices,
distinguishes the tilting ones through the Nakayama involution and the folded
graph, names tilting complexes by Garside normal forms in the folded braid
group, and cross-validates the matrix calculus against an explicit
module-level oracle on small types.
"""

from .dynkin import DynkinGraph, FoldedGraph, build_dynkin, compute_iota, fold, weyl_order
from .errors import CapExceededError, InvariantError, OracleCapError
from .weyl import (
    DEFAULT_CAP,
    GMatrix,
    WeylElement,
    WeylGroup,
    enumerate_group,
    fixed_subgroup,
    g_of_word,
    iota_conjugate,
    reflection_matrix,
    verify_folded_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "DynkinGraph",
    "FoldedGraph",
    "build_dynkin",
    "compute_iota",
    "fold",
    "weyl_order",
    "CapExceededError",
    "InvariantError",
    "OracleCapError",
    "DEFAULT_CAP",
    "GMatrix",
    "WeylElement",
    "WeylGroup",
    "enumerate_group",
    "fixed_subgroup",
    "g_of_word",
    "iota_conjugate",
    "reflection_matrix",
    "verify_folded_presentation",
    "__version__",
]
