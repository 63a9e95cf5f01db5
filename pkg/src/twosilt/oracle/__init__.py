"""Brute-force module-level oracle on small Dynkin types."""

from .algebra import ALLOWED_TYPES, AlgebraRep, BasisElement, build_algebra
from .checks import (
    ElementRecord,
    OracleReport,
    SupportTauPair,
    end_dimension,
    enumerate_stt,
    g_matrix_oracle,
    nu_g_matrix,
    nu_stable_check,
    verify,
)
from .ideals import Ideal, full_ideal, ideal_gen, ideal_module, ideal_mult, ideal_of_word, piece
from .modules import (
    ModuleRep,
    decompose,
    direct_sum,
    hom_dim,
    hom_space,
    isomorphic,
    min_presentation,
    nu,
    projective_module,
    regular_module,
    simple_module,
    tau,
    tau_rigid_check,
    zero_module,
)

__all__ = [
    "ALLOWED_TYPES",
    "AlgebraRep",
    "BasisElement",
    "build_algebra",
    "ElementRecord",
    "OracleReport",
    "SupportTauPair",
    "end_dimension",
    "enumerate_stt",
    "g_matrix_oracle",
    "nu_g_matrix",
    "nu_stable_check",
    "verify",
    "Ideal",
    "full_ideal",
    "ideal_gen",
    "ideal_module",
    "ideal_mult",
    "ideal_of_word",
    "piece",
    "ModuleRep",
    "decompose",
    "direct_sum",
    "hom_dim",
    "hom_space",
    "isomorphic",
    "min_presentation",
    "nu",
    "projective_module",
    "regular_module",
    "simple_module",
    "tau",
    "tau_rigid_check",
    "zero_module",
]
