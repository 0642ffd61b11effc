"""Quaternionic representations of real simple Lie algebras and the
integrability verdicts built on their dimensions."""

__version__ = "0.1.0"

from .classify import (
    HRepDescriptor,
    HRepKind,
    RepClass,
    classify_irrep,
    classify_product,
    galois_conjugate_weight,
    irreducible_hrep,
)
from .freudenthal import freudenthal_dim
from .minrep import MinRepResult, minimal_quaternionic_rep, verify_table3
from .realforms import IndexClassification, RealForm, index_classification, lookup_real_form
from .rootsys import DominantWeight, LieType, RootSystem, algebra_real_dim, build_root_system, weyl_dim
from .spaces import (
    Outcome,
    SymmetricSpace,
    Verdict,
    check_affine_e7,
    check_bound,
    check_exceptional_transitive,
    check_qk_symmetric,
    qk_catalog,
)
from .witness import AntiinvolutionWitness, build_antiinvolution_witness

__all__ = [
    "AntiinvolutionWitness", "DominantWeight", "HRepDescriptor", "HRepKind", "IndexClassification",
    "LieType", "MinRepResult", "Outcome", "RealForm", "RepClass", "RootSystem", "SymmetricSpace",
    "Verdict", "algebra_real_dim", "build_antiinvolution_witness", "build_root_system",
    "check_affine_e7", "check_bound", "check_exceptional_transitive", "check_qk_symmetric",
    "classify_irrep", "classify_product", "freudenthal_dim", "galois_conjugate_weight",
    "index_classification", "irreducible_hrep", "lookup_real_form", "minimal_quaternionic_rep",
    "qk_catalog", "verify_table3", "weyl_dim",
]
