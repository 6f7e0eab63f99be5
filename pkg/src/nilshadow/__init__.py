"""Exact toolkit for semisimple splittings, nilshadows, and simply
transitive NIL-affine actions of solvable Lie algebras."""

from .scalars import Q, Scalar, MixedFieldError, parse_scalar
from .polynomials import Polynomial, UnfactorablePolynomialError, squarefree_part
from .linalg import Matrix, Vector, charpoly, kernel, rank, solve_linear
from .jordan import JordanPair, is_nilpotent, is_semisimple, jordan_chevalley
from .liealg import (
    LieAlgebra,
    Subspace,
    center,
    centralizer,
    commutator_subalgebra,
    derivation_space,
    derived_series,
    identify_nilpotent_dim_le4,
    lower_central_series,
    nilpotent_fingerprint,
    nilradical,
)
from .affine import AffineAlgebra, AffineElement, LieMorphism
from .splitting import SemisimpleSplitting, build_splitting, nilshadow_class, splitting_complement
from .transitivity import (
    TransitivityReport,
    Verdict,
    check_simply_transitive,
    commuting_pair_feasible,
    compute_u,
    derivation_spectrum_feasible,
    spectrum_match,
)
from .catalog import Catalog, default_catalog
from .existence import check_pair

__version__ = "0.1.0"

__all__ = [
    "Q",
    "Scalar",
    "MixedFieldError",
    "parse_scalar",
    "Polynomial",
    "UnfactorablePolynomialError",
    "squarefree_part",
    "Matrix",
    "Vector",
    "charpoly",
    "kernel",
    "rank",
    "solve_linear",
    "JordanPair",
    "is_nilpotent",
    "is_semisimple",
    "jordan_chevalley",
    "LieAlgebra",
    "Subspace",
    "center",
    "centralizer",
    "commutator_subalgebra",
    "derivation_space",
    "derived_series",
    "identify_nilpotent_dim_le4",
    "lower_central_series",
    "nilpotent_fingerprint",
    "nilradical",
    "AffineAlgebra",
    "AffineElement",
    "LieMorphism",
    "SemisimpleSplitting",
    "build_splitting",
    "nilshadow_class",
    "splitting_complement",
    "TransitivityReport",
    "Verdict",
    "check_simply_transitive",
    "commuting_pair_feasible",
    "compute_u",
    "derivation_spectrum_feasible",
    "spectrum_match",
    "Catalog",
    "default_catalog",
    "check_pair",
]
