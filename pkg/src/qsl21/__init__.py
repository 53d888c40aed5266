"""Exact construction and verification of the finite dimensional
irreducible representations of a rank-two quantum superalgebra at roots of
unity, together with a mechanical audit of its centre structure."""

from .cyclo import CycloScalar, FieldError, cyclo, rat
from .families import (Gl2Module, atypical_mu2, atypical_periodic,
                       atypical_sum, classify, expected_casimir_scalar,
                       gl2_nilpotent, gl2_periodic, induce,
                       sample_typical_periodic, typical_nilpotent,
                       typical_periodic)
from .linalg import EchelonBasis, Matrix
from .modules import (CentreReport, ModuleError, ModuleRep, centre_identity,
                      complete_set_rank, psi_module)
from .pbw import (AlgebraElement, PBWMonomial, apply_psi, casimir_element,
                  central_powers, defining_relations, from_word,
                  monomial_window)
from .qkernel import (DomainError, QContext, centre_poly, chebyshev1,
                      qbracket, qint)

__all__ = [
    "AlgebraElement", "CentreReport", "CycloScalar", "DomainError",
    "EchelonBasis", "FieldError", "Gl2Module", "Matrix", "ModuleError",
    "ModuleRep", "PBWMonomial", "QContext", "apply_psi", "atypical_mu2",
    "atypical_periodic", "atypical_sum", "casimir_element", "central_powers",
    "centre_identity", "centre_poly", "chebyshev1", "classify",
    "complete_set_rank", "cyclo", "defining_relations",
    "expected_casimir_scalar", "from_word", "gl2_nilpotent", "gl2_periodic",
    "induce", "monomial_window", "psi_module", "qbracket", "qint", "rat",
    "sample_typical_periodic", "typical_nilpotent", "typical_periodic",
]

__version__ = "0.1.0"
