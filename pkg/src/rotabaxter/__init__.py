"""Exact Rota-Baxter Lie algebras, factorizable Lie bialgebras, matched pairs
and Manin triples, with a numeric check of the Iwasawa factorization of
SL(n, C)."""

__version__ = "0.1.0"

from .core import LieAlgebra, Representation, check_jacobi
from .errors import InternalInconsistency, RotaBaxterError
from .kernels import BACKEND, available_backends
from .report import CheckReport
from .rota_baxter import QuadraticRBStructure, RotaBaxterStructure, check_quadratic, check_rota_baxter

__all__ = [
    "BACKEND",
    "CheckReport",
    "InternalInconsistency",
    "LieAlgebra",
    "QuadraticRBStructure",
    "Representation",
    "RotaBaxterError",
    "RotaBaxterStructure",
    "available_backends",
    "check_jacobi",
    "check_quadratic",
    "check_rota_baxter",
]
