"""Exact computations with the pointed Hopf algebras H_{n,q,N,nu}, their
deformations and the two-generator families U, with duals, Drinfeld doubles,
quasitriangular structures and isomorphism classification."""

from .cyclo import FieldElement, RootOfUnity, zeta
from .presentations import InvalidParams, Presentation, make_presentation
from .hopf import HopfData, build, build_cached, verify_hopf_axioms

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "RootOfUnity",
    "zeta",
    "InvalidParams",
    "Presentation",
    "make_presentation",
    "HopfData",
    "build",
    "build_cached",
    "verify_hopf_axioms",
]
