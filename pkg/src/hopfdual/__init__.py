"""Exact computations with Hopf algebras in braided categories.

Partial dualization of split Hopf algebras, Radford biproducts, Yetter-Drinfeld
modules and Nichols algebras of diagonal type, all over cyclotomic fields.
"""
from .exactmath import CycScalar, Space, TypedMorphism
from .hopfcore import HopfAlgebra, HopfPairing, verify_hopf, verify_pairing
from .report import Report, VerificationError
from .ydcat import YDModule, verify_yd
from .radford import biproduct, coinvariants
from .partialdual import make_datum, partial_dualize, involutivity_check, transport_yd_module
from .nichols import DiagonalBraiding, hilbert_series, cartan_matrix, reflect
from .catalog import catalog_build
from .serialize import load, save, SchemaError

__all__ = ["CycScalar", "Space", "TypedMorphism", "HopfAlgebra", "HopfPairing", "verify_hopf",
           "verify_pairing", "Report", "VerificationError", "YDModule", "verify_yd", "biproduct",
           "coinvariants", "make_datum", "partial_dualize", "involutivity_check",
           "transport_yd_module", "DiagonalBraiding", "hilbert_series", "cartan_matrix",
           "reflect", "catalog_build", "load", "save", "SchemaError"]
