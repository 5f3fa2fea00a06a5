"""Exact cyclotomic scalars and sparse typed matrices."""
from fractions import Fraction as Rational

from .cyclotomic import (CycScalar, ZeroInverse, cyclotomic_polynomial, cyc_canonicalize,
                         cyc_inv, parse_scalar, scalar_literal, format_scalar, totient, ONE, ZERO)
from .linalg import (Space, TypedMorphism, NotInSpan, NotInvertible, ShapeMismatch, kron,
                     compose, apply_kron, permute_factors, rref, rref_kernel, rank, inverse,
                     solve_in_span, SpanSolver, split_index, join_index, dims_of)
