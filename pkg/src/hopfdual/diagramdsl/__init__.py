"""A small language for string diagrams in a braided monoidal category."""
from .syntax import (Compose, DiagramSyntaxError, Generator, Identity, TensorProduct, parse,
                     to_source)
from .evaluate import (CategoryBraiding, DiagramTypeError, Environment, EqualityResult, Typed,
                       check_equal, difference_witness, eval_expr, typecheck)

print_expr = to_source
