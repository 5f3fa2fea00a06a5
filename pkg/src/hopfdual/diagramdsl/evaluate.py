"""Environments, type checking and evaluation of diagram expressions."""
from __future__ import annotations

from dataclasses import dataclass

from ..category import VECT, BraidedCategory
from ..exactmath import (ShapeMismatch, Space, TypedMorphism, apply_kron, compose, kron,
                         split_index, dims_of)
from .syntax import Compose, Generator, Identity, TensorProduct, parse, to_source

HOPF_GENERATORS = ("mu", "eta", "Delta", "eps", "S", "Sinv")


class DiagramTypeError(TypeError):
    pass


class CategoryBraiding:
    """Braiding provider backed by a base braided category."""

    def __init__(self, category: BraidedCategory = VECT):
        self.category = category

    def __call__(self, x: Space, y: Space, inverse: bool) -> TypedMorphism:
        if inverse:
            return self.category.braid_inv((x,), (y,))
        return self.category.braid((x,), (y,))


class Environment:
    """Immutable binding of space names and generator morphisms.

    Generators are stored under keys such as ``"mu[A]"`` or ``"omega"``; their
    domain and codomain factor names are the names used by the type checker.
    ``braid[X,Y]`` and ``braidinv[X,Y]`` are produced by the braiding provider.
    """

    def __init__(self, spaces=None, gens=None, braiding=None, default=None):
        self.spaces: dict[str, Space] = dict(spaces or {})
        self.gens: dict[str, TypedMorphism] = dict(gens or {})
        self.braiding = braiding if braiding is not None else CategoryBraiding(VECT)
        self.default = default
        self._cache: dict = {}

    def _copy(self, **kw):
        env = Environment(self.spaces, self.gens, self.braiding, self.default)
        for k, v in kw.items():
            setattr(env, k, v)
        return env

    # -- extension ----------------------------------------------------
    def with_space(self, space: Space) -> Environment:
        env = self._copy()
        env.spaces[space.name] = space
        return env

    def with_generator(self, key: str, m: TypedMorphism) -> Environment:
        env = self._copy()
        for s in m.domain + m.codomain:
            env.spaces.setdefault(s.name, s)
        env.gens[key] = m
        return env

    def with_hopf(self, name: str, H, default: bool = False) -> Environment:
        """Bind mu[name], eta[name], ... for a Hopf algebra object."""
        A = H.space.renamed(name)
        env = self._copy()
        env.spaces[name] = A
        env.gens[f"mu[{name}]"] = H.mu.retype((A, A), (A,))
        env.gens[f"eta[{name}]"] = H.eta.retype((), (A,))
        env.gens[f"Delta[{name}]"] = H.Delta.retype((A,), (A, A))
        env.gens[f"eps[{name}]"] = H.eps.retype((A,), ())
        if getattr(H, "S", None) is not None:
            env.gens[f"S[{name}]"] = H.S.retype((A,), (A,))
        if getattr(H, "Sinv", None) is not None:
            env.gens[f"Sinv[{name}]"] = H.Sinv.retype((A,), (A,))
        if default:
            env.default = name
        return env

    def with_module(self, name: str, space: Space, algebra: str, rho=None, delta=None,
                    side: str = "left") -> Environment:
        """Bind act/coact (left) or ract/rcoact (right) for a module over ``algebra``."""
        X = space.renamed(name)
        A = self.spaces[algebra]
        env = self._copy()
        env.spaces[name] = X
        if side == "left":
            if rho is not None:
                env.gens[f"act[{name}]"] = rho.retype((A, X), (X,))
            if delta is not None:
                env.gens[f"coact[{name}]"] = delta.retype((X,), (A, X))
        else:
            if rho is not None:
                env.gens[f"ract[{name}]"] = rho.retype((X, A), (X,))
            if delta is not None:
                env.gens[f"rcoact[{name}]"] = delta.retype((X,), (X, A))
        return env

    def with_braiding(self, braiding) -> Environment:
        return self._copy(braiding=braiding)

    # -- lookup -------------------------------------------------------
    def space(self, name: str) -> Space:
        try:
            return self.spaces[name]
        except KeyError:
            raise DiagramTypeError(f"unknown space {name!r}") from None

    def lookup(self, gen: Generator) -> TypedMorphism:
        key = to_source(gen)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if gen.name in ("braid", "braidinv"):
            if len(gen.args) != 2:
                raise DiagramTypeError(f"{key}: braiding takes exactly two spaces")
            x, y = (self.space(a) for a in gen.args)
            m = self.braiding(x, y, gen.name == "braidinv")
            m = m.retype((x, y) if gen.name == "braid" else (y, x),
                         (y, x) if gen.name == "braid" else (x, y))
        elif key in self.gens:
            m = self.gens[key]
        elif not gen.args and gen.name in HOPF_GENERATORS and self.default is not None:
            m = self.lookup(Generator(gen.name, (self.default,)))
        else:
            raise DiagramTypeError(f"unknown generator {key!r}")
        self._cache[key] = m
        return m

    def identity(self, node: Identity) -> TypedMorphism:
        name = node.space if node.space is not None else self.default
        if name is None:
            raise DiagramTypeError("bare 'id' needs a default space in the environment")
        return TypedMorphism.identity((self.space(name),))


@dataclass(frozen=True)
class Typed:
    node: object
    dom: tuple
    cod: tuple
    kids: tuple = ()


def _names(spaces) -> tuple:
    return tuple(s.name for s in spaces)


def typecheck(expr, env: Environment) -> Typed:
    """Annotate every node with its domain and codomain factor names."""
    if isinstance(expr, str):
        expr = parse(expr)
    if isinstance(expr, Typed):
        return expr
    if isinstance(expr, Generator):
        m = env.lookup(expr)
        return Typed(expr, _names(m.domain), _names(m.codomain))
    if isinstance(expr, Identity):
        m = env.identity(expr)
        return Typed(expr, _names(m.domain), _names(m.codomain))
    if isinstance(expr, Compose):
        up, lo = typecheck(expr.upper, env), typecheck(expr.lower, env)
        if lo.cod != up.dom:
            raise DiagramTypeError(
                f"in '{to_source(expr)}': '{to_source(expr.lower)}' has codomain "
                f"[{', '.join(lo.cod)}] but '{to_source(expr.upper)}' expects "
                f"[{', '.join(up.dom)}]")
        return Typed(expr, lo.dom, up.cod, (up, lo))
    if isinstance(expr, TensorProduct):
        l, r = typecheck(expr.left, env), typecheck(expr.right, env)
        return Typed(expr, l.dom + r.dom, l.cod + r.cod, (l, r))
    raise DiagramTypeError(f"not an expression: {expr!r}")


def _tensor_factors(t: Typed) -> list:
    if isinstance(t.node, TensorProduct):
        return _tensor_factors(t.kids[0]) + _tensor_factors(t.kids[1])
    return [t]


def _compose_chain(t: Typed) -> list:
    if isinstance(t.node, Compose):
        return _compose_chain(t.kids[0]) + _compose_chain(t.kids[1])
    return [t]


def _eval(t: Typed, env: Environment) -> TypedMorphism:
    node = t.node
    if isinstance(node, Generator):
        return env.lookup(node)
    if isinstance(node, Identity):
        return env.identity(node)
    if isinstance(node, TensorProduct):
        return kron(*(_eval(f, env) for f in _tensor_factors(t)))
    chain = _compose_chain(t)
    m = _eval(chain[-1], env)
    for step in reversed(chain[:-1]):
        m = _apply(step, m, env)
    return m


def _apply(t: Typed, m: TypedMorphism, env: Environment) -> TypedMorphism:
    """Evaluate ``t . m`` without materialising Kronecker products."""
    node = t.node
    if isinstance(node, TensorProduct):
        return apply_kron([_eval(f, env) for f in _tensor_factors(t)], m)
    if isinstance(node, Compose):
        for step in reversed(_compose_chain(t)):
            m = _apply(step, m, env)
        return m
    return compose(_eval(t, env), m)


def eval_expr(expr, env: Environment) -> TypedMorphism:
    """Evaluate an expression (source string, AST or typed AST) to a matrix."""
    t = typecheck(expr, env)
    m = _eval(t, env)
    dom = tuple(env.space(n) for n in t.dom)
    cod = tuple(env.space(n) for n in t.cod)
    return m.retype(dom, cod)


@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    witness: dict | None = None

    def __bool__(self):
        return self.equal


def difference_witness(lhs: TypedMorphism, rhs: TypedMorphism) -> dict | None:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    r, c, x, y = diff
    return {
        "row": list(split_index(r, dims_of(lhs.codomain))),
        "col": list(split_index(c, dims_of(lhs.domain))),
        "codomain": [s.name for s in lhs.codomain],
        "domain": [s.name for s in lhs.domain],
        "lhs": str(x),
        "rhs": str(y),
    }


def check_equal(lhs, rhs, env: Environment) -> EqualityResult:
    """Exact equality of two expressions with a first-difference witness."""
    tl, tr = typecheck(lhs, env), typecheck(rhs, env)
    if (tl.dom, tl.cod) != (tr.dom, tr.cod):
        raise ShapeMismatch(
            f"types differ: [{', '.join(tl.dom)}] -> [{', '.join(tl.cod)}] versus "
            f"[{', '.join(tr.dom)}] -> [{', '.join(tr.cod)}]")
    ml, mr = eval_expr(tl, env), eval_expr(tr, env)
    w = difference_witness(ml, mr)
    return EqualityResult(w is None, w)
