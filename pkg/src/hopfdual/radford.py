"""Radford biproducts and the projection theorem.

A Hopf algebra K in YD over A gives K x| A in the base category; conversely a
split projection pi: H -> A with section iota recovers K as the right
coinvariants of pi, with H = K x| A.  Yetter-Drinfeld modules over K x| A
correspond to YD modules over K inside YD over A (``yd_nest``/``yd_unnest``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .category import lattice_add
from .diagramdsl import Environment, difference_witness, eval_expr
from .diagramdsl.evaluate import CategoryBraiding
from .exactmath import (NotInSpan, Space, SpanSolver, TypedMorphism, dims_of, join_index,
                        kron, rref_kernel, split_index)
from .hopfcore import Ambient, HopfAlgebra, YDOver, is_hopf_isomorphism, is_hopf_morphism, solve_antipode
from .report import Report
from .ydcat import YDModule, verify_yd


class ClosureViolation(ValueError):
    """A structure map of the coinvariants left their span."""


class NotAProjection(ValueError):
    pass


class NotASection(ValueError):
    pass


def _base_env(A: HopfAlgebra) -> Environment:
    if A.ambient.over is not None:
        raise ValueError(f"{A.name} must live in a base category")
    return Environment(braiding=CategoryBraiding(A.ambient.category)).with_hopf("A", A)


def _tensor_space(name, spaces) -> Space:
    dim = 1
    for s in spaces:
        dim *= s.dim
    degs = None
    if all(s.degrees is not None for s in spaces):
        degs = []
        for idx in range(dim):
            parts = split_index(idx, dims_of(spaces))
            d = None
            for s, i in zip(spaces, parts):
                d = s.degrees[i] if d is None else lattice_add(d, s.degrees[i])
            degs.append(d)
        degs = tuple(degs)
    return Space(name, dim, degs)


# -- biproduct ---------------------------------------------------------------------

BIPRODUCT_MU = ("(mu[K] * mu[A]) . (id[K] * act[K] * id[A] * id[A])"
                " . (id[K] * id[A] * braid[A,K] * id[A]) . (id[K] * Delta[A] * id[K] * id[A])")
BIPRODUCT_DELTA = ("(id[K] * mu[A] * id[K] * id[A]) . (id[K] * id[A] * braid[K,A] * id[A])"
                   " . (id[K] * coact[K] * id[A] * id[A]) . (Delta[K] * Delta[A])")
# S(k (x) a) = (1 (x) S_A(k_(-1) a)) (S_K(k_(0)) (x) 1)
BIPRODUCT_S = ("(act[K] * id[A]) . (id[A] * braid[A,K]) . (Delta[A] * id[K]) . (S[A] * S[K])"
               " . (mu[A] * id[K]) . (id[A] * braid[K,A]) . (coact[K] * id[A])")


@dataclass
class BiproductPresentation:
    K: HopfAlgebra
    A: HopfAlgebra
    result: HopfAlgebra
    pi: TypedMorphism        # K x| A -> A, eps_K (x) id
    injection: TypedMorphism  # A -> K x| A, a -> 1 (x) a
    k_inclusion: TypedMorphism  # K -> K x| A, k -> k (x) 1
    report: Report = field(default_factory=Report)


def biproduct_env(K: HopfAlgebra, A: HopfAlgebra) -> Environment:
    if K.ambient.over is not A:
        raise ValueError(f"{K.name} is not a Hopf algebra in YD over {A.name}")
    env = _base_env(A).with_hopf("K", K)
    return env.with_module("K", K.space, "A", K.yd[0], K.yd[1])


def biproduct(K: HopfAlgebra, A: HopfAlgebra, name: str | None = None) -> BiproductPresentation:
    """K x| A with the smash product and smash coproduct; the antipode comes
    from the diagram and is cross-checked against the convolution solver."""
    name = name or f"{K.name}x{A.name}"
    env = biproduct_env(K, A)
    sp = _tensor_space(name, [K.space, A.space])
    H = (sp,)
    mu = eval_expr(BIPRODUCT_MU, env).retype(H + H, H)
    Delta = eval_expr(BIPRODUCT_DELTA, env).retype(H, H + H)
    eta = kron(K.eta, A.eta).retype((), H)
    eps = kron(K.eps, A.eps).retype(H, ())
    S = eval_expr(BIPRODUCT_S, env).retype(H, H)
    labels = [_pair_label(a, b) for a in K.labels for b in A.labels]
    rep = Report()

    # bialgebra first, so the antipode can be solved independently
    bare = HopfAlgebra(name, sp, mu, eta, Delta, eps, S, ambient=Ambient(A.ambient.category),
                       labels=labels, verify=False)
    solved = solve_antipode(bare)
    w = difference_witness(S, solved)
    rep.add("antipode_diagram_matches_solver", w is None, w)
    R = HopfAlgebra(name, sp, mu, eta, Delta, eps, S, ambient=Ambient(A.ambient.category),
                    labels=labels, verify=True)
    iK, iA = TypedMorphism.identity((K.space,)), TypedMorphism.identity((A.space,))
    pi = kron(K.eps, iA).retype(H, (A.space,))
    inj = kron(K.eta, iA).retype((A.space,), H)
    kinc = kron(iK, A.eta).retype((K.space,), H)
    rep.extend(is_hopf_morphism(pi, R, A), prefix="pi:")
    rep.extend(is_hopf_morphism(inj, A, R), prefix="injection:")
    w = difference_witness(pi @ inj, iA)
    rep.add("pi_after_injection", w is None, w)
    return BiproductPresentation(K, A, R, pi, inj, kinc, rep)


def _pair_label(k: str, a: str) -> str:
    if a == "1":
        return k
    if k == "1":
        return a
    return f"{k}*{a}"


# -- coinvariants ------------------------------------------------------------------

def check_projection(H: HopfAlgebra, A: HopfAlgebra, pi, iota) -> Report:
    """pi and iota are Hopf morphisms with pi iota = id."""
    rep = Report()
    rep.extend(is_hopf_morphism(pi, H, A), prefix="pi:")
    rep.extend(is_hopf_morphism(iota, A, H), prefix="iota:")
    w = difference_witness(pi.retype((H.space,), (A.space,)) @ iota.retype((A.space,), (H.space,)),
                           TypedMorphism.identity((A.space,)))
    rep.add("pi_iota_identity", w is None, w)
    return rep


def require_projection(H, A, pi, iota):
    rep = check_projection(H, A, pi, iota)
    bad = [c.name for c in rep.failures]
    if any(n.startswith("pi:") for n in bad):
        raise NotAProjection(f"pi is not a Hopf algebra map {H.name} -> {A.name}: fails {bad}")
    if bad:
        raise NotASection(f"iota is not a Hopf section of pi: fails {bad}")
    return rep


@dataclass
class CoinvariantDecomposition:
    H: HopfAlgebra
    A: HopfAlgebra
    pi: TypedMorphism
    iota: TypedMorphism
    K: HopfAlgebra
    inclusion: TypedMorphism
    biproduct: BiproductPresentation
    reassembly: TypedMorphism  # K x| A -> H, k (x) a -> k iota(a)
    report: Report


class _Reexpress:
    """Rewrite H-legs of tensors in coordinates of the coinvariant basis."""

    def __init__(self, kernel, Hsp: Space, Ksp: Space):
        self.solver = SpanSolver(kernel)
        self.H, self.K = Hsp, Ksp

    def vector(self, v: dict, what: str) -> dict:
        try:
            return self.solver.solve(v)
        except NotInSpan:
            raise ClosureViolation(f"{what} leaves the coinvariant subspace") from None

    def morphism(self, m: TypedMorphism, positions, what: str, domain) -> TypedMorphism:
        """m with codomain legs at ``positions`` (all of type H) re-expressed in K."""
        cod = list(m.codomain)
        dims = list(dims_of(cod))
        cols = {}
        for c, vec in m.cols.items():
            for pos in positions:
                groups: dict = {}
                for r, x in vec.items():
                    parts = list(split_index(r, dims))
                    h = parts[pos]
                    parts[pos] = 0
                    groups.setdefault(tuple(parts), {})[h] = x
                out = {}
                new_dims = dims[:pos] + [self.K.dim] + dims[pos + 1:]
                for key, hv in groups.items():
                    for kidx, x in self.vector(hv, what).items():
                        parts = list(key)
                        parts[pos] = kidx
                        out[join_index(parts, new_dims)] = x
                vec = out
                dims = new_dims
            if vec:
                cols[c] = vec
            dims = list(dims_of(cod))
        for pos in positions:
            cod[pos] = self.K
        return TypedMorphism(tuple(domain), tuple(cod), cols)


COINVARIANT_ACTION = ("mu[H] . (mu[H] * id[H]) . (iota * incl * (iota . S[A]))"
                      " . (id[A] * braid[A,K]) . (Delta[A] * id[K])")
COINVARIANT_COACTION = "(pi * id[H]) . Delta[H] . incl"
COINVARIANT_DELTA = ("(mu[H] * id[H]) . (id[H] * (iota . pi . S[H]) * id[H]) . (Delta[H] * id[H])"
                     " . Delta[H] . incl")
COINVARIANT_S = "mu[H] . ((iota . pi) * S[H]) . Delta[H] . incl"


def coinvariants(H: HopfAlgebra, A: HopfAlgebra, pi: TypedMorphism, iota: TypedMorphism,
                 name: str = "K") -> CoinvariantDecomposition:
    """Coinvariants of a split Hopf projection as a Hopf algebra in YD over A,
    with the reassembly isomorphism K x| A -> H verified."""
    rep = Report()
    rep.extend(require_projection(H, A, pi, iota), prefix="projection:")
    env = _base_env(A).with_hopf("H", H)
    Hs, As = env.spaces["H"], env.spaces["A"]
    env = env.with_generator("pi", pi.retype((Hs,), (As,)))
    env = env.with_generator("iota", iota.retype((As,), (Hs,)))
    coinv = eval_expr("(id[H] * pi) . Delta[H]", env) - eval_expr("id[H] * eta[A]", env)
    _, kernel = rref_kernel(coinv)
    kernel = _canonical_basis(kernel)
    degrees = None
    if H.degrees is not None:
        degrees = []
        for v in kernel:
            ds = {H.degrees[i] for i in v}
            if len(ds) != 1:
                raise ClosureViolation("coinvariants are not spanned by homogeneous elements")
            degrees.append(ds.pop())
        degrees = tuple(degrees)
    Ksp = Space(name, len(kernel), degrees)
    incl = TypedMorphism.from_columns((Ksp,), (H.space,), kernel)
    rx = _Reexpress(kernel, H.space, Ksp)
    Kenv = Ksp.renamed("K")
    env = env.with_space(Kenv).with_generator("incl", incl.retype((Kenv,), (Hs,)))
    K1 = (Ksp,)
    mu = rx.morphism(H.mu @ kron(incl, incl), [0], "multiplication", K1 + K1)
    eta = rx.morphism(H.eta, [0], "unit", ())
    eps = H.eps @ incl
    Delta = rx.morphism(eval_expr(COINVARIANT_DELTA, env), [0, 1], "comultiplication", K1)
    S = rx.morphism(eval_expr(COINVARIANT_S, env), [0], "antipode", K1)
    rho = rx.morphism(eval_expr(COINVARIANT_ACTION, env), [0], "adjoint action",
                      (A.space, Ksp))
    delta = rx.morphism(eval_expr(COINVARIANT_COACTION, env), [1], "coaction", K1)
    labels = [_vector_label(v, H.labels) for v in kernel]
    K = HopfAlgebra(name, Ksp, mu, eta, Delta, eps, S, ambient=YDOver(A), yd=(rho, delta),
                    labels=labels, verify=True)
    bp = biproduct(K, A)
    rep.extend(bp.report, prefix="biproduct:")
    phi = (H.mu @ kron(incl, iota.retype((A.space,), (H.space,)))).retype(
        (bp.result.space,), (H.space,))
    rep.extend(is_hopf_isomorphism(phi, bp.result, H), prefix="reassembly:")
    return CoinvariantDecomposition(H, A, pi, iota, K, incl, bp, phi, rep)


def _canonical_basis(kernel):
    """Reduced echelon form of the kernel vectors (scaled so pivots are 1)."""
    out = []
    for v in kernel:
        p = min(v)
        inv = v[p].inverse()
        out.append({k: x * inv for k, x in v.items()})
    out.sort(key=min)
    return out


def _vector_label(v: dict, labels) -> str:
    if len(v) == 1:
        (i, x), = v.items()
        if x.is_one:
            return labels[i]
    parts = []
    for i, x in sorted(v.items()):
        parts.append(labels[i] if x.is_one else f"({x})*{labels[i]}")
    return " + ".join(parts)


# -- nesting Yetter-Drinfeld modules ----------------------------------------------------

def yd_nest(M: YDModule, bp: BiproductPresentation) -> YDModule:
    """A YD module over K x| A as a YD module over K inside YD over A.

    The result is a YDModule over K whose ``base`` carries the A-structure.
    """
    if M.over is not bp.result or M.side != "left":
        raise ValueError("yd_nest expects a left YD module over the biproduct")
    X = M.space
    iX = TypedMorphism.identity((X,))
    rho_A = M.rho @ kron(bp.injection, iX)
    delta_A = kron(bp.pi, iX) @ M.delta
    rho_K = M.rho @ kron(bp.k_inclusion, iX)
    Ks, As = bp.K.space, bp.A.space
    delta_K = (kron(TypedMorphism.identity((Ks,)), bp.A.eps, iX)
               @ M.delta.retype((X,), (Ks, As, X)))
    base = YDModule(bp.A, X, rho_A, delta_A)
    return YDModule(bp.K, X, rho_K, delta_K, "left", base)


def yd_unnest(N: YDModule, bp: BiproductPresentation) -> YDModule:
    """Inverse of yd_nest: rho = rho_K (id (x) rho_A), delta = (id (x) delta_A) delta_K."""
    if N.base is None:
        raise ValueError("yd_unnest needs the A-level structure in ``base``")
    X = N.space
    Ks = bp.K.space
    iK = TypedMorphism.identity((Ks,))
    rho = N.rho.retype((Ks, X), (X,)) @ kron(iK, N.base.rho)
    delta = kron(iK, N.base.delta) @ N.delta
    Hs = bp.result.space
    return YDModule(bp.result, X, rho.retype((Hs, X), (X,)), delta.retype((X,), (Hs, X)))


def nest_checks(M: YDModule, bp: BiproductPresentation) -> Report:
    """Nested layers are YD and the round trip is exact."""
    rep = Report()
    N = yd_nest(M, bp)
    rep.extend(verify_yd(N), prefix="nested:")
    back = yd_unnest(N, bp)
    w = difference_witness(back.rho, M.rho) or difference_witness(back.delta, M.delta)
    rep.add("unnest_nest_identity", w is None, w)
    again = yd_nest(back, bp)
    w = (difference_witness(again.rho, N.rho) or difference_witness(again.delta, N.delta)
         or difference_witness(again.base.rho, N.base.rho)
         or difference_witness(again.base.delta, N.base.delta))
    rep.add("nest_unnest_identity", w is None, w)
    return rep
