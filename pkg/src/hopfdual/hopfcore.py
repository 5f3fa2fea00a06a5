"""Hopf algebras and Hopf pairings in a braided ambient category.

The ambient is either a base category (plain or graded vector spaces) or the
category of left Yetter-Drinfeld modules over a Hopf algebra living in a base
category.  All axioms are checked exactly by evaluating diagram expressions.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .category import VECT, BraidedCategory
from .diagramdsl import Environment, check_equal, eval_expr, difference_witness
from .diagramdsl.evaluate import CategoryBraiding
from .exactmath import (ONE, ZERO, CycScalar, NotInSpan, NotInvertible, Space, TypedMorphism,
                        inverse, kron)
from .exactmath.linalg import _rref_rows
from .report import Report


class NoAntipode(ValueError):
    pass


class Degenerate(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Ambient:
    """Where a Hopf algebra lives.

    ``over is None`` means the base category itself; otherwise the ambient is
    left Yetter-Drinfeld modules over ``over``.  ``reversed`` replaces the
    braiding c_{X,Y} by (c_{Y,X})^{-1}.
    """
    category: BraidedCategory = VECT
    over: object = None
    reversed: bool = False

    def reverse(self) -> Ambient:
        return Ambient(self.category, self.over, not self.reversed)

    @property
    def is_base(self) -> bool:
        return self.over is None

    def describe(self) -> str:
        base = repr(self.category)
        if self.over is not None:
            base = f"YD over {self.over.name} in {base}"
        return base + (" (reversed)" if self.reversed else "")


def BaseVect() -> Ambient:
    return Ambient(VECT)


def YDOver(A) -> Ambient:
    return Ambient(A.ambient.category, A)


class ReversedBraiding:
    """Braiding c'_{X,Y} = (c_{Y,X})^{-1} built from another provider."""

    def __init__(self, inner):
        self.inner = inner

    def __call__(self, x, y, inverse):
        return self.inner(y, x, not inverse)


class YDBraiding:
    """Yetter-Drinfeld braiding over A for objects with registered structures.

    c_{X,Y} = (rho_Y (x) id_X)(id_A (x) c_{X,Y})(delta_X (x) id_Y), and the
    inverse uses the inverse antipode of A.
    """

    def __init__(self, A, structures: dict, category: BraidedCategory):
        self.A = A
        self.structures = structures
        self.category = category

    def _struct(self, space):
        try:
            return self.structures[space.name]
        except KeyError:
            raise KeyError(f"no Yetter-Drinfeld structure registered for {space.name!r}") from None

    def __call__(self, x, y, inverse):
        rho_y = self._struct(y)[0]
        delta_x = self._struct(x)[1]
        return yd_braiding_matrix(self.A, x, y, rho_y, delta_x, self.category, inverse)


def yd_braiding_matrix(A, x: Space, y: Space, rho_y, delta_x, category, inverse=False):
    """c^YD_{X,Y}: X (x) Y -> Y (x) X, or its inverse Y (x) X -> X (x) Y."""
    Asp = A.space
    idx, idy = TypedMorphism.identity((x,)), TypedMorphism.identity((y,))
    if not inverse:
        m = kron(delta_x, idy)
        m = kron(TypedMorphism.identity((Asp,)), category.braid((x,), (y,))) @ m
        return (kron(rho_y, idx) @ m).retype((x, y), (y, x))
    m = kron(idy, delta_x)
    m = kron(idy, A.Sinv, idx) @ m
    m = kron(category.braid_inv((Asp,), (y,)), idx) @ m
    m = kron(rho_y, idx) @ m
    return (category.braid_inv((x,), (y,)) @ m).retype((y, x), (x, y))


def braiding_provider(ambient: Ambient, structures: dict | None = None):
    if ambient.over is None:
        prov = CategoryBraiding(ambient.category)
    else:
        prov = YDBraiding(ambient.over, structures or {}, ambient.category)
    return ReversedBraiding(prov) if ambient.reversed else prov


class HopfAlgebra:
    """Hopf algebra object given by exact structure matrices.

    The constructor computes a missing antipode, inverts it, and runs
    ``verify_hopf`` (disable with ``verify=False``); it refuses objects that
    fail any axiom.
    """

    def __init__(self, name, space: Space, mu, eta, Delta, eps, S=None, *,
                 ambient: Ambient | None = None, yd=None, labels=None, verify=True):
        self.name = name
        self.space = space
        A = (space,)
        self.mu = mu.retype(A + A, A)
        self.eta = eta.retype((), A)
        self.Delta = Delta.retype(A, A + A)
        self.eps = eps.retype(A, ())
        self.ambient = ambient if ambient is not None else Ambient(VECT)
        self.yd = None if yd is None else (yd[0].retype((self.ambient.over.space, space), A),
                                           yd[1].retype(A, (self.ambient.over.space, space)))
        if self.ambient.over is not None and self.yd is None:
            raise ValueError("a Hopf algebra in a Yetter-Drinfeld ambient needs its structure")
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(space.dim)]
        if S is None:
            S = solve_antipode(self)
        self.S = S.retype(A, A)
        try:
            self.Sinv = inverse(self.S).retype(A, A)
        except NotInvertible:
            raise NotInvertible(f"antipode of {name} is not invertible") from None
        if verify:
            verify_hopf(self).require(f"Hopf axioms for {name}")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def degrees(self):
        return self.space.degrees

    def __repr__(self):
        return f"<HopfAlgebra {self.name} dim={self.dim} in {self.ambient.describe()}>"

    def renamed(self, name: str) -> HopfAlgebra:
        return self.replace(name=name, space=self.space.renamed(name))

    def replace(self, **kw) -> HopfAlgebra:
        fields = dict(name=self.name, space=self.space, mu=self.mu, eta=self.eta,
                      Delta=self.Delta, eps=self.eps, S=self.S, ambient=self.ambient,
                      yd=self.yd, labels=self.labels)
        verify = kw.pop("verify", False)
        fields.update(kw)
        sp = fields["space"]
        yd = fields["yd"]
        if yd is not None:
            over = fields["ambient"].over.space
            yd = (yd[0].retype((over, sp), (sp,)), yd[1].retype((sp,), (over, sp)))
        return HopfAlgebra(fields.pop("name"), sp, fields["mu"].retype((sp, sp), (sp,)),
                           fields["eta"].retype((), (sp,)), fields["Delta"].retype((sp,), (sp, sp)),
                           fields["eps"].retype((sp,), ()), fields["S"].retype((sp,), (sp,)),
                           ambient=fields["ambient"], yd=yd, labels=fields["labels"],
                           verify=verify)

    # convenient elementwise access
    def unit_vector(self) -> dict:
        return self.eta.column(0)

    def product(self, u: dict, v: dict) -> dict:
        n = self.dim
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                for k, z in self.mu.cols.get(i * n + j, {}).items():
                    s = out.get(k, ZERO) + x * y * z
                    if s.is_zero:
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out


# -- verification -----------------------------------------------------------

def hopf_env(H: HopfAlgebra, name: str = "H") -> Environment:
    structures = {name: H.yd} if H.yd is not None else {}
    env = Environment(braiding=braiding_provider(H.ambient, structures))
    return env.with_hopf(name, H, default=True)


def run_equalities(env: Environment, pairs, report: Report | None = None) -> Report:
    """Check a list of (name, lhs, rhs) diagram equalities."""
    report = report if report is not None else Report()
    for name, lhs, rhs in pairs:
        t0 = time.perf_counter()
        res = check_equal(lhs, rhs, env)
        report.add(name, res.equal, res.witness, time.perf_counter() - t0)
    return report


HOPF_AXIOMS = [
    ("associativity", "mu . (mu * id)", "mu . (id * mu)"),
    ("unit_left", "mu . (eta * id)", "id"),
    ("unit_right", "mu . (id * eta)", "id"),
    ("coassociativity", "(Delta * id) . Delta", "(id * Delta) . Delta"),
    ("counit_left", "(eps * id) . Delta", "id"),
    ("counit_right", "(id * eps) . Delta", "id"),
    ("bialgebra", "Delta . mu", "(mu * mu) . (id * braid[H,H] * id) . (Delta * Delta)"),
    ("counit_multiplicative", "eps . mu", "eps * eps"),
    ("unit_comultiplicative", "Delta . eta", "eta * eta"),
    ("antipode_left", "mu . (S * id) . Delta", "eta . eps"),
    ("antipode_right", "mu . (id * S) . Delta", "eta . eps"),
    ("antipode_inverse_left", "S . Sinv", "id"),
    ("antipode_inverse_right", "Sinv . S", "id"),
]


def verify_hopf(H: HopfAlgebra) -> Report:
    """Every bialgebra and antipode axiom, with first-difference witnesses.

    For a Hopf algebra in a Yetter-Drinfeld ambient this also checks the
    Yetter-Drinfeld structure and that every structure map is a morphism of
    Yetter-Drinfeld modules.
    """
    env = hopf_env(H)
    report = run_equalities(env, HOPF_AXIOMS)
    ee = eval_expr("eps . eta", env)
    report.add("counit_unit", ee.entry(0, 0).is_one,
               None if ee.entry(0, 0).is_one else {"value": str(ee.entry(0, 0))})
    if H.ambient.over is not None:
        from .ydcat import structure_map_checks
        report.extend(structure_map_checks(H), prefix="yd:")
    return report


def solve_antipode(H) -> TypedMorphism:
    """Solve mu (S (x) id) Delta = eta eps = mu (id (x) S) Delta for S.

    Unknowns are the n^2 matrix entries of S; raises NoAntipode when the
    bialgebra has no antipode.
    """
    n = H.space.dim
    mu_cols, d_cols = H.mu.cols, H.Delta.cols
    eta = H.eta.column(0)
    eps = H.eps.rows().get(0, {})
    rows = []
    # equation (i, m): sum_{j,k} D^{jk}_i sum_l S[l][j] mu(e_l e_k)_m  (left)
    #                  sum_{j,k} D^{jk}_i sum_l S[l][k] mu(e_j e_l)_m  (right)
    for side in (0, 1):
        for i in range(n):
            eqs: dict = {}
            for idx, c in d_cols.get(i, {}).items():
                j, k = divmod(idx, n)
                for l in range(n):
                    prod_col = mu_cols.get(l * n + k if side == 0 else j * n + l, {})
                    unknown = l * n + (j if side == 0 else k)
                    for m, v in prod_col.items():
                        row = eqs.setdefault(m, {})
                        s = row.get(unknown, ZERO) + c * v
                        if s.is_zero:
                            row.pop(unknown, None)
                        else:
                            row[unknown] = s
            e_i = eps.get(i, ZERO)
            for m in range(n):
                target = e_i * eta.get(m, ZERO)
                row = eqs.get(m, {})
                if not row and target.is_zero:
                    continue
                row = dict(row)
                if not target.is_zero:
                    row[n * n] = target
                rows.append(row)
    pivots, red = _rref_rows(rows, n * n + 1)
    if n * n in pivots:
        raise NoAntipode(f"{getattr(H, 'name', 'bialgebra')} has no antipode")
    if len(pivots) < n * n:
        raise NoAntipode("antipode equations are underdetermined")
    entries = []
    for pc, row in zip(pivots, red):
        val = row.get(n * n, ZERO)
        if not val.is_zero:
            l, j = divmod(pc, n)
            entries.append((l, j, val))
    A = (H.space,)
    return TypedMorphism.from_entries(A, A, entries)


def op_cop_variants(H: HopfAlgebra):
    """(H_op, H_cop): mu c^{-1} and c^{-1} Delta, in the reversed ambient."""
    env = hopf_env(H)
    cinv = eval_expr("braidinv[H,H]", env)
    amb = H.ambient.reverse()
    H_op = H.replace(name=H.name + "_op", mu=H.mu @ cinv, S=H.Sinv, ambient=amb)
    H_cop = H.replace(name=H.name + "_cop", Delta=cinv @ H.Delta, S=H.Sinv, ambient=amb)
    return H_op, H_cop


def is_hopf_morphism(f: TypedMorphism, H: HopfAlgebra, K: HopfAlgebra) -> Report:
    """Checks that f: H -> K preserves all Hopf structure maps."""
    h, k = H.space, K.space
    f = f.retype((h,), (k,))
    rep = Report()

    def add(name, lhs, rhs):
        w = difference_witness(lhs, rhs)
        rep.add(name, w is None, w)

    add("mu", f @ H.mu, K.mu @ kron(f, f))
    add("eta", f @ H.eta, K.eta)
    add("Delta", kron(f, f) @ H.Delta, K.Delta @ f)
    add("eps", K.eps @ f, H.eps)
    add("S", f @ H.S, K.S @ f)
    return rep


def is_hopf_isomorphism(f: TypedMorphism, H: HopfAlgebra, K: HopfAlgebra) -> Report:
    rep = is_hopf_morphism(f, H, K)
    try:
        inverse(f)
        rep.add("invertible", True)
    except NotInvertible:
        rep.add("invertible", False)
    return rep


# -- pairings ------------------------------------------------------------------

class HopfPairing:
    """omega: A (x) B -> 1, optionally with the inverse copairing 1 -> B (x) A."""

    def __init__(self, A: HopfAlgebra, B: HopfAlgebra, omega: TypedMorphism,
                 omega_inv: TypedMorphism | None = None):
        self.A, self.B = A, B
        self.omega = omega.retype((A.space, B.space), ())
        self.omega_inv = None if omega_inv is None else omega_inv.retype((), (B.space, A.space))

    def value(self, i: int, j: int) -> CycScalar:
        return self.omega.entry(0, i * self.B.dim + j)

    def matrix(self):
        return [[self.value(i, j) for j in range(self.B.dim)] for i in range(self.A.dim)]

    def env(self) -> Environment:
        amb = self.A.ambient
        env = Environment(braiding=braiding_provider(Ambient(amb.category)))
        env = env.with_hopf("A", self.A).with_hopf("B", self.B)
        Asp, Bsp = env.spaces["A"], env.spaces["B"]
        env = env.with_generator("omega", self.omega.retype((Asp, Bsp), ()))
        if self.omega_inv is not None:
            env = env.with_generator("omegainv", self.omega_inv.retype((), (Bsp, Asp)))
        return env


PAIRING_AXIOMS = [
    ("pairing_product_left", "omega . (mu[A] * id[B])",
     "omega . (id[A] * omega * id[B]) . (id[A] * id[A] * Delta[B])"),
    ("pairing_unit_left", "omega . (eta[A] * id[B])", "eps[B]"),
    ("pairing_product_right", "omega . (id[A] * mu[B])",
     "omega . (id[A] * omega * id[B]) . (Delta[A] * id[B] * id[B])"),
    ("pairing_unit_right", "omega . (id[A] * eta[B])", "eps[A]"),
    ("pairing_antipode", "omega . (S[A] * id[B])", "omega . (id[A] * S[B])"),
]

COPAIRING_AXIOMS = [
    ("zigzag_A", "(omega * id[A]) . (id[A] * omegainv)", "id[A]"),
    ("zigzag_B", "(id[B] * omega) . (omegainv * id[B])", "id[B]"),
    ("copairing_coproduct_B", "(Delta[B] * id[A]) . omegainv",
     "(id[B] * id[B] * mu[A]) . (id[B] * omegainv * id[A]) . omegainv"),
    ("copairing_counit_B", "(eps[B] * id[A]) . omegainv", "eta[A]"),
    ("copairing_coproduct_A", "(id[B] * Delta[A]) . omegainv",
     "(mu[B] * id[A] * id[A]) . (id[B] * omegainv * id[A]) . omegainv"),
    ("copairing_counit_A", "(id[B] * eps[A]) . omegainv", "eta[B]"),
]


def verify_pairing(p: HopfPairing) -> Report:
    env = p.env()
    report = run_equalities(env, PAIRING_AXIOMS)
    if p.omega_inv is not None:
        run_equalities(env, COPAIRING_AXIOMS, report)
    return report


def invert_pairing(p: HopfPairing) -> HopfPairing:
    """Attach the inverse copairing sum_{i,j} (W^{-1})_{ji} b_j (x) a_i."""
    nA, nB = p.A.dim, p.B.dim
    if nA != nB:
        raise Degenerate(f"pairing between dimensions {nA} and {nB}")
    k = Space("k", nA)
    W = TypedMorphism.from_entries((k,), (k,), ((i, j, p.value(i, j))
                                                for i in range(nA) for j in range(nB)))
    try:
        C = inverse(W)
    except NotInvertible:
        raise Degenerate("pairing matrix is singular") from None
    col = {j * nA + i: v for (j, i, v) in C.entries()}
    omega_inv = TypedMorphism((), (p.B.space, p.A.space), {0: col} if col else {})
    return HopfPairing(p.A, p.B, p.omega, omega_inv)


def pairing_variants(p: HopfPairing):
    """(omega_plus, omega_minus) as pairings B (x) A -> 1.

    omega_plus  = omega c_{B,A} (S_B (x) S_A)
    omega_minus = omega c_{A,B}^{-1} (S_B^{-1} (x) S_A^{-1})
    Each carries the inverse copairing obtained from omega's copairing by
    the corresponding formula; ``copairing_from_formula`` exposes both.
    """
    if p.omega_inv is None:
        p = invert_pairing(p)
    env = p.env()
    plus = eval_expr("omega . braid[B,A] . (S[B] * S[A])", env)
    minus = eval_expr("omega . braidinv[A,B] . (Sinv[B] * Sinv[A])", env)
    plus_inv = eval_expr("(Sinv[A] * Sinv[B]) . braidinv[A,B] . omegainv", env)
    minus_inv = eval_expr("(S[A] * S[B]) . braid[B,A] . omegainv", env)
    return (HopfPairing(p.B, p.A, plus, plus_inv), HopfPairing(p.B, p.A, minus, minus_inv))


def dualize_comodule(p: HopfPairing, space: Space, delta: TypedMorphism) -> TypedMorphism:
    """Left B-comodule (X, delta) to the left action (omega (x) id)(id_A (x) delta)."""
    A, X = p.A.space, space
    d = delta.retype((X,), (p.B.space, X))
    return (kron(p.omega, TypedMorphism.identity((X,))) @
            kron(TypedMorphism.identity((A,)), d)).retype((A, X), (X,))


def undualize_module(p: HopfPairing, space: Space, rho: TypedMorphism) -> TypedMorphism:
    """Inverse of dualize_comodule: (id_B (x) rho)(omega' (x) id_X)."""
    if p.omega_inv is None:
        p = invert_pairing(p)
    X = space
    r = rho.retype((p.A.space, X), (X,))
    return (kron(TypedMorphism.identity((p.B.space,)), r) @
            kron(p.omega_inv, TypedMorphism.identity((X,)))).retype((X,), (p.B.space, X))


def algebra_map_from_generators(src: HopfAlgebra, tgt: HopfAlgebra, images: dict) -> TypedMorphism:
    """The linear map src -> tgt determined by sending generators to ``images``
    (src basis index -> tgt vector) and extending multiplicatively.

    Words in the generators are explored breadth first until their values
    span src; whether the result really is an algebra map is left to the
    caller (``is_hopf_morphism``).  Raises ValueError when the generators do
    not generate.
    """
    from .exactmath import SpanSolver

    n = src.dim
    one_s, one_t = src.unit_vector(), tgt.unit_vector()
    gens = [({i: ONE}, dict(v)) for i, v in images.items()]
    found_s, found_t = [], []
    frontier = [(one_s, one_t)]

    def independent(v):
        if not found_s:
            return bool(v)
        try:
            SpanSolver(found_s).solve(v)
            return False
        except NotInSpan:
            return True

    while frontier and len(found_s) < n:
        nxt = []
        for vs, vt in frontier:
            if not independent(vs):
                continue
            found_s.append(vs)
            found_t.append(vt)
            for gs, gt in gens:
                nxt.append((src.product(vs, gs), tgt.product(vt, gt)))
        frontier = nxt
    if len(found_s) < n:
        raise ValueError("the given elements do not generate the algebra")
    solver = SpanSolver(found_s)
    cols = {}
    for i in range(n):
        out: dict = {}
        for j, x in solver.solve({i: ONE}).items():
            for k, y in found_t[j].items():
                s = out.get(k, ZERO) + x * y
                if s.is_zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        if out:
            cols[i] = out
    return TypedMorphism((src.space,), (tgt.space,), cols)


def pull_back(f: TypedMorphism, R: HopfAlgebra, like: HopfAlgebra, verify=True) -> HopfAlgebra:
    """Structure of R moved onto like's space along an invertible f: like -> R.

    Equal to ``like`` (as matrices) exactly when f is a Hopf isomorphism.
    """
    sp = like.space
    f = f.retype((sp,), (R.space,))
    fi = inverse(f)
    H = HopfAlgebra(like.name, sp, fi @ R.mu @ kron(f, f), fi @ R.eta,
                    kron(fi, fi) @ R.Delta @ f, R.eps @ f, fi @ R.S @ f,
                    ambient=like.ambient, labels=like.labels, verify=verify)
    if hasattr(like, "cyclotomic_order"):
        H.cyclotomic_order = like.cyclotomic_order
    return H
