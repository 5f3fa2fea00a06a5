"""Preset Hopf algebras, pairings and dualization data.

Everything here is built from structure constants over Q(zeta_N) and then
verified by the HopfAlgebra constructor.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .category import VECT
from .exactmath import ONE, ZERO, CycScalar, Space, TypedMorphism
from .hopfcore import Ambient, HopfAlgebra, HopfPairing, invert_pairing

# -- finite groups ------------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple
    table: tuple  # table[a][b] = index of a*b
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise ValueError("no inverse")


def _power_label(sym: str, k: int) -> str:
    return "1" if k == 0 else (sym if k == 1 else f"{sym}^{k}")


def cyclic_group(n: int, sym: str = "g") -> FiniteGroup:
    labels = tuple(_power_label(sym, k) for k in range(n))
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(labels, table)


def semidirect_cyclic(n: int, m: int, a: int, nsym="n", qsym="q") -> FiniteGroup:
    """Z_n x| Z_m where the generator of Z_m acts on Z_n by multiplication by a.

    Elements are pairs (i, j) standing for n^i q^j, indexed i*m + j, with
    (i, j)(k, l) = (i + a^j k, j + l).
    """
    if pow(a, m, n) != 1 % n:
        raise ValueError(f"{a} does not have order dividing {m} modulo {n}")
    idx = lambda i, j: (i % n) * m + (j % m)
    labels, table = [], []
    for i in range(n):
        for j in range(m):
            parts = [p for p in (_power_label(nsym, i), _power_label(qsym, j)) if p != "1"]
            labels.append(" ".join(parts) or "1")
    for i in range(n):
        for j in range(m):
            row = []
            for k in range(n):
                for l in range(m):
                    row.append(idx(i + pow(a, j, n) * k, j + l))
            table.append(tuple(row))
    return FiniteGroup(tuple(labels), tuple(table))


def symmetric_group_s3() -> FiniteGroup:
    return semidirect_cyclic(3, 2, 2)


# -- generic builders ---------------------------------------------------------------

def _matrix(domain, codomain, triples):
    return TypedMorphism.from_entries(domain, codomain, triples)


def build_hopf(name, labels, mult, unit, comult, counit, antipode=None, *, order=1,
               ambient=None, yd=None, degrees=None, verify=True) -> HopfAlgebra:
    """Assemble a Hopf algebra from dictionaries of structure constants.

    mult[(i, j)] and comult[i] map output indices (k or (j, k)) to scalars;
    unit and counit are dicts index -> scalar; antipode maps i to a dict.
    """
    n = len(labels)
    sp = Space(name, n, degrees)
    A = (sp,)
    mu = _matrix(A + A, A, ((k, i * n + j, v) for (i, j), out in mult.items()
                            for k, v in out.items()))
    eta = _matrix((), A, ((k, 0, v) for k, v in unit.items()))
    Delta = _matrix(A, A + A, ((j * n + k, i, v) for i, out in comult.items()
                               for (j, k), v in out.items()))
    eps = _matrix(A, (), ((0, i, v) for i, v in counit.items()))
    S = None
    if antipode is not None:
        S = _matrix(A, A, ((j, i, v) for i, out in antipode.items() for j, v in out.items()))
    H = HopfAlgebra(name, sp, mu, eta, Delta, eps, S, ambient=ambient or Ambient(VECT),
                    yd=yd, labels=labels, verify=verify)
    H.cyclotomic_order = order
    return H


def group_algebra(G: FiniteGroup | int, name: str = "CG", verify=True) -> HopfAlgebra:
    """C[G] with group-like basis; an int n means the cyclic group Z_n."""
    if isinstance(G, int):
        G = cyclic_group(G)
    n = G.order
    return build_hopf(
        name, list(G.labels),
        {(a, b): {G.mul(a, b): ONE} for a in range(n) for b in range(n)},
        {G.identity: ONE},
        {a: {(a, a): ONE} for a in range(n)},
        {a: ONE for a in range(n)},
        {a: {G.inv(a): ONE} for a in range(n)}, verify=verify)


def function_algebra(G: FiniteGroup | int, name: str = "FG", verify=True) -> HopfAlgebra:
    """C^G with basis of point indicators e_q."""
    if isinstance(G, int):
        G = cyclic_group(G)
    n = G.order
    comult = {g: {} for g in range(n)}
    for a in range(n):
        for b in range(n):
            comult[G.mul(a, b)][(a, b)] = ONE
    return build_hopf(
        name, [f"e_{l}" for l in G.labels],
        {(a, a): {a: ONE} for a in range(n)},
        {a: ONE for a in range(n)},
        comult,
        {G.identity: ONE},
        {a: {G.inv(a): ONE} for a in range(n)}, verify=verify)


class BadParams(ValueError):
    """Preset parameters violate a stated constraint."""


def _taft_check_params(N, d, c):
    if N < 2 or d < 2 or N % d:
        raise BadParams(f"need d | N with d >= 2, got N={N}, d={d}")
    if N // gcd(N, c) != d:
        raise BadParams(f"zeta = q^{c} is not a primitive d-th root of unity (d={d}, N={N})")


def _taft(name, N, d, r_exp, g_exp, verify=True) -> HopfAlgebra:
    """Algebra on x^i g^j (i < d, j < N) with g x = q^r_exp x g and
    Delta(x) = g^g_exp (x) x + x (x) 1, q = zeta_N; index i*N + j."""
    q = CycScalar.root(N)
    r = q ** r_exp
    idx = lambda i, j: i * N + (j % N)
    labels = []
    for i in range(d):
        for j in range(N):
            parts = [p for p in (_power_label("x", i), _power_label("g", j)) if p != "1"]
            labels.append(" ".join(parts) or "1")
    mult = {}
    for i in range(d):
        for j in range(N):
            for k in range(d):
                for l in range(N):
                    if i + k < d:
                        mult[(idx(i, j), idx(k, l))] = {idx(i + k, j + l): r ** (j * k)}
    def prod(u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for k, z in mult.get((a, b), {}).items():
                    out[k] = out.get(k, ZERO) + x * y * z
        return {k: v for k, v in out.items() if not v.is_zero}

    def tprod(u, v):
        out = {}
        for (a1, a2), x in u.items():
            for (b1, b2), y in v.items():
                for k1, z1 in mult.get((a1, b1), {}).items():
                    for k2, z2 in mult.get((a2, b2), {}).items():
                        key = (k1, k2)
                        out[key] = out.get(key, ZERO) + x * y * z1 * z2
        return {k: v for k, v in out.items() if not v.is_zero}

    dx = {(idx(0, g_exp), idx(1, 0)): ONE, (idx(1, 0), idx(0, 0)): ONE}
    comult = {}
    for i in range(d):
        xi = {(idx(0, 0), idx(0, 0)): ONE}
        for _ in range(i):
            xi = tprod(xi, dx)
        for j in range(N):
            comult[idx(i, j)] = tprod(xi, {(idx(0, j), idx(0, j)): ONE})
    counit = {idx(0, j): ONE for j in range(N)}
    return build_hopf(name, labels, mult, {idx(0, 0): ONE}, comult, counit, order=N,
                      verify=verify)


def hat_taft(N: int, d: int, c: int, verify=True) -> HopfAlgebra:
    """g^N = 1, x^d = 0, g x = zeta x g, Delta x = g (x) x + x (x) 1, zeta = q^c."""
    _taft_check_params(N, d, c)
    return _taft(f"That_{N}_{d}_{c}", N, d, c, 1, verify)


def check_taft(N: int, d: int, c: int, verify=True) -> HopfAlgebra:
    """g^N = 1, x^d = 0, g x = q x g, Delta x = g^c (x) x + x (x) 1."""
    _taft_check_params(N, d, c)
    return _taft(f"Tcheck_{N}_{d}_{c}", N, d, 1, c, verify)


def taft(n: int, k: int = 1, verify=True) -> HopfAlgebra:
    """The Taft algebra of dimension n^2 with zeta = q^k primitive: g x = zeta x g."""
    if n < 2 or gcd(n, k) != 1:
        raise BadParams(f"zeta = q^{k} is not a primitive {n}-th root of unity")
    return _taft(f"Taft_{n}" + (f"_{k}" if k != 1 else ""), n, n, k, 1, verify)


def monoid_bialgebra_matrices():
    """Structure maps of C[M] for the monoid M = {1, z} with z z = z (no antipode)."""
    sp = Space("CM", 2)
    A = (sp,)
    mu = _matrix(A + A, A, [(0, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)])
    eta = _matrix((), A, [(0, 0, 1)])
    Delta = _matrix(A, A + A, [(0, 0, 1), (3, 1, 1)])
    eps = _matrix(A, (), [(0, 0, 1), (0, 1, 1)])
    return sp, mu, eta, Delta, eps


def cyclic_pairing(N: int, k: int = 1, A=None, B=None) -> HopfPairing:
    """omega(g^n, gbar^m) = q^(k n m) between two copies of C[Z_N]."""
    A = A or group_algebra(N, "CZ")
    B = B or group_algebra(cyclic_group(N, "gbar"), "CZbar")
    A.cyclotomic_order = B.cyclotomic_order = N
    q = CycScalar.root(N)
    omega = _matrix((A.space, B.space), (),
                    ((0, n * N + m, q ** (k * n * m)) for n in range(N) for m in range(N)))
    return invert_pairing(HopfPairing(A, B, omega))


def evaluation_pairing(G: FiniteGroup, A=None, B=None) -> HopfPairing:
    """omega(g, e_h) = [g = h] between C[G] and C^G."""
    A = A or group_algebra(G, "CQ")
    B = B or function_algebra(G, "FQ")
    n = G.order
    omega = _matrix((A.space, B.space), (), ((0, g * n + g, ONE) for g in range(n)))
    return invert_pairing(HopfPairing(A, B, omega))


def trivial_hopf(name: str = "one", ambient=None) -> HopfAlgebra:
    """The one-dimensional Hopf algebra (the unit object)."""
    degrees = None
    if ambient is not None and not ambient.category.is_vect:
        degrees = (tuple(0 for _ in range(ambient.category.rank)),)
    return build_hopf(name, ["1"], {(0, 0): {0: ONE}}, {0: ONE}, {0: {(0, 0): ONE}}, {0: ONE},
                      {0: {0: ONE}}, ambient=ambient, degrees=degrees)


# -- dualization data ---------------------------------------------------------------

def _datum(H, A, B, pi_pairs, iota_pairs, pairing):
    from .partialdual import make_datum
    pi = _matrix((H.space,), (A.space,), ((a, h, ONE) for h, a in pi_pairs))
    iota = _matrix((A.space,), (H.space,), ((h, a, ONE) for a, h in iota_pairs))
    return make_datum(H, A, B, pi, iota, pairing)


def taft_datum(N: int, d: int, c: int):
    """hat T -> C[Z_N] (g -> g, x -> 0), B = C[Z_N], omega(g^n, gbar^m) = q^(nm)."""
    H = hat_taft(N, d, c)
    p = cyclic_pairing(N, 1)
    return _datum(H, p.A, p.B, [(j, j) for j in range(N)], [(j, j) for j in range(N)], p)


def s3_datum():
    """C[Z_3 x| Z_2] -> C[Z_2] with the evaluation pairing against C^{Z_2}."""
    G = symmetric_group_s3()
    H = group_algebra(G, "CS3")
    Q = cyclic_group(2, "q")
    p = evaluation_pairing(Q, group_algebra(Q, "CZ2"), function_algebra(Q, "FZ2"))
    return _datum(H, p.A, p.B, [(i * 2 + j, j) for i in range(3) for j in range(2)],
                  [(j, j) for j in range(2)], p)


def semidirect_datum(n: int, m: int, a: int):
    """C[Z_n x| Z_m] -> C[Z_m] with the evaluation pairing against C^{Z_m}."""
    G = semidirect_cyclic(n, m, a)
    H = group_algebra(G, f"C[Z{n}xZ{m}]")
    Q = cyclic_group(m, "q")
    p = evaluation_pairing(Q, group_algebra(Q, f"CZ{m}"), function_algebra(Q, f"FZ{m}"))
    return _datum(H, p.A, p.B, [(i * m + j, j) for i in range(n) for j in range(m)],
                  [(j, j) for j in range(m)], p)


def complete_datum(N: int):
    """pi = id on C[Z_N] with the cyclic pairing: a complete dualization."""
    p = cyclic_pairing(N, 1)
    return _datum(p.A, p.A, p.B, [(j, j) for j in range(N)], [(j, j) for j in range(N)], p)


def trivial_datum(H: HopfAlgebra):
    """A = B = the unit Hopf algebra: r(H) = H."""
    amb = Ambient(H.ambient.category)
    A, B = trivial_hopf("oneA", amb), trivial_hopf("oneB", amb)
    from .partialdual import make_datum
    pi = _matrix((H.space,), (A.space,), ((0, i, v) for (_, i, v) in H.eps.entries()))
    iota = _matrix((A.space,), (H.space,), ((i, 0, v) for (i, _, v) in H.eta.entries()))
    omega = _matrix((A.space, B.space), (), [(0, 0, ONE)])
    return make_datum(H, A, B, pi, iota, omega)


def taft_dual_comparison(N: int, d: int, c: int, result=None):
    """psi: check T -> r(hat T), x -> x (x) 1, g -> 1 (x) gbar, with the Hopf
    isomorphism verified exactly.  Returns (psi, report, result)."""
    from .hopfcore import algebra_map_from_generators, is_hopf_isomorphism
    from .partialdual import partial_dualize
    if result is None:
        result = partial_dualize(taft_datum(N, d, c))
    rH = result.rH
    T = check_taft(N, d, c)
    nB = result.datum.B.dim
    # rH basis is L (x) B with L = span{1, x, ..., x^(d-1)}
    xbar = {result.L.labels.index("x") * nB + 0: ONE}
    gbar = {0 * nB + 1: ONE}
    psi = algebra_map_from_generators(T, rH, {N: xbar, 1: gbar})
    return psi, is_hopf_isomorphism(psi, T, rH), result


# -- named presets ------------------------------------------------------------------

def parse_group(spec: str) -> FiniteGroup:
    """'Z4', 'S3' or 'Z3xZ2:2' (Z_n x| Z_m with action by multiplication by a)."""
    s = spec.strip()
    try:
        if s.upper() == "S3":
            return symmetric_group_s3()
        if "x" in s:
            left, rest = s.split("x", 1)
            right, a = rest.split(":")
            return semidirect_cyclic(int(left.lstrip("Zz")), int(right.lstrip("Zz")), int(a))
        if s[0] in "Zz":
            return cyclic_group(int(s[1:]))
    except (ValueError, IndexError) as e:
        raise BadParams(f"bad group {spec!r}: {e}") from None
    raise BadParams(f"bad group {spec!r}; use Zn, S3 or ZnxZm:a")



def _with_defaults(params, defaults):
    params = list(params)
    if len(params) > len(defaults):
        raise BadParams(f"at most {len(defaults)} parameters expected")
    params += [str(d) for d in defaults[len(params):]]
    if any(p is None or p == "None" for p in params):
        raise BadParams("missing required parameter")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise BadParams(f"parameters must be integers: {params}") from None


def _nichols_presets(n):
    from .nichols import sl21_braidings
    if n < 3:
        raise BadParams("sl21 braidings need n >= 3 (q != +-1)")
    return sl21_braidings(n)


def catalog_names():
    return sorted(CATALOG)


def catalog_build(name: str, params=()):
    """Build a named preset; params are strings (from the command line)."""
    key = name.replace("-", "_").lower()
    if key not in CATALOG:
        raise BadParams(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    build, defaults, _ = CATALOG[key]
    if defaults == "group":
        if len(params) != 1:
            raise BadParams(f"{name} takes one group parameter (Zn, S3 or ZnxZm:a)")
        return build(parse_group(params[0]))
    return build(*_with_defaults(params, defaults))


def _nichols_datum(which):
    def build(n, i):
        from .nichols import nichols_dualization_datum
        M, N = _nichols_presets(n)
        return nichols_dualization_datum(M if which == "M" else N, i)
    return build


CATALOG = {
    "group_algebra": (group_algebra, "group", "C[G] for G = Zn, S3 or ZnxZm:a"),
    "function_algebra": (function_algebra, "group", "C^G with dual basis e_g"),
    "taft": (taft, (None, 1), "Taft algebra of dimension n^2, zeta = q^k"),
    "hat_taft": (hat_taft, (None, None, None), "hat T for (N, d, c)"),
    "check_taft": (check_taft, (None, None, None), "check T for (N, d, c)"),
    "cyclic_pairing": (cyclic_pairing, (None, 1), "omega(g^n, gbar^m) = q^(k n m) on C[Z_N]"),
    "sl21_m": (lambda n: _nichols_presets(n)[0], (3,), "rank-2 braiding M at q = zeta_n"),
    "sl21_n": (lambda n: _nichols_presets(n)[1], (3,), "rank-2 braiding N at q = zeta_n"),
    "sl21_braidings": (lambda n: dict(zip("MN", _nichols_presets(n))), (3,),
                       "both rank-2 braidings"),
    "taft_datum": (taft_datum, (4, 2, 2), "hat T -> C[Z_N] with the cyclic pairing"),
    "s3_datum": (s3_datum, (), "C[S3] -> C[Z2] with evaluation against C^Z2"),
    "semidirect_datum": (semidirect_datum, (None, None, None), "C[Zn x| Zm] -> C[Zm]"),
    "complete_datum": (complete_datum, (None,), "pi = id on C[Z_N]"),
    "nichols_datum_m": (_nichols_datum("M"), (3, 1), "B(M) -> B(M_i) at q = zeta_n"),
    "nichols_datum_n": (_nichols_datum("N"), (3, 2), "B(N) -> B(N_i) at q = zeta_n"),
}
