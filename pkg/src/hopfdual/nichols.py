"""Nichols algebras of diagonal type.

A diagonal braiding on V = span{x_1..x_r} is c(x_a (x) x_b) = q_ab x_b (x) x_a.
The degree-n part of the Nichols algebra is the image of the quantum
symmetrizer Q_n on V^{(x)n}, computed by the recursion

    Q_n = (Q_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1).

Symmetrizers preserve the multidegree of words, so ranks are computed block
by block.  Materialization realizes B(V) inside the tensor coalgebra: the
basis consists of images Q(w) of words w, products are Q(uv) expressed in
that basis and the coproduct is deconcatenation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .category import BraidedCategory, graded_category
from .exactmath import ONE, ZERO, CycScalar, Space, SpanSolver, TypedMorphism, join_index, kron
from .exactmath.linalg import _axpy
from .hopfcore import Ambient, HopfAlgebra, HopfPairing


class CutoffReached(RuntimeError):
    """The requested degree cutoff was hit before the answer was determined."""


@dataclass(frozen=True)
class DiagonalBraiding:
    """Braiding matrix q (rank x rank) over Q(zeta_order)."""
    q: tuple
    order: int

    @classmethod
    def from_matrix(cls, q, order=None) -> DiagonalBraiding:
        q = tuple(tuple(CycScalar.from_rational(x) if not isinstance(x, CycScalar) else x
                        for x in row) for row in q)
        if order is None:
            order = lcm(*(x.order for row in q for x in row))
        return cls(q, order)

    @property
    def rank(self) -> int:
        return len(self.q)

    @property
    def category(self) -> BraidedCategory:
        return graded_category(self.q)

    def chi(self, a, b) -> CycScalar:
        return self.category.chi(tuple(a), tuple(b))

    def twist_equivalent(self, other: DiagonalBraiding) -> bool:
        """Same q_jj and same q_jk q_kj for all j, k."""
        if self.rank != other.rank:
            return False
        r = self.rank
        return all(self.q[j][j] == other.q[j][j] for j in range(r)) and all(
            self.q[j][k] * self.q[k][j] == other.q[j][k] * other.q[k][j]
            for j in range(r) for k in range(r))

    def matrix_morphism(self, name="V") -> TypedMorphism:
        """The braiding V (x) V -> V (x) V as a matrix."""
        r = self.rank
        V = Space(name, r)
        return TypedMorphism.from_entries((V, V), (V, V), (
            (b * r + a, a * r + b, self.q[a][b]) for a in range(r) for b in range(r)))


def unit_vector(r, i):
    return tuple(1 if k == i else 0 for k in range(r))


# -- symmetrizers -------------------------------------------------------------------

class WordSymmetrizer:
    """Memoized quantum symmetrizer on words for a diagonal braiding.

    ``q[a][b]`` is the braiding scalar between generators a and b (letters are
    0-based).  Q(w) is returned as a dict word -> scalar.
    """

    def __init__(self, q):
        self.q = q
        self._cache = {(): {(): ONE}}

    def __call__(self, w: tuple) -> dict:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        q = self.q
        n = len(w)
        out: dict = {}
        for k in range(n):
            a = w[k]
            s = ONE
            for j in range(k + 1, n):
                s = s * q[a][w[j]]
            sub = self(w[:k] + w[k + 1:])
            for u, v in sub.items():
                key = u + (a,)
                t = v * s
                old = out.get(key)
                if old is None:
                    out[key] = t
                else:
                    t = old + t
                    if t.is_zero:
                        del out[key]
                    else:
                        out[key] = t
        self._cache[w] = out
        return out

    def apply(self, vec: dict) -> dict:
        """Q applied to a linear combination of words."""
        out: dict = {}
        for w, c in vec.items():
            _axpy(out, c, self(w))
        return out


def _words_with_content(content):
    letters = [a for a, k in enumerate(content) for _ in range(k)]
    return sorted(set(itertools.permutations(letters)))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def quantum_symmetrizer(braiding, n: int, name: str = "V") -> TypedMorphism:
    """Q_n on V^{(x)n} by the recursion, for a DiagonalBraiding or any braiding
    matrix c: V (x) V -> V (x) V."""
    if isinstance(braiding, DiagonalBraiding):
        c = braiding.matrix_morphism(name)
    else:
        c = braiding
    V = c.domain[0]
    if n == 0:
        return TypedMorphism.identity(())
    Q = TypedMorphism.identity((V,))
    for m in range(2, n + 1):
        total = TypedMorphism.identity((V,) * m)
        term = TypedMorphism.identity((V,) * m)
        for k in range(m - 1, 0, -1):
            ck = kron(*([TypedMorphism.identity((V,))] * (k - 1) + [c]
                        + [TypedMorphism.identity((V,))] * (m - k - 1)))
            term = term @ ck
            total = total + term
        Q = kron(Q, TypedMorphism.identity((V,))) @ total
    return Q


def brute_force_symmetrizer(braiding, n: int, name: str = "V") -> TypedMorphism:
    """Sum over all permutations of the positive braid lift along a reduced word."""
    c = braiding.matrix_morphism(name) if isinstance(braiding, DiagonalBraiding) else braiding
    V = c.domain[0]
    if n == 0:
        return TypedMorphism.identity(())
    gens = [kron(*([TypedMorphism.identity((V,))] * (k - 1) + [c]
                   + [TypedMorphism.identity((V,))] * (n - k - 1))) for k in range(1, n)]
    total = TypedMorphism.zero((V,) * n, (V,) * n)
    for perm in itertools.permutations(range(n)):
        # reduced word by bubble sort
        p = list(perm)
        word = []
        changed = True
        while changed:
            changed = False
            for k in range(n - 1):
                if p[k] > p[k + 1]:
                    p[k], p[k + 1] = p[k + 1], p[k]
                    word.append(k)
                    changed = True
        T = TypedMorphism.identity((V,) * n)
        for k in word:
            T = gens[k] @ T
        total = total + T
    return total


# -- Hilbert series ------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple
    complete: bool
    cutoff_reached: bool

    @property
    def total_dim(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        return poly_str(self.coeffs)


def poly_str(coeffs, var="t") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divexact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(a[k + len(b) - 1], b[-1])
        assert r == 0
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    if any(a):
        raise ValueError("polynomial division is not exact")
    return q


class _IncrementalBasis:
    """Greedy selection of linearly independent vectors."""

    def __init__(self):
        self.rows = []  # (pivot, normalized reduced vector)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p, b in self.rows:
            x = v.get(p)
            if x is not None:
                _axpy(v, -x, b)
        return v

    def add(self, v: dict) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        self.rows.append((p, {k: x * inv for k, x in v.items()}))
        return True


class NicholsData:
    """Degree-by-degree symmetrizer images for generators with given degrees."""

    def __init__(self, category: BraidedCategory, gen_degrees):
        self.category = category
        self.gen_degrees = [tuple(d) for d in gen_degrees]
        self.r = len(self.gen_degrees)
        q = [[category.chi(a, b) for b in self.gen_degrees] for a in self.gen_degrees]
        self.q = q
        self.Q = WordSymmetrizer(q)
        self._blocks: dict = {}

    def block(self, content):
        """(basis_words, vectors) for one multidegree (content) block."""
        content = tuple(content)
        hit = self._blocks.get(content)
        if hit is None:
            basis = _IncrementalBasis()
            words, vecs = [], []
            for w in _words_with_content(content):
                v = self.Q(w)
                if v and basis.add(self._encode(v)):
                    words.append(w)
                    vecs.append(v)
            hit = (words, vecs)
            self._blocks[content] = hit
        return hit

    def _encode(self, v: dict) -> dict:
        r = self.r
        return {join_index(w, [r] * len(w)): x for w, x in v.items()}

    def degree_dim(self, m: int) -> int:
        return sum(len(self.block(c)[0]) for c in _compositions(m, self.r))

    def hilbert(self, max_degree: int) -> HilbertSeries:
        coeffs = []
        zeros = 0
        for m in range(max_degree + 3):
            d = self.degree_dim(m)
            if m > max_degree:
                if d:
                    return HilbertSeries(tuple(_trim(coeffs)), False, True)
            else:
                coeffs.append(d)
            zeros = zeros + 1 if d == 0 else 0
            if zeros == 2:
                return HilbertSeries(tuple(_trim(coeffs)), True, False)
        return HilbertSeries(tuple(_trim(coeffs)), False, True)


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def hilbert_series(b: DiagonalBraiding, max_degree: int) -> HilbertSeries:
    """Graded dimensions of B(V) up to max_degree with a completeness flag."""
    return NicholsData(b.category, [unit_vector(b.rank, i) for i in range(b.rank)]).hilbert(max_degree)


def rank_one_series(q: CycScalar, max_degree: int) -> HilbertSeries:
    cat = graded_category(((q,),))
    return NicholsData(cat, [(1,)]).hilbert(max_degree)


# -- Cartan matrix and reflections -----------------------------------------------------

def _ad(b: DiagonalBraiding, i: int, vec: dict, deg) -> dict:
    """Braided commutator x_i y - chi(alpha_i, deg y) y x_i on word vectors."""
    s = b.chi(unit_vector(b.rank, i), deg)
    out: dict = {}
    for w, c in vec.items():
        _axpy(out, c, {(i,) + w: ONE})
        _axpy(out, -(c * s), {w + (i,): ONE})
    return out


def cartan_matrix(b: DiagonalBraiding, cutoff: int = 12):
    """a_ii = 2, a_ij = -max{m : ad^m x_i (x_j) != 0 in B(V)}."""
    r = b.rank
    Q = WordSymmetrizer(b.q)
    A = [[0] * r for _ in range(r)]
    for i in range(r):
        A[i][i] = 2
        for j in range(r):
            if i == j:
                continue
            vec = {(j,): ONE}
            deg = list(unit_vector(r, j))
            m = 0
            while True:
                nxt = _ad(b, i, vec, tuple(deg))
                deg[i] += 1
                if not Q.apply(nxt):
                    break
                m += 1
                vec = nxt
                if m > cutoff:
                    raise CutoffReached(f"ad^m x_{i+1}(x_{j+1}) nonzero beyond m={cutoff}")
            A[i][j] = -m
    return tuple(tuple(row) for row in A)


def cartan_entry_formula(b: DiagonalBraiding, i: int, j: int, cutoff: int = 64) -> int:
    """-min{m : (m+1)_{q_ii} (1 - q_ii^m q_ij q_ji) = 0} (independent oracle)."""
    qii = b.q[i][i]
    qq = b.q[i][j] * b.q[j][i]
    for m in range(cutoff + 1):
        qnum = sum((qii ** k for k in range(m + 1)), ZERO)
        if (qnum * (ONE - qii ** m * qq)).is_zero:
            return -m
    raise CutoffReached("cartan entry not determined")


@dataclass(frozen=True)
class Reflection:
    braiding: DiagonalBraiding
    roots: tuple  # beta_j in the alpha basis
    cartan: tuple


def reflect(b: DiagonalBraiding, i: int, cutoff: int = 12) -> Reflection:
    """beta_i = -alpha_i, beta_j = alpha_j - a_ij alpha_i, q'_jk = chi(beta_j, beta_k).

    ``i`` is 1-based."""
    i0 = i - 1
    A = cartan_matrix(b, cutoff)
    r = b.rank
    roots = []
    for j in range(r):
        if j == i0:
            roots.append(tuple(-x for x in unit_vector(r, i0)))
        else:
            roots.append(tuple(unit_vector(r, j)[k] - (A[i0][j] if k == i0 else 0)
                               for k in range(r)))
    q = tuple(tuple(b.chi(roots[j], roots[k]) for k in range(r)) for j in range(r))
    return Reflection(DiagonalBraiding(q, b.order), tuple(roots), A)


# -- materialization ----------------------------------------------------------------

def nichols_hopf(category: BraidedCategory, gen_degrees, max_degree: int, name="BV",
                 letters=None, verify=True) -> HopfAlgebra:
    """B(V) for generators of the given lattice degrees, as a Hopf algebra in
    the graded category.  Requires the Hilbert series to be complete below
    max_degree."""
    data = NicholsData(category, gen_degrees)
    hs = data.hilbert(max_degree)
    if not hs.complete:
        raise CutoffReached(f"Nichols algebra not finite up to degree {max_degree}")
    return _materialize(data, hs, name, letters, verify)


def materialize_nichols(b: DiagonalBraiding, max_degree: int, name="BV", verify=True):
    return nichols_hopf(b.category, [unit_vector(b.rank, i) for i in range(b.rank)],
                        max_degree, name, verify=verify)


def _materialize(data: NicholsData, hs: HilbertSeries, name, letters, verify):
    r = data.r
    letters = letters or [f"x{a + 1}" for a in range(r)]
    top = len(hs.coeffs) - 1
    basis = []  # (word, content)
    solvers = {}
    offsets = {}
    for m in range(top + 1):
        for content in _compositions(m, r):
            words, vecs = data.block(content)
            if not words:
                continue
            offsets[content] = len(basis)
            solvers[content] = SpanSolver([data._encode(v) for v in vecs])
            basis.extend((w, content) for w in words)
    n = len(basis)
    index = {w: k for k, (w, _) in enumerate(basis)}

    def content_of(w):
        c = [0] * r
        for a in w:
            c[a] += 1
        return tuple(c)

    def coords(vec: dict, content) -> dict:
        """Coordinates of a word vector (image of Q) in the chosen basis."""
        if not vec:
            return {}
        if content not in solvers:
            raise ValueError(f"nonzero vector in empty block {content}")
        off = offsets[content]
        return {off + k: x for k, x in solvers[content].solve(data._encode(vec)).items()}

    def degree(content):
        d = None
        for a, k in enumerate(content):
            if k:
                g = tuple(k * x for x in data.gen_degrees[a])
                d = g if d is None else tuple(x + y for x, y in zip(d, g))
        return d if d is not None else tuple(0 for _ in data.gen_degrees[0])

    sp = Space(name, n, tuple(degree(c) for _, c in basis))
    H = (sp,)
    mu_entries = []
    for i, (u, cu) in enumerate(basis):
        for j, (v, cv) in enumerate(basis):
            w = u + v
            if len(w) > top:
                continue
            cw = tuple(a + b for a, b in zip(cu, cv))
            for k, x in coords(data.Q(w), cw).items():
                mu_entries.append((k, i * n + j, x))
    mu = TypedMorphism.from_entries(H + H, H, mu_entries)
    eta = TypedMorphism.from_entries((), H, [(index[()], 0, ONE)])
    eps = TypedMorphism.from_entries(H, (), [(0, index[()], ONE)])
    d_entries = []
    for i, (w, cw) in enumerate(basis):
        vec = data.Q(w)
        m = len(w)
        for k in range(m + 1):
            # group the split component by (left content, right content)
            groups: dict = {}
            for word, x in vec.items():
                left, right = word[:k], word[k:]
                key = (content_of(left), content_of(right))
                groups.setdefault(key, {}).setdefault(right, {})[left] = x
            for (cl, cr), by_right in groups.items():
                # coordinates of the left parts for each right word
                left_coords: dict = {}
                for right, lvec in by_right.items():
                    for a, x in coords(lvec, cl).items():
                        left_coords.setdefault(a, {})[right] = x
                for a, rvec in left_coords.items():
                    for bidx, x in coords(rvec, cr).items():
                        d_entries.append((a * n + bidx, i, x))
    Delta = TypedMorphism.from_entries(H, H + H, d_entries)
    labels = [" ".join(letters[a] for a in w) or "1" for w, _ in basis]
    B = HopfAlgebra(name, sp, mu, eta, Delta, eps, ambient=Ambient(data.category),
                    labels=labels, verify=verify)
    B.words = [w for w, _ in basis]
    B.gen_degrees = data.gen_degrees
    return B


def pairing_from_generators(A: HopfAlgebra, B: HopfAlgebra, gen_values) -> HopfPairing:
    """Hopf pairing between materialized Nichols algebras determined by
    omega(x_a, y_c) = gen_values[a][c] on generators.

    Uses omega(x_a u, b) = sum omega(x_a, b_(2)) omega(u, b_(1)) recursively on
    words u.
    """
    nB = B.dim
    b_index = {w: k for k, w in enumerate(B.words)}
    unit = b_index[()]
    Dcols = B.Delta.cols

    @lru_cache(maxsize=None)
    def omega_word(u: tuple, j: int) -> CycScalar:
        if not u:
            return ONE if j == unit else ZERO
        a, rest = u[0], u[1:]
        total = ZERO
        for idx, c in Dcols.get(j, {}).items():
            j1, j2 = divmod(idx, nB)
            w2 = B.words[j2]
            if len(w2) != 1:
                continue
            g = gen_values[a][w2[0]]
            if g.is_zero:
                continue
            total = total + c * g * omega_word(rest, j1)
        return total

    entries = []
    for i, u in enumerate(A.words):
        for j in range(nB):
            v = omega_word(u, j)
            if not v.is_zero:
                entries.append((0, i * nB + j, v))
    omega = TypedMorphism.from_entries((A.space, B.space), (), entries)
    return HopfPairing(A, B, omega)


# -- presets ---------------------------------------------------------------------------

def sl21_braidings(n: int):
    """Rank-2 braidings with q a primitive n-th root, n >= 3.

    M: q11 = q22 = -1, q12 q21 = q^-1.   N: q11 = -1, q22 = q, q12 q21 = q^-1.
    """
    if n < 3:
        raise ValueError("need q != +-1, i.e. n >= 3")
    order = lcm(2, n)
    q = CycScalar.root(n)
    qi = q.inverse()
    m1 = -ONE
    M = DiagonalBraiding(((m1, qi), (ONE, m1)), order)
    N = DiagonalBraiding(((m1, qi), (ONE, q)), order)
    return M, N


def rank_one_braiding(n: int) -> DiagonalBraiding:
    """q11 a primitive n-th root of unity."""
    return DiagonalBraiding(((CycScalar.root(n),),), n)


def nichols_dualization_datum(b: DiagonalBraiding, i: int, max_degree: int = 16, verify=True):
    """Datum (B(V) -> B(V_i), B(V_i^*), evaluation pairing) for 1-based i."""
    from .partialdual import make_datum
    r = b.rank
    i0 = i - 1
    cat = b.category
    H = materialize_nichols(b, max_degree, name="BV", verify=verify)
    ei = unit_vector(r, i0)
    A = nichols_hopf(cat, [ei], max_degree, name=f"BV{i}", letters=[f"x{i}"], verify=verify)
    B = nichols_hopf(cat, [tuple(-x for x in ei)], max_degree, name=f"BV{i}dual",
                     letters=[f"y{i}"], verify=verify)
    h_index = {w: k for k, w in enumerate(H.words)}
    pi_entries, iota_entries = [], []
    for ka, wa in enumerate(A.words):
        hw = tuple(i0 for _ in wa)
        iota_entries.append((h_index[hw], ka, ONE))
        pi_entries.append((ka, h_index[hw], ONE))
    pi = TypedMorphism.from_entries((H.space,), (A.space,), pi_entries)
    iota = TypedMorphism.from_entries((A.space,), (H.space,), iota_entries)
    p = pairing_from_generators(A, B, [[ONE]])
    return make_datum(H, A, B, pi, iota, p.omega)


def regraded_series(degrees, roots):
    """Hilbert coefficients of a graded basis measured in the basis ``roots``:
    a lattice degree sum_j b_j beta_j counts as t^(sum_j b_j)."""
    from fractions import Fraction
    r = len(roots)
    # solve gamma = sum_j b_j beta_j by Gauss-Jordan on the transposed root matrix
    coeffs: dict = {}
    for g in degrees:
        rows = [[Fraction(roots[j][k]) for j in range(r)] + [Fraction(g[k])] for k in range(r)]
        for col in range(r):
            piv = next(i for i in range(col, r) if rows[i][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [x / p for x in rows[col]]
            for i in range(r):
                if i != col and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
        b = [rows[k][r] for k in range(r)]
        if any(x.denominator != 1 or x < 0 for x in b):
            raise ValueError(f"degree {g} is not a non-negative combination of the roots")
        t = int(sum(b))
        coeffs[t] = coeffs.get(t, 0) + 1
    top = max(coeffs, default=0)
    return [coeffs.get(k, 0) for k in range(top + 1)]


def reflection_hilbert_check(b: DiagonalBraiding, i: int, result, max_degree: int = 16) -> dict:
    """Compare the Hilbert data of a partial dualization of B(V) along x_i with
    the reflected braiding: the whole algebra and its coinvariants, measured
    in the reflected root basis."""
    R = reflect(b, i)
    full = list(hilbert_series(R.braiding, max_degree).coeffs)
    qii = R.braiding.q[i - 1][i - 1]
    part = list(rank_one_series(qii, max_degree).coeffs)
    expected_coinv = poly_divexact(full, part)
    got_full = regraded_series(result.rH.degrees, R.roots)
    got_coinv = regraded_series(result.L.degrees, R.roots)
    return {"reflected_series": full, "series": got_full,
            "expected_coinvariants": expected_coinv, "coinvariants": got_coinv,
            "match": got_full == full and got_coinv == expected_coinv}
