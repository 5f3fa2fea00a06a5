"""Sparse exact matrices typed by tensor factors.

A TypedMorphism maps the tensor product of its domain factors to the tensor
product of its codomain factors.  Basis indices of a tensor product are
row-major with the leftmost factor most significant.  Storage is a dict of
columns, each a dict ``row -> CycScalar`` with no explicit zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .cyclotomic import CycScalar, ONE, ZERO, cyc_inv

Vector = dict  # sparse column vector: index -> CycScalar


class NotInSpan(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Space:
    """A named finite-dimensional space.

    ``degrees`` optionally assigns a lattice degree (tuple of ints) to every
    basis vector; it is consulted by graded braidings and ignored otherwise.
    """
    name: str
    dim: int
    degrees: tuple | None = None

    def renamed(self, name: str) -> Space:
        return Space(name, self.dim, self.degrees)

    def degree(self, i: int):
        return self.degrees[i] if self.degrees is not None else None


UNIT_SPACES: tuple = ()


def dims_of(spaces: Sequence[Space]) -> tuple[int, ...]:
    return tuple(s.dim for s in spaces)


def split_index(idx: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        idx, r = divmod(idx, d)
        out.append(r)
    return tuple(reversed(out))


def join_index(parts: Sequence[int], dims: Sequence[int]) -> int:
    idx = 0
    for p, d in zip(parts, dims):
        idx = idx * d + p
    return idx


def _as_scalar(v) -> CycScalar:
    if isinstance(v, CycScalar):
        return v
    return CycScalar.from_rational(v)


class TypedMorphism:
    """Exact sparse matrix between tensor products of spaces."""

    __slots__ = ("domain", "codomain", "nrows", "ncols", "cols", "is_identity")

    def __init__(self, domain, codomain, cols: dict | None = None, *, is_identity=False):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.ncols = prod(dims_of(self.domain))
        self.nrows = prod(dims_of(self.codomain))
        self.cols = cols if cols is not None else {}
        self.is_identity = is_identity

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, spaces) -> TypedMorphism:
        spaces = tuple(spaces)
        n = prod(dims_of(spaces))
        return cls(spaces, spaces, {i: {i: ONE} for i in range(n)}, is_identity=True)

    @classmethod
    def zero(cls, domain, codomain) -> TypedMorphism:
        return cls(domain, codomain, {})

    @classmethod
    def from_entries(cls, domain, codomain, entries: Iterable) -> TypedMorphism:
        """Accumulate (row, col, value) triples."""
        m = cls(domain, codomain)
        cols = m.cols
        for r, c, v in entries:
            v = _as_scalar(v)
            if v.is_zero:
                continue
            if not (0 <= r < m.nrows and 0 <= c < m.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {m.nrows}x{m.ncols}")
            col = cols.setdefault(c, {})
            s = col.get(r)
            s = v if s is None else s + v
            if s.is_zero:
                del col[r]
                if not col:
                    del cols[c]
            else:
                col[r] = s
        return m

    @classmethod
    def from_dense(cls, domain, codomain, rows) -> TypedMorphism:
        return cls.from_entries(domain, codomain,
                                ((i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row)))

    @classmethod
    def from_columns(cls, domain, codomain, columns: Sequence[Vector]) -> TypedMorphism:
        cols = {j: {r: v for r, v in col.items() if not v.is_zero}
                for j, col in enumerate(columns)}
        return cls(domain, codomain, {j: c for j, c in cols.items() if c})

    # -- accessors ----------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, r: int, c: int) -> CycScalar:
        return self.cols.get(c, {}).get(r, ZERO)

    def column(self, c: int) -> Vector:
        return dict(self.cols.get(c, {}))

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def entries(self):
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    def rows(self) -> dict[int, dict[int, CycScalar]]:
        out: dict = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return out

    def to_dense(self) -> list[list[CycScalar]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self.cols

    def retype(self, domain=None, codomain=None) -> TypedMorphism:
        """Same matrix with relabelled factors (total dimensions must agree)."""
        domain = self.domain if domain is None else tuple(domain)
        codomain = self.codomain if codomain is None else tuple(codomain)
        if prod(dims_of(domain)) != self.ncols or prod(dims_of(codomain)) != self.nrows:
            raise ShapeMismatch("retype must preserve total dimensions")
        return TypedMorphism(domain, codomain, self.cols, is_identity=self.is_identity)

    # -- algebra ------------------------------------------------------
    def __matmul__(self, other: TypedMorphism) -> TypedMorphism:
        return compose(self, other)

    def __add__(self, other: TypedMorphism) -> TypedMorphism:
        _check_same_shape(self, other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, v in col.items():
                s = tgt.get(r)
                s = v if s is None else s + v
                if s.is_zero:
                    tgt.pop(r, None)
                else:
                    tgt[r] = s
            if not tgt:
                del cols[c]
        return TypedMorphism(self.domain, self.codomain, cols)

    def __neg__(self) -> TypedMorphism:
        return self.scale(-ONE)

    def __sub__(self, other: TypedMorphism) -> TypedMorphism:
        return self + (-other)

    def scale(self, s) -> TypedMorphism:
        s = _as_scalar(s)
        if s.is_zero:
            return TypedMorphism.zero(self.domain, self.codomain)
        cols = {c: {r: v * s for r, v in col.items()} for c, col in self.cols.items()}
        return TypedMorphism(self.domain, self.codomain, cols)

    def transpose(self) -> TypedMorphism:
        return TypedMorphism(self.codomain, self.domain, self.rows())

    def __eq__(self, other):
        if not isinstance(other, TypedMorphism):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    __hash__ = None

    def first_difference(self, other: TypedMorphism):
        """First (row, col, self_value, other_value) where the matrices differ."""
        _check_same_shape(self, other)
        for c in sorted(set(self.cols) | set(other.cols)):
            a, b = self.cols.get(c, {}), other.cols.get(c, {})
            for r in sorted(set(a) | set(b)):
                x, y = a.get(r, ZERO), b.get(r, ZERO)
                if x != y:
                    return r, c, x, y
        return None

    def apply(self, vec: Vector) -> Vector:
        out: dict = {}
        for c, x in vec.items():
            col = self.cols.get(c)
            if col:
                _axpy(out, x, col)
        return out

    def __repr__(self):
        dom = "*".join(s.name for s in self.domain) or "1"
        cod = "*".join(s.name for s in self.codomain) or "1"
        return f"<TypedMorphism {dom} -> {cod}, {self.nrows}x{self.ncols}, nnz={self.nnz()}>"


def _check_same_shape(a: TypedMorphism, b: TypedMorphism):
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")


def _axpy(out: dict, x: CycScalar, col: dict):
    """out += x * col, dropping cancellations."""
    one = x.is_one
    for r, v in col.items():
        t = v if one else v * x
        s = out.get(r)
        if s is None:
            out[r] = t
        else:
            s = s + t
            if s.is_zero:
                del out[r]
            else:
                out[r] = s


def compose(g: TypedMorphism, f: TypedMorphism) -> TypedMorphism:
    """g after f."""
    if dims_of(f.codomain) != dims_of(g.domain):
        # allow regrouping of factors as long as the total dimension agrees
        if f.nrows != g.ncols:
            raise ShapeMismatch(
                f"cannot compose {g!r} after {f!r}: {f.nrows} != {g.ncols}")
    if g.is_identity:
        return TypedMorphism(f.domain, g.codomain, f.cols, is_identity=f.is_identity)
    if f.is_identity:
        return TypedMorphism(f.domain, g.codomain, g.cols)
    cols = {}
    gcols = g.cols
    for c, fcol in f.cols.items():
        out: dict = {}
        for l, x in fcol.items():
            gcol = gcols.get(l)
            if gcol:
                _axpy(out, x, gcol)
        if out:
            cols[c] = out
    return TypedMorphism(f.domain, g.codomain, cols)


def kron(*ms: TypedMorphism) -> TypedMorphism:
    """Tensor (Kronecker) product, leftmost factor most significant."""
    if not ms:
        return TypedMorphism.identity(())
    result = ms[0]
    for m in ms[1:]:
        result = _kron2(result, m)
    return result


def _kron2(f: TypedMorphism, g: TypedMorphism) -> TypedMorphism:
    dom = f.domain + g.domain
    cod = f.codomain + g.codomain
    if f.is_identity and g.is_identity:
        return TypedMorphism.identity(dom)
    n2, m2 = g.ncols, g.nrows
    cols = {}
    for c1, col1 in f.cols.items():
        for c2, col2 in g.cols.items():
            out = {}
            for r1, v1 in col1.items():
                base = r1 * m2
                for r2, v2 in col2.items():
                    out[base + r2] = v1 * v2
            cols[c1 * n2 + c2] = out
    return TypedMorphism(dom, cod, cols)


def apply_kron(factors: Sequence[TypedMorphism], m: TypedMorphism) -> TypedMorphism:
    """Compute kron(*factors) @ m without forming the Kronecker product."""
    in_dims = [f.ncols for f in factors]
    out_dims = [f.nrows for f in factors]
    if prod(in_dims) != m.nrows:
        raise ShapeMismatch(f"tensor factor domain {prod(in_dims)} != {m.nrows}")
    codomain = tuple(s for f in factors for s in f.codomain)
    if all(f.is_identity for f in factors):
        return TypedMorphism(m.domain, codomain, m.cols, is_identity=m.is_identity)
    cache: dict = {}

    def image(idx):
        # kron(*factors) applied to basis vector idx, as a list of (row, value)
        hit = cache.get(idx)
        if hit is not None:
            return hit
        parts = split_index(idx, in_dims)
        terms = [(0, ONE)]
        for f, p, od in zip(factors, parts, out_dims):
            if f.is_identity:
                terms = [(r * od + p, v) for r, v in terms]
                continue
            col = f.cols.get(p)
            if not col:
                terms = []
                break
            terms = [(r * od + r2, v if v2.is_one else (v2 if v.is_one else v * v2))
                     for r, v in terms for r2, v2 in col.items()]
        cache[idx] = terms
        return terms

    cols = {}
    for c, col in m.cols.items():
        out: dict = {}
        for idx, x in col.items():
            terms = image(idx)
            if terms:
                _axpy(out, x, dict(terms) if len(terms) == len({r for r, _ in terms}) else _merge(terms))
        if out:
            cols[c] = out
    return TypedMorphism(m.domain, codomain, cols)


def _merge(terms):
    out: dict = {}
    for r, v in terms:
        s = out.get(r)
        out[r] = v if s is None else s + v
    return {r: v for r, v in out.items() if not v.is_zero}


def permute_factors(spaces: Sequence[Space], perm: Sequence[int], scalar=None) -> TypedMorphism:
    """Map e_{i_0} x ... x e_{i_k} to the tensor with factor perm[j] in slot j.

    ``scalar`` may be a function of the index tuple returning a CycScalar.
    """
    spaces = tuple(spaces)
    dims = dims_of(spaces)
    out_spaces = tuple(spaces[p] for p in perm)
    out_dims = dims_of(out_spaces)
    cols = {}
    for idx in range(prod(dims)):
        parts = split_index(idx, dims)
        r = join_index([parts[p] for p in perm], out_dims)
        v = ONE if scalar is None else scalar(parts)
        if not v.is_zero:
            cols[idx] = {r: v}
    return TypedMorphism(spaces, out_spaces, cols)


# -- row reduction -------------------------------------------------------

def _rref_rows(rows: list[dict], ncols: int):
    """Gauss-Jordan elimination on sparse rows; returns (pivot_cols, rows).

    Rows are dicts col -> value.  Pivots are chosen left to right; among the
    candidate rows the sparsest one is taken.
    """
    rows = [dict(r) for r in rows if r]
    pivots = []
    reduced = []
    by_col: dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, set()).add(i)
    alive = set(range(len(rows)))
    for c in range(ncols):
        cands = [i for i in by_col.get(c, ()) if i in alive]
        if not cands:
            continue
        p = min(cands, key=lambda i: (len(rows[i]), i))
        alive.discard(p)
        prow = rows[p]
        inv = cyc_inv(prow[c])
        if not inv.is_one:
            prow = {k: v * inv for k, v in prow.items()}
        rows[p] = prow
        for i in list(by_col.get(c, ())):
            if i == p:
                continue
            r = rows[i]
            f = r.get(c)
            if f is None:
                continue
            for k, v in prow.items():
                s = r.get(k)
                t = v * f
                if s is None:
                    r[k] = -t
                    by_col.setdefault(k, set()).add(i)
                else:
                    s = s - t
                    if s.is_zero:
                        del r[k]
                        by_col[k].discard(i)
                    else:
                        r[k] = s
        pivots.append(c)
        reduced.append(p)
    # rows of earlier pivots may still carry entries in later pivot columns
    # only if they were not eliminated; Gauss-Jordan above clears all rows
    # (alive or not) for each pivot column, so the result is fully reduced.
    return pivots, [rows[p] for p in reduced]


def rref(m: TypedMorphism):
    """Reduced row echelon form of m: (pivot_columns, reduced_rows)."""
    rows = m.rows()
    return _rref_rows([rows[r] for r in sorted(rows)], m.ncols)


def rref_kernel(m: TypedMorphism):
    """Return (rank, kernel_basis) with kernel vectors as sparse dicts."""
    pivots, rows = rref(m)
    pivset = set(pivots)
    kernel = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = {f: ONE}
        for pc, row in zip(pivots, rows):
            x = row.get(f)
            if x is not None:
                v[pc] = -x
        kernel.append(v)
    return len(pivots), kernel


def rank(m: TypedMorphism) -> int:
    return len(rref(m)[0])


def inverse(m: TypedMorphism) -> TypedMorphism:
    """Exact inverse; raises NotInvertible."""
    n = m.ncols
    if m.nrows != n:
        raise NotInvertible(f"non-square {m.shape}")
    rows = m.rows()
    aug = []
    for r in range(n):
        row = dict(rows.get(r, {}))
        row[n + r] = ONE
        aug.append(row)
    pivots, red = _rref_rows(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise NotInvertible("matrix is singular")
    cols: dict = {}
    for pc, row in zip(pivots, red):
        for k, v in row.items():
            if k >= n:
                cols.setdefault(k - n, {})[pc] = v
    return TypedMorphism(m.codomain, m.domain, cols)


class SpanSolver:
    """Coordinates of vectors in the span of a fixed list of basis vectors."""

    def __init__(self, basis: Sequence[Vector]):
        self.basis = [dict(b) for b in basis]
        k = len(self.basis)
        # rows of the transposed system: basis^T, then reduce to find pivot rows
        rows_t = [dict(b) for b in self.basis]
        ncols = 1 + max((max(b) for b in self.basis if b), default=-1)
        pivots, red = _rref_rows(rows_t, ncols)
        if len(pivots) < k:
            raise ValueError("basis vectors are linearly dependent")
        self.pivot_rows = pivots
        sub = TypedMorphism.from_entries(
            [Space("k", k)], [Space("k", k)],
            ((i, j, self.basis[j].get(p, ZERO)) for i, p in enumerate(pivots) for j in range(k)))
        self._inv = inverse(sub) if k else sub

    def solve(self, target: Vector) -> Vector:
        rhs = {i: target[p] for i, p in enumerate(self.pivot_rows) if p in target}
        coords = self._inv.apply(rhs)
        check: dict = {}
        for j, x in coords.items():
            _axpy(check, x, self.basis[j])
        if check != {k: v for k, v in target.items() if not v.is_zero}:
            raise NotInSpan("target is not in the span of the basis")
        return coords


def solve_in_span(basis: Sequence[Vector], target: Vector) -> Vector:
    """Coordinates c with sum_j c_j basis_j == target; raises NotInSpan."""
    if not basis:
        if any(not v.is_zero for v in target.values()):
            raise NotInSpan("empty basis")
        return {}
    return SpanSolver(basis).solve(target)


def vec_add(a: Vector, b: Vector, scale=None) -> Vector:
    out = dict(a)
    _axpy(out, ONE if scale is None else scale, b)
    return out
