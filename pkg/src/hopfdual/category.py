"""Base braided categories: plain vector spaces, or lattice-graded spaces.

Graded spaces carry a Z^r degree on every basis vector; the braiding is
c(x (x) y) = chi(deg x, deg y) y (x) x with the bicharacter
chi(a, b) = prod_{k,l} q[k][l] ** (a_k * b_l).  Vect is the rank-0 case.
"""
from __future__ import annotations

from functools import lru_cache
from math import prod

from .exactmath import CycScalar, ONE, TypedMorphism, dims_of, split_index


def _tensor_degrees(spaces):
    """Degrees of the tensor basis, or None when all factors are ungraded."""
    if all(s.degrees is None for s in spaces):
        return None
    dims = dims_of(spaces)
    out = []
    for idx in range(prod(dims)):
        parts = split_index(idx, dims)
        total = None
        for s, p in zip(spaces, parts):
            d = s.degree(p)
            if d is None:
                continue
            total = d if total is None else tuple(a + b for a, b in zip(total, d))
        out.append(total)
    return out


class BraidedCategory:
    """Braided base category given by a bicharacter matrix (None means Vect)."""

    def __init__(self, q=None):
        self.q = None if q is None else tuple(tuple(row) for row in q)
        self.rank = 0 if q is None else len(self.q)
        self._chi_cache: dict = {}
        self._braid_cache: dict = {}

    @property
    def is_vect(self) -> bool:
        return self.q is None

    @property
    def symmetric(self) -> bool:
        if self.q is None:
            return True
        r = self.rank
        return all((self.q[k][l] * self.q[l][k]).is_one for k in range(r) for l in range(r))

    def __eq__(self, other):
        return isinstance(other, BraidedCategory) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return "Vect" if self.q is None else f"GradedVect(rank={self.rank})"

    def chi(self, a, b) -> CycScalar:
        if self.q is None or a is None or b is None:
            return ONE
        key = (a, b)
        hit = self._chi_cache.get(key)
        if hit is None:
            hit = ONE
            for k, ak in enumerate(a):
                if not ak:
                    continue
                for l, bl in enumerate(b):
                    if bl:
                        hit = hit * self.q[k][l] ** (ak * bl)
            self._chi_cache[key] = hit
        return hit

    def braid(self, xs, ys) -> TypedMorphism:
        """c_{X,Y}: X (x) Y -> Y (x) X for tuples of factors."""
        return self._braid(tuple(xs), tuple(ys), False)

    def braid_inv(self, xs, ys) -> TypedMorphism:
        """(c_{X,Y})^{-1}: Y (x) X -> X (x) Y."""
        return self._braid(tuple(xs), tuple(ys), True)

    def _braid(self, xs, ys, inv):
        key = (xs, ys, inv)
        hit = self._braid_cache.get(key)
        if hit is not None:
            return hit
        nx, ny = prod(dims_of(xs)), prod(dims_of(ys))
        dx = _tensor_degrees(xs) if self.q is not None else None
        dy = _tensor_degrees(ys) if self.q is not None else None
        cols = {}
        for i in range(nx):
            for j in range(ny):
                s = ONE if dx is None or dy is None else self.chi(dx[i], dy[j])
                if inv:
                    cols[j * nx + i] = {i * ny + j: s if s.is_one else s.inverse()}
                else:
                    cols[i * ny + j] = {j * nx + i: s}
        m = (TypedMorphism(ys + xs, xs + ys, cols) if inv
             else TypedMorphism(xs + ys, ys + xs, cols))
        self._braid_cache[key] = m
        return m


VECT = BraidedCategory()


@lru_cache(maxsize=None)
def graded_category(q) -> BraidedCategory:
    return BraidedCategory(q)


def lattice_add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return tuple(x + y for x, y in zip(a, b))
