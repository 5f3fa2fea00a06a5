"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as an integer coefficient vector of length
phi(N) over a common positive denominator, i.e. as the reduced representative
of a polynomial in zeta_N modulo the cyclotomic polynomial Phi_N.  Elements of
different orders are compared and combined by embedding both into
Q(zeta_lcm).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting the zero element."""


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided exactly by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_div_monic(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div_monic(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    assert not any(num), "division was not exact"
    return q


class _Field:
    """Per-order lookup tables: powers of zeta reduced mod Phi_N and traces."""

    __slots__ = ("n", "phi", "poly", "powers", "traces")

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_polynomial(n)
        self.phi = len(self.poly) - 1
        phi = self.phi
        powers = []
        v = [0] * phi
        v[0] = 1
        for _ in range(max(n, 2 * phi)):
            powers.append(tuple(v))
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                for j in range(phi):
                    v[j] -= top * self.poly[j]
        self.powers = powers
        # trace of zeta^k for k < phi (Ramanujan sums)
        traces = []
        for k in range(phi):
            g = math.gcd(n, k) if k else n
            m = n // g
            traces.append(_mobius(m) * phi // totient(m))
        self.traces = tuple(traces)

    def reduce(self, coeffs) -> list[int]:
        """Reduce an integer exponent-indexed list modulo Phi_N and zeta^N=1."""
        phi, n, powers = self.phi, self.n, self.powers
        out = [0] * phi
        for e, c in enumerate(coeffs):
            if not c:
                continue
            if e < phi:
                out[e] += c
                continue
            row = powers[e % n]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
        return out


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycScalar:
    """Element of Q(zeta_N), immutable and hashable.

    >>> z = CycScalar.root(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("order", "num", "den", "rational", "_hash")

    def __init__(self, order: int, num, den: int = 1, *, _canonical: bool = False):
        if _canonical:
            self.order, self.num, self.den = order, num, den
        else:
            F = _field(order)
            coeffs = F.reduce(num)
            self.order = order
            self.num, self.den = _normalize(coeffs, den)
        self.rational = not any(self.num[1:])
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, order, num, den):
        return cls(order, *_normalize(num, den), _canonical=True)

    @classmethod
    def from_rational(cls, x) -> CycScalar:
        x = Fraction(x)
        return cls(1, (x.numerator,), x.denominator, _canonical=True)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> CycScalar:
        """Build sum_k coeffs[k] zeta_N^k from rationals of any length."""
        fr = [Fraction(c) for c in coeffs] or [Fraction(0)]
        den = math.lcm(*(c.denominator for c in fr))
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return cls(order, ints, den)

    @classmethod
    def root(cls, order: int, k: int = 1) -> CycScalar:
        """zeta_order ** k."""
        F = _field(order)
        return cls(order, F.powers[k % order], 1, _canonical=True)

    # -- accessors ----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    @property
    def is_one(self) -> bool:
        return self.rational and self.den == 1 and self.num[0] == 1

    def to_fraction(self) -> Fraction:
        if not self.rational:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def embed(self, order: int) -> CycScalar:
        """Image in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        if self.rational:
            num = [0] * totient(order)
            num[0] = self.num[0]
            return CycScalar(order, tuple(num), self.den, _canonical=True)
        step = order // self.order
        spread = [0] * (step * (len(self.num) - 1) + 1)
        for k, c in enumerate(self.num):
            spread[k * step] = c
        return CycScalar(order, spread, self.den)

    def _rational_at(self, order: int) -> CycScalar:
        if order == self.order:
            return self
        num = [0] * totient(order)
        num[0] = self.num[0]
        return CycScalar(order, tuple(num), self.den, _canonical=True)

    # -- arithmetic ---------------------------------------------------
    def _align(self, other):
        if not isinstance(other, CycScalar):
            if isinstance(other, (int, Rational)):
                other = CycScalar.from_rational(other)
            else:
                return None, None
        if self.order == other.order:
            return self, other
        if other.rational:
            return self, other._rational_at(self.order)
        if self.rational:
            return self._rational_at(other.order), other
        n = math.lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if b.is_zero:
            return a
        if a.is_zero:
            return b
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return CycScalar._raw(a.order, num, a.den)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycScalar._raw(a.order, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, tuple(-c for c in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycScalar):
            a, b = self._align(other)
            if a is None:
                return NotImplemented
            return a * b
        if other.rational:
            if other.is_one:
                return self
            c, d = other.num[0], other.den
            if not c:
                return other if self.order == 1 else CycScalar.zero(self.order)
            return CycScalar._raw(self.order, [x * c for x in self.num], self.den * d)
        if self.rational:
            return other * self
        a, b = self._align(other)
        F = _field(a.order)
        phi = F.phi
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        powers = F.powers
        for e in range(phi, 2 * phi - 1):
            c = prod[e]
            if c:
                row = powers[e]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CycScalar._raw(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        return cyc_inv(self)

    def __truediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a * cyc_inv(b)

    def __rtruediv__(self, other):
        return cyc_inv(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return cyc_inv(self) ** (-k)
        result = CycScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def zero(cls, order: int = 1) -> CycScalar:
        return cls(order, (0,) * totient(order), 1, _canonical=True)

    @classmethod
    def one(cls, order: int = 1) -> CycScalar:
        return cls(order, (1,) + (0,) * (totient(order) - 1), 1, _canonical=True)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # normalized trace Tr(x)/phi(N) is invariant under embedding
        if self._hash is None:
            if self.rational:
                t = Fraction(self.num[0], self.den)
            else:
                F = _field(self.order)
                s = sum(c * t for c, t in zip(self.num, F.traces))
                t = Fraction(s, self.den * F.phi)
            self._hash = hash(t)
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"CycScalar({self.order}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def cyc_canonicalize(order: int, coeffs) -> CycScalar:
    """Reduce an arbitrary-length rational coefficient list modulo Phi_order."""
    return CycScalar.from_coeffs(order, coeffs)


# -- inversion by the extended Euclidean algorithm over Q[x] --------------

def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _poly_trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    rem = _poly_trim(a[:db] or [Fraction(0)])
    return _poly_trim(q), rem


def _poly_sub_mul(a, q, b):
    """a - q*b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _poly_trim(out)


def cyc_inv(a: CycScalar) -> CycScalar:
    """Multiplicative inverse; raises ZeroInverse for zero."""
    if a.is_zero:
        raise ZeroInverse("inverse of zero in a cyclotomic field")
    if a.rational:
        return CycScalar._raw(a.order, [a.den] + [0] * (len(a.num) - 1), a.num[0])
    # invariant: s_i * a == r_i  (mod Phi_N)
    r0 = [Fraction(c) for c in cyclotomic_polynomial(a.order)]
    r1 = _poly_trim([Fraction(c, a.den) for c in a.num])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0] == 0:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # r1 is a nonzero constant since Phi_N is irreducible
    c = r1[0]
    return CycScalar.from_coeffs(a.order, [x / c for x in s1])


# -- literal syntax ------------------------------------------------------

def parse_scalar(lit, order: int) -> CycScalar:
    """Parse a scalar literal.

    Accepted forms: a list of rational strings indexed by powers of zeta_order,
    a rational string "m/n", "z^k", "-z^k" or "z"; bare ints are also allowed.
    """
    if isinstance(lit, CycScalar):
        return lit
    if isinstance(lit, bool):
        raise ValueError(f"bad scalar literal {lit!r}")
    if isinstance(lit, int):
        return CycScalar.from_rational(lit).embed(order)
    if isinstance(lit, list):
        return CycScalar.from_coeffs(order, [Fraction(str(c)) for c in lit])
    if isinstance(lit, str):
        s = lit.replace(" ", "")
        sign = 1
        if s.startswith("-") and "z" in s:
            sign, s = -1, s[1:]
        if s.startswith("z"):
            k = int(s[2:]) if s.startswith("z^") else (1 if s == "z" else None)
            if k is None:
                raise ValueError(f"bad scalar literal {lit!r}")
            z = CycScalar.root(order, k)
            return -z if sign < 0 else z
        try:
            return CycScalar.from_rational(Fraction(s)).embed(order)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad scalar literal {lit!r}") from None
    raise ValueError(f"bad scalar literal {lit!r}")


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_literal(x: CycScalar, order: int):
    """Canonical literal: rational string, or list of phi(order) rational strings."""
    if x.rational:
        return _frac_str(x.to_fraction())
    return [_frac_str(c) for c in x.embed(order).coeffs]


def format_scalar(x: CycScalar) -> str:
    """Human-readable form, e.g. '1/2 - z^3' with z a primitive root."""
    if x.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not mono:
            body = _frac_str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{_frac_str(abs(c))}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, body in parts[1:]:
        out += f" {sgn} {body}"
    return out


def to_complex(x: CycScalar) -> complex:
    """Numerical value with zeta_N = exp(2 pi i / N); for display only."""
    import cmath
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


ZERO = CycScalar.zero()
ONE = CycScalar.one()
