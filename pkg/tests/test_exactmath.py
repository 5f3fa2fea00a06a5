from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfdual.exactmath import (CycScalar, NotInSpan, NotInvertible, Space, SpanSolver,
                                TypedMorphism, ZeroInverse, inverse, kron, parse_scalar, rank,
                                rref_kernel, scalar_literal, solve_in_span, totient)

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


@st.composite
def scalars(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=n, max_size=n))
    return CycScalar.from_coeffs(n, coeffs)


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CycScalar.from_rational(0)


@given(scalars())
def test_inverse(a):
    if a.is_zero:
        with pytest.raises(ZeroInverse):
            a.inverse()
    else:
        assert (a * a.inverse()).is_one


@pytest.mark.parametrize("n", ORDERS)
def test_roots_of_unity(n):
    z = CycScalar.root(n)
    assert (z ** n).is_one
    for k in range(1, n):
        assert not (z ** k).is_one
    # sum of all n-th roots is 0 for n > 1
    total = sum((z ** k for k in range(n)), CycScalar.from_rational(0))
    assert total.is_zero == (n > 1)


def test_totient():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_embedding_is_consistent():
    z3 = CycScalar.root(3)
    z6 = CycScalar.root(6)
    assert z6 ** 2 == z3
    assert z3.embed(12) == CycScalar.root(12, 4)
    assert -CycScalar.root(6, 3) == CycScalar.from_rational(1)


@given(scalars(order=12))
def test_literal_round_trip(a):
    assert parse_scalar(scalar_literal(a, 12), 12) == a


def test_parse_forms():
    assert parse_scalar("z^2", 4) == CycScalar.from_rational(-1)
    assert parse_scalar("-z", 3) == -CycScalar.root(3)
    assert parse_scalar("3/4", 5).to_fraction() == Fraction(3, 4)
    assert parse_scalar(["0", "1"], 3) == CycScalar.root(3)
    with pytest.raises(ValueError):
        parse_scalar("w^2", 3)
    with pytest.raises(ValueError):
        parse_scalar(True, 3)


V2, V3 = Space("V", 2), Space("W", 3)


def _dense(dom, cod, rows):
    return TypedMorphism.from_dense(dom, cod, [[CycScalar.from_rational(x) for x in r] for r in rows])


@st.composite
def matrices(draw, dom, cod, order=3):
    nr = 1
    for s in cod:
        nr *= s.dim
    nc = 1
    for s in dom:
        nc *= s.dim
    vals = draw(st.lists(scalars(order=order), min_size=nr * nc, max_size=nr * nc))
    return TypedMorphism.from_dense(dom, cod, [vals[i * nc:(i + 1) * nc] for i in range(nr)])


@given(matrices((V2,), (V3,)), matrices((V3,), (V2,)), matrices((V2,), (V2,)))
def test_kron_interchange(f, g, h):
    # (g f) (x) h = (g (x) id)(f (x) h)
    lhs = kron(g @ f, h)
    rhs = kron(g, TypedMorphism.identity((V2,))) @ kron(f, h)
    assert lhs == rhs


@given(matrices((V3,), (V3,)))
def test_inverse_or_singular(m):
    try:
        mi = inverse(m)
    except NotInvertible:
        r, ker = rref_kernel(m)
        assert r < 3 and ker
        for v in ker:
            assert not any(not x.is_zero for x in m.apply(v).values())
        return
    assert mi @ m == TypedMorphism.identity((V3,))
    assert m @ mi == TypedMorphism.identity((V3,))


def test_kernel_and_rank():
    m = _dense((V3,), (V2,), [[1, 2, 3], [2, 4, 6]])
    r, ker = rref_kernel(m)
    assert r == rank(m) == 1
    assert len(ker) == 2


def test_span_solver():
    one = CycScalar.from_rational(1)
    basis = [{0: one, 1: one}, {1: one}]
    c = SpanSolver(basis).solve({0: CycScalar.from_rational(2)})
    assert c == {0: CycScalar.from_rational(2), 1: CycScalar.from_rational(-2)}
    with pytest.raises(NotInSpan):
        solve_in_span([{0: one}], {1: one})
    with pytest.raises(ValueError):
        SpanSolver([{0: one}, {0: one}])


def test_shape_errors():
    a = _dense((V2,), (V2,), [[1, 0], [0, 1]])
    b = _dense((V3,), (V3,), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(Exception):
        a @ b
    with pytest.raises(IndexError):
        TypedMorphism.from_entries((V2,), (V2,), [(5, 0, 1)])
