import pytest
from hypothesis import given, settings, strategies as st

from hopfdual.exactmath import ONE, CycScalar, join_index
from hopfdual.hopfcore import verify_hopf
from hopfdual.nichols import (CutoffReached, DiagonalBraiding, WordSymmetrizer,
                              brute_force_symmetrizer, cartan_entry_formula, cartan_matrix,
                              hilbert_series, materialize_nichols, nichols_dualization_datum,
                              poly_divexact, poly_mul, poly_str, quantum_symmetrizer,
                              rank_one_series, reflect, reflection_hilbert_check,
                              regraded_series, sl21_braidings)
from hopfdual.partialdual import involutivity_check, partial_dualize


@st.composite
def braidings(draw, rank=2, order=6):
    exps = draw(st.lists(st.integers(0, order - 1), min_size=rank * rank, max_size=rank * rank))
    q = tuple(tuple(CycScalar.root(order, exps[i * rank + j]) for j in range(rank))
              for i in range(rank))
    return DiagonalBraiding(q, order)


def geometric(k):
    return [1] * k


# -- symmetrizer --------------------------------------------------------------------

@pytest.mark.parametrize("which", [0, 1])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_symmetrizer_matches_permutation_sum(which, n):
    b = sl21_braidings(3)[which]
    assert quantum_symmetrizer(b, n) == brute_force_symmetrizer(b, n)


@settings(max_examples=10)
@given(braidings(), st.integers(2, 4))
def test_symmetrizer_random_braidings(b, n):
    assert quantum_symmetrizer(b, n) == brute_force_symmetrizer(b, n)


@given(braidings(), st.lists(st.integers(0, 1), min_size=1, max_size=4))
def test_word_symmetrizer_is_matrix_column(b, word):
    n = len(word)
    Q = quantum_symmetrizer(b, n)
    col = Q.column(join_index(word, [2] * n))
    got = WordSymmetrizer(b.q)(tuple(word))
    assert {join_index(w, [2] * n): v for w, v in got.items()} == col


def test_rank_one_power_vanishes():
    # x^n = 0 in B(x) for q a primitive n-th root: Q_n(x^n) = (n)_q! x^n = 0
    for n in range(2, 7):
        Q = WordSymmetrizer(((CycScalar.root(n),),))
        assert Q((0,) * n) == {}
        assert Q((0,) * (n - 1)) != {}


# -- Hilbert series -------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_rank_one_series(n):
    hs = rank_one_series(CycScalar.root(n), 10)
    assert hs.complete and list(hs.coeffs) == geometric(n)


def test_series_is_truncated_without_completeness():
    hs = rank_one_series(CycScalar.root(6), 3)
    assert not hs.complete and hs.cutoff_reached


def test_polynomial_helpers():
    assert poly_mul([1, 1], [1, 1]) == [1, 2, 1]
    assert poly_divexact([1, 2, 1], [1, 1]) == [1, 1]
    assert poly_str([1, 2, 0, 1]) == "1 + 2t + t^3"
    with pytest.raises(ValueError):
        poly_divexact([1, 0, 1], [1, 1])


@pytest.mark.parametrize("n", [3, 4])
def test_rank_two_series(n):
    M, N = sl21_braidings(n)
    sM = list(hilbert_series(M, 2 * n).coeffs)
    sN = list(hilbert_series(N, 2 * n).coeffs)
    even = [1 if k % 2 == 0 else 0 for k in range(2 * n - 1)]
    assert sM == poly_mul(poly_mul([1, 1], [1, 1]), even)
    assert sN == poly_mul(poly_mul([1, 1], geometric(n)), [1, 0, 1])
    assert sum(sM) == sum(sN) == 4 * n
    assert sM != sN


def test_diagonal_of_unit_braiding_infinite():
    b = DiagonalBraiding(((ONE,),), 1)
    hs = hilbert_series(b, 5)
    assert not hs.complete and list(hs.coeffs) == [1] * 6


# -- Cartan matrices and reflections ----------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_cartan_rank_two(n):
    for b in sl21_braidings(n):
        assert cartan_matrix(b) == ((2, -1), (-1, 2))


@settings(max_examples=25)
@given(braidings())
def test_cartan_matches_formula(b):
    try:
        A = cartan_matrix(b, cutoff=8)
    except CutoffReached:
        with pytest.raises(CutoffReached):
            for i, j in ((0, 1), (1, 0)):
                cartan_entry_formula(b, i, j, cutoff=8)
        return
    assert A[0][1] == cartan_entry_formula(b, 0, 1)
    assert A[1][0] == cartan_entry_formula(b, 1, 0)


@settings(max_examples=25)
@given(braidings())
def test_double_reflection_restores_braiding(b):
    for i in (1, 2):
        try:
            R = reflect(b, i, cutoff=8)
            RR = reflect(R.braiding, i, cutoff=8)
        except CutoffReached:
            continue
        assert RR.braiding.twist_equivalent(b)


def test_reflections_of_the_rank_two_braidings():
    M, N = sl21_braidings(3)
    R = reflect(M, 1)
    assert list(hilbert_series(R.braiding, 8).coeffs) == list(hilbert_series(N, 8).coeffs)
    assert reflect(N, 2).braiding.twist_equivalent(N)
    assert R.roots == ((-1, 0), (1, 1))


def test_twist_equivalence_is_basis_independent():
    M, _ = sl21_braidings(3)
    q = M.q
    z = CycScalar.root(6)
    twisted = DiagonalBraiding(((q[0][0], q[0][1] * z), (q[1][0] * z.inverse(), q[1][1])), 6)
    assert twisted.twist_equivalent(M)
    assert not DiagonalBraiding(((q[0][0], q[0][1] * z), (q[1][0], q[1][1])), 6).twist_equivalent(M)


def test_regraded_series():
    assert regraded_series([(0, 0), (1, 0), (0, 1), (1, 1)], [(1, 0), (0, 1)]) == [1, 2, 1]
    assert regraded_series([(0, 0), (-1, 0)], [(-1, 0), (1, 1)]) == [1, 1]
    with pytest.raises(ValueError):
        regraded_series([(1, 0)], [(-1, 0), (0, 1)])


# -- materialized Nichols algebras and their partial duals ------------------------------

@pytest.fixture(scope="module")
def nichols_M3():
    M, N = sl21_braidings(3)
    return M, N, materialize_nichols(M, 10)


def test_materialized_nichols_is_hopf(nichols_M3):
    M, _, B = nichols_M3
    assert B.dim == 12
    assert verify_hopf(B).ok
    # generators are primitive up to the degree-zero part of the grading
    x = B.words.index((0,))
    assert B.Delta.column(x) == {0 * B.dim + x: ONE, x * B.dim + 0: ONE}


def test_nichols_relations(nichols_M3):
    _, _, B = nichols_M3
    n = B.dim
    for a in (0, 1):
        x = B.words.index((a,))
        assert B.mu.column(x * n + x) == {}  # q_aa = -1


@pytest.mark.parametrize("which,i", [(0, 1), (1, 2), (0, 2)])
def test_nichols_partial_dualization(which, i):
    b = sl21_braidings(3)[which]
    D = nichols_dualization_datum(b, i)
    r = partial_dualize(D)
    assert r.report.ok and r.rH.dim == 12
    chk = reflection_hilbert_check(b, i, r)
    assert chk["match"], chk
    assert involutivity_check(D, first=r).report.ok
