import pytest

from hopfdual.catalog import (group_algebra, function_algebra, cyclic_group, hat_taft,
                              semidirect_cyclic, symmetric_group_s3)
from hopfdual.exactmath import ONE, TypedMorphism, kron
from hopfdual.hopfcore import HopfAlgebra, YDOver, verify_hopf
from hopfdual.radford import (NotAProjection, NotASection, biproduct, check_projection,
                              coinvariants, nest_checks, yd_nest, yd_unnest)
from hopfdual.ydcat import regular_yd_module, trivial_yd_module, verify_yd

from conftest import TAFT_PARAMS


def onto_quotient(H, A, pairs):
    return TypedMorphism.from_entries((H.space,), (A.space,), ((a, h, ONE) for h, a in pairs))


def taft_projection(N, d, c):
    H = hat_taft(N, d, c)
    A = group_algebra(N, "CZ")
    pi = onto_quotient(H, A, [(j, j) for j in range(N)])
    iota = TypedMorphism.from_entries((A.space,), (H.space,), ((j, j, ONE) for j in range(N)))
    return H, A, pi, iota


def semidirect_projection(n, m, a):
    G = semidirect_cyclic(n, m, a)
    H = group_algebra(G, "CG")
    A = group_algebra(cyclic_group(m, "q"), "CQ")
    pi = onto_quotient(H, A, [(i * m + j, j) for i in range(n) for j in range(m)])
    iota = TypedMorphism.from_entries((A.space,), (H.space,), ((j, j, ONE) for j in range(m)))
    return H, A, pi, iota


def trivially_braided(K, A):
    """K as a Hopf algebra in YD over A with trivial action and coaction."""
    Ks = K.space
    iK = TypedMorphism.identity((Ks,))
    rho = kron(A.eps, iK)
    delta = kron(A.eta, iK)
    return HopfAlgebra(K.name, Ks, K.mu, K.eta, K.Delta, K.eps, K.S, ambient=YDOver(A),
                       yd=(rho, delta), labels=K.labels)


def test_trivial_biproduct_is_tensor_product():
    A = group_algebra(3, "CZ3")
    K = trivially_braided(function_algebra(2, "F2"), A)
    bp = biproduct(K, A)
    assert bp.report.ok
    R = bp.result
    assert R.mu == kron(K.mu, A.mu).retype(R.mu.domain, R.mu.codomain) @ _middle_swap(K, A)
    assert R.dim == 6


def _middle_swap(K, A):
    from hopfdual.exactmath import permute_factors
    return permute_factors((K.space, A.space, K.space, A.space), (0, 2, 1, 3)).retype(
        (K.space, A.space, K.space, A.space), (K.space, K.space, A.space, A.space))


@pytest.mark.parametrize("N,d,c", TAFT_PARAMS)
def test_taft_coinvariants(N, d, c):
    H, A, pi, iota = taft_projection(N, d, c)
    D = coinvariants(H, A, pi, iota)
    assert D.report.ok, D.report.summary()
    assert D.K.dim == d
    assert D.K.labels[:2] == ["1", "x"]
    assert D.biproduct.report["antipode_diagram_matches_solver"].passed


@pytest.mark.parametrize("args", [(3, 2, 2), (5, 4, 2), (7, 3, 2), (4, 2, 3)])
def test_semidirect_coinvariants(args):
    H, A, pi, iota = semidirect_projection(*args)
    D = coinvariants(H, A, pi, iota)
    assert D.report.ok
    assert D.K.dim == args[0]
    assert verify_hopf(D.K).ok


def test_identity_projection_has_trivial_coinvariants():
    H = group_algebra(symmetric_group_s3(), "CS3")
    i = TypedMorphism.identity((H.space,))
    D = coinvariants(H, H, i, i)
    assert D.K.dim == 1 and D.report.ok


def test_not_a_projection():
    H, A, _, iota = taft_projection(4, 2, 2)
    # every basis vector to 1: fails the counit on x
    bad = onto_quotient(H, A, [(j, 0) for j in range(8)])
    with pytest.raises(NotAProjection):
        coinvariants(H, A, bad, iota)


def test_not_a_section():
    H, A, pi, _ = taft_projection(4, 2, 2)
    bad = TypedMorphism.from_entries((A.space,), (H.space,), ((0, j, ONE) for j in range(4)))
    with pytest.raises(NotASection):
        coinvariants(H, A, pi, bad)
    assert not check_projection(H, A, pi, bad).ok


@pytest.mark.parametrize("N,d,c", [(4, 2, 2), (3, 3, 1)])
def test_nest_unnest_round_trip(N, d, c):
    H, A, pi, iota = taft_projection(N, d, c)
    D = coinvariants(H, A, pi, iota)
    bp = D.biproduct
    for M in (regular_yd_module(bp.result), trivial_yd_module(bp.result)):
        rep = nest_checks(M, bp)
        assert rep.ok, rep.summary()
        N_ = yd_nest(M, bp)
        assert verify_yd(N_.base).ok
        back = yd_unnest(N_, bp)
        assert back.rho == M.rho and back.delta == M.delta


def test_nest_rejects_foreign_module():
    H, A, pi, iota = taft_projection(4, 2, 2)
    D = coinvariants(H, A, pi, iota)
    with pytest.raises(ValueError):
        yd_nest(regular_yd_module(A), D.biproduct)
