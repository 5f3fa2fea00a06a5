import pytest
from hypothesis import given, strategies as st

from hopfdual.catalog import (BadParams, check_taft, cyclic_pairing, evaluation_pairing,
                              function_algebra, group_algebra, hat_taft, monoid_bialgebra_matrices,
                              semidirect_cyclic, symmetric_group_s3, taft)
from hopfdual.exactmath import ONE, CycScalar, TypedMorphism
from hopfdual.hopfcore import (HopfAlgebra, HopfPairing, NoAntipode, invert_pairing,
                               is_hopf_isomorphism, op_cop_variants, pairing_variants,
                               solve_antipode, verify_hopf, verify_pairing)
from hopfdual.report import VerificationError

from conftest import TAFT_PARAMS


def elem(H, label):
    return {H.labels.index(label): ONE}


def mul(H, a, b):
    """Product of two basis vectors given by label."""
    n = H.dim
    return H.mu.column(H.labels.index(a) * n + H.labels.index(b))


def coproduct(H, label):
    n = H.dim
    col = H.Delta.column(H.labels.index(label))
    return {(H.labels[r // n], H.labels[r % n]): v for r, v in col.items()}


def catalog_algebras():
    yield group_algebra(4)
    yield group_algebra(symmetric_group_s3())
    yield function_algebra(symmetric_group_s3())
    yield group_algebra(semidirect_cyclic(5, 4, 2))
    yield taft(2)
    yield taft(3)
    yield taft(5, 2)
    for p in TAFT_PARAMS:
        yield hat_taft(*p)
        yield check_taft(*p)


@pytest.mark.parametrize("H", list(catalog_algebras()), ids=lambda H: H.name)
def test_catalog_algebras_satisfy_axioms(H):
    rep = verify_hopf(H)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("H", list(catalog_algebras()), ids=lambda H: H.name)
def test_antipode_solver_agrees(H):
    assert solve_antipode(H) == H.S


def test_hat_taft_relations():
    H = hat_taft(4, 2, 2)
    assert H.dim == 8
    g4 = elem(H, "1")
    v = {H.labels.index("g"): ONE}
    for _ in range(3):
        v = H.mu.apply({H.labels.index("g") * 8 + k: c for k, c in v.items()})
    assert v == g4
    assert mul(H, "x", "x") == {}
    gx, xg = mul(H, "g", "x"), mul(H, "x", "g")
    assert gx == {k: -c for k, c in xg.items()}
    assert coproduct(H, "x") == {("g", "x"): ONE, ("x", "1"): ONE}


def test_check_taft_coproduct():
    assert coproduct(check_taft(4, 2, 2), "x") == {("g^2", "x"): ONE, ("x", "1"): ONE}


def test_taft_is_neither_commutative_nor_cocommutative():
    T = taft(3)
    assert mul(T, "g", "x") != mul(T, "x", "g")
    assert coproduct(T, "x") != {(b, a): v for (a, b), v in coproduct(T, "x").items()}


@pytest.mark.parametrize("args", [(4, 3, 1), (4, 2, 1), (1, 1, 1), (6, 4, 1)])
def test_hat_taft_bad_params(args):
    with pytest.raises(BadParams):
        hat_taft(*args)


def test_no_antipode_for_monoid_bialgebra():
    sp, mu, eta, Delta, eps = monoid_bialgebra_matrices()
    with pytest.raises(NoAntipode):
        HopfAlgebra("CM", sp, mu, eta, Delta, eps)


def test_broken_structure_refused():
    G = group_algebra(3)
    bad = G.Delta.retype(G.Delta.domain, G.Delta.codomain)
    bad = TypedMorphism.from_entries(bad.domain, bad.codomain,
                                     list(bad.entries()) + [(1, 1, ONE)])
    with pytest.raises(VerificationError) as ei:
        HopfAlgebra("bad", G.space, G.mu, G.eta, bad, G.eps, G.S)
    names = [c.name for c in ei.value.report.failures]
    assert "coassociativity" in names
    w = ei.value.report["coassociativity"].witness
    assert len(w["row"]) == 3 and len(w["col"]) == 1


@pytest.mark.parametrize("N,k", [(2, 1), (3, 1), (4, 1), (5, 2), (6, 5)])
def test_cyclic_pairing_axioms_and_variants(N, k):
    p = cyclic_pairing(N, k)
    assert verify_pairing(p).ok
    for v in pairing_variants(p):
        assert verify_pairing(v).ok
        # the attached copairing equals the one obtained by inverting the matrix
        assert v.omega_inv == invert_pairing(HopfPairing(v.A, v.B, v.omega)).omega_inv


@pytest.mark.parametrize("n", [2, 3, 4])
def test_evaluation_pairing_abelian(n):
    from hopfdual.catalog import cyclic_group
    rep = verify_pairing(evaluation_pairing(cyclic_group(n)))
    assert rep.ok, rep.summary()


def test_pairing_convention_on_nonabelian_group():
    # omega(ab, f) = omega(a, f_(2)) omega(b, f_(1)): on C[S3] (x) C^S3 the naive
    # evaluation fails, while omega(g, e_h) = [g = h^-1] is a Hopf pairing.
    G = symmetric_group_s3()
    naive = evaluation_pairing(G)
    assert not verify_pairing(naive)["pairing_product_left"].passed
    n = G.order
    omega = TypedMorphism.from_entries((naive.A.space, naive.B.space), (),
                                       ((0, G.inv(h) * n + h, ONE) for h in range(n)))
    rep = verify_pairing(invert_pairing(HopfPairing(naive.A, naive.B, omega)))
    assert rep.ok, rep.summary()


def test_wrong_pairing_fails_axioms():
    p = cyclic_pairing(3)
    # omega(g^n, gbar^m) = 1 for all n, m is degenerate; a scaled one is not a Hopf pairing
    two = CycScalar.from_rational(2)
    bad = HopfPairing(p.A, p.B, TypedMorphism.from_entries(
        p.omega.domain, (), [(0, c, v * two) for _, c, v in p.omega.entries()]))
    assert not verify_pairing(bad).ok


@pytest.mark.parametrize("H", [taft(3), hat_taft(4, 2, 2)], ids=lambda H: H.name)
def test_op_cop_are_hopf(H):
    for V in op_cop_variants(H):
        assert verify_hopf(V).ok


@given(st.integers(0, 3), st.integers(0, 3))
def test_group_algebra_is_group_ring(a, b):
    G = group_algebra(4)
    assert G.mu.column(a * 4 + b) == {(a + b) % 4: ONE}


def test_identity_is_isomorphism():
    T = taft(3)
    assert is_hopf_isomorphism(TypedMorphism.identity((T.space,)), T, T).ok
