import pytest
from hypothesis import given, strategies as st

from hopfdual.catalog import cyclic_pairing, group_algebra, symmetric_group_s3
from hopfdual.category import graded_category
from hopfdual.exactmath import ONE, CycScalar, Space, TypedMorphism
from hopfdual.hopfcore import invert_pairing, verify_hopf, verify_pairing
from hopfdual.nichols import nichols_hopf, pairing_from_generators
from hopfdual.ydcat import (YDModule, dual_functor, hexagon_checks, is_yd_morphism,
                            omega_checks, omega_functor, omega_roundtrip_iso, omega_structure,
                            regular_yd_module, side_switch, side_switch_checks, theta,
                            theta_lemma_checks, transport_hopf, trivial_yd_module, verify_yd,
                            yd_braiding, yd_tensor)

from conftest import taft_dualized


def diagonal_module(A, n, data, name="X"):
    """YD module over C[Z_n]: basis v_i of degree g^{d_i} on which g acts by zeta_n^{a_i}."""
    k = len(data)
    sp = Space(name, k)
    z = CycScalar.root(n)
    rho = TypedMorphism.from_entries((A.space, sp), (sp,), (
        (i, h * k + i, z ** (a * h)) for h in range(n) for i, (a, _) in enumerate(data)))
    delta = TypedMorphism.from_entries((sp,), (A.space, sp), (
        (d * k + i, i, ONE) for i, (_, d) in enumerate(data)))
    return YDModule(A, sp, rho, delta)


def taft_K(N=4, d=2, c=2):
    D, r = taft_dualized(N, d, c)
    K = r.K.K
    return K, YDModule(K.ambient.over, K.space, K.yd[0], K.yd[1]), r


def vec(M, label):
    return {M.labels.index(label): ONE}


Z3 = group_algebra(3, "CZ3")
module_data = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3)


@pytest.fixture(scope="module")
def graded_pair():
    cat = graded_category(((CycScalar.root(3),),))
    A = nichols_hopf(cat, [(1,)], 6, "BA")
    B = nichols_hopf(cat, [(-1,)], 6, "BB")
    return invert_pairing(pairing_from_generators(A, B, [[ONE]]))


# -- YD conditions ---------------------------------------------------------------

@pytest.mark.parametrize("H", [Z3, group_algebra(symmetric_group_s3(), "CS3")],
                         ids=["Z3", "S3"])
def test_regular_and_trivial_modules(H):
    assert verify_yd(regular_yd_module(H)).ok
    assert verify_yd(trivial_yd_module(H)).ok


def test_regular_module_graded(graded_pair):
    rep = verify_yd(regular_yd_module(graded_pair.A))
    assert rep.ok, rep.summary()


@given(module_data)
def test_diagonal_modules_are_yd(data):
    rep = verify_yd(diagonal_module(Z3, 3, data))
    assert rep.ok and rep["yd_forms_agree"].passed


def test_non_central_coaction_fails():
    # over a non-abelian group, coacting by a non-central element with the
    # trivial action breaks the YD condition
    H = group_algebra(symmetric_group_s3(), "CS3")
    sp = Space("X", 1)
    rho = TypedMorphism.from_entries((H.space, sp), (sp,), ((0, h, ONE) for h in range(6)))
    delta = TypedMorphism.from_entries((sp,), (H.space, sp), [(1, 0, ONE)])
    rep = verify_yd(YDModule(H, sp, rho, delta))
    assert not rep["yd_condition"].passed
    assert rep["yd_forms_agree"].passed


def test_taft_K_structure():
    K, X, _ = taft_K()
    assert verify_yd(X).ok
    g = K.ambient.over.labels.index("g")
    x = K.labels.index("x")
    zeta = CycScalar.root(4) ** 2
    assert X.rho.column(g * 2 + x) == {x: zeta}
    assert X.delta.column(x) == {g * 2 + x: ONE}


def test_taft_K_tensor_square():
    K, X, _ = taft_K(3, 3, 1)
    XX = yd_tensor(X, X)
    assert verify_yd(XX).ok
    n, x, g = K.dim, K.labels.index("x"), K.ambient.over.labels.index("g")
    xx = x * n + x
    zeta = CycScalar.root(3)
    assert XX.rho.column(g * n * n + xx) == {xx: zeta ** 2}
    assert XX.delta.column(xx) == {2 * n * n + xx: ONE}


# -- braiding ------------------------------------------------------------------------

def test_taft_braiding_is_diagonal():
    K, X, _ = taft_K(3, 3, 1)
    x, n = K.labels.index("x"), K.dim
    c = yd_braiding(X, X)
    assert c.column(x * n + x) == {x * n + x: CycScalar.root(3)}


def test_trivial_coaction_gives_flip():
    I = trivial_yd_module(Z3)
    R = regular_yd_module(Z3)
    c = yd_braiding(I, R)
    for j in range(3):
        assert c.column(j) == {j: ONE}


@given(module_data, module_data, module_data)
def test_hexagons(a, b, c):
    X, Y, Z = (diagonal_module(Z3, 3, d, nm) for d, nm in ((a, "X"), (b, "Y"), (c, "Z")))
    rep = hexagon_checks(X, Y, Z)
    assert rep.ok, rep.summary()


def test_hexagons_regular_nonabelian():
    R = regular_yd_module(group_algebra(symmetric_group_s3(), "CS3"))
    assert hexagon_checks(R, R, R).ok


def test_hexagons_graded(graded_pair):
    R = regular_yd_module(graded_pair.A)
    assert hexagon_checks(R, R, R).ok


@given(module_data, module_data)
def test_braiding_is_yd_morphism(a, b):
    X, Y = diagonal_module(Z3, 3, a, "X"), diagonal_module(Z3, 3, b, "Y")
    assert is_yd_morphism(yd_braiding(X, Y), yd_tensor(X, Y), yd_tensor(Y, X)).ok


# -- theta -----------------------------------------------------------------------

def test_theta_on_taft_K():
    K, X, _ = taft_K()
    x = K.labels.index("x")
    zeta = CycScalar.root(4) ** 2
    assert theta(X).column(x) == {x: zeta.inverse()}


def test_theta_trivial_coaction_is_identity():
    I = trivial_yd_module(Z3)
    assert theta(I) == TypedMorphism.identity((I.space,))


@given(module_data, module_data)
def test_theta_lemma_diagonal(a, b):
    X, Y = diagonal_module(Z3, 3, a, "X"), diagonal_module(Z3, 3, b, "Y")
    assert theta_lemma_checks(X, Y).ok


def test_theta_lemma_nonabelian_and_graded(graded_pair):
    R = regular_yd_module(group_algebra(symmetric_group_s3(), "CS3"))
    assert theta_lemma_checks(R, R).ok
    G = regular_yd_module(graded_pair.A)
    rep = theta_lemma_checks(G, G)
    assert rep.ok, rep.summary()


def test_theta_lemma_taft_K():
    _, X, _ = taft_K(3, 3, 1)
    assert theta_lemma_checks(X, X).ok


# -- side switch and Omega -----------------------------------------------------------

def test_side_switch_graded(graded_pair):
    R = regular_yd_module(graded_pair.A)
    Dl = dual_functor(graded_pair, R)
    assert Dl.side == "right" and verify_yd(Dl).ok
    rep = side_switch_checks(Dl, Dl, Dl)
    assert rep.ok, rep.summary()
    assert verify_yd(side_switch(Dl)).ok


def test_side_switch_rejects_left():
    with pytest.raises(ValueError):
        side_switch(regular_yd_module(Z3))


def test_omega_taft_anchors():
    # rho'(g (x) x) = q x and delta'(x) = g^c (x) x on the dualized K
    for N, d, c in [(4, 2, 2), (6, 3, 2), (3, 3, 1)]:
        _, X, r = taft_K(N, d, c)
        L = r.L
        n, x = L.dim, L.labels.index("x")
        gbar = L.ambient.over.labels.index("gbar")
        assert L.yd[0].column(gbar * n + x) == {x: CycScalar.root(N)}
        assert L.yd[1].column(x) == {c * n + x: ONE}


@pytest.mark.parametrize("variant", ["Omega", "Omega'"])
def test_omega_checks_regular(variant):
    p = cyclic_pairing(3, 1, A=Z3)
    R = regular_yd_module(Z3)
    rep = omega_checks(p, R, R, R, variant)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("variant", ["Omega", "Omega'"])
def test_omega_checks_graded(graded_pair, variant):
    R = regular_yd_module(graded_pair.A)
    rep = omega_checks(graded_pair, R, R, R, variant)
    assert rep.ok, rep.summary()


@given(module_data, module_data)
def test_omega_roundtrip_diagonal(a, b):
    p = cyclic_pairing(3, 1, A=Z3)
    X, Y = diagonal_module(Z3, 3, a, "X"), diagonal_module(Z3, 3, b, "Y")
    rep = omega_roundtrip_iso(p, X, Y)
    assert rep.ok, rep.summary()


def test_omega_roundtrip_taft_K_and_graded(graded_pair):
    D, r = taft_dualized(4, 2, 2)
    _, X, _ = taft_K()
    assert omega_roundtrip_iso(D.pairing, X, X).ok
    R = regular_yd_module(graded_pair.A)
    rep = omega_roundtrip_iso(graded_pair, R, R)
    assert rep.ok, rep.summary()


def test_omega_trivial_module():
    p = cyclic_pairing(3, 1, A=Z3)
    I = trivial_yd_module(Z3)
    OI = omega_functor(p, I)
    assert verify_yd(OI).ok
    assert OI.delta.column(0) == {0: ONE}
    assert omega_structure(I, I) == TypedMorphism.identity((I.space, I.space))


def test_transport_hopf_gives_hopf_over_B():
    K, X, r = taft_K(6, 3, 2)
    D = r.datum
    OX = omega_functor(D.pairing, X)
    F2 = omega_structure(X, X)
    F2inv = omega_structure(X, X, inverse_=True)
    from hopfdual.hopfcore import YDOver
    L = transport_hopf(K, F2, F2inv, name="L", ambient=YDOver(D.B), yd=(OX.rho, OX.delta))
    assert verify_hopf(L).ok
    assert verify_pairing(D.pairing).ok
