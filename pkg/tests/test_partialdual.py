import pytest
from hypothesis import given, settings, strategies as st

from hopfdual.catalog import (complete_datum, cyclic_pairing, group_algebra, hat_taft,
                              s3_datum, semidirect_datum, trivial_datum)
from hopfdual.exactmath import ONE, CycScalar, TypedMorphism, kron
from hopfdual.hopfcore import pairing_variants, verify_hopf
from hopfdual.partialdual import (DegeneratePairing, NotAProjection, NotASection,
                                  involutivity_check, make_datum, partial_dualize,
                                  reverse_datum, transport_checks, transport_yd_module)
from hopfdual.ydcat import regular_yd_module, theta, trivial_yd_module, verify_yd

from conftest import TAFT_PARAMS, s3_dualized, taft_dualized


def same_structure(H, K):
    """Structure maps agree as matrices (basis order identified)."""
    for f, g in ((H.mu, K.mu), (H.eta, K.eta), (H.Delta, K.Delta), (H.eps, K.eps), (H.S, K.S)):
        if f.retype(g.domain, g.codomain) != g:
            return False
    return True


def power(H, label, k):
    n = H.dim
    i = H.labels.index(label)
    v = {H.labels.index("1"): ONE}
    for _ in range(k):
        out = {}
        for j, c in v.items():
            for r, x in H.mu.column(j * n + i).items():
                out[r] = out.get(r, CycScalar.from_rational(0)) + c * x
        v = {r: x for r, x in out.items() if not x.is_zero}
    return v


# -- datum validation ----------------------------------------------------------------

def test_valid_data():
    D, _ = taft_dualized(4, 2, 2)
    assert D.report.ok
    assert s3_datum().report.ok


def test_counit_pairing_is_degenerate():
    D, _ = taft_dualized(4, 2, 2)
    eps2 = kron(D.A.eps, D.B.eps)
    with pytest.raises(DegeneratePairing):
        make_datum(D.H, D.A, D.B, D.pi, D.iota, eps2)


def test_bad_projection_and_section():
    D, _ = taft_dualized(4, 2, 2)
    bad_pi = TypedMorphism.from_entries((D.H.space,), (D.A.space,),
                                        ((0, j, ONE) for j in range(D.H.dim)))
    with pytest.raises(NotAProjection):
        make_datum(D.H, D.A, D.B, bad_pi, D.iota, D.pairing)
    bad_iota = TypedMorphism.from_entries((D.A.space,), (D.H.space,),
                                          ((0, j, ONE) for j in range(D.A.dim)))
    with pytest.raises(NotASection):
        make_datum(D.H, D.A, D.B, D.pi, bad_iota, D.pairing)


# -- the construction -----------------------------------------------------------------

@pytest.mark.parametrize("N,d,c", TAFT_PARAMS)
def test_dualized_taft_relations(N, d, c):
    D, r = taft_dualized(N, d, c)
    R = r.rH
    assert r.report.ok and verify_hopf(R).ok
    assert R.dim == D.H.dim
    q = CycScalar.root(N)
    one = {R.labels.index("1"): ONE}
    assert power(R, "gbar", N) == one
    assert power(R, "x", d) == {}
    n = R.dim
    g, x = R.labels.index("gbar"), R.labels.index("x")
    gx = R.mu.column(g * n + x)
    xg = R.mu.column(x * n + g)
    assert gx == {k: q * v for k, v in xg.items()}
    gc = next(iter(power(R, "gbar", c)))
    assert R.Delta.column(x) == {gc * n + x: ONE, x * n + R.labels.index("1"): ONE}


def test_complete_dualization_gives_B():
    D = complete_datum(4)
    r = partial_dualize(D)
    assert r.rH.dim == 4
    assert same_structure(r.rH, D.B)


@pytest.mark.parametrize("H", [hat_taft(4, 2, 2), group_algebra(3)], ids=lambda H: H.name)
def test_trivial_dualization_gives_H(H):
    r = partial_dualize(trivial_datum(H))
    assert same_structure(r.rH, H)


def test_provenance_recorded():
    _, r = taft_dualized(3, 3, 1)
    assert len(r.provenance) == 4
    assert any("Omega" in step for step in r.provenance)


def test_pi_prime_is_split_projection():
    from hopfdual.radford import check_projection
    D, r = taft_dualized(6, 3, 2)
    assert check_projection(r.rH, D.B, r.pi_prime, r.iota_prime).ok


# -- reverse data and involutivity ----------------------------------------------------

def test_reverse_data_valid_both_signs():
    D, r = taft_dualized(4, 2, 2)
    for sign in "-+":
        assert reverse_datum(D, r, sign).report.ok


def test_plus_minus_pairings_differ_by_antipode_squares():
    # in Vect: omega^- = omega^+ (S_B^-2 (x) S_A^-2)
    D, _ = taft_dualized(4, 2, 2)
    plus, minus = pairing_variants(D.pairing)
    Sb2 = D.B.Sinv @ D.B.Sinv
    Sa2 = D.A.Sinv @ D.A.Sinv
    assert plus.omega @ kron(Sb2, Sa2) == minus.omega


@pytest.mark.parametrize("N,d,c", TAFT_PARAMS)
@pytest.mark.parametrize("sign", ["-", "+"])
def test_involutivity_taft(N, d, c, sign):
    D, r = taft_dualized(N, d, c)
    inv = involutivity_check(D, sign, first=r)
    assert inv.report.ok, [x.name for x in inv.report.failures]


def test_involutivity_taft_theta_scaling():
    D, r = taft_dualized(4, 2, 2)
    K = r.K.K
    from hopfdual.ydcat import YDModule
    X = YDModule(K.ambient.over, K.space, K.yd[0], K.yd[1])
    x = K.labels.index("x")
    assert theta(X).column(x) == {x: (CycScalar.root(4) ** 2).inverse()}
    assert involutivity_check(D, first=r).report.ok


def test_involutivity_group_algebra_theta_identity():
    D, r = s3_dualized()
    from hopfdual.ydcat import YDModule
    K = r.K.K
    X = YDModule(K.ambient.over, K.space, K.yd[0], K.yd[1])
    assert theta(X) == TypedMorphism.identity((K.space,))
    assert involutivity_check(D, first=r).report.ok


def test_involutivity_complete():
    D = complete_datum(3)
    inv = involutivity_check(D)
    assert inv.report.ok
    assert same_structure(inv.double.rH, D.H)


semidirect = st.sampled_from([(3, 2, 2), (5, 2, 4), (5, 4, 2), (7, 3, 2), (4, 2, 3), (3, 1, 1)])


@settings(max_examples=6)
@given(semidirect)
def test_involutivity_semidirect(args):
    D = semidirect_datum(*args)
    r = partial_dualize(D)
    assert r.rH.dim == D.H.dim
    assert involutivity_check(D, first=r).report.ok


# -- transport of YD modules ------------------------------------------------------------

def test_transport_trivial_module():
    D, r = taft_dualized(4, 2, 2)
    T = transport_yd_module(D, r, trivial_yd_module(D.H))
    assert verify_yd(T).ok
    expected = trivial_yd_module(r.rH)
    assert T.rho == expected.rho.retype(T.rho.domain, T.rho.codomain)
    assert T.delta == expected.delta.retype(T.delta.domain, T.delta.codomain)


def test_transport_regular_taft():
    D, r = taft_dualized(4, 2, 2)
    M = regular_yd_module(D.H)
    T = transport_yd_module(D, r, M)
    assert T.dim == 8 and T.over is r.rH
    rep = transport_checks(D, r, M, M)
    assert rep.ok, [c.name for c in rep.failures]


def test_transport_mixed_pair_s3():
    D, r = s3_dualized()
    rep = transport_checks(D, r, regular_yd_module(D.H), trivial_yd_module(D.H))
    assert rep.ok


def test_transport_rejects_foreign_module():
    D, r = taft_dualized(4, 2, 2)
    with pytest.raises(ValueError):
        transport_yd_module(D, r, regular_yd_module(cyclic_pairing(4).A))
