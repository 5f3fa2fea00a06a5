"""Partial dualization of Hopf algebras along a split projection.

Given H -> A (split by iota) and a non-degenerate Hopf pairing A (x) B -> 1,
write H = K x| A with K the coinvariants, move K through the functor Omega
from YD over A to YD over B, and bosonize again: r(H) = Omega(K) x| B.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .diagramdsl import difference_witness
from .exactmath import TypedMorphism, inverse, kron
from .hopfcore import (Degenerate, HopfAlgebra, HopfPairing, YDOver, invert_pairing,
                       is_hopf_isomorphism, pairing_variants, verify_pairing)
from .radford import (BiproductPresentation, CoinvariantDecomposition, NotAProjection,
                      NotASection, biproduct, coinvariants, require_projection, yd_nest,
                      yd_unnest)
from .report import Report
from .ydcat import (YDModule, is_yd_morphism, omega_functor, omega_structure, theta,
                    transport_hopf, verify_yd, yd_braiding, yd_tensor)

__all__ = ["DegeneratePairing", "NotAProjection", "NotASection", "NotAHopfPairing",
           "PartialDualizationDatum", "PartialDualResult", "make_datum", "partial_dualize",
           "reverse_datum", "involutivity_check", "transport_yd_module", "transport_checks"]


class DegeneratePairing(Degenerate):
    pass


class NotAHopfPairing(ValueError):
    pass


@dataclass
class PartialDualizationDatum:
    H: HopfAlgebra
    A: HopfAlgebra
    B: HopfAlgebra
    pi: TypedMorphism
    iota: TypedMorphism
    pairing: HopfPairing
    report: Report = field(default_factory=Report)

    @property
    def omega(self) -> TypedMorphism:
        return self.pairing.omega


def make_datum(H, A, B, pi, iota, omega) -> PartialDualizationDatum:
    """Validate (H -> A, B, omega); ``omega`` is a HopfPairing or the matrix A (x) B -> 1."""
    for X in (H, A, B):
        if X.ambient.over is not None:
            raise ValueError(f"{X.name} must live in a base category")
    rep = Report()
    rep.extend(require_projection(H, A, pi, iota), prefix="projection:")
    p = omega if isinstance(omega, HopfPairing) else HopfPairing(A, B, omega)
    if p.A is not A or p.B is not B:
        p = HopfPairing(A, B, p.omega, p.omega_inv)
    try:
        p = invert_pairing(p)
    except Degenerate as e:
        raise DegeneratePairing(f"omega is degenerate: {e}") from None
    prep = verify_pairing(p)
    if not prep.ok:
        raise NotAHopfPairing("omega fails " + ", ".join(c.name for c in prep.failures))
    rep.extend(prep, prefix="pairing:")
    pi = pi.retype((H.space,), (A.space,))
    iota = iota.retype((A.space,), (H.space,))
    return PartialDualizationDatum(H, A, B, pi, iota, p, rep)


@dataclass
class PartialDualResult:
    rH: HopfAlgebra
    L: HopfAlgebra
    K: CoinvariantDecomposition
    biproduct: BiproductPresentation
    datum: PartialDualizationDatum
    report: Report
    provenance: list

    @property
    def pi_prime(self) -> TypedMorphism:
        return self.biproduct.pi

    @property
    def iota_prime(self) -> TypedMorphism:
        return self.biproduct.injection


def _k_module(K: HopfAlgebra) -> YDModule:
    return YDModule(K.ambient.over, K.space, K.yd[0], K.yd[1])


def partial_dualize(d: PartialDualizationDatum, name: str | None = None) -> PartialDualResult:
    """r(H) = Omega(K) x| B with every stage verified."""
    log = []
    rep = Report()
    t0 = time.perf_counter()
    D = coinvariants(d.H, d.A, d.pi, d.iota)
    rep.extend(D.report, prefix="coinvariants:")
    log.append("K: kernel of (id (x) pi) Delta - id (x) 1; structure via COINVARIANT_* scripts")
    K = D.K
    X = _k_module(K)
    OX = omega_functor(d.pairing, X)
    log.append("Omega(K): side_switch T of the dual functor D (ydcat.dual_functor scripts)")
    F2 = omega_structure(X, X)
    F2inv = omega_structure(X, X, inverse_=True)
    L = transport_hopf(K, F2, F2inv, name="L", ambient=YDOver(d.B), yd=(OX.rho, OX.delta))
    log.append("L: mu_K Omega_2(K,K), Omega_2(K,K)^-1 Delta_K, S_K")
    bp = biproduct(L, d.B, name=name or f"r({d.H.name})")
    rep.extend(bp.report, prefix="biproduct:")
    log.append("r(H): BIPRODUCT_MU / BIPRODUCT_DELTA / BIPRODUCT_S over B")
    rep.add("dimension", bp.result.dim == K.dim * d.B.dim,
            None if bp.result.dim == K.dim * d.B.dim else {"dim": bp.result.dim})
    rep.add("elapsed", True, None, time.perf_counter() - t0)
    return PartialDualResult(bp.result, L, D, bp, d, rep, log)


def reverse_datum(d: PartialDualizationDatum, result: PartialDualResult,
                  sign: str = "-") -> PartialDualizationDatum:
    """(r(H) -> B, A, omega^+ or omega^-)."""
    plus, minus = pairing_variants(d.pairing)
    p = {"+": plus, "-": minus}[sign]
    return make_datum(result.rH, d.B, d.A, result.pi_prime, result.iota_prime, p)


@dataclass
class InvolutivityResult:
    map: TypedMorphism
    report: Report
    double: PartialDualResult


def involutivity_check(d: PartialDualizationDatum, sign: str = "-",
                       first: PartialDualResult | None = None) -> InvolutivityResult:
    """theta_K (x) id_A : Omega^- Omega(K) x| A -> K x| A = H is a Hopf isomorphism.

    The coinvariants K2 of r(H) -> B sit inside L (x) 1; they are identified
    with L = K by id (x) eps_B before theta_K is applied.
    """
    r1 = first or partial_dualize(d)
    d2 = reverse_datum(d, r1, sign)
    r2 = partial_dualize(d2)
    K = r1.K.K
    Lsp, Bsp = r1.L.space, d.B.space
    K2 = r2.K
    to_L = (kron(TypedMorphism.identity((Lsp,)), d.B.eps)
            @ K2.inclusion.retype((K2.K.space,), (Lsp, Bsp)))
    th = theta(_k_module(K)).retype((K.space,), (K.space,))
    f = th @ to_L.retype((K2.K.space,), (K.space,))
    iA = TypedMorphism.identity((d.A.space,))
    phi = r1.K.reassembly.retype((K.space, d.A.space), (d.H.space,)) @ kron(f, iA)
    phi = phi.retype((r2.rH.space,), (d.H.space,))
    rep = Report()
    rep.extend(r2.report, prefix="second_dualization:")
    rep.extend(is_hopf_isomorphism(phi, r2.rH, d.H), prefix="theta_K x id:")
    return InvolutivityResult(phi, rep, r2)


# -- transporting Yetter-Drinfeld modules -------------------------------------------

def _pull_back(M: YDModule, D: CoinvariantDecomposition) -> YDModule:
    """M over H as a module over K x| A along the reassembly isomorphism."""
    R = D.biproduct.result
    phi = D.reassembly.retype((R.space,), (D.H.space,))
    phi_inv = inverse(phi)
    iX = TypedMorphism.identity((M.space,))
    rho = M.rho @ kron(phi, iX)
    delta = kron(phi_inv, iX) @ M.delta
    return YDModule(R, M.space, rho.retype((R.space, M.space), (M.space,)),
                    delta.retype((M.space,), (R.space, M.space)))


def transport_yd_module(d: PartialDualizationDatum, result: PartialDualResult,
                        M: YDModule) -> YDModule:
    """Image of a YD module over H in YD over r(H) (same underlying space)."""
    if M.over is not d.H:
        raise ValueError("module must be over the datum's H")
    D = result.K
    N = yd_nest(_pull_back(M, D), D.biproduct)
    Kmod = _k_module(D.K)
    base = omega_functor(d.pairing, N.base)
    F2 = omega_structure(Kmod, N.base)
    F2inv = omega_structure(Kmod, N.base, inverse_=True)
    Lsp = result.L.space
    rho_L = (N.rho @ F2).retype((Lsp, M.space), (M.space,))
    delta_L = (F2inv @ N.delta).retype((M.space,), (Lsp, M.space))
    NL = YDModule(result.L, M.space, rho_L, delta_L, "left", base)
    return yd_unnest(NL, result.biproduct)


def transport_checks(d: PartialDualizationDatum, result: PartialDualResult,
                     M: YDModule, M2: YDModule | None = None) -> Report:
    """Transported modules are YD of the same dimension; with a second module,
    the A-level Omega_2 is a YD isomorphism T(M) (x) T(M2) -> T(M (x) M2) that
    carries the braiding over r(H) to the braiding over H."""
    rep = Report()
    TM = transport_yd_module(d, result, M)
    rep.extend(verify_yd(TM), prefix="T(M):")
    rep.add("dimension", TM.dim == M.dim)
    if M2 is None:
        return rep
    TM2 = transport_yd_module(d, result, M2)
    base1 = yd_nest(_pull_back(M, result.K), result.K.biproduct).base
    base2 = yd_nest(_pull_back(M2, result.K), result.K.biproduct).base
    J12 = omega_structure(base1, base2)
    J21 = omega_structure(base2, base1)
    MM = yd_tensor(M, M2)
    TMM = transport_yd_module(d, result, MM)
    rep.extend(is_yd_morphism(J12, yd_tensor(TM, TM2), TMM), prefix="J:")
    lhs = J21 @ yd_braiding(TM, TM2)
    rhs = yd_braiding(M, M2) @ J12
    w = difference_witness(lhs.retype(rhs.domain, rhs.codomain), rhs)
    rep.add("braiding_preserved", w is None, w)
    return rep
