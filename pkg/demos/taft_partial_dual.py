"""Partial dualization of the central extension of a Taft algebra.

Run:  python demos/taft_partial_dual.py [N d c]

Dualizes hat T along the projection onto the group ring C[Z_N], compares the
result with the check-Taft algebra, then dualizes back and shows that the
second dual recovers hat T through theta_K (x) id.
"""
import sys

from hopfdual.catalog import taft_datum, taft_dual_comparison
from hopfdual.partialdual import involutivity_check, partial_dualize
from hopfdual.ydcat import YDModule, theta
from hopfdual.exactmath import format_scalar


def main(N=4, d=2, c=2):
    D = taft_datum(N, d, c)
    print(f"hat T({N},{d},{c}): dim {D.H.dim}, basis {D.H.labels}")
    r = partial_dualize(D)
    print(f"coinvariants K: {r.K.K.labels}")
    print(f"r(hat T): dim {r.rH.dim}, basis {r.rH.labels}")

    psi, rep, _ = taft_dual_comparison(N, d, c, result=r)
    print(f"psi: check T -> r(hat T) is a Hopf isomorphism: {rep.ok}")

    K = r.K.K
    th = theta(YDModule(K.ambient.over, K.space, K.yd[0], K.yd[1]))
    x = K.labels.index("x")
    print(f"theta_K(x) = {format_scalar(th.column(x)[x])} * x")

    for sign in "-+":
        inv = involutivity_check(D, sign, first=r)
        print(f"second dualization with omega{sign}: recovers hat T = {inv.report.ok}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:4]))
