"""Two rank-two diagonal braidings of sl(2|1) type at a root of unity.

Run:  python demos/nichols_rank_two.py [n]

Both braidings give 4n-dimensional Nichols algebras with the same Cartan
matrix but different Hilbert series; reflecting M at the first vertex lands
on a braiding with the Hilbert series of N.
"""
import sys

from hopfdual.nichols import cartan_matrix, hilbert_series, reflect, sl21_braidings


def main(n=3):
    M, N = sl21_braidings(n)
    for name, b in (("M", M), ("N", N)):
        hs = hilbert_series(b, 2 * n + 2)
        print(f"{name}: H(t) = {hs}   dim {hs.total_dim}   Cartan {cartan_matrix(b)}")
    R = reflect(M, 1)
    print("R_1(M) roots:", R.roots)
    print("R_1(M): H(t) =", hilbert_series(R.braiding, 2 * n + 2))
    print("R_2(N) twist-equivalent to N:", reflect(N, 2).braiding.twist_equivalent(N))


if __name__ == "__main__":
    main(*map(int, sys.argv[1:2]))
