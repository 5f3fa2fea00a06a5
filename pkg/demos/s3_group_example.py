"""The symmetric group S3 = Z3 x| Z2 dualized along the quotient onto Z2.

Run:  python demos/s3_group_example.py

The result has the commutative algebra C[Z3] (x) C^{Z2} but a coproduct
that still remembers the conjugation action of q on n.
"""
from hopfdual.catalog import s3_datum
from hopfdual.partialdual import involutivity_check, partial_dualize


def show(vec, labels, n):
    terms = []
    for k, v in sorted(vec.items()):
        a, b = divmod(k, n)
        terms.append(f"{labels[a]} (x) {labels[b]}" if v.is_one else f"{v}*{labels[a]}(x){labels[b]}")
    return " + ".join(terms)


def main():
    D = s3_datum()
    r = partial_dualize(D)
    H = r.rH
    print("basis of r(C[S3]):", H.labels)
    comm = all(H.mu.column(i * H.dim + j) == H.mu.column(j * H.dim + i)
               for i in range(H.dim) for j in range(H.dim))
    print("commutative:", comm)
    for i, name in ((2, "n"), (4, "n^2")):
        # n = n*e_1 + n*e_q
        vec = dict(H.Delta.column(i))
        for k, v in H.Delta.column(i + 1).items():
            vec[k] = vec[k] + v if k in vec else v
        print(f"Delta({name}) =", show(vec, H.labels, H.dim))
    print("involutive:", involutivity_check(D, first=r).report.ok)


if __name__ == "__main__":
    main()
