"""JSON documents for Hopf algebras, pairings, YD modules, data and braidings.

Scalars are written canonically: a rational string "m/n", or an array of
phi(N) rational strings giving the coefficients in powers of zeta_N, where N
is the document's ``cyclotomic_order``.  Sparse maps list only nonzero
entries, sorted by index.  Loading verifies the object; ``save(load(doc))``
reproduces a canonical document exactly.
"""
from __future__ import annotations

import hashlib
import json
import os
import re
from math import lcm
from pathlib import Path

from .category import VECT, graded_category
from .exactmath import CycScalar, Space, TypedMorphism, parse_scalar, scalar_literal
from .hopfcore import Ambient, HopfAlgebra, HopfPairing, invert_pairing
from .ydcat import YDModule

DEFAULT_MAX_ORDER = 120


class SchemaError(ValueError):
    """The document does not follow the schema (missing keys, bad shapes, bad scalars)."""


def max_order() -> int:
    raw = os.environ.get("HOPFDUAL_MAX_ORDER", str(DEFAULT_MAX_ORDER))
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"HOPFDUAL_MAX_ORDER must be an integer, got {raw!r}") from None


def check_order(N: int) -> int:
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise SchemaError(f"cyclotomic_order must be a positive integer, got {N!r}")
    cap = max_order()
    if N > cap:
        raise SchemaError(f"cyclotomic order {N} exceeds HOPFDUAL_MAX_ORDER={cap}")
    return N


# -- scalars and sparse maps ------------------------------------------------------------

def _scalar(lit, N, where):
    try:
        x = parse_scalar(lit, N)
    except (ValueError, TypeError) as e:
        raise SchemaError(f"{where}: {e}") from None
    return x


def _order_of(scalars) -> int:
    N = 1
    for x in scalars:
        if not x.rational:
            N = lcm(N, x.order)
    return N if N != 2 else 1


def _need(doc, key, kind):
    if not isinstance(doc, dict):
        raise SchemaError(f"{kind} document must be a JSON object")
    if key not in doc:
        raise SchemaError(f"{kind} document is missing {key!r}")
    return doc[key]


def _index(v, bound, where):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
        raise SchemaError(f"{where}: index {v!r} out of range 0..{bound - 1}")
    return v


def _read_entries(rows, arity, bounds, N, where):
    """Rows [i_1, ..., i_arity, scalar] -> list of (index tuple, scalar)."""
    if not isinstance(rows, list):
        raise SchemaError(f"{where} must be a list")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != arity + 1:
            raise SchemaError(f"{where}: entries must have {arity} indices and a scalar")
        idx = tuple(_index(v, b, where) for v, b in zip(row[:arity], bounds))
        out.append((idx, _scalar(row[arity], N, where)))
    return out


def _write(x: CycScalar, N: int):
    return scalar_literal(x, N)


def _dense(vec: dict, n: int, N: int):
    return [_write(vec[i], N) if i in vec else "0" for i in range(n)]


def _read_dense(vals, n, N, where):
    if not isinstance(vals, list) or len(vals) != n:
        raise SchemaError(f"{where} must be a list of {n} scalars")
    return {i: x for i, v in enumerate(vals) if not (x := _scalar(v, N, where)).is_zero}


# -- Hopf algebras ------------------------------------------------------------------------

def _category_doc(cat, N):
    if cat.is_vect:
        return "vect"
    return {"graded": {"q": [[_write(x, N) for x in row] for row in cat.q]}}


def _scalars_of(*ms):
    for m in ms:
        for _, _, v in m.entries():
            yield v


def hopf_order(H: HopfAlgebra) -> int:
    maps = [H.mu, H.eta, H.Delta, H.eps, H.S]
    if H.yd is not None:
        maps += list(H.yd)
    N = _order_of(_scalars_of(*maps))
    cat = H.ambient.category
    if not cat.is_vect:
        N = lcm(N, _order_of(x for row in cat.q for x in row))
    if H.ambient.over is not None:
        N = lcm(N, hopf_order(H.ambient.over))
    return lcm(N, getattr(H, "cyclotomic_order", 1) or 1)


def hopf_to_doc(H: HopfAlgebra, N: int | None = None) -> dict:
    N = N or hopf_order(H)
    n = H.dim
    mu = sorted((c // n, c % n, r, _write(v, N)) for r, c, v in H.mu.entries())
    Delta = sorted((c, r // n, r % n, _write(v, N)) for r, c, v in H.Delta.entries())
    S = sorted((c, r, _write(v, N)) for r, c, v in H.S.entries())
    doc = {
        "kind": "hopf",
        "name": H.name,
        "cyclotomic_order": N,
        "dim": n,
        "basis_labels": list(H.labels),
        "mu": [list(e) for e in mu],
        "eta": _dense(H.eta.column(0), n, N),
        "Delta": [list(e) for e in Delta],
        "eps": _dense(H.eps.rows().get(0, {}), n, N),
        "S": [list(e) for e in S],
    }
    amb = H.ambient
    if amb.over is not None:
        A = amb.over
        rho = sorted((c // n, c % n, r, _write(v, N)) for r, c, v in H.yd[0].entries())
        delta = sorted((c, r // n, r % n, _write(v, N)) for r, c, v in H.yd[1].entries())
        doc["ambient"] = {"yd_over": hopf_to_doc(A, N), "rho": [list(e) for e in rho],
                          "delta": [list(e) for e in delta]}
    else:
        doc["ambient"] = _category_doc(amb.category, N)
    if H.degrees is not None:
        doc["degrees"] = [list(d) for d in H.degrees]
    return doc


def _read_category(amb, N):
    if amb == "vect":
        return VECT
    if isinstance(amb, dict) and "graded" in amb:
        q = _need(amb["graded"], "q", "graded ambient")
        if not isinstance(q, list) or not all(isinstance(r, list) and len(r) == len(q) for r in q):
            raise SchemaError("graded ambient: q must be a square matrix")
        return graded_category(tuple(tuple(_scalar(x, N, "q") for x in row) for row in q))
    raise SchemaError(f"unknown ambient {amb!r}")


def hopf_from_doc(doc, *, verify=True, resolve=None) -> HopfAlgebra:
    """Build (and by default verify) a Hopf algebra from its document.

    ``doc`` may also be a catalog reference string such as "hat_taft(4,2,2)".
    """
    if isinstance(doc, str):
        return _resolve_name(doc, HopfAlgebra)
    kind = "hopf"
    N = check_order(_need(doc, "cyclotomic_order", kind))
    n = _need(doc, "dim", kind)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError(f"dim must be a positive integer, got {n!r}")
    name = _need(doc, "name", kind)
    for key in ("mu", "eta", "Delta", "eps"):
        _need(doc, key, kind)
    labels = doc.get("basis_labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise SchemaError("basis_labels must list one label per basis vector")
    amb_doc = doc.get("ambient", "vect")
    degrees = doc.get("degrees")
    over = None
    if isinstance(amb_doc, dict) and "yd_over" in amb_doc:
        over = hopf_from_doc(amb_doc["yd_over"], verify=verify)
        cat = over.ambient.category
    else:
        cat = _read_category(amb_doc, N)
    if degrees is not None:
        if not isinstance(degrees, list) or len(degrees) != n:
            raise SchemaError("degrees must list one lattice degree per basis vector")
        degrees = tuple(tuple(d) for d in degrees)
        if any(len(d) != cat.rank for d in degrees):
            raise SchemaError(f"degrees must have length {cat.rank}")
    elif not cat.is_vect:
        raise SchemaError("a graded ambient needs 'degrees'")
    sp = Space(name, n, degrees)
    A = (sp,)
    mu = TypedMorphism.from_entries(A + A, A, (
        (k, i * n + j, x) for (i, j, k), x in _read_entries(doc["mu"], 3, (n, n, n), N, "mu")))
    eta = TypedMorphism.from_entries((), A, ((i, 0, x) for i, x in
                                             _read_dense(doc["eta"], n, N, "eta").items()))
    Delta = TypedMorphism.from_entries(A, A + A, (
        (j * n + k, i, x) for (i, j, k), x in _read_entries(doc["Delta"], 3, (n, n, n), N, "Delta")))
    eps = TypedMorphism.from_entries(A, (), ((0, i, x) for i, x in
                                             _read_dense(doc["eps"], n, N, "eps").items()))
    S = None
    if "S" in doc:
        S = TypedMorphism.from_entries(A, A, (
            (j, i, x) for (i, j), x in _read_entries(doc["S"], 2, (n, n), N, "S")))
    yd = None
    ambient = Ambient(cat)
    if over is not None:
        nA = over.dim
        Asp = over.space
        rho = TypedMorphism.from_entries((Asp, sp), A, (
            (j, a * n + i, x) for (a, i, j), x in
            _read_entries(_need(amb_doc, "rho", "ambient"), 3, (nA, n, n), N, "rho")))
        delta = TypedMorphism.from_entries(A, (Asp, sp), (
            (a * n + j, i, x) for (i, a, j), x in
            _read_entries(_need(amb_doc, "delta", "ambient"), 3, (n, nA, n), N, "delta")))
        yd = (rho, delta)
        ambient = Ambient(cat, over)
    H = HopfAlgebra(name, sp, mu, eta, Delta, eps, S, ambient=ambient, yd=yd, labels=labels,
                    verify=verify)
    H.cyclotomic_order = N
    return H


# -- morphisms between spaces ------------------------------------------------------------

def map_to_doc(f: TypedMorphism, N: int):
    """[[i, j, s]]: f(e_i) += s e_j."""
    return [list(e) for e in sorted((c, r, _write(v, N)) for r, c, v in f.entries())]


def map_from_doc(rows, src: Space, dst: Space, N: int, where: str) -> TypedMorphism:
    return TypedMorphism.from_entries((src,), (dst,), (
        (j, i, x) for (i, j), x in _read_entries(rows, 2, (src.dim, dst.dim), N, where)))


# -- pairings, data, modules, braidings ----------------------------------------------------

def pairing_to_doc(p: HopfPairing, N: int | None = None) -> dict:
    N = N or lcm(hopf_order(p.A), hopf_order(p.B), _order_of(_scalars_of(p.omega)))
    nB = p.B.dim
    omega = sorted((c // nB, c % nB, _write(v, N)) for _, c, v in p.omega.entries())
    return {"kind": "pairing", "cyclotomic_order": N, "A": hopf_to_doc(p.A, N),
            "B": hopf_to_doc(p.B, N), "omega": [list(e) for e in omega]}


def _omega_from_rows(rows, A, B, N) -> TypedMorphism:
    nB = B.dim
    return TypedMorphism.from_entries((A.space, B.space), (), (
        (0, i * nB + j, x) for (i, j), x in _read_entries(rows, 2, (A.dim, nB), N, "omega")))


def pairing_from_doc(doc, *, verify=True) -> HopfPairing:
    from .hopfcore import verify_pairing
    N = check_order(_need(doc, "cyclotomic_order", "pairing"))
    A = hopf_from_doc(_need(doc, "A", "pairing"), verify=verify)
    B = hopf_from_doc(_need(doc, "B", "pairing"), verify=verify)
    p = HopfPairing(A, B, _omega_from_rows(_need(doc, "omega", "pairing"), A, B, N))
    if verify:
        p = invert_pairing(p)
        verify_pairing(p).require("pairing axioms")
    return p


def datum_to_doc(d) -> dict:
    N = lcm(hopf_order(d.H), hopf_order(d.A), hopf_order(d.B),
            _order_of(_scalars_of(d.pi, d.iota, d.pairing.omega)))
    nB = d.B.dim
    omega = sorted((c // nB, c % nB, _write(v, N)) for _, c, v in d.pairing.omega.entries())
    return {"kind": "datum", "cyclotomic_order": N, "H": hopf_to_doc(d.H, N),
            "A": hopf_to_doc(d.A, N), "B": hopf_to_doc(d.B, N),
            "pi": map_to_doc(d.pi, N), "iota": map_to_doc(d.iota, N),
            "omega": [list(e) for e in omega]}


def datum_from_doc(doc, *, verify=True):
    """Dualization datum; 'omega' may be omitted only for a projection document."""
    from .partialdual import make_datum
    if isinstance(doc, str):
        return _resolve_name(doc, "datum")
    N = check_order(_need(doc, "cyclotomic_order", "datum"))
    H = hopf_from_doc(_need(doc, "H", "datum"), verify=verify)
    A = hopf_from_doc(_need(doc, "A", "datum"), verify=verify)
    B = hopf_from_doc(_need(doc, "B", "datum"), verify=verify)
    pi = map_from_doc(_need(doc, "pi", "datum"), H.space, A.space, N, "pi")
    iota = map_from_doc(_need(doc, "iota", "datum"), A.space, H.space, N, "iota")
    omega = _omega_from_rows(_need(doc, "omega", "datum"), A, B, N)
    return make_datum(H, A, B, pi, iota, omega)


def projection_from_doc(doc, *, verify=True):
    """(H, A, pi, iota) from a projection or datum document."""
    N = check_order(_need(doc, "cyclotomic_order", "projection"))
    H = hopf_from_doc(_need(doc, "H", "projection"), verify=verify)
    A = hopf_from_doc(_need(doc, "A", "projection"), verify=verify)
    pi = map_from_doc(_need(doc, "pi", "projection"), H.space, A.space, N, "pi")
    iota = map_from_doc(_need(doc, "iota", "projection"), A.space, H.space, N, "iota")
    return H, A, pi, iota


def yd_to_doc(M: YDModule, N: int | None = None) -> dict:
    N = N or lcm(hopf_order(M.over), _order_of(_scalars_of(M.rho, M.delta)))
    n, nA = M.dim, M.over.dim
    if M.side == "left":
        rho = sorted((c // n, c % n, r, _write(v, N)) for r, c, v in M.rho.entries())
        delta = sorted((c, r // n, r % n, _write(v, N)) for r, c, v in M.delta.entries())
    else:
        rho = sorted((c % nA, c // nA, r, _write(v, N)) for r, c, v in M.rho.entries())
        delta = sorted((c, r % nA, r // nA, _write(v, N)) for r, c, v in M.delta.entries())
    doc = {"kind": "yd_module", "name": M.name, "cyclotomic_order": N,
           "over": hopf_to_doc(M.over, N), "dim": n, "side": M.side,
           "rho": [list(e) for e in rho], "delta": [list(e) for e in delta]}
    if M.space.degrees is not None:
        doc["degrees"] = [list(d) for d in M.space.degrees]
    return doc


def yd_from_doc(doc, *, over: HopfAlgebra | None = None, verify=True) -> YDModule:
    """[a, i, j, s] in rho: a acting on e_i gives s e_j; [i, a, j, s] in delta:
    e_i coacts to s a (x) e_j (or e_j (x) a on the right)."""
    from .ydcat import verify_yd
    kind = "yd_module"
    N = check_order(_need(doc, "cyclotomic_order", kind))
    A = over if over is not None else hopf_from_doc(_need(doc, "over", kind), verify=verify)
    n = _need(doc, "dim", kind)
    side = doc.get("side", "left")
    if side not in ("left", "right"):
        raise SchemaError("side must be 'left' or 'right'")
    degrees = doc.get("degrees")
    if degrees is not None:
        degrees = tuple(tuple(d) for d in degrees)
    sp = Space(doc.get("name", "X"), n, degrees)
    nA = A.dim
    rows_rho = _read_entries(_need(doc, "rho", kind), 3, (nA, n, n), N, "rho")
    rows_delta = _read_entries(_need(doc, "delta", kind), 3, (n, nA, n), N, "delta")
    X, As = (sp,), (A.space,)
    if side == "left":
        rho = TypedMorphism.from_entries(As + X, X, ((j, a * n + i, x) for (a, i, j), x in rows_rho))
        delta = TypedMorphism.from_entries(X, As + X, ((a * n + j, i, x) for (i, a, j), x in rows_delta))
    else:
        rho = TypedMorphism.from_entries(X + As, X, ((j, i * nA + a, x) for (a, i, j), x in rows_rho))
        delta = TypedMorphism.from_entries(X, X + As, ((j * nA + a, i, x) for (i, a, j), x in rows_delta))
    M = YDModule(A, sp, rho, delta, side)
    if verify:
        verify_yd(M).require(f"Yetter-Drinfeld axioms for {sp.name}")
    return M


def braiding_to_doc(b) -> dict:
    N = b.order
    return {"kind": "braiding", "cyclotomic_order": N, "rank": b.rank,
            "q": [[_write(x, N) for x in row] for row in b.q]}


def braiding_from_doc(doc):
    from .nichols import DiagonalBraiding
    N = check_order(_need(doc, "cyclotomic_order", "braiding"))
    q = _need(doc, "q", "braiding")
    r = doc.get("rank", len(q) if isinstance(q, list) else None)
    if not isinstance(q, list) or len(q) != r or not all(isinstance(x, list) and len(x) == r for x in q):
        raise SchemaError("q must be a rank x rank matrix")
    return DiagonalBraiding(tuple(tuple(_scalar(x, N, "q") for x in row) for row in q), N)


# -- generic entry points -------------------------------------------------------------------

def kind_of(doc) -> str:
    if isinstance(doc, str):
        return "name"
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if "kind" in doc:
        return doc["kind"]
    if "mu" in doc:
        return "hopf"
    if "omega" in doc and "H" in doc:
        return "datum"
    if "H" in doc and "pi" in doc:
        return "projection"
    if "omega" in doc:
        return "pairing"
    if "q" in doc:
        return "braiding"
    if "rho" in doc and "over" in doc:
        return "yd_module"
    raise SchemaError("cannot tell the document kind")


def load(doc, *, verify=True):
    """Validated object for any document (path, JSON text, dict or catalog name)."""
    doc = read_document(doc)
    k = kind_of(doc)
    if k == "name":
        return _resolve_name(doc, None)
    loaders = {"hopf": hopf_from_doc, "pairing": pairing_from_doc, "datum": datum_from_doc,
               "yd_module": yd_from_doc, "braiding": lambda d, verify=True: braiding_from_doc(d),
               "projection": projection_from_doc,
               "bundle": lambda d, verify=True: {k2: load(v, verify=verify)
                                                for k2, v in _need(d, "items", "bundle").items()}}
    if k not in loaders:
        raise SchemaError(f"unknown document kind {k!r}")
    return loaders[k](doc, verify=verify)


def save(obj) -> dict:
    from .nichols import DiagonalBraiding
    from .partialdual import PartialDualizationDatum
    if isinstance(obj, HopfAlgebra):
        return hopf_to_doc(obj)
    if isinstance(obj, HopfPairing):
        return pairing_to_doc(obj)
    if isinstance(obj, PartialDualizationDatum):
        return datum_to_doc(obj)
    if isinstance(obj, YDModule):
        return yd_to_doc(obj)
    if isinstance(obj, DiagonalBraiding):
        return braiding_to_doc(obj)
    if isinstance(obj, dict):
        return {"kind": "bundle", "items": {k: save(v) for k, v in obj.items()}}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def read_document(src):
    """Accept a dict, a catalog reference, a path, or JSON text."""
    if isinstance(src, (dict, list)):
        return src
    if isinstance(src, Path) or (isinstance(src, str) and os.path.exists(src)):
        try:
            return json.loads(Path(src).read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise SchemaError(f"{src}: invalid JSON ({e})") from None
    if isinstance(src, str):
        s = src.strip()
        if s.startswith("{"):
            try:
                return json.loads(s)
            except json.JSONDecodeError as e:
                raise SchemaError(f"invalid JSON ({e})") from None
        return s
    raise SchemaError(f"cannot read a document from {type(src).__name__}")


def _flat(x) -> bool:
    """Scalars, or lists nested at most two deep (an entry with a cyclotomic scalar)."""
    if isinstance(x, list):
        return all(not isinstance(y, (list, dict)) or
                   (isinstance(y, list) and all(not isinstance(z, (list, dict)) for z in y))
                   for y in x)
    return not isinstance(x, dict)


def _fmt(x, ind) -> str:
    if _flat(x) and not (isinstance(x, list) and x and isinstance(x[0], list)):
        return json.dumps(x, ensure_ascii=False)
    pad, inner = " " * ind, " " * (ind + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_fmt(v, ind + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if not x:
        return "[]"
    return "[\n" + ",\n".join(inner + _fmt(v, ind + 1) for v in x) + "\n" + pad + "]"


def dumps(doc) -> str:
    """Canonical text: one sparse entry per line."""
    return _fmt(doc, 0) + "\n"


def write_document(doc, path) -> str:
    """Write canonically; returns the sha256 of the bytes written."""
    text = dumps(doc).encode("utf-8")
    Path(path).write_bytes(text)
    return hashlib.sha256(text).hexdigest()


_NAME_RE = re.compile(r"^\s*([A-Za-z_][\w-]*)\s*(?:[(:]\s*(.*?)\s*\)?\s*)?$")


def _resolve_name(ref: str, want):
    """'hat_taft(4,2,2)', 'taft-datum:4,2,2' or 'group_algebra(S3)'."""
    from .catalog import BadParams, catalog_build
    m = _NAME_RE.match(ref)
    if not m:
        raise SchemaError(f"bad catalog reference {ref!r}")
    name, args = m.group(1), m.group(2)
    params = [a.strip() for a in args.split(",")] if args else []
    try:
        obj = catalog_build(name, params)
    except BadParams as e:
        raise SchemaError(str(e)) from None
    H = getattr(obj, "H", obj)
    if isinstance(H, HopfAlgebra):
        check_order(hopf_order(H))
    if want is HopfAlgebra and not isinstance(obj, HopfAlgebra):
        raise SchemaError(f"{ref!r} is not a Hopf algebra")
    return obj
