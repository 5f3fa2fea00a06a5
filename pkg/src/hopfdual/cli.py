"""Command line: verify, dualize, coinvariants, nichols, eval, catalog.

Exit codes: 0 success (or equal), 1 verification failure (or unequal),
2 input or schema error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import serialize as ser
from .catalog import BadParams, catalog_build, catalog_names, CATALOG
from .diagramdsl import (CategoryBraiding, DiagramSyntaxError, DiagramTypeError, Environment,
                         check_equal, eval_expr)
from .exactmath import NotInvertible, ShapeMismatch, Space, TypedMorphism, format_scalar
from .hopfcore import (Degenerate, HopfAlgebra, HopfPairing, NoAntipode, YDBraiding,
                       invert_pairing, verify_hopf, verify_pairing)
from .nichols import (CutoffReached, DiagonalBraiding, cartan_matrix, hilbert_series,
                      materialize_nichols, rank_one_braiding, reflect, sl21_braidings)
from .partialdual import (PartialDualizationDatum, involutivity_check, partial_dualize,
                          transport_checks, transport_yd_module)
from .radford import check_projection, coinvariants
from .report import Report, VerificationError
from .ydcat import YDModule, verify_yd

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input (maps to exit code 2)."""


class Run:
    """Collects checks, informational results and written artifacts."""

    def __init__(self):
        self.report = Report()
        self.results: dict = {}
        self.hashes: dict = {}

    def timed(self, name, fn):
        t0 = time.perf_counter()
        rep = fn()
        dt = time.perf_counter() - t0
        self.report.add(name, rep.ok, _first_witness(rep), dt)
        self.report.extend(rep, prefix=name + ":")
        return rep

    def write(self, doc, path):
        self.hashes[str(path)] = ser.write_document(doc, path)

    def as_json(self, timings=True) -> dict:
        checks = sorted(self.report.checks, key=lambda c: c.name)
        out = {"checks": [c.as_json(timings) for c in checks],
               "status": "pass" if self.report.ok else "fail",
               "artifact_hashes": dict(sorted(self.hashes.items()))}
        if self.results:
            out["results"] = self.results
        return out

    def text(self, verbose=False) -> str:
        lines = []
        for c in sorted(self.report.checks, key=lambda c: c.name):
            if verbose or ":" not in c.name or not c.passed:
                lines.append(f"{c.name}: {'pass' if c.passed else 'FAIL'}")
                if not c.passed and c.witness is not None:
                    lines.append(f"    witness: {json.dumps(c.witness, sort_keys=True)}")
        for k, v in self.results.items():
            lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")
        for path, h in sorted(self.hashes.items()):
            lines.append(f"wrote {path} (sha256 {h[:16]}...)")
        lines.append(f"status: {'pass' if self.report.ok else 'FAIL'}")
        return "\n".join(lines)


def _first_witness(rep: Report):
    for c in rep.failures:
        return {"check": c.name, **(c.witness or {})}
    return None


# -- loading helpers ---------------------------------------------------------------------

def _load_datum(src) -> PartialDualizationDatum:
    doc = ser.read_document(src)
    if isinstance(doc, str):
        obj = ser._resolve_name(doc, None)
        if not isinstance(obj, PartialDualizationDatum):
            raise InputError(f"{src!r} is not a dualization datum")
        return obj
    return ser.datum_from_doc(doc)


def _load_projection(src):
    doc = ser.read_document(src)
    if isinstance(doc, str):
        d = _load_datum(doc)
        return d.H, d.A, d.pi, d.iota
    return ser.projection_from_doc(doc)


def _verify_document(doc) -> Report:
    """Report for a document without raising on axiom failures."""
    kind = ser.kind_of(doc)
    if kind == "name":
        obj = ser._resolve_name(doc, None)
        return _verify_object(obj)
    if kind == "hopf":
        return _verify_hopf_doc(doc)
    if kind == "pairing":
        rep = Report()
        A = ser.hopf_from_doc(ser._need(doc, "A", "pairing"), verify=False)
        B = ser.hopf_from_doc(ser._need(doc, "B", "pairing"), verify=False)
        rep.extend(verify_hopf(A), prefix="A:")
        rep.extend(verify_hopf(B), prefix="B:")
        N = ser.check_order(ser._need(doc, "cyclotomic_order", "pairing"))
        p = HopfPairing(A, B, ser._omega_from_rows(ser._need(doc, "omega", "pairing"), A, B, N))
        rep.extend(_pairing_report(p), prefix="pairing:")
        return rep
    if kind in ("datum", "projection"):
        rep = Report()
        N = ser.check_order(ser._need(doc, "cyclotomic_order", kind))
        algs = {}
        for key in ("H", "A", "B") if kind == "datum" else ("H", "A"):
            algs[key] = ser.hopf_from_doc(ser._need(doc, key, kind), verify=False)
            rep.extend(verify_hopf(algs[key]), prefix=f"{key}:")
        H, A = algs["H"], algs["A"]
        pi = ser.map_from_doc(ser._need(doc, "pi", kind), H.space, A.space, N, "pi")
        iota = ser.map_from_doc(ser._need(doc, "iota", kind), A.space, H.space, N, "iota")
        rep.extend(check_projection(H, A, pi, iota), prefix="projection:")
        if kind == "datum":
            B = algs["B"]
            p = HopfPairing(A, B, ser._omega_from_rows(ser._need(doc, "omega", kind), A, B, N))
            rep.extend(_pairing_report(p), prefix="pairing:")
        return rep
    if kind == "yd_module":
        M = ser.yd_from_doc(doc, verify=False)
        return verify_yd(M)
    if kind == "braiding":
        b = ser.braiding_from_doc(doc)
        rep = Report()
        bad = [(j, k) for j in range(b.rank) for k in range(b.rank) if b.q[j][k].is_zero]
        rep.add("entries_invertible", not bad, {"zero_entries": bad} if bad else None)
        return rep
    if kind == "bundle":
        rep = Report()
        for name, item in sorted(ser._need(doc, "items", "bundle").items()):
            rep.extend(_verify_document(item), prefix=f"{name}:")
        return rep
    raise ser.SchemaError(f"unknown document kind {kind!r}")


def _verify_hopf_doc(doc) -> Report:
    rep = Report()
    try:
        H = ser.hopf_from_doc(doc, verify=False)
    except NoAntipode as e:
        rep.add("antipode_exists", False, {"reason": str(e)})
        return rep
    except NotInvertible as e:
        rep.add("antipode_invertible", False, {"reason": str(e)})
        return rep
    return rep.extend(verify_hopf(H))


def _pairing_report(p: HopfPairing) -> Report:
    rep = Report()
    try:
        p = invert_pairing(p)
        rep.add("nondegenerate", True)
    except Degenerate as e:
        rep.add("nondegenerate", False, {"reason": str(e)})
    return rep.extend(verify_pairing(p))


def _verify_object(obj) -> Report:
    if isinstance(obj, HopfAlgebra):
        return verify_hopf(obj)
    if isinstance(obj, PartialDualizationDatum):
        return obj.report
    if isinstance(obj, HopfPairing):
        return verify_pairing(obj)
    if isinstance(obj, YDModule):
        return verify_yd(obj)
    if isinstance(obj, dict):
        rep = Report()
        for k, v in sorted(obj.items()):
            rep.extend(_verify_object(v), prefix=f"{k}:")
        return rep
    return Report()


# -- eval environments ------------------------------------------------------------------

def _env_from_doc(doc) -> Environment:
    """Environment document: hopf algebras, modules, plain spaces and generators.

    {"kind": "env", "cyclotomic_order": N, "category": "vect" | {"graded": ...}
     | {"yd_over": NAME}, "default": NAME, "hopf": {NAME: doc}, "modules":
     {NAME: yd_module doc with "over": NAME}, "spaces": {NAME: {"dim", "degrees"?}},
     "generators": {KEY: {"domain": [..], "codomain": [..], "entries": [[row, col, s]]}}}
    """
    if not isinstance(doc, dict) or doc.get("kind", "env") != "env":
        raise ser.SchemaError("eval needs an env document")
    N = ser.check_order(doc.get("cyclotomic_order", 1))
    env = Environment()
    algs = {}
    for name, hdoc in sorted(doc.get("hopf", {}).items()):
        algs[name] = H = ser.hopf_from_doc(hdoc)
        env = env.with_hopf(name, H, default=(doc.get("default") == name))
    structures = {}
    for name, mdoc in sorted(doc.get("modules", {}).items()):
        over = ser._need(mdoc, "over", "module")
        if not isinstance(over, str) or over not in algs:
            raise ser.SchemaError(f"module {name}: 'over' must name a hopf entry of the env")
        M = ser.yd_from_doc(mdoc, over=algs[over])
        env = env.with_module(name, M.space, over, M.rho, M.delta, M.side)
        if M.side == "left":
            structures[name] = (M.rho, M.delta)
    for name, sdoc in sorted(doc.get("spaces", {}).items()):
        dim = ser._need(sdoc, "dim", "space")
        deg = sdoc.get("degrees")
        env = env.with_space(Space(name, dim, None if deg is None else tuple(map(tuple, deg))))
    for key, gdoc in sorted(doc.get("generators", {}).items()):
        try:
            dom = tuple(env.space(s) for s in ser._need(gdoc, "domain", "generator"))
            cod = tuple(env.space(s) for s in ser._need(gdoc, "codomain", "generator"))
        except DiagramTypeError as e:
            raise ser.SchemaError(f"generator {key}: {e}") from None
        nr, nc = _prod(cod), _prod(dom)
        rows = ser._read_entries(ser._need(gdoc, "entries", "generator"), 2, (nr, nc), N, key)
        env = env.with_generator(key, TypedMorphism.from_entries(
            dom, cod, ((r, c, x) for (r, c), x in rows)))
    cat = doc.get("category", "vect")
    if isinstance(cat, dict) and "yd_over" in cat:
        A = algs.get(cat["yd_over"])
        if A is None:
            raise ser.SchemaError("category.yd_over must name a hopf entry of the env")
        for name, H in algs.items():
            if H.yd is not None:
                structures[name] = H.yd
        structures[cat["yd_over"]] = _regular_structure(A)
        env = env.with_braiding(YDBraiding(A, structures, A.ambient.category))
    else:
        env = env.with_braiding(CategoryBraiding(ser._read_category(cat, N)))
    return env


def _regular_structure(A):
    from .ydcat import regular_yd_module
    R = regular_yd_module(A)
    return (R.rho, R.delta)


def _prod(spaces) -> int:
    n = 1
    for s in spaces:
        n *= s.dim
    return n


def _matrix_summary(m: TypedMorphism) -> dict:
    return {"domain": [s.name for s in m.domain], "codomain": [s.name for s in m.codomain],
            "entries": [[r, c, format_scalar(v)] for r, c, v in sorted(m.entries())]}


# -- subcommands ------------------------------------------------------------------------

def cmd_verify(args, run: Run):
    doc = ser.read_document(args.file)
    run.timed("verify", lambda: _verify_document(doc))


def cmd_dualize(args, run: Run):
    d = _load_datum(args.datum)
    run.report.extend(d.report, prefix="datum:")
    holder = {}

    def first():
        holder["r"] = r = partial_dualize(d)
        return r.report
    run.timed("dualization", first)
    r = holder["r"]
    run.write(ser.hopf_to_doc(r.rH), args.output)
    run.results["dim"] = r.rH.dim
    if args.check_involutive:
        run.timed("involutivity", lambda: involutivity_check(d, args.sign, first=r).report)
    if args.transport:
        M = ser.yd_from_doc(ser.read_document(args.transport), over=d.H)
        run.timed("transport", lambda: transport_checks(d, r, M, M))
        if args.transport_out:
            run.write(ser.yd_to_doc(transport_yd_module(d, r, M)), args.transport_out)


def cmd_coinvariants(args, run: Run):
    H, A, pi, iota = _load_projection(args.datum)
    holder = {}

    def go():
        holder["D"] = D = coinvariants(H, A, pi, iota)
        return D.report
    run.timed("coinvariants", go)
    run.write(ser.hopf_to_doc(holder["D"].K), args.output)
    run.results["dim"] = holder["D"].K.dim


def _braiding_from_args(args) -> DiagonalBraiding:
    if args.qmatrix:
        doc = ser.read_document(args.qmatrix)
        if not isinstance(doc, dict):
            raise ser.SchemaError(f"{args.qmatrix}: not a braiding document")
        return ser.braiding_from_doc(doc)
    ser.check_order(args.n)
    preset = args.preset.lower().replace("_", "-")
    if preset in ("sl21-m", "sl21-n"):
        if args.n < 3:
            raise BadParams("sl21 presets need n >= 3")
        M, N = sl21_braidings(args.n)
        return M if preset.endswith("m") else N
    if preset == "rank1":
        return rank_one_braiding(args.n)
    raise BadParams(f"unknown preset {args.preset!r}; use sl21-M, sl21-N or rank1")


def _q_literal(b: DiagonalBraiding):
    """Entries written in z = exp(2 pi i / order)."""
    return [[format_scalar(x if x.rational else x.embed(b.order)) for x in row] for row in b.q]


def cmd_nichols(args, run: Run):
    b = _braiding_from_args(args)
    run.results["braiding"] = _q_literal(b)
    run.results["root_of_unity"] = f"z = exp(2 pi i / {b.order})"
    if args.hilbert:
        hs = hilbert_series(b, args.max_degree)
        run.results["hilbert"] = str(hs)
        run.results["hilbert_coefficients"] = list(hs.coeffs)
        run.results["hilbert_complete"] = hs.complete
        if hs.complete:
            run.results["total_dimension"] = hs.total_dim
    if args.cartan:
        try:
            run.results["cartan"] = [list(r) for r in cartan_matrix(b, args.max_degree)]
        except CutoffReached as e:
            run.results["cartan"] = f"not finite below degree {args.max_degree}: {e}"
    if args.reflect is not None:
        if not 1 <= args.reflect <= b.rank:
            raise InputError(f"--reflect must be between 1 and {b.rank}")
        R = reflect(b, args.reflect, args.max_degree)
        run.results["reflected_braiding"] = _q_literal(R.braiding)
        run.results["reflection_roots"] = [list(x) for x in R.roots]
        run.results["reflected_twist_equivalent_to_input"] = R.braiding.twist_equivalent(b)
        if args.hilbert:
            hs = hilbert_series(R.braiding, args.max_degree)
            run.results["reflected_hilbert"] = str(hs)
    if args.materialize:
        if not args.output:
            raise InputError("--materialize needs -o OUT")
        holder = {}

        def go():
            holder["B"] = B = materialize_nichols(b, args.max_degree, verify=False)
            return verify_hopf(B)
        run.timed("materialize", go)
        run.write(ser.hopf_to_doc(holder["B"]), args.output)


def cmd_eval(args, run: Run):
    env = _env_from_doc(ser.read_document(args.env))
    if args.equals is None:
        m = eval_expr(args.expr, env)
        run.results["value"] = _matrix_summary(m)
        return
    t0 = time.perf_counter()
    res = check_equal(args.expr, args.equals, env)
    run.report.add("equal", res.equal, res.witness, time.perf_counter() - t0)


def _catalog_doc(obj):
    if isinstance(obj, PartialDualizationDatum):
        return ser.datum_to_doc(obj)
    return ser.save(obj)


def cmd_catalog(args, run: Run):
    if args.name == "list":
        run.results["entries"] = {k: CATALOG[k][2] for k in catalog_names()}
        return
    obj = catalog_build(args.name, args.params)
    run.timed("build", lambda: _verify_object(obj))
    if args.output:
        run.write(_catalog_doc(obj), args.output)
    else:
        run.results["document"] = _catalog_doc(obj)


# -- entry point ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfdual", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="print a JSON run report")
    p.add_argument("--no-timings", action="store_true", help="omit timing fields")
    p.add_argument("-v", "--verbose", action="store_true", help="list every check")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="verify a document")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("dualize", help="partial dualization of a datum")
    s.add_argument("datum", help="datum file or catalog reference, e.g. taft-datum:4,2,2")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--check-involutive", action="store_true")
    s.add_argument("--sign", choices=["-", "+"], default="-",
                   help="pairing variant for the second dualization")
    s.add_argument("--transport", metavar="MODULE")
    s.add_argument("--transport-out", metavar="PATH")
    s.set_defaults(func=cmd_dualize)

    s = sub.add_parser("coinvariants", help="coinvariants of a split projection")
    s.add_argument("datum")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_coinvariants)

    s = sub.add_parser("nichols", help="Nichols algebra of a diagonal braiding")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--qmatrix", metavar="FILE")
    g.add_argument("--preset", help="sl21-M, sl21-N or rank1")
    s.add_argument("--n", type=int, default=3, help="q = zeta_n for presets")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--hilbert", action="store_true")
    s.add_argument("--cartan", action="store_true")
    s.add_argument("--reflect", type=int, metavar="I")
    s.add_argument("--materialize", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_nichols)

    s = sub.add_parser("eval", help="evaluate a diagram expression")
    s.add_argument("expr")
    s.add_argument("--env", required=True)
    s.add_argument("--equals")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("catalog", help="build a preset ('list' shows them)")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)
    return p


INPUT_ERRORS = (ser.SchemaError, BadParams, InputError, DiagramSyntaxError, DiagramTypeError,
                ShapeMismatch, OSError, Degenerate)


def run_command(argv=None, out=None) -> int:
    """Run one command; returns the exit code and prints the report."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    run = Run()
    try:
        args.func(args, run)
    except INPUT_ERRORS as e:
        return _error(args, out, EXIT_INPUT, e)
    except (VerificationError, NoAntipode, NotInvertible, CutoffReached, ValueError) as e:
        if isinstance(e, VerificationError) and e.report is not None:
            run.report.extend(e.report)
        else:
            run.report.add("load", False, {"error": str(e)})
        return _emit(args, run, out)
    return _emit(args, run, out)


def _emit(args, run: Run, out) -> int:
    if args.json:
        out.write(json.dumps(run.as_json(not args.no_timings), indent=1, sort_keys=False) + "\n")
    else:
        out.write(run.text(args.verbose) + "\n")
    if "equal" in run.report.names():
        return EXIT_OK if run.report["equal"].passed else EXIT_FAIL
    return EXIT_OK if run.report.ok else EXIT_FAIL


def _error(args, out, code, e) -> int:
    msg = f"{type(e).__name__}: {e}"
    if args.json:
        out.write(json.dumps({"checks": [], "status": "error", "error": msg,
                              "artifact_hashes": {}}) + "\n")
    else:
        sys.stderr.write(f"error: {msg}\n")
    return code


def main(argv=None):
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
