"""Command-line front end.

Every subcommand writes line-delimited JSON to stdout (``--format dot`` is
available where the output is a single graph). Exit status: 0 on success,
1 when a reported check fails, 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, TextIO

from . import coloring, decomposition as dec, formulas, structure
from .core import FamilySpec, LabeledGraph, generate, parse, to_dot
from .errors import ConstructionError, SumGraphError
from .oracle import (count_c4_bf, count_open_p3_bf, count_triangles_bf, exact_invariants_bf,
                     hamiltonian_cycle_bf, is_hamiltonian_cycle, is_isomorphic, is_proper_edge_coloring,
                     is_proper_vertex_coloring, verify_anti_sum_labeling, verify_sum_labeling)
from .report import LABELERS, MAX_REPORT_N, build_report, shape_check

FAMILIES = {
    "gn": "Gn", "g0n": "G0n", "gmn": "Gmn",
    "gnc": "GnComplement", "g0nc": "G0nComplement", "gmnc": "GmnComplement",
}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _family(args) -> FamilySpec:
    kind = FAMILIES[args.family]
    if kind.startswith("Gmn") and args.m is None:
        raise UsageError("--m is required for gmn families")
    if not kind.startswith("Gmn") and args.m not in (None, 0):
        raise UsageError("--m applies only to gmn families")
    return FamilySpec(kind, args.n, args.m or 0)


def _graph_json(G: LabeledGraph) -> dict:
    return {"labels": list(G.labels), "edges": [list(e) for e in G.edges]}


def _emit_graph(out: TextIO, G: LabeledGraph, fmt: str, extra: Optional[dict] = None) -> None:
    if fmt == "dot":
        out.write(to_dot(G))
    else:
        out.write(_dump({**_graph_json(G), **(extra or {})}) + "\n")


# --- subcommands -------------------------------------------------------------


def cmd_generate(args, out: TextIO) -> int:
    _emit_graph(out, generate(_family(args)), args.format)
    return 0


def cmd_label(args, out: TextIO) -> int:
    lab = LABELERS[args.shape]
    kwargs = {"x": args.x, "y": args.y} if args.shape == "banana" else {}
    if args.shape != "banana" and (args.x is not None or args.y is not None):
        raise UsageError("--x/--y apply only to --shape banana")
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    try:
        G = lab.build(*args.params, **kwargs)
        ref = lab.reference(*args.params)
    except TypeError:
        raise UsageError(f"--shape {args.shape} takes --params {lab.arity}") from None
    ok = verify_sum_labeling(G)
    iso = shape_check(G, ref)
    if args.format == "dot":
        out.write(to_dot(G))
    else:
        out.write(_dump({"shape": args.shape, "params": list(args.params), **_graph_json(G),
                         "sum_labeling": ok, "shape_isomorphic": iso}) + "\n")
    return 0 if ok and iso is not False else 1


def _load_graph(path: str) -> LabeledGraph:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse(data)


def cmd_verify(args, out: TextIO) -> int:
    if (args.graph is None) == (args.family is None):
        raise UsageError("give exactly one of --graph PATH or --family")
    G = _load_graph(args.graph) if args.graph else generate(_family(args))
    rec = {
        "order": G.order, "size": G.size,
        "integral_sum_labeling": verify_sum_labeling(G),
        "sum_labeling": verify_sum_labeling(G, positive_only=True),
        "anti_sum_labeling": verify_anti_sum_labeling(G),
    }
    ok = rec["integral_sum_labeling"]
    if args.hamiltonian:
        rec["hamiltonian_cycle"] = hamiltonian_cycle_bf(G)
    if args.iso:
        H = _load_graph(args.iso)
        cert = is_isomorphic(G, H)
        rec["isomorphic"] = cert.valid
        rec["mapping"] = None if cert.mapping is None else [[a, b] for a, b in sorted(cert.mapping.items())]
        ok = ok and cert.valid
    out.write(_dump(rec) + "\n")
    return 0 if ok else 1


def _oracle_value(family: FamilySpec, quantity: str, i: Optional[int]):
    G = generate(family)
    if quantity == "degree":
        return G.degree(i)
    if quantity == "edge_count":
        return G.size
    if quantity == "c3":
        return count_triangles_bf(G)
    if quantity == "c4":
        return count_c4_bf(G)
    if quantity == "open_p3":
        return count_open_p3_bf(G)
    if quantity == "max_size_Mn":
        return max(structure.interval_sizes(family.order).values()) if family.order >= 3 else None
    return getattr(exact_invariants_bf(G), quantity)


def cmd_count(args, out: TextIO) -> int:
    fam = _family(args)
    if args.quantity == "degree" and args.i is None:
        raise UsageError("--quantity degree needs --i")
    value = formulas.evaluate(fam, args.quantity, args.i)
    rec = {"family": fam.name(), "quantity": args.quantity, "formula": value}
    if args.i is not None:
        rec["i"] = args.i
    if args.oracle:
        rec["oracle"] = _oracle_value(fam, args.quantity, args.i)
        rec["pass"] = rec["oracle"] == value
    out.write(_dump(rec) + "\n")
    return 0 if rec.get("pass", True) else 1


def _load_fixture(spec: str) -> tuple[str, dict]:
    if spec in coloring.FIXTURES:
        return spec, {k: sorted(v) for k, v in coloring.FIXTURES[spec].items()}
    try:
        obj = json.loads(Path(spec).read_text())
        table = {int(k): sorted((min(a, b), max(a, b)) for a, b in v) for k, v in obj.items()}
    except (OSError, ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"--fixture must name {sorted(coloring.FIXTURES)} or a JSON table file: {exc}") from None
    return spec, table


def cmd_color(args, out: TextIO) -> int:
    fam = _family(args)
    if args.fixture and args.target != "edge":
        raise UsageError("--fixture compares edge colourings; use --target edge")
    fixture = _load_fixture(args.fixture) if args.fixture else None
    G = generate(fam)
    ok = True
    if args.target == "sumclass":
        part = coloring.edge_sum_partition(G)
        rec = {"family": fam.name(), "target": "sumclass", **part.as_dict()}
        matchings = all(len({v for e in c for v in e}) == 2 * len(c) for c in part.nonempty.values())
        rec["classes_are_matchings"] = matchings
        ok = matchings
    else:
        if args.target == "vertex":
            asg = coloring.vertex_color(fam)
            chk = is_proper_vertex_coloring(G, asg.colors)
            expected = formulas.family_invariants(fam).chi
        else:
            asg = coloring.edge_color(fam)
            chk = is_proper_edge_coloring(G, asg.colors)
            expected = formulas.family_invariants(fam).chi_prime
        rec = {"family": fam.name(), **asg.as_dict(), "proper": chk.proper, "formula_colors": expected}
        ok = chk.proper and chk.num_colors == expected
    if fixture:
        name, want = fixture
        got = coloring.edge_color(fam).classes()
        diff = sorted(k for k in set(got) | set(want) if got.get(k) != want.get(k))
        rec["fixture"] = {"name": name, "match": not diff, "differing_classes": diff}
        ok = ok and not diff
    out.write(_dump(rec) + "\n")
    return 0 if ok else 1


STRUCTURE_CHECKS = {
    "removal": "n [j]", "growth": "n", "hamiltonian": "n (G_Delta n) or m n (G_-m,n)",
    "maximal": "order", "extension": "m", "complement": "n",
}


def _structure_report(check: str, p: list[int]) -> tuple[structure.VerificationReport, dict]:
    rep = structure.VerificationReport()
    extra: dict = {}
    if check == "removal" and len(p) in (1, 2):
        n = p[0]
        js = [p[1]] if len(p) == 2 else range(1, n // 2 + 1)
        for j in js:
            H = structure.remove_supplementary(n, j)
            smaller = formulas.edge_count(FamilySpec("Gn", n - 2)) if n > 2 else 0
            rep.add(f"||G_{n} - {{{j},{n + 1 - j}}}|| = ||G_{n - 2}||", smaller, H.size)
        rep.extend(structure.check_vertex_deletion(n))
    elif check == "growth" and len(p) == 1:
        n = p[0]
        grown = structure.grow_gn(generate(FamilySpec("Gn", n)))
        rep.add(f"growth G_{n} -> G_{n + 2}", [list(e) for e in generate(FamilySpec("Gn", n + 2)).edges],
                [list(e) for e in grown.edges])
    elif check == "hamiltonian" and len(p) == 1:
        cyc = structure.hamiltonian_gdelta(p[0])
        extra["cycle"] = list(cyc)
        host = generate(FamilySpec("Gmn", p[0] - 2, 1))
        rep.add(f"Hamiltonian cycle of G_Delta{p[0]}", True, is_hamiltonian_cycle(host, cyc))
    elif check == "hamiltonian" and len(p) == 2:
        cyc = structure.hamiltonian_gmn(p[0], p[1])
        extra["cycle"] = list(cyc)
        host = generate(FamilySpec("Gmn", p[1], p[0]))
        rep.add(f"Hamiltonian cycle of G_-{p[0]},{p[1]}", True, is_hamiltonian_cycle(host, cyc))
    elif check == "maximal" and len(p) == 1:
        rep.extend(structure.maximal_report(p[0]))
        extra["maximal"] = [s.name() for s in structure.maximal_isg(p[0])]
    elif check == "extension" and len(p) == 1:
        rep.extend(structure.extension_argmax_report(p[0]))
    elif check == "complement" and len(p) == 1:
        rep.extend(structure.check_complement_identities(p[0]))
    else:
        raise UsageError(f"--check {check} takes --params {STRUCTURE_CHECKS[check]}")
    return rep, extra


def cmd_structure(args, out: TextIO) -> int:
    rep, extra = _structure_report(args.check, list(args.params))
    out.write(_dump({"check": args.check, "params": list(args.params), **extra, **rep.as_dict()}) + "\n")
    return 0 if rep.ok else 1


def cmd_decompose(args, out: TextIO) -> int:
    target = {"kn": "Kn", "g0n": "G0n"}[args.target]
    if args.search is not None:
        if target != "Kn" or args.scheme != "fans":
            raise UsageError("--search applies to --target kn --scheme fans")
        a, d = args.search
        D = dec.search_fan_cmsd(args.n, a, d)
        if D is None:
            out.write(_dump({"target": target, "n": args.n, "search": [a, d], "found": False}) + "\n")
            return 0
    elif target == "Kn":
        if args.scheme == "books":
            D = dec.cmsd_kn_books(args.n)
        elif args.scheme == "stars":
            D = dec.cmd_kn_stars(args.n)
        else:
            raise UsageError("K_n fan decompositions come from --search a d")
    else:
        if args.scheme == "books":
            D = dec.cmsd_g0n_books(args.n, args.book_scheme)
        elif args.scheme == "fans":
            D = dec.cmsd_g0n_fans(args.n)
        else:
            raise UsageError("G_0,n has no star scheme")
    rep = dec.validate(D)
    rec = {"target": target, "n": args.n, **D.as_dict(), "report": rep.as_dict()}
    if args.search is not None:
        rec["found"] = True
    out.write(_dump(rec) + "\n")
    return 0 if rep.ok else 1


def cmd_report(args, out: TextIO) -> int:
    if not 1 <= args.max_n <= MAX_REPORT_N:
        raise UsageError(f"--max-n must lie in [1, {MAX_REPORT_N}]")
    rep = build_report(args.max_n)
    for e in rep.entries:
        out.write(_dump(e.as_dict()) + "\n")
    out.write(_dump({"summary": rep.summary()}) + "\n")
    return 0 if rep.ok else 1


# --- parser ------------------------------------------------------------------


def _add_family(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=sorted(FAMILIES), required=required)
    p.add_argument("--m", type=int, help="magnitude of the most negative label (gmn families)")
    p.add_argument("--n", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sumgraph", description="Sum and integral sum graph toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit an interval family graph")
    _add_family(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("label", help="build and verify a labeling of a special graph")
    p.add_argument("--shape", choices=sorted(LABELERS), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="oracle checks on a graph file or family")
    p.add_argument("--graph", help="JSON graph file, '-' for stdin")
    _add_family(p, required=False)
    p.add_argument("--iso", help="second JSON graph to test for isomorphism")
    p.add_argument("--hamiltonian", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="evaluate a closed form, optionally against the oracle")
    _add_family(p)
    p.add_argument("--quantity", choices=formulas.QUANTITIES, required=True)
    p.add_argument("--i", type=int, help="vertex label for --quantity degree")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("color", help="constructive colourings and edge-sum classes")
    _add_family(p)
    p.add_argument("--target", choices=("vertex", "edge", "sumclass"), required=True)
    p.add_argument("--fixture", help="stored table name or JSON table path")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("structure", help="structural identities")
    p.add_argument("--check", choices=sorted(STRUCTURE_CHECKS), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("decompose", help="CMSD constructions and search")
    p.add_argument("--target", choices=("kn", "g0n"), required=True)
    p.add_argument("--scheme", choices=("books", "stars", "fans"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--search", type=int, nargs=2, metavar=("A", "D"))
    p.add_argument("--book-scheme", choices=("auto", "step2", "step8"), default="auto")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("report", help="run the verification matrix")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_report)
    return ap


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"sumgraph: error: {exc}\n")
        return 2
    except ConstructionError as exc:
        err.write(_dump({"error": "construction", "message": str(exc)}) + "\n")
        return 1
    except SumGraphError as exc:
        err.write(_dump({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    except OSError as exc:
        err.write(_dump({"error": "io", "message": str(exc)}) + "\n")
        return 2


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser"]
