"""Command-line front end.

Subcommands: tableaux, graph, seminormal, natural, transition,
orthogonal, verify, bench.  Exit codes: 0 success, 2 parse error,
3 precondition violation, 4 invariant/verification failure.  Errors are
also emitted on stderr as single-line JSON diagnostics.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import transition as tr
from .algebras import (AlgebraSpec, FAMILIES, natural_generator,
                       seminormal_generator, verify_relations,
                       x_generator, zeroth_generator)
from .bruhat import BruhatGraph, to_dot
from .errors import (InvariantError, PreconditionError, ShapeParseError,
                     YoungBasisError)
from .linalg import matrix_to_csv, matrix_to_json
from .shapes import all_partitions, parse_shape, shape_from_parts


FAMILY_CHOICES = FAMILIES + ("grn",)  # "grn" is shorthand for wreath_grn


def _add_common(p, family=True):
    p.add_argument("--shape", required=True, help="shape string")
    if family:
        p.add_argument("--family", default="symmetric", choices=FAMILY_CHOICES)
        p.add_argument("--r", type=int, default=None,
                       help="number of components (validated against the shape)")
        p.add_argument("--q", default="sym",
                       help="'sym' for symbolic q, or an exact rational")
        p.add_argument("--u", default=None,
                       help="comma-separated exact rationals u_1,...,u_r")
    p.add_argument("--format", default="json", choices=["json", "csv", "dot"])
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--threads", type=int, default=1)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="youngbasis",
        description="Exact transition matrices between Young's bases")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", help="list standard tableaux")
    _add_common(p, family=False)

    p = sub.add_parser("graph", help="weak Bruhat graph as DOT")
    _add_common(p, family=False)

    for name in ("seminormal", "natural"):
        p = sub.add_parser(name, help=f"{name} generator matrices")
        _add_common(p)
        p.add_argument("--gen", default=None,
                       help="one generator: an index 1..n-1, or 0 / x<i>")

    p = sub.add_parser("transition", help="natural-to-seminormal matrix")
    _add_common(p)
    p.add_argument("--oracle", default="recursive",
                   choices=["recursive", "pathsum", "word"])
    p.add_argument("--pathsum-cap", type=int, default=tr.PATHSUM_DEFAULT_CAP,
                   help="raise the size cap of the pathsum oracle")

    p = sub.add_parser("orthogonal",
                       help="squared seminormal-to-orthogonal diagonal")
    _add_common(p)

    p = sub.add_parser("verify", help="relation + structure check suite")
    _add_common(p)
    p.add_argument("--oracle-cap", type=int, default=tr.PATHSUM_DEFAULT_CAP)

    p = sub.add_parser("bench", help="timing/op-count table for the recursion")
    p.add_argument("--shape", default=None)
    p.add_argument("--partitions-of", type=int, default=None,
                   help="benchmark every partition of this size")
    p.add_argument("--family", default="symmetric", choices=FAMILIES)
    p.add_argument("--q", default="sym")
    p.add_argument("--u", default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--format", default="csv", choices=["json", "csv"])
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=1)
    return ap


def _parse_u(text):
    if text is None:
        return None
    return tuple(Fraction(tok.strip()) for tok in text.split(","))


def make_spec(args, shape):
    family = "wreath_grn" if args.family == "grn" else args.family
    r = args.r if args.r is not None else shape.r
    q = None if args.q == "sym" else Fraction(args.q)
    u = _parse_u(args.u)
    if family == "hecke_A":
        u = None
    if family in ("hecke_B", "ariki_koike") and u is None:
        raise PreconditionError(f"{family} requires --u")
    return AlgebraSpec(family, shape.n, r=r, q=q, u=u)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_params(spec, extra=None):
    params = {"family": spec.family, "r": spec.r,
              "q": "sym" if spec.q is None else str(spec.q)}
    if spec.family in ("hecke_A", "hecke_B", "ariki_koike"):
        params["u"] = [str(x) for x in spec.u]
    if extra:
        params.update(extra)
    return params


def cmd_tableaux(args):
    shape = parse_shape(args.shape)
    graph = BruhatGraph(shape)
    rows = []
    for t in graph.nodes:
        rows.append({
            "tableau": t.serialize(),
            "word": list(t.word),
            "inversions": sorted(map(list, t.inversions)),
            "depth": t.depth,
        })
    if args.format == "json":
        _emit(args, json.dumps({"shape": shape.to_str(), "count": len(rows),
                                "tableaux": rows},
                               sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["tableau,word,depth,inversions"]
        for rec in rows:
            lines.append(",".join([
                json.dumps(rec["tableau"]).replace(",", " "),
                " ".join(map(str, rec["word"])),
                str(rec["depth"]),
                " ".join(f"({i}>{j})" for i, j in rec["inversions"]),
            ]))
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_graph(args):
    shape = parse_shape(args.shape)
    graph = BruhatGraph(shape)
    if args.format != "dot":
        raise PreconditionError("graph output is DOT only (use --format dot)")
    _emit(args, to_dot(graph))
    return 0


def _generator_list(spec, shape, graph, natural):
    gens = []
    tmat = tr.transition_recursive(spec, shape, graph=graph) if natural else None
    if spec.family in ("hecke_B", "ariki_koike", "wreath_grn"):
        name0 = "s0" if spec.family == "wreath_grn" else "T0"
        if natural:
            gens.append((name0, natural_generator(spec, shape, 0, graph=graph,
                                                  transition=tmat)))
        else:
            gens.append((name0, zeroth_generator(spec, shape, graph=graph)))
    if spec.family == "affine_placed":
        for i in range(1, spec.n + 1):
            m = x_generator(spec, shape, i, graph=graph)
            if natural:
                from .algebras import conjugate_to_natural
                m = conjugate_to_natural(m, tmat)
            gens.append((f"X{i}", m))
    prefix = "T" if spec.family in ("hecke_A", "hecke_B", "ariki_koike",
                                    "affine_placed") else "s"
    for i in range(1, spec.n):
        if natural:
            m = natural_generator(spec, shape, i, graph=graph, transition=tmat)
        else:
            m = seminormal_generator(spec, shape, i, graph=graph)
        gens.append((f"{prefix}{i}", m))
    return gens


def _cmd_generators(args, natural):
    shape = parse_shape(args.shape)
    spec = make_spec(args, shape)
    graph = BruhatGraph(shape)
    gens = _generator_list(spec, shape, graph, natural)
    if args.gen is not None:
        key = args.gen if not args.gen.isdigit() else None
        wanted = []
        for name, m in gens:
            if key is not None and name.lower() == key.lower():
                wanted.append((name, m))
            elif key is None and name[1:] == args.gen and name[0] in "sT":
                wanted.append((name, m))
        if not wanted:
            raise PreconditionError(f"no generator named {args.gen!r}")
        gens = wanted
    if args.format == "json":
        obj = {
            "shape": shape.to_str(),
            "params": _json_params(spec, {"basis_kind":
                                          "natural" if natural else "seminormal"}),
            "basis": [t.serialize() for t in graph.nodes],
            "generators": [
                {"name": name, "field": m.field.name,
                 "rows": [[m.field.to_str(v) for v in row]
                          for row in m.to_rows()]}
                for name, m in gens],
        }
        _emit(args, json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        chunks = []
        for name, m in gens:
            chunks.append(f"# generator {name}\n" + matrix_to_csv(m))
        _emit(args, "".join(chunks))
    return 0


def cmd_seminormal(args):
    return _cmd_generators(args, natural=False)


def cmd_natural(args):
    return _cmd_generators(args, natural=True)


def cmd_transition(args):
    shape = parse_shape(args.shape)
    spec = make_spec(args, shape)
    graph = BruhatGraph(shape)
    if args.oracle == "recursive":
        if spec.family == "wreath_grn":
            tm = tr.grn_transition(shape, graph=graph)
        else:
            tm = tr.transition_recursive(spec, shape, graph=graph,
                                         threads=args.threads)
    elif args.oracle == "pathsum":
        tm = tr.transition_pathsum(spec, shape, graph=graph,
                                   n_cap=args.pathsum_cap)
    else:
        tm = tr.transition_word(spec, shape, graph=graph)
    tr.check_structure(tm)
    if args.format == "json":
        _emit(args, matrix_to_json(tm.matrix, shape.to_str(),
                                   _json_params(spec, {"oracle": args.oracle})))
    else:
        _emit(args, matrix_to_csv(tm.matrix))
    return 0


def cmd_orthogonal(args):
    from .algebras import WeightScheme
    shape = parse_shape(args.shape)
    spec = make_spec(args, shape)
    graph = BruhatGraph(shape)
    diag = tr.orthogonal_diag_squared(spec, shape, graph=graph)
    field = WeightScheme(spec, shape).field
    strs = [field.to_str(field.coerce(v)) for v in diag]
    if args.format == "json":
        obj = {"shape": shape.to_str(), "field": field.name,
               "params": _json_params(spec),
               "basis": [t.serialize() for t in graph.nodes],
               "diag_squared": strs}
        _emit(args, json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["word,diag_squared"]
        for t, v in zip(graph.nodes, strs):
            lines.append(" ".join(map(str, t.word)) + "," + v)
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args):
    shape = parse_shape(args.shape)
    spec = make_spec(args, shape)
    graph = BruhatGraph(shape)
    report = verify_relations(spec, shape, graph=graph)
    tm = tr.transition_recursive(spec, shape, graph=graph, threads=args.threads)
    try:
        tr.check_structure(tm)
        report.append({"relation": "transition structure", "status": "pass"})
    except InvariantError as exc:
        report.append({"relation": "transition structure", "status": "fail",
                       "witness": {"message": str(exc)}})
    diag = tr.diagonal_closed_form(spec, shape, graph=graph)
    ok = all(tm.matrix.get(i, i) == diag[i] for i in range(graph.size()))
    report.append({"relation": "diagonal closed form",
                   "status": "pass" if ok else "fail"})
    if shape.n <= args.oracle_cap:
        tp = tr.transition_pathsum(spec, shape, graph=graph,
                                   n_cap=args.oracle_cap)
        twd = tr.transition_word(spec, shape, graph=graph)
        ok = tp.matrix == tm.matrix and twd.matrix == tm.matrix
        report.append({"relation": "triple-oracle agreement",
                       "status": "pass" if ok else "fail"})
    failures = [r for r in report if r["status"] != "pass"]
    out = {"shape": shape.to_str(), "family": spec.family,
           "checks": report, "failures": len(failures)}
    _emit(args, json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n")
    return 4 if failures else 0


def cmd_bench(args):
    shapes = []
    if args.partitions_of:
        shapes = [shape_from_parts(p) for p in all_partitions(args.partitions_of)]
    if args.shape:
        shapes.append(parse_shape(args.shape))
    if not shapes:
        raise PreconditionError("bench needs --shape or --partitions-of")
    records = []
    for shape in shapes:
        spec = make_spec(args, shape)
        records.append(tr.bench_transition(spec, shape))
    if args.format == "json":
        _emit(args, json.dumps(records, sort_keys=True,
                               separators=(",", ":")) + "\n")
    else:
        import csv
        import io
        cols = ["shape", "f", "seconds", "scalar_ops", "mults", "adds",
                "op_bound"]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for rec in records:
            writer.writerow([f"{rec[c]:.6f}" if c == "seconds" else rec[c]
                             for c in cols])
        _emit(args, buf.getvalue())
    return 0


_COMMANDS = {
    "tableaux": cmd_tableaux,
    "graph": cmd_graph,
    "seminormal": cmd_seminormal,
    "natural": cmd_natural,
    "transition": cmd_transition,
    "orthogonal": cmd_orthogonal,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def _diag(kind, exc):
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ShapeParseError as exc:
        _diag("parse", exc)
        return 2
    except ValueError as exc:
        _diag("parse", exc)
        return 2
    except PreconditionError as exc:
        _diag("precondition", exc)
        return 3
    except InvariantError as exc:
        _diag("invariant", exc)
        return 4
    except YoungBasisError as exc:  # pragma: no cover
        _diag("internal", exc)
        return 4


if __name__ == "__main__":
    sys.exit(main())
