"""Command-line frontend: classification, forms, knitting, pairs, hierarchy.

Exit codes: 0 success, 1 usage error, 2 domain/validation error,
3 inconclusive (bounded search or slice limit hit).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arquiver, nilpairs, quadform, quiver
from .classify import (classify, orbit_type, tensor_type,
                       verify_classification, wildness_witness)
from .partitions import (Partition, PartitionError, format_partition,
                         is_subdiagram, parse_partition, partitions_of)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INCONCLUSIVE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(obj, as_json=True):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(obj)


def build_parser() -> _Parser:
    parser = _Parser(prog="stairalg",
                     description="Exact computations with staircase algebras "
                                 "of partitions.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized operations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="representation type of a partition")
    p.add_argument("partition")
    p.add_argument("--verify", action="store_true",
                   help="run the quadratic-form cross checks")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("form", help="Tits form computations")
    p.add_argument("partition")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--eval", metavar="VECTOR_JSON",
                   help="evaluate on a vector file ('-' for stdin)")
    g.add_argument("--gram", action="store_true")
    g.add_argument("--radical", action="store_true")
    g.add_argument("--psd", action="store_true")
    g.add_argument("--roots", action="store_true")
    g.add_argument("--corank0", action="store_true")
    g.add_argument("--nullroot", action="store_true")

    p = sub.add_parser("witness", help="wildness certificate vector")
    p.add_argument("partition")

    p = sub.add_parser("knit", help="knit the preprojective component")
    p.add_argument("partition")
    p.add_argument("--limit", type=int, default=None, help="slice limit")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--orbit", action="store_true")

    p = sub.add_parser("orbit-type", help="orbit-quiver type (closed form)")
    p.add_argument("partition")

    p = sub.add_parser("tensor", help="type of the m x l grid algebra")
    p.add_argument("m", type=int)
    p.add_argument("l", type=int)

    p = sub.add_parser("nilpair", help="graded nilpotent pair operations")
    p.add_argument("action", choices=["validate", "to-rep", "finite"])
    p.add_argument("pair_json", help="pair file ('-' for stdin)")

    p = sub.add_parser("family", help="two-parameter family member")
    p.add_argument("partition")
    p.add_argument("--params", required=True,
                   help="comma-separated scalars, e.g. 1,0,2 or 1/2,3,0")

    p = sub.add_parser("hierarchy", help="diagram-containment DAG by type")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    return parser


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)


def _read_json(path: str):
    try:
        data = sys.stdin.read() if path == "-" else open(path).read()
        return json.loads(data)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)


def _cmd_classify(args) -> int:
    lam = _partition(args.partition)
    rep_type = classify(lam)
    if not args.verify:
        if args.json:
            _emit({"lambda": list(lam.parts), "type": rep_type.value})
        else:
            print(rep_type.value)
        return EXIT_OK
    report = verify_classification(lam)
    if args.json:
        _emit(report.to_json())
    else:
        print(rep_type.value)
        for check in report.checks:
            print(f"  {check.criterion}: {check.verdict}")
        print(f"consistent: {str(report.consistent).lower()}")
    if not report.consistent:
        return EXIT_DOMAIN
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_form(args) -> int:
    lam = _partition(args.partition)
    form = quadform.form_of(lam)
    if args.eval:
        obj = _read_json(args.eval)
        try:
            vec_lam, rows = quiver.rows_from_json(obj)
        except (ValueError, KeyError, TypeError, PartitionError) as exc:
            print(f"error: malformed vector file: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        if vec_lam != lam:
            print("error: vector belongs to a different partition", file=sys.stderr)
            return EXIT_DOMAIN
        _emit({"lambda": list(lam.parts), "q": quadform.eval_form(form, lam, rows)})
        return EXIT_OK
    if args.gram:
        g = quadform.gram(form)
        _emit({"lambda": list(lam.parts),
               "vertices": [f"{i},{j}" for (i, j) in form.labels],
               "gram": [[str(x) for x in row] for row in g]})
        return EXIT_OK
    if args.psd:
        _emit({"lambda": list(lam.parts), "psd": quadform.is_psd(form)})
        return EXIT_OK
    if args.radical:
        try:
            basis = quadform.radical_basis(form)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit({"lambda": list(lam.parts), "rank": len(basis),
               "basis": [[list(r) for r in quadform.unflatten(lam, b)]
                         for b in basis]})
        return EXIT_OK
    if args.corank0:
        try:
            value = quadform.corank0(form)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit({"lambda": list(lam.parts), "corank0": value})
        return EXIT_OK
    if args.nullroot:
        try:
            root = quadform.minimal_nullroot(form, lam)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit(quiver.rows_to_json(lam, root))
        return EXIT_OK
    if args.roots:
        try:
            roots = quadform.positive_roots(form)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit({"lambda": list(lam.parts), "count": len(roots),
               "roots": [[list(r) for r in quadform.unflatten(lam, x)]
                         for x in roots]})
        return EXIT_OK
    return EXIT_USAGE


def _cmd_witness(args) -> int:
    lam = _partition(args.partition)
    try:
        rows = wildness_witness(lam)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    value = quadform.eval_form(quadform.form_of(lam), lam, rows)
    obj = quiver.rows_to_json(lam, rows)
    obj["q"] = value
    _emit(obj)
    return EXIT_OK


def _cmd_knit(args) -> int:
    lam = _partition(args.partition)
    ar = arquiver.knit(lam, args.limit)
    if args.orbit:
        try:
            oq = arquiver.orbit_quiver(ar)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        if args.dot:
            print(arquiver.orbit_to_dot(oq), end="")
        else:
            _emit(oq.to_json())
        return EXIT_OK
    if args.dot:
        print(arquiver.ar_to_dot(ar), end="")
    else:
        _emit({"lambda": list(lam.parts), "complete": ar.complete,
               "vertices": len(ar.vertices), "arrows": len(ar.arrows),
               "projectives_inserted": ar.projectives_inserted})
    return EXIT_OK if ar.complete else EXIT_INCONCLUSIVE


def _cmd_orbit_type(args) -> int:
    lam = _partition(args.partition)
    print(str(orbit_type(lam)))
    return EXIT_OK


def _cmd_tensor(args) -> int:
    try:
        print(tensor_type(args.m, args.l).value)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def _cmd_nilpair(args) -> int:
    try:
        pair = nilpairs.GradedPair.from_json(_read_json(args.pair_json))
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: malformed pair file: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.action == "validate":
        violations = nilpairs.validate_pair(pair)
        _emit({"valid": not violations,
               "violations": [{"kind": kind, "at": list(at), "detail": detail}
                              for kind, at, detail in violations]})
        return EXIT_OK if not violations else EXIT_DOMAIN
    if args.action == "to-rep":
        try:
            rep = nilpairs.to_representation(pair)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        _emit(rep.to_json())
        return EXIT_OK
    answer = nilpairs.finiteness_space(pair.space)
    print(answer.value)
    return EXIT_INCONCLUSIVE if answer is nilpairs.Finiteness.UNKNOWN else EXIT_OK


def _cmd_family(args) -> int:
    lam = _partition(args.partition)
    try:
        params = [Fraction(x) for x in args.params.split(",")]
        rep = nilpairs.two_param_family(lam, params)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(rep.to_json())
    return EXIT_OK


_TYPE_COLORS = {
    "finite": "palegreen",
    "tame-concealed": "skyblue",
    "tame-not-concealed": "lightblue",
    "wild": "salmon",
}


def _cmd_hierarchy(args) -> int:
    if args.max_n < 1:
        print("error: --max-n must be >= 1", file=sys.stderr)
        return EXIT_DOMAIN
    nodes = []
    for n in range(1, args.max_n + 1):
        nodes.extend(partitions_of(n))
    edges = []
    for child in nodes:
        for parent in nodes:
            if parent.size == child.size + 1 and is_subdiagram(child, parent):
                edges.append((child, parent))
    if args.dot:
        lines = ["digraph hierarchy {", "  rankdir=BT;"]
        for lam in nodes:
            t = classify(lam).value
            lines.append(f'  "{format_partition(lam)}" '
                         f'[style=filled, fillcolor={_TYPE_COLORS[t]}, '
                         f'label="{format_partition(lam)}"];')
        for child, parent in edges:
            lines.append(f'  "{format_partition(child)}" -> '
                         f'"{format_partition(parent)}";')
        lines.append("}")
        print("\n".join(lines))
    else:
        _emit({
            "nodes": [{"partition": format_partition(lam),
                       "n": lam.size,
                       "type": classify(lam).value}
                      for lam in nodes],
            "edges": [[format_partition(a), format_partition(b)]
                      for a, b in edges],
        })
    return EXIT_OK


_HANDLERS = {
    "classify": _cmd_classify,
    "form": _cmd_form,
    "witness": _cmd_witness,
    "knit": _cmd_knit,
    "orbit-type": _cmd_orbit_type,
    "tensor": _cmd_tensor,
    "nilpair": _cmd_nilpair,
    "family": _cmd_family,
    "hierarchy": _cmd_hierarchy,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
