"""Command-line entry points.

Verbs:

    mutate    apply a mutation sequence to a seed, print the new variables
    explore   walk the exchange graph, report seeds / edges / variables
    class     walk the quiver mutation class, report census numbers
    classify  decide finite type, with a mutation-sequence witness
    variables list all cluster variables reached from the initial seed
    roots     positive roots of a simply-laced Dynkin type
    cc        Caldero-Chapoton value of a representation or shifted projective
    verify    consistency checks (root bijection, exchange edges, CC bijection)

Exit codes: 0 success, 1 domain error or failed verification, 2 usage
error, 3 truncated search (a size limit stopped the walk early).

Stable one-line summaries (``explore --count``, ``class --stats``) are
meant for shell pipelines and golden tests; --json emits the full
machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .laurent import LaurentPoly, NotDivisible, ZeroDivisor
from .quiver import (
    DynkinType,
    QuiverFormatError,
    Quiver,
    dynkin_type,
    mutate_quiver,
    parse_quiver,
    quiver_to_data,
    to_dot,
)
from .reptheory import (
    InterpolationInconsistent,
    PrimeCollision,
    ShiftedProjective,
    cc_value,
    rep_from_data,
    verify_cc_bijection,
)
from .seed import (
    DEFAULT_MAX_QUIVERS,
    DEFAULT_MAX_SEEDS,
    Seed,
    classify,
    exchange_graph,
    graph_to_data,
    graph_to_dot,
    initial_seed,
    mutate_seed,
    mutation_class,
    positive_roots,
    seed_to_data,
    variables_of,
    verify_exchange_edges,
    verify_root_bijection,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3

DOMAIN_ERRORS = (
    QuiverFormatError,
    NotDivisible,
    ZeroDivisor,
    InterpolationInconsistent,
    PrimeCollision,
    ValueError,
    IndexError,
    ArithmeticError,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_quiver(path: str) -> Quiver:
    return parse_quiver(_read_text(path))


def _parse_sequence(raw: str) -> list[int]:
    parts = [p for chunk in raw.split(",") for p in chunk.split()]
    if not parts:
        raise ValueError("empty mutation sequence")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"mutation sequence {raw!r} must be comma-separated integers") from None


def _emit_json(data: object) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


# ----------------------------------------------------------------------
# verb implementations


def _cmd_mutate(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    sequence = _parse_sequence(args.at)
    steps = []
    if args.quiver_only:
        for k in sequence:
            q = mutate_quiver(q, k)
    else:
        s = initial_seed(q)
        for k in sequence:
            s = mutate_seed(s, k)
            steps.append((k, s.cluster[k - 1]))
        q = s.quiver
    if args.dot:
        _write_text(args.dot, to_dot(q))
    if args.json:
        payload: dict = {
            "steps": [{"k": k, "text": p.to_text()} for k, p in steps],
            "quiver": quiver_to_data(q),
        }
        if not args.quiver_only:
            payload.update(seed_to_data(s))
        t = dynkin_type(q)
        payload["dynkin_type"] = str(t) if t else None
        _emit_json(payload)
        return EXIT_OK
    for k, p in steps:
        print(f"u'_{k} = {p.to_text()}")
    print(f"quiver: {json.dumps(quiver_to_data(q), separators=(', ', ': '))}")
    t = dynkin_type(q)
    if t is not None:
        print(f"dynkin_type={t}")
    return EXIT_OK


def _cmd_explore(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    graph = exchange_graph(q, args.limit)
    collected = variables_of(graph)
    if args.dot:
        _write_text(args.dot, graph_to_dot(graph))
    if args.json:
        data = graph_to_data(graph, include_clusters=args.clusters)
        data["variables"] = collected.texts()
        _emit_json(data)
    elif args.count:
        print(f"seeds={graph.num_seeds} variables={len(collected.variables)}")
    else:
        print(
            f"seeds={graph.num_seeds} edges={graph.num_edges} "
            f"variables={len(collected.variables)}"
        )
    return EXIT_TRUNCATED if graph.truncated else EXIT_OK


def _cmd_class(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    cls = mutation_class(q, args.limit)
    if args.json:
        _emit_json(
            {
                "size": cls.size,
                "double_arrows": cls.multiple_arrow_members,
                "max_mult": cls.max_multiplicity,
                "truncated": cls.truncated,
            }
        )
    else:
        print(
            f"size={cls.size} double_arrows={cls.multiple_arrow_members} "
            f"max_mult={cls.max_multiplicity}"
        )
    return EXIT_TRUNCATED if cls.truncated else EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    result = classify(q, args.limit, early_exit=not args.no_early_exit)
    if args.json:
        _emit_json(
            {
                "verdict": result.verdict,
                "type": str(result.dynkin) if result.dynkin else None,
                "witness": list(result.witness) if result.witness is not None else None,
                "reason": result.reason,
                "explored": result.explored,
            }
        )
        return EXIT_TRUNCATED if result.verdict == "depth_exhausted" else EXIT_OK
    if result.verdict == "finite":
        witness = ",".join(map(str, result.witness)) if result.witness else "-"
        print(f"finite type={result.dynkin} witness={witness}")
        return EXIT_OK
    if result.verdict == "infinite":
        if result.reason == "multiple_arrow":
            witness = ",".join(map(str, result.witness)) if result.witness else "-"
            print(f"infinite reason=multiple_arrow witness={witness}")
        else:
            print(f"infinite reason=class_exhausted explored={result.explored}")
        return EXIT_OK
    print(f"limit reached after {result.explored} quivers")
    return EXIT_TRUNCATED


def _cmd_variables(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    graph = exchange_graph(q, args.limit)
    collected = variables_of(graph)
    if args.json:
        _emit_json({"variables": collected.texts(), "truncated": collected.truncated})
    else:
        for text in collected.texts():
            print(text)
    return EXIT_TRUNCATED if collected.truncated else EXIT_OK


def _parse_type(raw: str) -> DynkinType:
    raw = raw.strip()
    if len(raw) < 2 or raw[0] not in "ADE":
        raise ValueError(f"cannot parse Dynkin type {raw!r}; expected e.g. A3, D4, E6")
    try:
        rank = int(raw[1:])
    except ValueError:
        raise ValueError(f"cannot parse Dynkin type {raw!r}") from None
    return DynkinType(raw[0], rank)


def _cmd_roots(args: argparse.Namespace) -> int:
    t = _parse_type(args.type)
    roots = sorted(positive_roots(t))
    if args.json:
        _emit_json({"type": str(t), "count": len(roots), "roots": [list(r) for r in roots]})
    else:
        for r in roots:
            print(",".join(map(str, r)))
    return EXIT_OK


def _cmd_cc(args: argparse.Namespace) -> int:
    if args.rep and args.shifted is not None:
        raise ValueError("give either --rep or --shifted, not both")
    if args.rep:
        rep = rep_from_data(json.loads(_read_text(args.rep)))
        value = cc_value(rep)
    elif args.shifted is not None:
        if not args.quiver:
            raise ValueError("--shifted needs --quiver")
        q = _load_quiver(args.quiver)
        value = cc_value(ShiftedProjective(q, args.shifted))
    else:
        raise ValueError("cc needs --rep FILE or --shifted K with --quiver FILE")
    if args.json:
        _emit_json({"value": value.to_text(), "terms": value.to_wire()})
    else:
        print(value.to_text())
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    if args.what == "roots":
        report = verify_root_bijection(q, args.limit)
        if args.json:
            _emit_json(
                {
                    "ok": report.ok,
                    "type": str(report.dynkin),
                    "variables": report.num_variables,
                    "noninitial": report.num_noninitial,
                    "roots": report.num_roots,
                    "missing": [list(r) for r in report.missing_roots],
                    "extra": [list(r) for r in report.extra_vectors],
                    "duplicates": [list(r) for r in report.duplicate_vectors],
                }
            )
        elif report.ok:
            print(
                f"roots: ok (type={report.dynkin} variables={report.num_variables} "
                f"noninitial={report.num_noninitial} roots={report.num_roots})"
            )
        else:
            print(
                f"roots: FAIL (missing={len(report.missing_roots)} "
                f"extra={len(report.extra_vectors)} duplicates={len(report.duplicate_vectors)})"
            )
        return EXIT_OK if report.ok else EXIT_DOMAIN
    if args.what == "edges":
        graph = exchange_graph(q, args.limit)
        report = verify_exchange_edges(graph)
        if args.json:
            _emit_json(
                {
                    "ok": report.ok,
                    "seeds": report.seeds_checked,
                    "mutations": report.mutations_checked,
                    "violations": report.violations,
                }
            )
        elif report.ok:
            print(
                f"edges: ok (seeds={report.seeds_checked} "
                f"mutations={report.mutations_checked})"
            )
        else:
            print(f"edges: FAIL ({'; '.join(report.violations)})")
        return EXIT_OK if report.ok else EXIT_DOMAIN
    report = verify_cc_bijection(q, args.limit)
    if args.json:
        _emit_json(
            {
                "ok": report.ok,
                "objects": report.num_objects,
                "variables": report.num_variables,
                "all_rigid": report.all_rigid,
                "values_match": report.values_match,
                "tilting": report.tilting_count,
                "seeds": report.seed_count,
                "mismatches": report.mismatches,
            }
        )
    elif report.ok:
        print(
            f"cc: ok (objects={report.num_objects} tilting={report.tilting_count} "
            f"seeds={report.seed_count})"
        )
    else:
        print(f"cc: FAIL ({'; '.join(report.mismatches)})")
    return EXIT_OK if report.ok else EXIT_DOMAIN


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverlab",
        description="exact workbench for quiver mutation and acyclic cluster algebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_quiver(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--quiver",
            required=True,
            metavar="FILE",
            help="quiver JSON file ('-' reads stdin)",
        )

    p = sub.add_parser("mutate", help="apply a mutation sequence to the initial seed")
    add_quiver(p)
    p.add_argument("--at", required=True, metavar="LIST", help="vertices, e.g. 5,3,1,6")
    p.add_argument("--quiver-only", action="store_true", help="skip cluster arithmetic")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="FILE", help="write the final quiver as DOT")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("explore", help="walk the exchange graph")
    add_quiver(p)
    p.add_argument("--limit", type=int, default=DEFAULT_MAX_SEEDS, metavar="N")
    p.add_argument("--count", action="store_true", help="print 'seeds=N variables=V'")
    p.add_argument("--clusters", action="store_true", help="include clusters in --json")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="FILE", help="write the exchange graph as DOT")
    p.set_defaults(fn=_cmd_explore)

    p = sub.add_parser("class", help="walk the quiver mutation class")
    add_quiver(p)
    p.add_argument("--limit", type=int, default=DEFAULT_MAX_QUIVERS, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_class)

    p = sub.add_parser("classify", help="decide finite type with a witness")
    add_quiver(p)
    p.add_argument("--limit", type=int, default=DEFAULT_MAX_QUIVERS, metavar="N")
    p.add_argument(
        "--no-early-exit",
        action="store_true",
        help="ignore multiple arrows; walk the class until exhausted",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("variables", help="list all reachable cluster variables")
    add_quiver(p)
    p.add_argument("--limit", type=int, default=DEFAULT_MAX_SEEDS, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_variables)

    p = sub.add_parser("roots", help="positive roots of a Dynkin type")
    p.add_argument("--type", required=True, metavar="T", help="e.g. A3, D4, E8")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("cc", help="Caldero-Chapoton value")
    p.add_argument("--rep", metavar="FILE", help="representation JSON file")
    p.add_argument("--shifted", type=int, metavar="K", help="shifted projective at vertex K")
    p.add_argument("--quiver", metavar="FILE", help="quiver JSON (with --shifted)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_cc)

    p = sub.add_parser("verify", help="run a consistency check")
    p.add_argument(
        "--what",
        required=True,
        choices=("roots", "edges", "cc"),
        help="which invariant to check",
    )
    add_quiver(p)
    p.add_argument("--limit", type=int, default=DEFAULT_MAX_SEEDS, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except json.JSONDecodeError as exc:
        print(f"error: InvalidJson: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
