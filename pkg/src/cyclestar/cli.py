"""Command line entry point: gen, label, verify, es, oracle, sweep.

Exit codes: 0 success (formula mismatches included), 1 usage error,
2 I/O or format error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from .constructions import construct_labeling
from .graph import (CycleStarSpec, Graph, GraphFormatError, build_cycle_star, parse_graph,
                    parse_labeling, serialize_graph, serialize_labeling, to_dot)
from .solver import EsResult, SearchBudget, Solver, brute_force_es
from .verifier import edge_weights, is_edge_irregular, lower_bound

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str, flag: str) -> range:
    """``A..B`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"{flag}: expected A..B or an integer, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{flag}: empty range {text!r}")
    return range(lo, hi + 1)


def _read(path: str, flag: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{flag} {path}: {exc.strerror or exc}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path, "--graph"))
    except GraphFormatError as exc:
        raise InputError(f"--graph {path}: {exc}") from None


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"--out {out}: {exc.strerror or exc}") from None


def _spec(args) -> CycleStarSpec:
    try:
        return CycleStarSpec(args.k, args.leaves)
    except ValueError as exc:
        raise UsageError(f"--k/--leaves: {exc}") from None


def _emit(args, doc: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(doc))
    else:
        print("\n".join(human))


def _budget(args) -> SearchBudget:
    if args.timeout is not None and args.timeout <= 0:
        raise UsageError("--timeout must be positive")
    if args.nodes is not None and args.nodes <= 0:
        raise UsageError("--nodes must be positive")
    return SearchBudget(max_nodes=args.nodes, max_time=args.timeout)


def _result_doc(g: Graph, res: EsResult) -> dict:
    return {
        "es": res.es_value,
        "lower_bound": lower_bound(g),
        "witness": list(res.witness.labels),
        "method": res.method,
        "nodes": res.nodes_explored,
        "elapsed_ms": int(round(res.elapsed * 1000)),
    }


def _human(doc: dict) -> list[str]:
    out = []
    for key, val in doc.items():
        if isinstance(val, list):
            val = " ".join(str(x) for x in val) if val else "-"
        elif isinstance(val, bool):
            val = "true" if val else "false"
        elif val is None:
            val = "-"
        out.append(f"{key}: {val}")
    return out


# -- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    g = build_cycle_star(_spec(args))
    _write_or_print(to_dot(g) if args.dot else serialize_graph(g), args.out)
    return EXIT_OK


def cmd_label(args) -> int:
    spec = _spec(args)
    try:
        res = construct_labeling(spec)
    except ValueError as exc:
        raise UsageError(f"--k/--leaves: {exc}") from None
    g = build_cycle_star(spec)
    if args.out is not None:
        _write_or_print(serialize_labeling(res.labeling), args.out)
    doc = {
        "k": spec.cycle_len,
        "l": spec.leaf_count,
        "n": spec.n,
        "es": res.claimed_es,
        "case": res.case_tag,
        "labeling": list(res.labeling.labels),
        "weights": list(edge_weights(g, res.labeling).weights),
        "irregular": bool(is_edge_irregular(g, res.labeling)),
        "repairs": list(res.repairs),
    }
    if args.json:
        print(json.dumps(doc))
        return EXIT_OK
    lines = [serialize_labeling(res.labeling).rstrip("\n"),
             *_human({k: v for k, v in doc.items() if k not in ("repairs",)})]
    lines.append(f"repairs: {len(res.repairs)}")
    lines.extend(f"  - {r}" for r in res.repairs)
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        phi = parse_labeling(_read(args.labeling, "--labeling"), g.num_vertices)
    except GraphFormatError as exc:
        raise InputError(f"--labeling {args.labeling}: {exc}") from None
    verdict = is_edge_irregular(g, phi)
    doc = {
        "irregular": verdict.irregular,
        "first_collision": list(verdict.first_collision) if verdict.first_collision else None,
        "span": phi.span,
        "weights": list(edge_weights(g, phi).weights),
    }
    if verdict.first_collision:
        i, j = verdict.first_collision
        doc["collision_edges"] = [list(g.edges[i]), list(g.edges[j])]
    _emit(args, doc, _human(doc))
    return EXIT_OK


def _solve_cmd(args, solve) -> int:
    g = _load_graph(args.graph)
    if g.num_edges < 1 or not g.is_connected():
        raise InputError(f"--graph {args.graph}: graph must be connected with at least one edge")
    res = solve(g)
    if isinstance(res, EsResult):
        doc = _result_doc(g, res)
        _emit(args, doc, _human(doc))
        return EXIT_OK
    doc = {
        "es": None,
        "lower": res.lower,
        "upper": res.upper,
        "nodes": res.nodes_explored,
        "elapsed_ms": int(round(res.elapsed * 1000)),
    }
    _emit(args, doc, ["result: unknown (budget exhausted)", *_human(doc)])
    return EXIT_UNKNOWN


def cmd_es(args) -> int:
    budget = _budget(args)
    return _solve_cmd(args, lambda g: Solver(g, budget, not args.no_symmetry).exact_es())


def cmd_oracle(args) -> int:
    def run(g):
        try:
            return brute_force_es(g, max_vertices=args.max_vertices)
        except ValueError as exc:
            raise UsageError(f"--max-vertices: {exc}") from None
    return _solve_cmd(args, run)


def cmd_sweep(args) -> int:
    ks = parse_range(args.k, "--k")
    ls = parse_range(args.leaves, "--leaves")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    try:
        rows = harness.sweep(ks, ls, _budget(args), args.cache, args.jobs,
                             seed_constructions=not args.no_seed)
    except ValueError as exc:
        raise UsageError(f"--k/--leaves: {exc}") from None
    except OSError as exc:
        raise InputError(f"--cache {args.cache}: {exc.strerror or exc}") from None
    text = harness.report_json(rows) + "\n" if args.json else harness.report_csv(rows)
    _write_or_print(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclestar", description="Edge irregularity strength toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, out=False):
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        if out:
            sp.add_argument("--out", help="write the main output to this file")

    sp = sub.add_parser("gen", help="write the canonical cycle-star graph file")
    sp.add_argument("--k", type=int, required=True, help="cycle length")
    sp.add_argument("--leaves", type=int, required=True)
    sp.add_argument("--dot", action="store_true", help="emit Graphviz text instead")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen, json=False)

    sp = sub.add_parser("label", help="optimal labeling of CS(k, leaves), 3 <= k <= 7")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--leaves", type=int, required=True)
    common(sp, out=True)
    sp.set_defaults(func=cmd_label)

    sp = sub.add_parser("verify", help="check a labeling for distinct edge weights")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--labeling", required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("es", help="exact es by backtracking")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--timeout", type=float, help="seconds")
    sp.add_argument("--nodes", type=int, help="search node budget")
    sp.add_argument("--no-symmetry", action="store_true", help="disable twin ordering")
    common(sp)
    sp.set_defaults(func=cmd_es)

    sp = sub.add_parser("oracle", help="exact es by brute-force enumeration")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--max-vertices", type=int, default=9)
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="compare exact es with the formulas over a grid")
    sp.add_argument("--k", required=True, help="cycle lengths, A..B inclusive")
    sp.add_argument("--leaves", required=True, help="leaf counts, C..D inclusive")
    sp.add_argument("--cache", required=True, help="JSONL cache file")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timeout", type=float, help="seconds per instance")
    sp.add_argument("--nodes", type=int, help="node budget per instance")
    sp.add_argument("--no-seed", action="store_true",
                    help="search from the lower bound even when a construction exists")
    common(sp, out=True)
    sp.set_defaults(func=cmd_sweep)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already printed
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cyclestar {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"cyclestar {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
