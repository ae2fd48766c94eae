"""Command line interface: mine, condense, tile, verify.

The pipeline is two explicit steps (mine writes a pattern file, condense
filters and condenses it) so a pattern set mined once can be re-condensed
under different constraints without re-mining. Exit codes are a stable
contract: 0 success, 1 unsatisfiable or verification diff, 2 usage errors
and exceeded search bounds, 3 malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys

from .condense import DominanceRelation, brute_force_condense, condense
from .constraints import EMPTY_EXPR, parse_constraints, partition_valid
from .core import edge_itemize
from .errors import BoundExceededError, InputError
from .formats import (
    load_graphs,
    load_matrix,
    load_patterns,
    load_sequences,
    load_tiles,
    load_transactions,
    load_weights,
    record_to_output,
    output_to_line,
    write_patterns,
    write_tiling,
)
from .graphs import canonical_code, mine_frequent_graphs_general, mine_frequent_graphs_unique
from .itemsets import MinSupport, mine_frequent_itemsets
from .oracle import (
    frequent_graphs_general_bruteforce,
    frequent_graphs_unique_bruteforce,
    frequent_itemsets_bruteforce,
    frequent_sequences_bruteforce,
)
from .sequences import mine_frequent_sequences
from .tiling import exact_select, generate_candidates, greedy_select


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _constraints_from_arg(arg: str):
    # A path if one exists at that name, otherwise inline constraint text.
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_constraints(fh.read())
    return parse_constraints(arg)


def _emit_patterns(records, symbols, out_path, valid=None, condensed=None) -> None:
    if out_path:
        write_patterns(records, out_path, symbols, valid=valid, condensed=condensed)
    else:
        for rec in records:
            flags = (
                None if valid is None else valid.get(rec.pid),
                None if condensed is None else condensed.get(rec.pid),
            )
            print(output_to_line(record_to_output(rec, symbols, valid=flags[0], condensed=flags[1])))


def cmd_mine(args) -> int:
    if args.max_len is not None and args.type != "sequence":
        return _usage("--max-len applies to sequence mining only")
    if args.max_edges is not None and args.type != "graph":
        return _usage("--max-edges applies to general graph mining only")
    minsup = MinSupport.parse(args.minsup)
    if args.type == "itemset":
        db = load_transactions(args.input)
        records = mine_frequent_itemsets(db, minsup)
    elif args.type == "sequence":
        db = load_sequences(args.input)
        records = mine_frequent_sequences(db, minsup, args.max_len)
    elif args.type == "graph-unique":
        db = load_graphs(args.input)
        records = mine_frequent_graphs_unique(db, minsup)
    else:
        db = load_graphs(args.input)
        records = mine_frequent_graphs_general(db, minsup, args.max_edges)
    _emit_patterns(records, db.symbols, args.out)
    print(f"mined {len(records)} patterns (effective minimum support {minsup.effective(len(db))})")
    return 0


def cmd_condense(args) -> int:
    loaded = load_patterns(args.patterns)
    expr = _constraints_from_arg(args.constraints) if args.constraints else EMPTY_EXPR
    weights = load_weights(args.weights, loaded.symbols) if args.weights else None
    valid, _ = partition_valid(loaded.records, expr, weights, symbols=loaded.symbols)
    rel = DominanceRelation.parse(args.rep)
    kept = condense(valid, rel)
    flags_valid = {rec.pid: True for rec in kept}
    flags_condensed = {rec.pid: True for rec in kept}
    _emit_patterns(kept, loaded.symbols, args.out, valid=flags_valid, condensed=flags_condensed)
    print(f"kept {len(kept)} of {len(loaded.records)} patterns ({len(valid)} valid)")
    return 0


def cmd_tile(args) -> int:
    if args.threshold < 0:
        return _usage("--threshold must be nonnegative")
    matrix = load_matrix(args.matrix)
    if args.candidates:
        candidates = load_tiles(args.candidates, matrix)
    else:
        if args.tau is None:
            return _usage("--tau is required unless --candidates supplies tiles")
        candidates = generate_candidates(matrix, args.tau, args.max_candidates)

    if args.method == "greedy":
        sel = greedy_select(matrix, candidates, args.threshold, args.error_mode)
        status = "ok" if sel is not None else "failed"
        selections = (sel,) if sel is not None else ()
    else:
        result = exact_select(
            matrix, candidates, args.threshold, args.method, args.error_mode, args.bound
        )
        status = result.status
        selections = result.selections

    if args.out:
        write_tiling(
            args.out, matrix, candidates, args.method, args.error_mode, args.threshold, status, selections
        )
    print(
        f"candidates={len(candidates)} method={args.method} "
        f"error_mode={args.error_mode} threshold={args.threshold}"
    )
    if status != "ok":
        print(f"status={status}")
        return 1
    if args.method == "all":
        print(f"status=ok solutions={len(selections)}")
    else:
        sel = selections[0]
        ids = ",".join(str(tid) for tid in sel.tile_ids)
        print(f"status=ok k={len(sel.tile_ids)} error={sel.error} selection={ids}")
    return 0


def _diff_maps(mined: dict, oracle: dict, describe) -> list[str]:
    problems = []
    for key in sorted(oracle):
        if key not in mined:
            problems.append(f"missing: {describe(key)}")
    for key in sorted(mined):
        if key not in oracle:
            problems.append(f"extra: {describe(key)}")
        elif mined[key] != oracle[key]:
            problems.append(f"cover mismatch: {describe(key)} {sorted(mined[key])} != {sorted(oracle[key])}")
    return problems


def cmd_verify(args) -> int:
    if args.max_len is not None and args.type != "sequence":
        return _usage("--max-len applies to sequence verification only")
    if args.max_edges is not None and args.type != "graph":
        return _usage("--max-edges applies to general graph verification only")
    minsup = MinSupport.parse(args.minsup)
    rel = DominanceRelation.parse(args.rep)
    expr = _constraints_from_arg(args.constraints) if args.constraints else EMPTY_EXPR

    if args.type == "itemset":
        db = load_transactions(args.input)
        sigma = minsup.effective(len(db))
        records = mine_frequent_itemsets(db, minsup)
        mined = {rec.pattern.items: rec.cover for rec in records}
        oracle = frequent_itemsets_bruteforce(db, sigma)
    elif args.type == "sequence":
        db = load_sequences(args.input)
        sigma = minsup.effective(len(db))
        records = mine_frequent_sequences(db, minsup, args.max_len)
        mined = {rec.pattern.symbols: rec.cover for rec in records}
        oracle = frequent_sequences_bruteforce(db, sigma, args.max_len)
    elif args.type == "graph-unique":
        db = load_graphs(args.input)
        sigma = minsup.effective(len(db))
        records = mine_frequent_graphs_unique(db, minsup)
        mined = {
            (edge_itemize(rec.pattern) if rec.pattern.edges else ()): rec.cover for rec in records
        }
        oracle = frequent_graphs_unique_bruteforce(db, sigma)
    else:
        db = load_graphs(args.input)
        sigma = minsup.effective(len(db))
        records = mine_frequent_graphs_general(db, minsup, args.max_edges)
        mined = {canonical_code(rec.pattern): rec.cover for rec in records}
        oracle = {
            canonical_code(rep): cover
            for rep, cover in frequent_graphs_general_bruteforce(db, sigma, args.max_edges)
        }

    labels = db.symbols
    problems = _diff_maps(mined, oracle, describe=repr)
    weights = load_weights(args.weights, labels) if args.weights else None
    valid, _ = partition_valid(records, expr, weights, symbols=labels)
    fast = [rec.pid for rec in condense(valid, rel)]
    slow = [rec.pid for rec in brute_force_condense(valid, rel)]
    if fast != slow:
        problems.append(f"condense mismatch: {fast} != {slow}")

    if problems:
        print(f"verify {args.type} {rel.value}: {len(problems)} problem(s)")
        for line in problems[:20]:
            print(f"  {line}")
        return 1
    print(
        f"verify {args.type} {rel.value}: ok "
        f"({len(mined)} patterns, {len(valid)} valid, {len(fast)} condensed)"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siftmine",
        description="Mine frequent patterns, condense them under constraints, and tile binary matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker hint; output is identical for any value")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", parents=[common], help="mine frequent patterns into a pattern file")
    p_mine.add_argument("--type", required=True, choices=["itemset", "sequence", "graph-unique", "graph"])
    p_mine.add_argument("--input", required=True)
    p_mine.add_argument("--minsup", required=True, help="integer = absolute count, decimal in (0,1] = relative")
    p_mine.add_argument("--max-len", type=int, default=None, help="longest sequence pattern")
    p_mine.add_argument("--max-edges", type=int, default=None, help="largest general graph pattern")
    p_mine.add_argument("--out", default=None)
    p_mine.set_defaults(handler=cmd_mine)

    p_cond = sub.add_parser("condense", parents=[common], help="filter a pattern file and condense it")
    p_cond.add_argument("--patterns", required=True)
    p_cond.add_argument("--rep", required=True, choices=["maximal", "closed", "free", "skyline"])
    p_cond.add_argument("--constraints", default=None, help="constraint file path or inline text")
    p_cond.add_argument("--weights", default=None)
    p_cond.add_argument("--out", default=None)
    p_cond.set_defaults(handler=cmd_condense)

    p_tile = sub.add_parser("tile", parents=[common], help="cover a binary matrix with tiles under an error budget")
    p_tile.add_argument("--matrix", required=True)
    p_tile.add_argument("--threshold", type=int, required=True, help="error budget")
    p_tile.add_argument("--tau", type=float, default=None, help="confidence threshold for candidate generation")
    p_tile.add_argument("--max-candidates", type=int, default=None)
    p_tile.add_argument("--candidates", default=None, help="tile file overriding candidate generation")
    p_tile.add_argument("--method", default="greedy", choices=["greedy", "first", "all", "optimal"])
    p_tile.add_argument("--error-mode", default="coverable", choices=["full", "coverable"])
    p_tile.add_argument("--bound", type=int, default=20, help="exact-search candidate limit")
    p_tile.add_argument("--out", default=None)
    p_tile.set_defaults(handler=cmd_tile)

    p_ver = sub.add_parser("verify", parents=[common], help="check miners and condensation against brute force")
    p_ver.add_argument("--type", required=True, choices=["itemset", "sequence", "graph-unique", "graph"])
    p_ver.add_argument("--input", required=True)
    p_ver.add_argument("--minsup", required=True)
    p_ver.add_argument("--rep", required=True, choices=["maximal", "closed", "free", "skyline"])
    p_ver.add_argument("--constraints", default=None)
    p_ver.add_argument("--weights", default=None)
    p_ver.add_argument("--max-len", type=int, default=None)
    p_ver.add_argument("--max-edges", type=int, default=None)
    p_ver.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        return _usage("--threads must be at least 1")
    try:
        return args.handler(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
