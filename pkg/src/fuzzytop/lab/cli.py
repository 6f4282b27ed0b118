"""Command-line front end.

Exit codes: 0 success, 1 a violation or counterexample was found where none
was expected (or a mining search came back empty), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from ..classifier import classify
from ..lattice import CapExceeded, Grid
from ..theorems import COUNTEREXAMPLE, THEOREM_IDS, check_theorem
from .corpus import CORPUS_NAMES, corpus, corpus_claims, corpus_space, corpus_text
from .diagram import load_catalogue, to_dot, verify_spaces, with_witness
from .enumeration import enumerate_topologies, small_carrier
from .miner import MinerConfig, claim_ids, describe_claim, mine
from .spacefile import SpaceDocument, SpaceFileError, load_space

STRUCTURAL_THEOREMS = ("2.3", "2.7", "2.10", "2.12")


class UsageError(Exception):
    pass


def _load(arg: str) -> SpaceDocument:
    """A path to an .fts file, or the name of a corpus space (``ex2_5`` or ``ex2_5.fts``)."""
    if os.path.exists(arg):
        return load_space(arg)
    stem = Path(arg).stem
    if stem in CORPUS_NAMES:
        return corpus_space(stem)
    raise UsageError(f"no such space file: {arg}")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(args) -> int:
    doc = _load(args.space)
    try:
        a = doc.set(args.set)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    _emit(classify(doc.topology, a, args.set).to_json())
    return 0


def cmd_report(args) -> int:
    doc = _load(args.space)
    _emit([classify(doc.topology, a, n).to_json() for n, a in doc.named_sets().items()])
    return 0


def _small_spaces(max_points: int):
    for n in range(1, max_points + 1):
        yield from enumerate_topologies(small_carrier(n), Grid.crisp())


def cmd_verify_diagram(args) -> int:
    if args.all_small:
        spaces = list(_small_spaces(args.max_points))
    elif args.space:
        spaces = [_load(args.space).topology]
    else:
        spaces = [d.topology for d in corpus()]
    summary = verify_spaces(spaces)
    print(summary.line())
    bad = []
    for tau in spaces:
        for tid in STRUCTURAL_THEOREMS:
            v = check_theorem(tau, tid)
            if v.status == COUNTEREXAMPLE:
                bad.append({"space": tau.describe(), **v.to_json()})
    print(f"{len(bad)} counterexamples to theorems {', '.join(STRUCTURAL_THEOREMS)} "
          f"/ {len(spaces)} spaces")
    for v in summary.violations[:20]:
        print(json.dumps(v.to_json()))
    for b in bad[:20]:
        print(json.dumps(b))
    return 1 if summary.violations or bad else 0


def cmd_mine(args) -> int:
    if args.list:
        for cid in claim_ids():
            print(f"{cid}\t{describe_claim(cid)}")
        return 0
    if not args.id:
        raise UsageError("mine needs a claim id (see `mine --list`)")
    if args.id not in claim_ids():
        try:
            from .miner import _resolve
            _resolve(args.id)
        except KeyError:
            raise UsageError(f"unknown claim {args.id!r}; see `mine --list`") from None
    spaces = None
    if args.space:
        doc = _load(args.space)
        spaces = [(doc.name, doc.topology)]
    res = mine(args.id, budget=args.budget, spaces=spaces, workers=args.workers)
    _emit(res.to_json())
    return 0 if res.found else 1


def cmd_check(args) -> int:
    doc = _load(args.space)
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    for tid in ids:
        if tid not in THEOREM_IDS:
            raise UsageError(f"unknown theorem {tid!r}; expected one of {', '.join(THEOREM_IDS)}")
    u = None
    if args.set:
        try:
            u = doc.set(args.set)
        except KeyError as e:
            raise UsageError(e.args[0]) from None
    verdicts = [check_theorem(doc.topology, tid, u, family_size=args.family_size)
                for tid in ids]
    out = [v.to_json() for v in verdicts]
    _emit(out[0] if len(out) == 1 else out)
    return 1 if any(v.status == COUNTEREXAMPLE for v in verdicts) else 0


def cmd_corpus(args) -> int:
    if args.action == "audit":
        bad = 0
        for c in corpus_claims():
            got = c.evaluate()
            bad += got != c.expected
            mark = "ok" if got == c.expected else "DIFFERS"
            print(f"{c.source:8} {c.space:6} {c.set:2} {c.key:14} stated={str(c.expected):5} "
                  f"computed={str(got):5} {mark}")
        print(f"{bad} of {len(corpus_claims())} stated memberships differ from the computed verdicts")
        return 1 if bad else 0
    if args.action == "list":
        for name in CORPUS_NAMES:
            print(name)
        return 0
    if not args.dir:
        raise UsageError("corpus export needs a target directory")
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in CORPUS_NAMES:
        (out / f"{name}.fts").write_text(corpus_text(name), encoding="utf-8")
        print(out / f"{name}.fts")
    return 0


def cmd_graph(args) -> int:
    if not args.dot:
        raise UsageError("graph currently supports only --dot output")
    edges = []
    for e in load_catalogue():
        if e.status != "theorem":
            res = mine(e.claim_id, budget=args.budget)
            e = with_witness(e, res.short())
        edges.append(e)
    sys.stdout.write(to_dot(edges))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fuzzytop",
                                description="Closed-set classes and compactness on finite fuzzy topologies.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="JSON class report for one named set")
    c.add_argument("space")
    c.add_argument("set")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("report", help="class reports for every named set")
    r.add_argument("space")
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("verify-diagram", help="check every implication edge")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--all-small", action="store_true",
                   help="all crisp topologies on up to --max-points points")
    g.add_argument("--space")
    v.add_argument("--max-points", type=int, default=3)
    v.set_defaults(func=cmd_verify_diagram)

    m = sub.add_parser("mine", help="search for a witness of a non-implication")
    m.add_argument("id", nargs="?")
    m.add_argument("--budget", type=int, default=MinerConfig.budget)
    m.add_argument("--space")
    m.add_argument("--workers", type=int, default=1)
    m.add_argument("--list", action="store_true")
    m.set_defaults(func=cmd_mine)

    k = sub.add_parser("check", help="evaluate a theorem on a space")
    k.add_argument("space")
    k.add_argument("--theorem", required=True, help="theorem id or 'all'")
    k.add_argument("--set")
    k.add_argument("--family-size", type=int, default=4)
    k.set_defaults(func=cmd_check)

    co = sub.add_parser("corpus", help="list, export or audit the example spaces")
    co.add_argument("action", choices=["export", "list", "audit"])
    co.add_argument("dir", nargs="?")
    co.set_defaults(func=cmd_corpus)

    gr = sub.add_parser("graph", help="render the implication catalogue")
    gr.add_argument("--dot", action="store_true")
    gr.add_argument("--budget", type=int, default=100)
    gr.set_defaults(func=cmd_graph)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, SpaceFileError, CapExceeded) as e:
        code = getattr(e, "code", "usage")
        print(f"fuzzytop: {code}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
