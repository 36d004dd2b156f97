"""Batch command-line surface over JSONL streams.

Commands read trees (or codes) one JSON object per line from a path or
stdin and write one JSON object per line to stdout.  Exit codes: 0
success, 2 input error, 3 incomplete poset under --strict-poset, 4 empty
query result.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import IO, Iterator

from . import corpus as corpus_mod
from . import oracle
from .canonical import full_ld_array
from .codec import Vcpc, decode, encode_canonical
from .errors import (
    CandidateExplosion,
    ColoredPruferError,
    InvalidCode,
    NoEligibleClass,
)
from .matching import DEFAULT_CANDIDATE_CAP, subtree_search, undirected_subtree
from .trees import (
    ColoredArborescence,
    iter_corpus,
    load_color_table,
    tree_to_json,
    write_corpus,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3
EXIT_EMPTY = 4


def _open_in(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdin
    return open(path, "r", encoding="utf-8")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")))
    sys.stdout.write("\n")


def _read_trees(args) -> Iterator[ColoredArborescence]:
    table = None
    if getattr(args, "color_table", None):
        with open(args.color_table, "r", encoding="utf-8") as fp:
            table = load_color_table(fp)
    stream = _open_in(args.input)
    try:
        yield from iter_corpus(stream, table)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _read_codes(args) -> Iterator[Vcpc]:
    stream = _open_in(args.input)
    try:
        for line_no, raw in enumerate(stream, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InvalidCode(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            code = Vcpc.from_json(obj)
            yield code
    finally:
        if stream is not sys.stdin:
            stream.close()


def _read_single_tree(path: str) -> ColoredArborescence:
    with open(path, "r", encoding="utf-8") as fp:
        trees = list(iter_corpus(fp))
    if len(trees) != 1:
        raise InvalidCode(f"{path}: expected exactly one tree, found {len(trees)}")
    return trees[0]


# --- commands ------------------------------------------------------------


def cmd_canon(args) -> int:
    for tree in _read_trees(args):
        _emit([list(inner) for inner in full_ld_array(tree)])
    return EXIT_OK


def cmd_encode(args) -> int:
    for tree in _read_trees(args):
        code, _ = encode_canonical(tree)
        _emit(code.to_json())
    return EXIT_OK


def cmd_decode(args) -> int:
    for position, code in enumerate(_read_codes(args)):
        tree = decode(code, strict=args.strict)
        obj = tree_to_json(tree)
        obj["id"] = f"t{position}"
        _emit(obj)
    return EXIT_OK


def cmd_iso_classes(args) -> int:
    classes = corpus_mod.partition_by_isomorphism(list(_read_trees(args)))
    for cls in classes:
        _emit(
            {
                "class_id": cls.class_id,
                "code": cls.representative.to_json(),
                "members": list(cls.member_ids),
                "size": cls.size,
            }
        )
    return EXIT_OK


def cmd_poset(args) -> int:
    classes = corpus_mod.partition_by_isomorphism(list(_read_trees(args)))
    poset = corpus_mod.subtree_poset(
        classes, candidate_cap=args.cap, workers=args.workers
    )
    for (a, b), witness in sorted(poset.below.items()):
        _emit({"below": a, "above": b, "witness": list(witness)})
    _emit({"unknown_pairs": [list(pair) for pair in sorted(poset.unknown)]})
    if args.strict_poset and poset.unknown:
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_most_common(args) -> int:
    classes = corpus_mod.partition_by_isomorphism(list(_read_trees(args)))
    poset = corpus_mod.subtree_poset(classes, candidate_cap=args.cap)
    try:
        best, count = corpus_mod.most_representative(classes, poset, args.max_order)
    except NoEligibleClass as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    _emit(
        {
            "class_id": best.class_id,
            "code": best.representative.to_json(),
            "size": best.size,
            "count": count,
        }
    )
    return EXIT_OK


def cmd_gen(args) -> int:
    params = oracle.GenParams(m=args.m, N=args.n, C=args.c, seed=args.seed)
    write_corpus(oracle.random_corpus(params), sys.stdout)
    return EXIT_OK


def cmd_subtree(args) -> int:
    small = _read_single_tree(args.query)
    large = _read_single_tree(args.host)
    code_small, _ = encode_canonical(small)
    code_large, _ = encode_canonical(large)
    try:
        result = subtree_search(code_small, code_large, candidate_cap=args.cap)
    except CandidateExplosion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(
        {
            "is_subtree": result.witness is not None,
            "witness": list(result.witness) if result.witness else None,
            "candidates_examined": result.candidates_examined,
        }
    )
    return EXIT_OK


def cmd_subtree_undirected(args) -> int:
    small = _read_single_tree(args.query)
    large = _read_single_tree(args.host)
    verdict = undirected_subtree(small, large, candidate_cap=args.cap)
    _emit({"is_subtree": verdict})
    return EXIT_OK


def cmd_bench(args) -> int:
    params = oracle.GenParams(m=args.m, N=args.n, C=args.c, seed=args.seed)
    trees = oracle.random_corpus(params)
    report = {"params": {"m": args.m, "N": args.n, "C": args.c, "seed": args.seed}}

    t0 = time.perf_counter()
    classes = corpus_mod.partition_by_isomorphism(trees)
    t1 = time.perf_counter()
    poset = corpus_mod.subtree_poset(classes, candidate_cap=args.cap)
    t2 = time.perf_counter()
    code_relation = poset.relation()

    t3 = time.perf_counter()
    keys = [oracle.brute_canonical(tree) for tree in trees]
    seen: dict = {}
    oracle_classes: list[list[int]] = []
    for position, key in enumerate(keys):
        if key not in seen:
            seen[key] = len(oracle_classes)
            oracle_classes.append([])
        oracle_classes[seen[key]].append(position)
    t4 = time.perf_counter()

    rep_tree = {cls.class_id: decode(cls.representative) for cls in classes}
    sizes = {cls.class_id: cls.representative.n for cls in classes}
    ids = sorted(rep_tree)
    up = {a: {a} for a in ids}
    down = {a: {a} for a in ids}
    pairs_checked = 0
    pairs_skipped = 0
    candidates = sorted(
        ((sizes[b] - sizes[a], a, b) for a in ids for b in ids
         if a != b and sizes[a] < sizes[b])
    )
    for _, a, b in candidates:
        if b in up[a]:
            pairs_skipped += 1
            continue
        pairs_checked += 1
        if oracle.has_embedding(rep_tree[a], rep_tree[b], ordered=True):
            for x in list(down[a]):
                for y in list(up[b]):
                    up[x].add(y)
                    down[y].add(x)
    oracle_relation = {(a, b) for a in ids for b in up[a]}
    t5 = time.perf_counter()

    vcpc_members = sorted(sorted(cls.member_ids) for cls in classes)
    oracle_members = sorted(
        sorted(trees[i].tree_id or str(i) for i in group) for group in oracle_classes
    )

    report["vcpc"] = {
        "partition_s": round(t1 - t0, 4),
        "poset_s": round(t2 - t1, 4),
        "relation_size": len(code_relation),
        "unknown_pairs": len(poset.unknown),
    }
    report["oracle"] = {
        "partition_s": round(t4 - t3, 4),
        "poset_s": round(t5 - t4, 4),
        "relation_size": len(oracle_relation),
        "pairs_checked": pairs_checked,
        "pairs_skipped": pairs_skipped,
    }
    report["class_count"] = len(classes)
    report["partitions_equal"] = vcpc_members == oracle_members
    report["posets_equal"] = code_relation == oracle_relation
    _emit(report)
    return EXIT_OK


# --- argument parsing ------------------------------------------------------


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", default="-", help="JSONL path, or - for stdin"
    )
    parser.add_argument(
        "--color-table",
        help="JSON file mapping color names to integers, for named colors",
    )


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colored-prufer",
        description="Canonical codes for vertex-colored arborescences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="full canonical descriptor per tree")
    _add_input(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("encode", help="canonical code per tree")
    _add_input(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="tree per code")
    _add_input(p)
    p.add_argument("--strict", action="store_true", help="re-encode and verify")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("iso-classes", help="isomorphism classes of a corpus")
    _add_input(p)
    p.set_defaults(func=cmd_iso_classes)

    p = sub.add_parser("poset", help="subtree partial order between classes")
    _add_input(p)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CANDIDATE_CAP)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--strict-poset", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("most-common", help="structure contained in most trees")
    _add_input(p)
    p.add_argument("--max-order", type=_positive, default=20)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CANDIDATE_CAP)
    p.set_defaults(func=cmd_most_common)

    p = sub.add_parser("gen", help="seeded random corpus")
    p.add_argument("--m", type=_positive, required=True, help="max vertex count")
    p.add_argument("--n", type=_positive, required=True, help="number of trees")
    p.add_argument("--c", type=_positive, required=True, help="color count")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("subtree", help="is tree A a sub-arborescence of tree B")
    p.add_argument("query")
    p.add_argument("host")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CANDIDATE_CAP)
    p.set_defaults(func=cmd_subtree)

    p = sub.add_parser(
        "subtree-undirected", help="is tree A an undirected subtree of tree B"
    )
    p.add_argument("query")
    p.add_argument("host")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CANDIDATE_CAP)
    p.set_defaults(func=cmd_subtree_undirected)

    p = sub.add_parser("bench", help="compare code path against oracle path")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--c", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CANDIDATE_CAP)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ColoredPruferError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
