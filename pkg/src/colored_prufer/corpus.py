"""Corpus analytics: isomorphism classes, subtree poset, common structure.

The poset is stored transitively closed, with a witness index set per
relation pair (composed along the chain for pairs that were skipped via
transitivity).  Pairs whose verdict hit the candidate cap are kept aside
as "unknown" and never enter the closure.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .codec import Vcpc, encode_canonical
from .errors import CandidateExplosion, NoEligibleClass
from .matching import DEFAULT_CANDIDATE_CAP, subtree_search
from .trees import ColoredArborescence


@dataclass(frozen=True)
class IsoClass:
    """One isomorphism class of a corpus: identical codes, pooled members."""

    class_id: int
    representative: Vcpc
    member_ids: tuple[str, ...]
    size: int


@dataclass
class CorpusPoset:
    """Sub-arborescence order between class representatives.

    ``below[(a, b)]`` holds a witness index set embedding a's
    representative into b's; the relation is reflexive and transitively
    closed.  ``unknown`` lists pairs aborted by the candidate cap.
    """

    classes: list[IsoClass]
    below: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    unknown: list[tuple[int, int]] = field(default_factory=list)

    def relation(self) -> set[tuple[int, int]]:
        return set(self.below)


def partition_by_isomorphism(corpus: Sequence[ColoredArborescence]) -> list[IsoClass]:
    """Group a corpus by exact code equality, ids in first-appearance order."""
    groups: dict[Vcpc, list[str]] = {}
    order: list[Vcpc] = []
    for position, tree in enumerate(corpus):
        code, _ = encode_canonical(tree)
        member = tree.tree_id if tree.tree_id is not None else str(position)
        if code not in groups:
            groups[code] = []
            order.append(code)
        groups[code].append(member)
    return [
        IsoClass(
            class_id=k,
            representative=code,
            member_ids=tuple(groups[code]),
            size=len(groups[code]),
        )
        for k, code in enumerate(order)
    ]


def _compose(first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """Chain witnesses: embed A in B then B in C gives A in C."""
    return tuple(second[i] for i in first)


class _Closure:
    """Transitively closed relation with a witness per stored pair."""

    def __init__(self, ids: Iterable[int]):
        members = list(ids)
        self.up: dict[int, set[int]] = {i: {i} for i in members}
        self.down: dict[int, set[int]] = {i: {i} for i in members}
        self.witness: dict[tuple[int, int], tuple[int, ...]] = {}

    def seed_reflexive(self, class_id: int, n: int) -> None:
        self.witness[(class_id, class_id)] = tuple(range(n))

    def has(self, a: int, b: int) -> bool:
        return b in self.up[a]

    def add(self, a: int, b: int, witness: tuple[int, ...]) -> None:
        if self.has(a, b):
            return
        pairs = [
            (x, y)
            for x in self.down[a]
            for y in self.up[b]
            if y not in self.up[x]
        ]
        for x, y in pairs:
            w = witness
            if x != a:
                w = _compose(self.witness[(x, a)], w)
            if y != b:
                w = _compose(w, self.witness[(b, y)])
            self.up[x].add(y)
            self.down[y].add(x)
            self.witness[(x, y)] = w


def _pair_verdict(args):
    a, b, rep_a, rep_b, cap = args
    try:
        result = subtree_search(rep_a, rep_b, candidate_cap=cap)
    except CandidateExplosion:
        return a, b, None, True
    return a, b, result.witness, False


def subtree_poset(
    classes: Sequence[IsoClass],
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    workers: int = 1,
) -> CorpusPoset:
    """Compute the full below-relation between class representatives.

    Pairs are scheduled by ascending vertex-count gap so that both legs
    of any transitive chain are committed before the pair they imply;
    implied pairs are skipped and receive composed witnesses.  The
    resulting relation is independent of scheduling and worker count.
    """
    poset = CorpusPoset(classes=list(classes))
    closure = _Closure(cls.class_id for cls in classes)
    for cls in classes:
        closure.seed_reflexive(cls.class_id, cls.representative.n)

    reps = {cls.class_id: cls.representative for cls in classes}
    candidates = [
        (b_cls.representative.n - a_cls.representative.n, a_cls.class_id, b_cls.class_id)
        for a_cls in classes
        for b_cls in classes
        if a_cls.class_id != b_cls.class_id
        and a_cls.representative.n < b_cls.representative.n
    ]
    candidates.sort()

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        start = 0
        while start < len(candidates):
            gap = candidates[start][0]
            stop = start
            while stop < len(candidates) and candidates[stop][0] == gap:
                stop += 1
            wave = [
                (a, b)
                for _, a, b in candidates[start:stop]
                if not closure.has(a, b)
            ]
            jobs = [(a, b, reps[a], reps[b], candidate_cap) for a, b in wave]
            if pool is not None:
                outcomes = list(pool.map(_pair_verdict, jobs, chunksize=64))
            else:
                outcomes = [_pair_verdict(job) for job in jobs]
            for a, b, witness, exploded in outcomes:
                if exploded:
                    poset.unknown.append((a, b))
                elif witness is not None:
                    closure.add(a, b, witness)
            start = stop
    finally:
        if pool is not None:
            pool.shutdown()

    poset.below = dict(closure.witness)
    return poset


def most_representative(
    classes: Sequence[IsoClass], poset: CorpusPoset, max_order: int
) -> tuple[IsoClass, int]:
    """Class with at most ``max_order`` vertices contained in most trees.

    The count for class A sums the sizes of every class above A in the
    poset, A itself included.  Ties favor the smaller class id.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    size_of = {cls.class_id: cls.size for cls in classes}
    eligible = [cls for cls in classes if cls.representative.n <= max_order]
    if not eligible:
        raise NoEligibleClass(
            f"no class representative has at most {max_order} vertices"
        )

    counts: dict[int, int] = {cls.class_id: 0 for cls in classes}
    for a, b in poset.below:
        counts[a] += size_of[b]

    best = eligible[0]
    for cls in eligible[1:]:
        if counts[cls.class_id] > counts[best.class_id]:
            best = cls
    return best, counts[best.class_id]
