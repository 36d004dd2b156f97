"""Code-level predicates: isomorphism, adjacency, and subtree matching.

Two colored arborescences are isomorphic exactly when their codes are
identical arrays.  One is isomorphic to a sub-arborescence of the other
exactly when some ascending index set into the larger code matches the
smaller code's colors, preserves the shape of the selected parent
entries, and passes the incident-edge check for every parent-child pair
of the smaller tree.

Adjacency inside a code: the parent of the vertex pruned at step ``a``
is the vertex pruned at the first later step ``b`` whose own parent
entry drops below ``parents[a]`` (the terminal sentinel counting as
smaller than every label).  The incident-edge check for a pair (a, b)
mapped to positions (i_a, i_b) therefore demands both that descent,
``parents[i_b] < parents[i_a]``, and that no position strictly between
them drops below ``parents[i_a]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .codec import Vcpc, encode_canonical
from .errors import CandidateExplosion, IndexOutOfRange, SentinelCompared
from .trees import ColoredArborescence, VertexId, build_tree, subtree_vertices

DEFAULT_CANDIDATE_CAP = 10**6


def codes_isomorphic(p: Vcpc, q: Vcpc) -> bool:
    """True iff the two codes are identical arrays."""
    return p.n == q.n and p.parents == q.parents and p.colors == q.colors


def shape(xs: Sequence[int]) -> tuple[int, ...]:
    """Image of a sequence under the unique order-preserving bijection.

    Each element is replaced by its index among the sorted distinct
    values, so ``(0, 2, 2, 0) -> (0, 1, 1, 0)``.
    """
    rank = {v: k for k, v in enumerate(sorted(set(xs)))}
    return tuple(rank[x] for x in xs)


def branch_partition(
    tree: ColoredArborescence, apex: VertexId
) -> list[set[VertexId]]:
    """Partition of the apex's proper descendants into one block per child."""
    return [subtree_vertices(tree, child) for child in tree.children[apex]]


def code_adjacent(p: Vcpc, i: int, j: int) -> bool:
    """Whether the vertex pruned at step j is the parent of the one at step i.

    Both positions must be non-sentinel: ``i < j < n-1``.
    """
    if j == p.n - 1:
        raise SentinelCompared("position n-1 holds the sentinel, not a parent label")
    if not 0 <= i < j < p.n - 1:
        raise IndexOutOfRange(f"need 0 <= i < j < n-1, got i={i}, j={j}, n={p.n}")
    pi = p.parents[i]
    pj = p.parents[j]
    if pj >= pi:
        return False
    return all(p.parents[k] >= pi for k in range(i + 1, j))


def adjacent_pairs(parents: Sequence[int | None]) -> list[tuple[int, int]]:
    """All (child step, parent step) pairs encoded in a parents row.

    One pair per edge: each position's parent is pruned at its next
    smaller entry, with the terminal sentinel acting as minus infinity.
    Computed by one left-to-right monotonic-stack scan.
    """
    pairs: list[tuple[int, int]] = []
    stack: list[int] = []
    for j, value in enumerate(parents):
        key = -1 if value is None else value
        while stack and parents[stack[-1]] > key:
            pairs.append((stack.pop(), j))
        stack.append(j)
    pairs.sort()
    return pairs


def color_matching_index_sets(p: Vcpc, q: Vcpc) -> Iterator[tuple[int, ...]]:
    """Ascending index sets where p's colors match q's, lexicographically.

    Streams every ascending ``(i_0 .. i_{n'-1})`` with
    ``p.colors[i_j] == q.colors[j]`` for all j, including the terminal
    column (the embedded root's color).
    """
    n, nq = p.n, q.n
    if nq > n:
        return
    positions: dict[int, list[int]] = {}
    for i, c in enumerate(p.colors):
        positions.setdefault(c, []).append(i)

    needed = q.colors
    choice = [0] * nq

    def advance(j: int, start: int) -> Iterator[tuple[int, ...]]:
        limit = n - (nq - j)
        for i in positions.get(needed[j], ()):
            if i < start:
                continue
            if i > limit:
                break
            choice[j] = i
            if j == nq - 1:
                yield tuple(choice)
            else:
                yield from advance(j + 1, i + 1)

    yield from advance(0, 0)


def _incident_ok(
    p_parents: Sequence[int | None],
    q_pairs: Sequence[tuple[int, int]],
    idx: Sequence[int],
) -> bool:
    for a, b in q_pairs:
        ia, ib = idx[a], idx[b]
        pa = p_parents[ia]
        pb = p_parents[ib]
        if pb is not None and pb >= pa:
            return False
        for k in range(ia + 1, ib):
            if p_parents[k] < pa:
                return False
    return True


def incident_edge_ok(
    p_row: Sequence[int | None],
    q_row: Sequence[int | None],
    idx: Sequence[int],
) -> bool:
    """Check the incident-edge property of an index set.

    For every adjacent pair (a, b) of the smaller code's parents row,
    the selected positions (idx[a], idx[b]) must themselves satisfy the
    adjacency criterion in the larger row: a strict descent at idx[b]
    and no intervening entry below ``p_row[idx[a]]``.
    """
    return _incident_ok(p_row, adjacent_pairs(q_row), idx)


@dataclass(frozen=True)
class SubtreeResult:
    witness: tuple[int, ...] | None
    candidates_examined: int


def subtree_search(
    pq: Vcpc, p: Vcpc, candidate_cap: int = DEFAULT_CANDIDATE_CAP
) -> SubtreeResult:
    """Find the first witness embedding pq's tree into p's, with statistics.

    Candidates stream in lexicographic order and are filtered in stages:
    color match, parent-shape match, incident-edge check.  Raises
    :class:`CandidateExplosion` when more than ``candidate_cap`` color
    candidates get examined.
    """
    if pq.n > p.n:
        return SubtreeResult(None, 0)
    if Counter(pq.colors) - Counter(p.colors):
        return SubtreeResult(None, 0)

    target_shape = shape([x for x in pq.parents[:-1] if x is not None])
    pairs = adjacent_pairs(pq.parents)
    examined = 0
    for idx in color_matching_index_sets(p, pq):
        examined += 1
        if examined > candidate_cap:
            raise CandidateExplosion(candidate_cap)
        selected = [p.parents[i] for i in idx[:-1]]
        if shape(selected) != target_shape:  # type: ignore[arg-type]
            continue
        if _incident_ok(p.parents, pairs, idx):
            return SubtreeResult(tuple(idx), examined)
    return SubtreeResult(None, examined)


def is_subarborescence(
    pq: Vcpc, p: Vcpc, candidate_cap: int = DEFAULT_CANDIDATE_CAP
) -> tuple[int, ...] | None:
    """Witness index set embedding pq's tree into p's tree, or ``None``.

    The witness is the lexicographically first index set satisfying all
    three conditions; its positions ``idx[0..n'-2]`` name the prune steps
    of p whose edges form the matched sub-arborescence.
    """
    return subtree_search(pq, p, candidate_cap).witness


# --- undirected extension -------------------------------------------------


def _reroot(tree: ColoredArborescence, new_root: int) -> ColoredArborescence:
    adjacency = tree.undirected_adjacency()
    seen = {new_root}
    stack = [new_root]
    edges: list[tuple[int, int]] = []
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                edges.append((u, v))
                stack.append(v)
    colors = {v: tree.colors[v] for v in range(tree.n)}
    return build_tree(edges, colors) if edges else build_tree([], colors)


@lru_cache(maxsize=512)
def leaf_rooted_codes(tree: ColoredArborescence) -> tuple[Vcpc, ...]:
    """Canonical codes of the tree re-rooted at each undirected leaf."""
    adjacency = tree.undirected_adjacency()
    leaf_ids = [v for v in range(tree.n) if len(adjacency[v]) <= 1]
    return tuple(encode_canonical(_reroot(tree, v))[0] for v in leaf_ids)


def undirected_subtree(
    t1: ColoredArborescence,
    t2: ColoredArborescence,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
) -> bool:
    """Whether t1's underlying colored tree embeds in t2's.

    Fixes one leaf-rooting of t1, then tries every leaf-rooting of t2;
    some rooting pair witnesses the embedding exactly when the undirected
    embedding exists.
    """
    if t1.n > t2.n:
        return False
    adjacency = t1.undirected_adjacency()
    fixed_leaf = next(v for v in range(t1.n) if len(adjacency[v]) <= 1)
    code1, _ = encode_canonical(_reroot(t1, fixed_leaf))
    for code2 in leaf_rooted_codes(t2):
        if is_subarborescence(code1, code2, candidate_cap) is not None:
            return True
    return False
