"""Canonical descriptors and the canonical vertex order.

The descriptor of a subtree rooted at ``v`` is an array of color arrays:
a leaf is ``((),)``, and an inner vertex contributes the ascending color
sequence of its sorted children followed by the concatenated descriptors
of those children.  Arrays compare lexicographically with the
shorter-strict-prefix rule, which is exactly Python's tuple ordering, so
descriptors are stored as nested tuples and compared natively.

The canonical order is the depth-first traversal that visits children in
ascending (color, descriptor) order; remaining ties are broken by stored
child order, which is safe because fully tied siblings head isomorphic
subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyCandidateList, MalformedDescriptor
from .trees import Color, ColoredArborescence, VertexId

LdArray = tuple[tuple[Color, ...], ...]


@dataclass(frozen=True)
class CanonicalOrder:
    """Bijection between vertices and ranks ``0..n-1``.

    ``phi[v]`` is the rank of vertex ``v``; ``inverse[r]`` the vertex at
    rank ``r``.  The root has rank 0 and ranks increase along every
    root-to-leaf path.
    """

    phi: tuple[int, ...]
    inverse: tuple[VertexId, ...]


def min_vertex(
    candidates: Sequence[VertexId],
    colors: Mapping[VertexId, Color] | Sequence[Color],
    ld_cache: Mapping[VertexId, LdArray],
) -> VertexId:
    """Candidate minimizing (color, descriptor); first wins on full ties."""
    if not candidates:
        raise EmptyCandidateList("min_vertex needs at least one candidate")
    best = candidates[0]
    for v in candidates[1:]:
        if colors[v] < colors[best]:
            best = v
        elif colors[v] == colors[best] and ld_cache[v] < ld_cache[best]:
            best = v
    return best


def sort_siblings(
    candidates: Sequence[VertexId],
    colors: Mapping[VertexId, Color] | Sequence[Color],
    ld_cache: Mapping[VertexId, LdArray],
) -> list[VertexId]:
    """Ascending (color, descriptor) order; stable for full ties."""
    return sorted(candidates, key=lambda v: (colors[v], ld_cache[v]))


def _ld_state(tree: ColoredArborescence):
    """Descriptor cache plus sorted-children table, by reverse BFS."""
    cache: dict[VertexId, LdArray] = {}
    sorted_children: dict[VertexId, list[VertexId]] = {}
    for v in reversed(tree.bfs_order()):
        kids = tree.children[v]
        if not kids:
            cache[v] = ((),)
            sorted_children[v] = []
            continue
        ordered = sort_siblings(kids, tree.colors, cache)
        arrays: list[tuple[Color, ...]] = [tuple(tree.colors[c] for c in ordered)]
        for c in ordered:
            arrays.extend(cache[c])
        cache[v] = tuple(arrays)
        sorted_children[v] = ordered
    return cache, sorted_children


def ld_array(tree: ColoredArborescence) -> tuple[LdArray, dict[VertexId, LdArray]]:
    """Descriptor of the whole tree plus the per-vertex cache."""
    cache, _ = _ld_state(tree)
    return cache[tree.root], cache


def full_ld_array(tree: ColoredArborescence) -> LdArray:
    """Root-color singleton prepended to the tree descriptor.

    Unlike the plain descriptor this determines the colored tree up to
    isomorphism, because the root color is no longer omitted.
    """
    root_part, _ = ld_array(tree)
    return ((tree.colors[tree.root],),) + root_part


def canonical_order(tree: ColoredArborescence) -> CanonicalOrder:
    """Depth-first ranks with children visited in sorted descriptor order."""
    _, sorted_children = _ld_state(tree)
    phi = [0] * tree.n
    inverse = [0] * tree.n
    rank = 0
    stack = [tree.root]
    while stack:
        v = stack.pop()
        phi[v] = rank
        inverse[rank] = v
        rank += 1
        stack.extend(reversed(sorted_children[v]))
    return CanonicalOrder(phi=tuple(phi), inverse=tuple(inverse))


def canonicalize(tree: ColoredArborescence) -> ColoredArborescence:
    """Relabel so vertex ids equal canonical ranks.

    In the result, children tuples are ascending both by id and by
    canonical sibling order, and the root is vertex 0.
    """
    order = canonical_order(tree)
    _, sorted_children = _ld_state(tree)
    children = tuple(
        tuple(order.phi[c] for c in sorted_children[order.inverse[r]])
        for r in range(tree.n)
    )
    colors = tuple(tree.colors[order.inverse[r]] for r in range(tree.n))
    return ColoredArborescence(
        n=tree.n, root=0, children=children, colors=colors, tree_id=tree.tree_id
    )


def reconstruct(full: Sequence[Sequence[Color]]) -> ColoredArborescence:
    """Rebuild the canonically labeled tree from its full descriptor.

    Inverse of :func:`full_ld_array` up to relabeling:
    ``reconstruct(full_ld_array(t))`` equals ``canonicalize(t)`` exactly.
    """
    arrays = [tuple(inner) for inner in full]
    if not arrays or len(arrays[0]) != 1:
        raise MalformedDescriptor("descriptor must start with a root-color singleton")
    n = sum(len(inner) for inner in arrays)
    if len(arrays) != n + 1:
        raise MalformedDescriptor(
            f"{len(arrays)} arrays cannot describe {n} color entries"
        )
    for inner in arrays:
        for c in inner:
            if not isinstance(c, int) or c < 0:
                raise MalformedDescriptor(f"bad color entry {c!r}")

    # Assign vertex ids in reading order of color entries; the array at
    # position k+1 then lists the children of the vertex introduced k-th.
    colors: list[Color] = []
    id_arrays: list[list[int]] = []
    for inner in arrays:
        ids = []
        for c in inner:
            ids.append(len(colors))
            colors.append(c)
        id_arrays.append(ids)

    children: list[list[int]] = [[] for _ in range(n)]
    pending: list[list[int]] = [list(id_arrays[0])]
    for ids in id_arrays[1:]:
        while pending and not pending[0]:
            pending.pop(0)
        if not pending:
            raise MalformedDescriptor("more arrays than vertices awaiting children")
        current = pending[0].pop(0)
        if ids:
            children[current] = ids
            pending.insert(0, list(ids))
    while pending and not pending[0]:
        pending.pop(0)
    if pending:
        raise MalformedDescriptor("fewer arrays than vertices awaiting children")

    raw = ColoredArborescence(
        n=n,
        root=0,
        children=tuple(tuple(kids) for kids in children),
        colors=tuple(colors),
    )
    return canonicalize(raw)
