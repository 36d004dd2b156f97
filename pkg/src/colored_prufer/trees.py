"""Colored arborescences and the JSONL corpus format.

A tree is stored with vertex ids normalized to ``0..n-1`` (sorted order of
the original ids), the root first in no particular sense, and per-vertex
children tuples sorted ascending.  Children order carries no semantics;
every meaningful order comes from canonicalization.  Instances are frozen
and hashable, so they are safe to share between workers and to use as
cache keys.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping, Sequence

from .errors import (
    CycleDetected,
    DisconnectedVertex,
    DuplicateEdge,
    MissingColor,
    MultipleRoots,
    ParseError,
    ValidationError,
)

Color = int
VertexId = int


@dataclass(frozen=True)
class ColoredArborescence:
    """Rooted directed tree, all edges away from the root, vertices colored.

    ``children[v]`` is the tuple of direct out-neighbors of ``v`` and
    ``colors[v]`` its color; both are indexed by the normalized vertex id.
    ``tree_id`` and ``source_ids`` are provenance only and excluded from
    equality and hashing.
    """

    n: int
    root: VertexId
    children: tuple[tuple[VertexId, ...], ...]
    colors: tuple[Color, ...]
    tree_id: str | None = field(default=None, compare=False)
    source_ids: tuple[int, ...] | None = field(default=None, compare=False)

    def parent_map(self) -> tuple[VertexId | None, ...]:
        """Parent of every vertex; ``None`` for the root."""
        parent: list[VertexId | None] = [None] * self.n
        for u in range(self.n):
            for v in self.children[u]:
                parent[v] = u
        return tuple(parent)

    def undirected_adjacency(self) -> tuple[tuple[VertexId, ...], ...]:
        adj: list[list[VertexId]] = [[] for _ in range(self.n)]
        for u in range(self.n):
            for v in self.children[u]:
                adj[u].append(v)
                adj[v].append(u)
        return tuple(tuple(sorted(x)) for x in adj)

    def bfs_order(self) -> list[VertexId]:
        order = []
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            order.append(v)
            queue.extend(self.children[v])
        return order


def build_tree(
    edges: Sequence[tuple[int, int]],
    colors: Mapping[int, Color],
    root: int | None = None,
    tree_id: str | None = None,
) -> ColoredArborescence:
    """Validate an edge list and colors, normalizing ids to ``0..n-1``.

    The root is inferred as the unique vertex of in-degree zero; passing
    ``root`` additionally asserts the inference.  Raises a
    :class:`TreeStructureError` subclass naming the offending vertex or
    edge when the input is not a colored arborescence.
    """
    vertices = set(colors)
    for p, c in edges:
        vertices.add(p)
        vertices.add(c)
    if not vertices:
        raise DisconnectedVertex("empty tree: no vertices supplied")

    seen: set[tuple[int, int]] = set()
    in_edge: dict[int, tuple[int, int]] = {}
    for p, c in edges:
        if p == c:
            raise CycleDetected(f"self-loop on vertex {p}")
        if (p, c) in seen:
            raise DuplicateEdge(f"edge ({p}, {c}) appears twice")
        seen.add((p, c))
        if c in in_edge:
            raise DuplicateEdge(
                f"vertex {c} has two in-edges {in_edge[c]} and {(p, c)}"
            )
        in_edge[c] = (p, c)

    touched = {v for e in edges for v in e}
    roots = sorted(v for v in vertices if v not in in_edge)
    if edges:
        for v in roots:
            if v not in touched:
                raise DisconnectedVertex(f"vertex {v} has no incident edges")
    if len(roots) > 1:
        raise MultipleRoots(f"vertices {roots} all have in-degree 0")
    if not roots:
        raise CycleDetected("no vertex has in-degree 0; the edges contain a cycle")
    inferred_root = roots[0]
    if root is not None and root != inferred_root:
        raise MultipleRoots(
            f"declared root {root} differs from inferred root {inferred_root}"
        )

    raw_children: dict[int, list[int]] = {v: [] for v in vertices}
    for p, c in edges:
        raw_children[p].append(c)

    reached = {inferred_root}
    queue = deque([inferred_root])
    while queue:
        v = queue.popleft()
        for c in raw_children[v]:
            reached.add(c)
            queue.append(c)
    if len(reached) != len(vertices):
        missing = min(vertices - reached)
        raise CycleDetected(f"vertex {missing} is not reachable from the root")

    for v in sorted(vertices):
        if v not in colors:
            raise MissingColor(f"vertex {v} has no color")

    source_ids = tuple(sorted(vertices))
    new_id = {old: new for new, old in enumerate(source_ids)}
    n = len(source_ids)
    children = tuple(
        tuple(sorted(new_id[c] for c in raw_children[old])) for old in source_ids
    )
    color_row = tuple(int(colors[old]) for old in source_ids)
    for v, col in zip(source_ids, color_row):
        if col < 0:
            raise MissingColor(f"vertex {v} has negative color {col}")
    return ColoredArborescence(
        n=n,
        root=new_id[inferred_root],
        children=children,
        colors=color_row,
        tree_id=tree_id,
        source_ids=source_ids,
    )


def leaves(tree: ColoredArborescence) -> set[VertexId]:
    """Vertices with out-degree zero (in-degree is at most one by invariant)."""
    return {v for v in range(tree.n) if not tree.children[v]}


def subtree_vertices(tree: ColoredArborescence, apex: VertexId) -> set[VertexId]:
    """The apex together with all of its descendants (its out-component)."""
    if not 0 <= apex < tree.n:
        raise IndexError(f"apex {apex} not a vertex of the tree")
    result = set()
    stack = [apex]
    while stack:
        v = stack.pop()
        result.add(v)
        stack.extend(tree.children[v])
    return result


# --- JSONL corpus format ------------------------------------------------------
#
# One tree per line:
#   {"id": "<str>", "root": <int optional>, "edges": [[p, c], ...],
#    "colors": {"<vid>": <int or name>, ...}}
# Color values may be names when a color-table (JSON map name -> int) is given.


def tree_to_json(tree: ColoredArborescence) -> dict:
    return {
        "id": tree.tree_id if tree.tree_id is not None else "",
        "root": tree.root,
        "edges": [[u, v] for u in range(tree.n) for v in tree.children[u]],
        "colors": {str(v): tree.colors[v] for v in range(tree.n)},
    }


def write_corpus(trees: Iterable[ColoredArborescence], fp: IO[str]) -> None:
    for tree in trees:
        fp.write(json.dumps(tree_to_json(tree), separators=(",", ":")))
        fp.write("\n")


def load_color_table(fp: IO[str]) -> dict[str, int]:
    """Read a JSON map of color name -> nonnegative integer."""
    table = json.load(fp)
    if not isinstance(table, dict) or any(
        not isinstance(k, str) or not isinstance(v, int) or v < 0
        for k, v in table.items()
    ):
        raise ValueError("color table must map names to nonnegative integers")
    return table


def _tree_from_json(obj: dict, line: int, color_table: Mapping[str, int] | None):
    if not isinstance(obj, dict):
        raise ParseError(line, "expected a JSON object")
    if "colors" not in obj:
        raise ParseError(line, 'missing "colors" key')
    if "edges" not in obj:
        raise ParseError(line, 'missing "edges" key')
    raw_colors = obj["colors"]
    raw_edges = obj["edges"]
    if not isinstance(raw_colors, dict) or not isinstance(raw_edges, list):
        raise ParseError(line, '"colors" must be an object and "edges" a list')

    edges: list[tuple[int, int]] = []
    for e in raw_edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) for x in e)
        ):
            raise ParseError(line, f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))

    colors: dict[int, int] = {}
    for key, value in raw_colors.items():
        try:
            vid = int(key)
        except ValueError:
            raise ParseError(line, f"non-integer vertex id {key!r}") from None
        if isinstance(value, str):
            if color_table is None or value not in color_table:
                raise ParseError(line, f"unknown color name {value!r}")
            value = color_table[value]
        if not isinstance(value, int) or value < 0:
            raise ParseError(line, f"bad color {value!r} for vertex {key}")
        colors[vid] = value

    root = obj.get("root")
    if root is not None and not isinstance(root, int):
        raise ParseError(line, '"root" must be an integer')
    tree_id = obj.get("id")
    if tree_id is not None and not isinstance(tree_id, str):
        raise ParseError(line, '"id" must be a string')
    return edges, colors, root, tree_id


def iter_corpus(
    source: IO[str] | IO[bytes] | Iterable[str] | Iterable[bytes],
    color_table: Mapping[str, int] | None = None,
) -> Iterator[ColoredArborescence]:
    """Stream trees from a JSONL source, one validated tree per line.

    Raises :class:`ParseError` for malformed lines and
    :class:`ValidationError` (carrying the structural cause) for lines
    that parse but do not describe an arborescence.  Line numbers are
    1-based.
    """
    for line_no, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"invalid JSON ({exc.msg})") from exc
        edges, colors, root, tree_id = _tree_from_json(obj, line_no, color_table)
        try:
            tree = build_tree(edges, colors, root=root, tree_id=tree_id or None)
        except Exception as exc:
            raise ValidationError(line_no, exc) from exc
        yield tree


def parse_corpus(
    source: IO[str] | IO[bytes] | Iterable[str] | Iterable[bytes],
    color_table: Mapping[str, int] | None = None,
) -> list[ColoredArborescence]:
    """Parse a whole JSONL corpus, preserving input order."""
    return list(iter_corpus(source, color_table))
