"""Simple undirected graphs and generators for the tree families used here.

Vertices are dense integers 0..n-1.  Edges are stored canonically as
(min, max) pairs so that iteration order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not canonical (min,max)")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, canonicalizing and deduplicating edges."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
        return Graph(n, frozenset(canon))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks, used by the enumeration engine."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled to 0..|U|-1.

    Relabeling preserves relative order: new index i corresponds to the
    i-th smallest original vertex, i.e. the index map is sorted(vertices).
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(vs), edges)


def induced_index_map(g: Graph, vertices: Iterable[int]) -> list[int]:
    """Map from new labels of induced_subgraph(g, vertices) to original ones."""
    return sorted(set(vertices))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    """True iff g is connected and acyclic.  The empty graph counts as a tree."""
    if g.n == 0:
        return len(g.edges) == 0
    return len(g.edges) == g.n - 1 and is_connected(g)


def leaf_count(g: Graph) -> int:
    """Number of degree-1 vertices of a tree.

    A single vertex has no leaf; the 2-vertex tree has two.
    """
    if not is_tree(g):
        raise ValueError("leaf_count requires a tree")
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


# ---------------------------------------------------------------------------
# Generators


def chain(n: int) -> Graph:
    if n < 1:
        raise ValueError("chain requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(m: int) -> Graph:
    """Star K_{1,m}: center 0 with m pendant leaves."""
    if m < 0:
        raise ValueError("star requires m >= 0")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def wheel(n: int) -> Graph:
    """Wheel W_n: a cycle on n rim vertices plus a hub adjacent to all of them.

    Vertices 0..n-1 form the rim, vertex n is the hub; n+1 vertices total.
    """
    if n < 3:
        raise ValueError("wheel requires n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def caterpillar_graph(s: tuple[int, ...]) -> Graph:
    """Caterpillar with spine v_1..v_k and s_i pendant leaves on v_i.

    Spine vertices come first (0..k-1), then leaves in spine order.
    """
    from .catseq import check_sequence

    check_sequence(s)
    k = len(s)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, cnt in enumerate(s):
        for _ in range(cnt):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def fk_tree(k: int) -> Graph:
    """Tree on 6k+7 vertices: a hub joined to three chains of k-1 vertices,
    each chain ending in the center of a star on k+3 vertices.

    For k=1 the chains are empty and the hub connects directly to the three
    star centers.
    """
    if k < 1:
        raise ValueError("fk_tree requires k >= 1")
    edges = []
    nxt = 1  # 0 is the hub
    for _ in range(3):
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        center = nxt
        nxt += 1
        edges.append((prev, center))
        for _ in range(k + 2):
            edges.append((center, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


# ---------------------------------------------------------------------------
# Text formats


def write_edge_list(g: Graph) -> str:
    """Edge-list format: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    """Graphviz export; vertices in `highlight` get color=blue."""
    hi = set(highlight)
    lines = ["graph G {"]
    for v in range(g.n):
        attr = " [color=blue]" if v in hi else ""
        lines.append(f"  {v}{attr};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
