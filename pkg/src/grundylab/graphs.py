"""Immutable bitmask graphs and the structural queries everything else builds on.

Vertices are integers ``0..n-1``. Adjacency is one integer bitmask per vertex,
so neighbourhood algebra (intersection, domination, equal-neighbourhood tests)
is plain integer arithmetic. Graphs are capped at 64 vertices; every
computation in this library is desk scale and fits that budget.

All operations here are pure functions on immutable values, safe to share
across threads.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Rows are symmetric and
    irreflexive; both are checked at construction time.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour index >= n")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def from_neighbor_lists(lists: Iterable[Iterable[int]]) -> "Graph":
        rows = []
        for nbrs in lists:
            row = 0
            for u in nbrs:
                row |= 1 << u
            rows.append(row)
        return Graph(len(rows), tuple(rows))

    # -- basic queries -----------------------------------------------------

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(bits(row)) for row in self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def regularity(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_regular(self) -> bool:
        return self.regularity() is not None

    # -- functional updates -------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        mask = 0
        for u in neighbors:
            mask |= 1 << u
        return self.add_vertex_mask(mask)

    def add_vertex_mask(self, mask: int) -> "Graph":
        n = self.n
        if mask >> n:
            raise ValueError("neighbour index out of range")
        rows = [row | (((mask >> v) & 1) << n) for v, row in enumerate(self.adj)]
        rows.append(mask)
        return Graph(n + 1, tuple(rows))

    def union(self, other: "Graph") -> "Graph":
        """Disjoint union; ``other``'s vertices are shifted by ``self.n``."""
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph(self.n + other.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabel with ``perm`` where ``perm[old] = new``."""
        perm = tuple(perm)
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [(~row & full) & ~(1 << v) for v, row in enumerate(self.adj)]
        return Graph(self.n, tuple(rows))

    # -- connectivity --------------------------------------------------------

    def component_mask(self, start: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[frozenset[int]]:
        out = []
        remaining = (1 << self.n) - 1
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self.component_mask(start)
            out.append(frozenset(bits(comp)))
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge seen at depth d closes a cycle of
    length dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    best: int | float = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                if 2 * dist[v] >= best:
                    continue
                for u in bits(g.adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u:
                        cycle = dist[v] + dist[u] + 1
                        if cycle < best:
                            best = cycle
            frontier = nxt
    return best


def induced_cycles(g: Graph, length: int) -> Iterator[frozenset[int]]:
    """All vertex sets inducing a cycle of exactly ``length`` vertices.

    Paths grow from the smallest cycle vertex; the orientation is fixed by
    requiring the second path vertex to be smaller than the last, so each
    cycle is emitted once.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n = g.n
    adj = g.adj

    def extend(start: int, path: list[int], path_mask: int) -> Iterator[frozenset[int]]:
        last = path[-1]
        if len(path) == length - 1:
            closing = adj[last] & adj[start] & ~path_mask
            for w in bits(closing):
                if w <= start or w <= path[1]:
                    continue
                # the closing vertex may touch the path only at its two ends
                if adj[w] & path_mask & ~(1 << last) & ~(1 << start):
                    continue
                yield frozenset(path + [w])
            return
        # interior vertices must avoid the start (no chord back to it)
        cand = adj[last] & ~path_mask & ~adj[start] & ~(1 << start)
        for w in bits(cand):
            if w < start:
                continue
            # w may only touch the path at `last`
            if adj[w] & path_mask & ~(1 << last):
                continue
            yield from extend(start, path + [w], path_mask | (1 << w))

    for start in range(n):
        for second in bits(adj[start]):
            if second < start:
                continue
            if length == 3:
                closing = adj[second] & adj[start]
                for w in bits(closing):
                    if w > second:
                        yield frozenset((start, second, w))
                continue
            yield from extend(start, [start, second], (1 << start) | (1 << second))


def has_induced_cycle(g: Graph, length: int) -> bool:
    """True when some vertex subset of size ``length`` induces exactly a cycle."""
    return next(iter(induced_cycles(g, length)), None) is not None


def neighbor_connected_induced_cycles(g: Graph, length: int) -> list[frozenset[int]]:
    """Induced ``length``-cycles whose distance-1 vertex set is not independent."""
    out = []
    for cycle in induced_cycles(g, length):
        cycle_mask = 0
        for v in cycle:
            cycle_mask |= 1 << v
        d1 = 0
        for v in cycle:
            d1 |= g.adj[v]
        d1 &= ~cycle_mask
        if any(g.adj[v] & d1 for v in bits(d1)):
            out.append(cycle)
    return sorted(out, key=sorted)


def maximal_independent_module_partition(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Partition ``s`` into equal-open-neighbourhood classes of ``g``.

    Vertices sharing an open neighbourhood are automatically non-adjacent, so
    each block is an independent module, and no two blocks can merge. This is
    the coarsest partition of ``s`` into independent modules of this form.
    """
    groups: dict[int, list[int]] = {}
    for v in sorted(set(s)):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        groups.setdefault(g.adj[v], []).append(v)
    blocks = [frozenset(members) for members in groups.values()]
    return sorted(blocks, key=min)


def power_graph(g: Graph, k: int) -> Graph:
    """Graph on the same vertices with ``u ~ v`` iff ``1 <= dist(u, v) <= k``."""
    if k < 1:
        raise ValueError("power must be at least 1")
    if k == 1:
        return g
    rows = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        row = 0
        for u in range(g.n):
            if u != v and 0 < dist[u] <= k:
                row |= 1 << u
        rows.append(row)
    return Graph(g.n, tuple(rows))
