"""Twin-vertex structure and the colour bounds it forces.

Three per-vertex conditions each cap the colour a vertex can receive in any
Grundy colouring at some level ``l``:

* kind 0 (regular graphs only): the vertex lies in an independent module of
  at least ``r + 2 - l`` vertices;
* kind 1: its neighbourhood splits into at most ``l - 1`` independent
  modules (equal-open-neighbourhood classes);
* kind 2: its neighbourhood is independent and every neighbour satisfies the
  kind-1 condition at level ``l``.

When every vertex passes one of the admissible conditions at level ``l``,
the Grundy number is at most ``l``. For cubic graphs the level-3 tests have
constant-time forms, which yields the linear classifier at the bottom of
this module. The classifier accepts either a :class:`~grundylab.graphs.Graph`
or a raw sequence of neighbour lists, so it also runs on graphs far above
the 64-vertex cap of the bitmask type.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

from .graphs import Graph, bits, maximal_independent_module_partition

AdjacencyLike = Union[Graph, Sequence[Sequence[int]]]


@dataclass(frozen=True)
class TwinWitness:
    """Evidence that a vertex passes a twin test.

    ``evidence`` is the module (kind 0), the module partition of the
    neighbourhood (kind 1), or a per-neighbour partition mapping (kind 2).
    """

    kind: int
    level: int
    evidence: object


def is_twin_vertex(g: Graph, v: int, kind: int, level: int) -> TwinWitness | None:
    """Witness that ``v`` satisfies the twin condition of ``kind`` at ``level``."""
    if kind not in (0, 1, 2):
        raise ValueError(f"kind must be 0, 1 or 2, got {kind}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if kind == 0:
        r = g.regularity()
        if r is None:
            raise ValueError("the kind-0 twin test is defined for regular graphs only")
        needed = r + 2 - level
        module = frozenset(u for u in range(g.n) if g.adj[u] == g.adj[v])
        if len(module) >= max(1, needed):
            return TwinWitness(0, level, module)
        return None
    if kind == 1:
        blocks = maximal_independent_module_partition(g, g.neighbors(v))
        if len(blocks) <= level - 1:
            return TwinWitness(1, level, tuple(blocks))
        return None
    # kind 2
    nbrs = g.neighbors(v)
    nbr_mask = g.adj[v]
    if any(g.adj[u] & nbr_mask for u in nbrs):
        return None
    per_neighbor = {}
    for u in nbrs:
        inner = is_twin_vertex(g, u, 1, level)
        if inner is None:
            return None
        per_neighbor[u] = inner.evidence
    return TwinWitness(2, level, per_neighbor)


def _kind1_level(g: Graph, v: int) -> int:
    """Smallest level at which ``v`` passes the kind-1 test."""
    distinct = len({g.adj[u] for u in bits(g.adj[v])})
    return distinct + 1


def vertex_color_caps(g: Graph) -> list[int]:
    """Per-vertex upper bound on the colour in any Grundy colouring."""
    n = g.n
    r = g.regularity()
    kind1 = [_kind1_level(g, v) for v in range(n)]
    caps = []
    class_size: dict[int, int] = {}
    if r is not None:
        for v in range(n):
            class_size[g.adj[v]] = class_size.get(g.adj[v], 0) + 1
    for v in range(n):
        cap = min(g.degree(v) + 1, kind1[v])
        if r is not None:
            cap = min(cap, max(1, r + 2 - class_size[g.adj[v]]))
        nbr_mask = g.adj[v]
        independent = all(not (g.adj[u] & nbr_mask) for u in bits(nbr_mask))
        if independent and nbr_mask:
            cap = min(cap, max(kind1[u] for u in bits(nbr_mask)))
        caps.append(cap)
    return caps


def twin_grundy_upper_bound(g: Graph) -> int:
    """Least level at which every vertex passes an admissible twin test.

    Never exceeds max degree + 1, and always dominates the exact Grundy
    number.
    """
    if g.n == 0:
        return 0
    return max(vertex_color_caps(g))


# -- linear cubic classifier -------------------------------------------------


def _as_neighbor_lists(g: AdjacencyLike) -> Sequence[Sequence[int]]:
    if isinstance(g, Graph):
        return g.neighbor_lists()
    return g


def _is_k33(lists: Sequence[Sequence[int]]) -> bool:
    if len(lists) != 6:
        return False
    side = frozenset(lists[0])
    if len(side) != 3:
        return False
    other = frozenset(range(6)) - side
    return all(frozenset(lists[v]) == side for v in other) and all(
        frozenset(lists[v]) == other for v in side
    )


def cubic_grundy_linear(g: AdjacencyLike) -> int:
    """Grundy number of a connected cubic graph in linear time.

    Returns 2 exactly for the complete bipartite graph on 3+3 vertices,
    3 when every vertex passes a level-3 twin test, and 4 otherwise. Each
    per-vertex test touches only adjacency lists of length three, so the
    whole classification is linear in the number of vertices.
    """
    lists = _as_neighbor_lists(g)
    n = len(lists)
    if n == 0:
        raise ValueError("empty graph is not cubic")
    nsets = [frozenset(l) for l in lists]
    for v, s in enumerate(nsets):
        if len(s) != 3 or len(lists[v]) != 3:
            raise ValueError(f"vertex {v} has degree {len(s)}, input is not cubic")
    # connectivity in O(n)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in lists[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    if count != n:
        raise ValueError("classifier requires a connected graph")
    if _is_k33(lists):
        return 2

    one3 = [None] * n  # memoized kind-1 level-3 results

    def kind1(v: int) -> bool:
        if one3[v] is None:
            a, b, c = lists[v]
            one3[v] = nsets[a] == nsets[b] or nsets[a] == nsets[c] or nsets[b] == nsets[c]
        return one3[v]

    for v in range(n):
        a, b, c = lists[v]
        # kind 0: a false twin shares all three neighbours
        common = (nsets[a] & nsets[b] & nsets[c]) - {v}
        if common:
            continue
        if kind1(v):
            continue
        # kind 2: independent neighbourhood, all neighbours kind-1
        if b not in nsets[a] and c not in nsets[a] and c not in nsets[b]:
            if kind1(a) and kind1(b) and kind1(c):
                continue
        return 4
    return 3


def f3_membership(g: AdjacencyLike) -> bool:
    """Whether every vertex of a cubic graph passes a level-3 twin test.

    Disconnected input is allowed; each component is classified on its own.
    """
    lists = _as_neighbor_lists(g)
    n = len(lists)
    nsets = [frozenset(l) for l in lists]
    for v, s in enumerate(nsets):
        if len(s) != 3 or len(lists[v]) != 3:
            raise ValueError(f"vertex {v} has degree {len(s)}, input is not cubic")

    one3 = [None] * n

    def kind1(v: int) -> bool:
        if one3[v] is None:
            a, b, c = lists[v]
            one3[v] = nsets[a] == nsets[b] or nsets[a] == nsets[c] or nsets[b] == nsets[c]
        return one3[v]

    for v in range(n):
        a, b, c = lists[v]
        if (nsets[a] & nsets[b] & nsets[c]) - {v}:
            continue
        if kind1(v):
            continue
        if b not in nsets[a] and c not in nsets[a] and c not in nsets[b]:
            if kind1(a) and kind1(b) and kind1(c):
                continue
        return False
    return True
