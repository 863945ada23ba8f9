"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the library's own code paths: the graph6
decoder works on bit strings, cycle detection enumerates vertex subsets, and
the regular-graph generator fills adjacency rows without any symmetry
breaking. Slow and dumb on purpose.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from grundylab.graphs import Graph


def reference_decode_graph6(text: str) -> tuple[int, set[tuple[int, int]]]:
    """String-arithmetic graph6 decoder; returns (n, edge set)."""
    if text.startswith(">>graph6<<"):
        text = text[10:]
    vals = [ord(ch) - 63 for ch in text]
    if vals[0] == 63:
        n = vals[1] * 4096 + vals[2] * 64 + vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    bitstream = "".join(format(v, "06b") for v in data)
    edges = set()
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bitstream[idx] == "1":
                edges.add((row, col))
            idx += 1
    return n, edges


def graph_edges(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def subset_induces_cycle(g: Graph, subset: tuple[int, ...]) -> bool:
    """The subset induces a cycle iff it is connected and all degrees are 2."""
    sub = g.induced(subset)
    return sub.n >= 3 and all(d == 2 for d in sub.degrees()) and sub.is_connected()


def brute_has_induced_cycle(g: Graph, length: int) -> bool:
    return any(
        subset_induces_cycle(g, subset) for subset in combinations(range(g.n), length)
    )


def brute_girth(g: Graph) -> float:
    for length in range(3, g.n + 1):
        if brute_has_induced_cycle(g, length):
            return length
    return float("inf")


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    ae = graph_edges(a)
    for perm in permutations(range(b.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in b.edges()} == ae:
            return True
    return False


def brute_regular_graphs(r: int, n: int, connected_only: bool = False) -> list[Graph]:
    """All labelled r-regular graphs by row filling, deduplicated afterwards."""
    from grundylab.canon import canonical_form

    rows = [0] * n
    deg = [0] * n
    out: dict[bytes, Graph] = {}

    def fill(v: int) -> None:
        if v == n:
            if all(d == r for d in deg):
                g = Graph(n, tuple(rows))
                if not connected_only or g.is_connected():
                    out.setdefault(canonical_form(g), g)
            return
        need = r - deg[v]
        if need < 0:
            return
        candidates = [u for u in range(v + 1, n) if deg[u] < r]
        if need > len(candidates):
            return
        for chosen in combinations(candidates, need):
            for u in chosen:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                deg[u] += 1
            deg[v] += need
            fill(v + 1)
            deg[v] -= need
            for u in chosen:
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
                deg[u] -= 1

    fill(0)
    return list(out.values())


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
