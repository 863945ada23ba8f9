"""Canonical labelling for graphs of at most 16 vertices.

Degree refinement splits the vertices into cells; a backtracking search then
individualizes one vertex of the first non-singleton cell at a time, refines
again, and keeps the lexicographically smallest adjacency encoding over all
discrete colourings reached. Interchangeable siblings (equal open or closed
neighbourhoods) are branched only once, which keeps highly symmetric inputs
such as complete multipartite graphs cheap. Self-contained and exhaustive,
so equal keys mean isomorphic graphs and vice versa.
"""

from __future__ import annotations

from .graphs import Graph, bits

MAX_CANON_VERTICES = 16

CanonicalKey = bytes


def canonical_form(g: Graph) -> CanonicalKey:
    """Key equal for two graphs exactly when they are isomorphic."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}")
    if n == 0:
        return bytes([0])
    adj = g.adj

    def refine(colors: list[int]) -> list[int]:
        # Packed-int signatures: old colour, adjacency bits towards singleton
        # cells (their identity is fixed, so raw bits suffice), then one
        # 5-bit neighbour count per non-singleton cell.
        while True:
            masks: dict[int, int] = {}
            for v, c in enumerate(colors):
                masks[c] = masks.get(c, 0) | (1 << v)
            singles: list[int] = []  # singleton cells as vertex ids, colour order
            bigs = []
            for c in sorted(masks):
                m = masks[c]
                if m & (m - 1):
                    bigs.append(m)
                else:
                    singles.append(m.bit_length() - 1)
            sigs = list(colors)
            if singles:
                for v in range(n):
                    row = adj[v]
                    s = 0
                    for rank, u in enumerate(singles):
                        s |= (row >> u & 1) << rank
                    sigs[v] = (sigs[v] << n) | s
            for m in bigs:
                for v in range(n):
                    sigs[v] = (sigs[v] << 5) | (adj[v] & m).bit_count()
            remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [remap[s] for s in sigs]
            if new == colors:
                return new
            colors = new

    nbits = n * (n - 1) // 2
    nbytes = max(1, (nbits + 7) // 8)

    def encode(colors: list[int]) -> bytes:
        order = sorted(range(n), key=colors.__getitem__)
        acc = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                acc = (acc << 1) | (row >> order[j] & 1)
        return bytes([n]) + acc.to_bytes(nbytes, "big")

    best: bytes | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = None
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target is None:
            key = encode(colors)
            if best is None or key < best:
                best = key
            return
        cell = [v for v in range(n) if colors[v] == target]
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in cell:
            open_row = adj[v]
            closed_row = adj[v] | (1 << v)
            if open_row in seen_open or closed_row in seen_closed:
                continue  # swapping with an already-tried twin is an automorphism
            seen_open.add(open_row)
            seen_closed.add(closed_row)
            branched = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            search(branched)

    search([0] * n)
    assert best is not None
    return best


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges() != b.num_edges():
        return False
    return canonical_form(a) == canonical_form(b)


def canonical_representative(g: Graph) -> Graph:
    """The graph relabelled into its canonical form (same key, fixed labels)."""
    key = canonical_form(g)
    n = g.n
    if n == 0:
        return g
    acc = int.from_bytes(key[1:], "big")
    nbits = n * (n - 1) // 2
    rows = [0] * n
    pos = nbits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if acc >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))
