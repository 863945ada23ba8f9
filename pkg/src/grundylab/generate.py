"""Exhaustive generation of small graphs up to isomorphism.

The regular-graph enumerator completes the lowest deficient vertex first,
forcing vertex 0's neighbourhood to be {1..r} and introducing fresh vertex
labels contiguously; both rules keep at least one labelling per isomorphism
class, and a canonical-form key deduplicates the survivors. Counts are
validated against the published enumeration values in the test suite.
"""

from __future__ import annotations

from itertools import combinations

from .canon import canonical_form
from .graphs import Graph

MAX_REGULAR_N = 14
MAX_CATALOG_N = 8

_all_cache: dict[int, list[Graph]] = {}


def enumerate_regular_graphs(r: int, n: int, connected_only: bool = False) -> list[Graph]:
    """One representative per isomorphism class of r-regular graphs on n vertices."""
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r} n={n}")
    if n > MAX_REGULAR_N:
        raise ValueError(f"enumeration supports n <= {MAX_REGULAR_N}, got {n}")
    if (r * n) % 2 == 1:
        return []
    if r == 0:
        if connected_only and n > 1:
            return []
        return [Graph.empty(n)]

    rows = [0] * n
    deg = [0] * n
    # vertex 0's neighbourhood can always be relabelled to {1..r}
    for u in range(1, r + 1):
        rows[0] |= 1 << u
        rows[u] |= 1
        deg[u] = 1
    deg[0] = r

    seen: set[bytes] = set()
    found: list[Graph] = []

    def emit() -> None:
        g = Graph(n, tuple(rows))
        if connected_only and not g.is_connected():
            return
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            found.append(g)

    def complete(v: int, touched: int) -> None:
        while v < n and deg[v] == r:
            v += 1
        if v == n:
            emit()
            return
        if v >= touched:
            # all earlier vertices are complete, so v starts a fresh component
            if connected_only:
                return
            touched = v + 1
        need = r - deg[v]
        old = [u for u in range(v + 1, touched) if deg[u] < r and not rows[v] >> u & 1]
        fresh = list(range(touched, min(n, touched + need)))
        # vertices with identical current rows are interchangeable, so only
        # prefix selections inside each row group survive relabelling
        groups: list[list[int]] = []
        by_row: dict[int, list[int]] = {}
        for u in old:
            lst = by_row.get(rows[u])
            if lst is None:
                by_row[rows[u]] = lst = []
                groups.append(lst)
            lst.append(u)
        if fresh:
            groups.append(fresh)
        for chosen in _grouped_prefixes(groups, need):
            new_touched = touched
            for u in chosen:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                deg[u] += 1
                if u >= new_touched:
                    new_touched = u + 1
            deg[v] = r
            if _still_feasible(deg, new_touched):
                complete(v + 1, new_touched)
            deg[v] = r - need
            for u in chosen:
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
                deg[u] -= 1

    def _still_feasible(degs: list[int], touched: int) -> bool:
        # every deficient touched vertex must find enough partners later
        deficient = [r - degs[u] for u in range(touched) if degs[u] < r]
        if not deficient:
            return True
        partners = (len(deficient) - 1) + (n - touched)
        return max(deficient) <= partners

    complete(1, r + 1)
    return found


def _grouped_prefixes(groups: list[list[int]], need: int):
    """All ways to draw ``need`` vertices taking a prefix from each group."""
    if need == 0:
        yield ()
        return
    if not groups:
        return
    head, rest = groups[0], groups[1:]
    tail_capacity = sum(len(g) for g in rest)
    lo = max(0, need - tail_capacity)
    for take in range(lo, min(len(head), need) + 1):
        for more in _grouped_prefixes(rest, need - take):
            yield tuple(head[:take]) + more


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism (n <= 8), cached."""
    if n > MAX_CATALOG_N:
        raise ValueError(f"graph catalog supports n <= {MAX_CATALOG_N}, got {n}")
    if n in _all_cache:
        return _all_cache[n]
    if n == 0:
        out = [Graph.empty(0)]
    else:
        seen: dict[bytes, Graph] = {}
        for g in all_graphs(n - 1):
            for mask in range(1 << (n - 1)):
                h = g.add_vertex_mask(mask)
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        out = list(seen.values())
    _all_cache[n] = out
    return out


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected()]
