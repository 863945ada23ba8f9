"""Exact Grundy and partial Grundy numbers.

The Grundy number is the largest colour count first-fit greedy can be forced
to use over all vertex orderings. ``grundy_oracle`` maximises over every
permutation outright and is the reference the pruned solver is validated
against. ``grundy_exact`` branches over orderings built left to right; a
state is just the partial colouring it produces, so a transposition table
collapses orderings that colour the same vertices the same way. Pruning uses
the best colouring found so far, per-vertex caps from the twin-structure
bounds, and a per-state potential: a vertex can only reach colour ``c + 1``
if colours ``1..c`` have a system of distinct representatives among its
neighbours, where an unassigned equal-neighbourhood class counts as a single
representative because its members share one colour in every Grundy
colouring.

The partial Grundy solver answers the largest ``k`` admitting a proper
surjective ``k``-colouring with one Grundy vertex per class. It commits the
per-class witnesses and their colour supports first, then extends to a total
proper colouring by backtracking.

Search budgets are node counts; exhausting one raises
:class:`SearchBudgetExceeded` so callers can tell "unknown" from a result.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from collections.abc import Sequence

from .graphs import Graph, bits
from .twins import vertex_color_caps

ORACLE_MAX_N = 9
EXACT_MAX_N = 32
PARTIAL_MAX_N = 12
_VISITED_LIMIT = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    """The configured node budget ran out before the search finished."""

    def __init__(self, spent: int):
        super().__init__(f"search budget exhausted after {spent} nodes")
        self.spent = spent


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int | None):
        self.remaining = math.inf if limit is None else int(limit)
        self.spent = 0

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        self.remaining -= amount
        if self.remaining < 0:
            raise SearchBudgetExceeded(self.spent)


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colours in ``{0, 1, .., k}``; 0 means uncoloured."""

    colors: tuple[int, ...]

    @staticmethod
    def of(values: Sequence[int]) -> "Coloring":
        return Coloring(tuple(values))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def colored_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c)


def _colors_of(c: Coloring | Sequence[int]) -> tuple[int, ...]:
    if isinstance(c, Coloring):
        return c.colors
    return tuple(c)


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    """First-fit colouring along ``order``, which must cover every vertex once."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertex set")
    colors = [0] * g.n
    adj = g.adj
    for v in order:
        used = 0
        for u in bits(adj[v]):
            used |= 1 << colors[u]
        c = 1
        while used >> c & 1:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def greedy_color_subset(g: Graph, order: Sequence[int]) -> Coloring:
    """First-fit over a sequence of distinct vertices; the rest stay uncoloured."""
    order = tuple(order)
    if len(set(order)) != len(order):
        raise ValueError("order repeats a vertex")
    colors = [0] * g.n
    adj = g.adj
    for v in order:
        used = 0
        for u in bits(adj[v]):
            used |= 1 << colors[u]
        c = 1
        while used >> c & 1:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def validate_grundy(g: Graph, coloring: Coloring | Sequence[int], subset_mode: bool = False) -> bool:
    """Check the Grundy property: proper, and every coloured vertex of colour
    ``i`` sees every colour below ``i`` among coloured neighbours.

    With ``subset_mode`` uncoloured vertices are ignored entirely; without it
    any uncoloured vertex fails the check. Structurally invalid input returns
    ``False`` rather than raising.
    """
    colors = _colors_of(coloring)
    if len(colors) != g.n or any(c < 0 for c in colors):
        return False
    if not subset_mode and any(c == 0 for c in colors):
        return False
    for v in range(g.n):
        c = colors[v]
        if c == 0:
            continue
        seen = 0
        for u in bits(g.adj[v]):
            seen |= 1 << colors[u]
        if seen >> c & 1:
            return False  # improper
        if (seen | 1) & ((1 << c) - 1) != (1 << c) - 1:
            return False  # some colour below c is missing
    return True


def validate_partial_grundy(g: Graph, coloring: Coloring | Sequence[int]) -> bool:
    """Check for a proper surjective colouring with a Grundy vertex per class.

    Non-total or non-surjective input returns ``False``.
    """
    colors = _colors_of(coloring)
    if len(colors) != g.n or any(c <= 0 for c in colors):
        return False
    k = max(colors, default=0)
    if set(colors) != set(range(1, k + 1)):
        return False
    witnessed = [False] * (k + 1)
    for v in range(g.n):
        c = colors[v]
        seen = 0
        for u in bits(g.adj[v]):
            seen |= 1 << colors[u]
        if seen >> c & 1:
            return False
        if (seen | 1) & ((1 << c) - 1) == (1 << c) - 1:
            witnessed[c] = True
    return all(witnessed[1:])


def grundy_oracle(g: Graph) -> int:
    """Exact Grundy number by maximising greedy over every vertex ordering.

    Exponential by construction; limited to 9 vertices. Stops early only on
    reaching max degree + 1, which no colouring can exceed.
    """
    n = g.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"the factorial oracle is limited to {ORACLE_MAX_N} vertices, got {n}")
    if n == 0:
        return 0
    nbrs = [tuple(bits(row)) for row in g.adj]
    ceiling = g.max_degree() + 1
    best = 0
    for perm in permutations(range(n)):
        colors = [0] * n
        mx = 0
        for v in perm:
            used = 0
            for u in nbrs[v]:
                used |= 1 << colors[u]
            c = 1
            while used >> c & 1:
                c += 1
            colors[v] = c
            if c > mx:
                mx = c
        if mx > best:
            best = mx
            if best == ceiling:
                break
    return best


# -- pruned exact solver -----------------------------------------------------


class _Found(Exception):
    pass


def _max_cover(adj_v: int, colors: list[int], adj: tuple[int, ...], caps: list[int]) -> int:
    """Largest t such that colours 1..t can sit on distinct neighbours.

    Assigned neighbours provide their colour; unassigned ones provide one
    colour up to their cap per equal-neighbourhood class, because such a
    class shares one colour in any Grundy colouring.
    """
    singles = 0
    class_caps = []
    seen_rows = set()
    for u in bits(adj_v):
        c = colors[u]
        if c:
            singles |= 1 << c
        else:
            row = adj[u]
            if row not in seen_rows:
                seen_rows.add(row)
                class_caps.append(caps[u])
    class_caps.sort()
    t = 0
    ptr = 0
    m = len(class_caps)
    c = 1
    while True:
        if singles >> c & 1:
            t = c
        else:
            while ptr < m and class_caps[ptr] < c:
                ptr += 1
            if ptr == m:
                break
            ptr += 1
            t = c
        c += 1
    return t


def _search_component(g: Graph, budget: _Budget) -> tuple[int, tuple[int, ...]]:
    n = g.n
    adj = g.adj
    caps = vertex_color_caps(g)
    global_ub = max(caps)
    nbrs = [tuple(bits(row)) for row in adj]

    best = 0
    best_order: tuple[int, ...] = ()

    def try_order(order: Sequence[int]) -> None:
        nonlocal best, best_order
        col = greedy_color(g, order)
        if col.k > best:
            best = col.k
            best_order = tuple(order)

    rng = random.Random(0xC0FFEE + n)
    seeds = [list(range(n)), list(range(n - 1, -1, -1))]
    by_deg = sorted(range(n), key=g.degree)
    seeds.append(by_deg)
    seeds.append(by_deg[::-1])
    for _ in range(4):
        s = list(range(n))
        rng.shuffle(s)
        seeds.append(s)
    for s in seeds:
        try_order(s)
    if best >= global_ub:
        return best, best_order

    colors = [0] * n
    order_stack: list[int] = []
    visited: set[bytes] = set()

    def state_ub(cur_max: int) -> int:
        ub = cur_max
        for v in range(n):
            if colors[v] or caps[v] <= ub:
                continue
            pot = min(caps[v], 1 + _max_cover(adj[v], colors, adj, caps))
            if pot > ub:
                ub = pot
        return ub

    def rec(cur_max: int) -> None:
        nonlocal best, best_order
        if state_ub(cur_max) <= best:
            return
        cand = []
        seen_rows = set()
        for v in range(n):
            if colors[v]:
                continue
            row = adj[v]
            if row in seen_rows:
                continue  # unassigned twins branch identically
            seen_rows.add(row)
            used = 0
            for u in nbrs[v]:
                used |= 1 << colors[u]
            c = 1
            while used >> c & 1:
                c += 1
            cand.append((-c, v, c))
        cand.sort()
        for _, v, c in cand:
            colors[v] = c
            key = bytes(colors)
            if key in visited:
                colors[v] = 0
                continue
            if len(visited) < _VISITED_LIMIT:
                visited.add(key)
            budget.spend()
            order_stack.append(v)
            new_max = cur_max if c <= cur_max else c
            if new_max > best:
                best = new_max
                best_order = tuple(order_stack)
                if best >= global_ub:
                    raise _Found
            rec(new_max)
            order_stack.pop()
            colors[v] = 0

    try:
        rec(0)
    except _Found:
        pass

    remaining = [v for v in range(n) if v not in set(best_order)]
    full_order = tuple(best_order) + tuple(remaining)
    final = greedy_color(g, full_order)
    assert final.k == best, "witness completion changed the colour count"
    return best, full_order


def _grundy_with_witness(g: Graph, budget: _Budget) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return 0, ()
    comps = sorted(g.components(), key=min)
    if len(comps) == 1:
        return _search_component(g, budget)
    best = 0
    order: list[int] = []
    for comp in comps:
        mapping = sorted(comp)
        sub = g.induced(mapping)
        k, sub_order = _grundy_with_witness(sub, budget)
        best = max(best, k)
        order.extend(mapping[i] for i in sub_order)
    return best, tuple(order)


_exact_cache: dict[Graph, tuple[int, tuple[int, ...]]] = {}


def grundy_witness(g: Graph, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact Grundy number plus a full ordering whose greedy run achieves it.

    Budgeted calls never consult the memo table, so whether they complete
    depends only on the graph and the budget, not on process history.
    """
    if g.n > EXACT_MAX_N:
        raise ValueError(f"exact solver is limited to {EXACT_MAX_N} vertices, got {g.n}")
    if budget is None:
        hit = _exact_cache.get(g)
        if hit is not None:
            return hit
    result = _grundy_with_witness(g, _Budget(budget))
    if len(_exact_cache) < 200_000:
        _exact_cache[g] = result
    return result


def grundy_exact(g: Graph, budget: int | None = None) -> int:
    """Exact Grundy number; agrees with ``grundy_oracle`` wherever both run."""
    return grundy_witness(g, budget)[0]


# -- partial Grundy ------------------------------------------------------------


def _proper_to_set(g: Graph, colors: list[int], v: int, c: int) -> bool:
    for u in bits(g.adj[v]):
        if colors[u] == c:
            return False
    return True


def _partial_grundy_feasible(g: Graph, k: int, budget: _Budget) -> tuple[int, ...] | None:
    n = g.n
    colors = [0] * n
    adj = g.adj
    degs = g.degrees()

    def extend_total() -> tuple[int, ...] | None:
        todo = [v for v in range(n) if colors[v] == 0]
        if not todo:
            return tuple(colors)
        # most-constrained vertex first
        options: list[tuple[int, int, list[int]]] = []
        for v in todo:
            used = 0
            for u in bits(adj[v]):
                used |= 1 << colors[u]
            opts = [c for c in range(1, k + 1) if not used >> c & 1]
            if not opts:
                return None
            options.append((len(opts), v, opts))
        _, v, opts = min(options)
        budget.spend()
        for c in opts:
            colors[v] = c
            got = extend_total()
            if got is not None:
                return got
            colors[v] = 0
        return None

    def solve_covers(w: int, level: int) -> tuple[int, ...] | None:
        missing = 0
        seen = 0
        for u in bits(adj[w]):
            seen |= 1 << colors[u]
        for j in range(1, level):
            if not seen >> j & 1:
                missing = j
                break
        if not missing:
            return solve_class(level - 1)
        budget.spend()
        for u in bits(adj[w]):
            if colors[u] == 0 and _proper_to_set(g, colors, u, missing):
                colors[u] = missing
                got = solve_covers(w, level)
                if got is not None:
                    return got
                colors[u] = 0
        return None

    def solve_class(level: int) -> tuple[int, ...] | None:
        if level == 0:
            return extend_total()
        budget.spend()
        for w in range(n):
            if colors[w] == level:
                got = solve_covers(w, level)
                if got is not None:
                    return got
            elif colors[w] == 0 and degs[w] >= level - 1:
                if _proper_to_set(g, colors, w, level):
                    colors[w] = level
                    got = solve_covers(w, level)
                    if got is not None:
                        return got
                    colors[w] = 0
        return None

    return solve_class(k)


_partial_cache: dict[Graph, int] = {}


def partial_grundy_exact(g: Graph, budget: int | None = None) -> int:
    """Largest k with a proper surjective k-colouring holding a Grundy vertex
    in every colour class. Always at least the Grundy number."""
    if g.n > PARTIAL_MAX_N:
        raise ValueError(f"partial Grundy solver is limited to {PARTIAL_MAX_N} vertices, got {g.n}")
    if g.n == 0:
        return 0
    if budget is None:
        hit = _partial_cache.get(g)
        if hit is not None:
            return hit
    tracker = _Budget(budget)
    result = 0
    for k in range(min(g.max_degree() + 1, g.n), 0, -1):
        witness = _partial_grundy_feasible(g, k, tracker)
        if witness is not None:
            assert validate_partial_grundy(g, witness)
            result = k
            break
    _partial_cache[g] = result
    return result
