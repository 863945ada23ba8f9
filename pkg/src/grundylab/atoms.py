"""t-atom catalogs and induced-atom detection.

A 1-atom is the single vertex. A graph is a (t+1)-atom when it consists of a
t-atom plus an independent set of at most as many new vertices, wired so that
every old vertex gains at least one new neighbour. Peeling the layers in
reverse order yields a full Grundy colouring using t+1 colours (the last
layer takes colour 1), so every t-atom certifies Grundy number at least t;
conversely a graph has Grundy number at least t exactly when it contains a
minimal t-atom as an induced subgraph.

Catalogs here can be capped by maximum degree and maximum order. Both caps
are closed under the recursion (layers never shrink degrees or orders), and
an atom can only contain smaller atoms of no larger degree, so a capped
catalog is complete within its caps, its minimal members are exactly the
globally minimal atoms within the caps, and matching against a host graph
needs nothing outside the host's own degree and order. Unrestricted
enumeration is practical through level 4; level 5 and up needs caps because
the number of wiring patterns explodes with the order of the base atom.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_form
from .graphs import Graph, bits

MAX_LEVEL = 6


@dataclass
class AtomCatalog:
    """All atoms of one level, keyed by canonical form."""

    level: int
    max_degree: int | None
    max_order: int | None
    atoms: dict[bytes, Graph]
    witnesses: dict[bytes, tuple[int, ...]] = field(default_factory=dict)
    minimal_only: bool = False

    def __len__(self) -> int:
        return len(self.atoms)

    def graphs(self) -> list[Graph]:
        """Members ordered by (order, canonical key)."""
        return [g for _, g in sorted(self.atoms.items(), key=lambda kv: (kv[1].n, kv[0]))]

    def max_member_order(self) -> int:
        return max((g.n for g in self.atoms.values()), default=0)


def enumerate_atoms(
    t: int,
    max_degree: int | None = None,
    max_order: int | None = None,
) -> AtomCatalog:
    """One representative per isomorphism class of t-atoms within the caps."""
    if t < 1:
        raise ValueError("atom level must be at least 1")
    if t > MAX_LEVEL:
        raise ValueError(f"atom level {t} above supported bound {MAX_LEVEL}")
    if t >= 5 and max_degree is None and max_order is None:
        raise ValueError(
            "unrestricted enumeration above level 4 is not tractable; "
            "pass max_degree or max_order"
        )
    k1 = Graph.empty(1)
    atoms = {canonical_form(k1): k1}
    witnesses = {canonical_form(k1): (1,)}
    level = 1
    while level < t:
        atoms, witnesses = _expand_level(atoms, witnesses, max_degree, max_order)
        level += 1
    return AtomCatalog(t, max_degree, max_order, atoms, witnesses)


def _expand_level(
    prev_atoms: dict[bytes, Graph],
    prev_witness: dict[bytes, tuple[int, ...]],
    max_degree: int | None,
    max_order: int | None,
) -> tuple[dict[bytes, Graph], dict[bytes, tuple[int, ...]]]:
    out: dict[bytes, Graph] = {}
    wit: dict[bytes, tuple[int, ...]] = {}
    for key, base in sorted(prev_atoms.items(), key=lambda kv: (kv[1].n, kv[0])):
        p = base.n
        if max_order is not None and p + 1 > max_order:
            continue
        degs = base.degrees()
        if max_degree is not None and any(d >= max_degree for d in degs):
            continue  # some old vertex could not gain its required new neighbour
        m_hi = p if max_order is None else min(p, max_order - p)
        if m_hi < 1:
            continue
        headroom = [
            (max_degree - d) if max_degree is not None else p for d in degs
        ]
        col_cap = max_degree if max_degree is not None else p
        candidates = [
            mask for mask in range((1 << p) - 1, -1, -1) if mask.bit_count() <= col_cap
        ]
        suffix_union = [0] * (len(candidates) + 1)
        for i in range(len(candidates) - 1, -1, -1):
            suffix_union[i] = suffix_union[i + 1] | candidates[i]
        full = (1 << p) - 1
        shifted = tuple(c + 1 for c in prev_witness[key])
        chosen: list[int] = []

        def emit() -> None:
            g = base
            for mask in chosen:
                g = g.add_vertex_mask(mask)
            gkey = canonical_form(g)
            if gkey not in out:
                out[gkey] = g
                wit[gkey] = shifted + (1,) * len(chosen)

        def grow(start: int, covered: int) -> None:
            if len(chosen) == m_hi:
                return
            for i in range(start, len(candidates)):
                mask = candidates[i]
                remaining = m_hi - len(chosen) - 1
                need = full & ~(covered | mask)
                if need and (remaining == 0 or need & ~suffix_union[i]):
                    if mask == 0:
                        break  # only empty columns remain, coverage unreachable
                    continue
                if mask and any(headroom[v] < 1 for v in bits(mask)):
                    continue
                for v in bits(mask):
                    headroom[v] -= 1
                chosen.append(mask)
                if (covered | mask) == full:
                    emit()
                grow(i, covered | mask)
                chosen.pop()
                for v in bits(mask):
                    headroom[v] += 1

        grow(0, 0)
    return out, wit


def minimal_atoms(catalog: AtomCatalog) -> AtomCatalog:
    """The members containing no other same-level atom as induced subgraph."""
    minimal: dict[bytes, Graph] = {}
    for key, g in sorted(catalog.atoms.items(), key=lambda kv: (kv[1].n, kv[0])):
        if any(find_induced_embedding(g, small) is not None for small in minimal.values()):
            continue
        minimal[key] = g
    return AtomCatalog(
        catalog.level,
        catalog.max_degree,
        catalog.max_order,
        minimal,
        {k: w for k, w in catalog.witnesses.items() if k in minimal},
        minimal_only=True,
    )


_minimal_cache: dict[tuple[int, int, int], AtomCatalog] = {}


def _minimal_for_host(t: int, max_degree: int, max_order: int) -> AtomCatalog:
    key = (t, max_degree, max_order)
    hit = _minimal_cache.get(key)
    if hit is None:
        hit = minimal_atoms(enumerate_atoms(t, max_degree=max_degree, max_order=max_order))
        _minimal_cache[key] = hit
    return hit


def has_induced_minimal_atom(g: Graph, t: int) -> bool:
    """Whether some minimal t-atom embeds in ``g`` as an induced subgraph.

    Equivalent to the Grundy number of ``g`` being at least ``t``. The
    catalog is capped by the host's own degree and order, which loses
    nothing: an induced subgraph can exceed neither.
    """
    if t < 1:
        raise ValueError("atom level must be at least 1")
    if t == 1:
        return g.n >= 1
    if g.n == 0:
        return False
    catalog = _minimal_for_host(t, g.max_degree(), g.n)
    for atom in catalog.graphs():
        if find_induced_embedding(g, atom) is not None:
            return True
    return False


def is_layered_atom(g: Graph, t: int) -> bool:
    """Certify atom membership by searching for a valid layer decomposition."""
    memo: dict[tuple[bytes, int], bool] = {}

    def check(h: Graph, level: int) -> bool:
        if level == 1:
            return h.n == 1
        if h.n < 2:
            return False
        key = (canonical_form(h), level)
        hit = memo.get(key)
        if hit is not None:
            return hit
        n = h.n
        result = False
        for mask in range(1, 1 << n):
            m = mask.bit_count()
            if 2 * m > n:
                continue
            members = list(bits(mask))
            if any(h.adj[v] & mask for v in members):
                continue  # not independent
            rest = [v for v in range(n) if not mask >> v & 1]
            if any(not h.adj[v] & mask for v in rest):
                continue  # some old vertex gains no new neighbour
            if check(h.induced(rest), level - 1):
                result = True
                break
        memo[key] = result
        return result

    return check(g, t)


def pendant_doubling_atom(t: int) -> tuple[Graph, tuple[int, ...]]:
    """The t-atom built by matching a private new vertex to every old one.

    Doubles the order each level, so level t has 2^(t-1) vertices; the result
    is a tree of maximum degree t - 1 (the binomial tree), and the returned
    colouring is its layered Grundy witness.
    """
    if t < 1:
        raise ValueError("atom level must be at least 1")
    g = Graph.empty(1)
    witness: tuple[int, ...] = (1,)
    for _ in range(t - 1):
        p = g.n
        for v in range(p):
            g = g.add_vertex_mask(1 << v)
        witness = tuple(w + 1 for w in witness) + (1,) * p
    return g, witness


# -- induced subgraph matcher --------------------------------------------------


def find_induced_embedding(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Map pattern vertices to host vertices preserving edges and non-edges.

    Backtracking over a connectivity-first pattern order, with candidate
    masks cut by degree and by adjacency to already-placed vertices.
    """
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return None
    if np_ == 0:
        return ()
    pdeg = pattern.degrees()
    hdeg = host.degrees()

    order: list[int] = []
    placed_mask = 0
    first = max(range(np_), key=lambda v: (pdeg[v], -v))
    order.append(first)
    placed_mask |= 1 << first
    while len(order) < np_:
        best = -1
        best_score = (-1, -1, 0)
        for v in range(np_):
            if placed_mask >> v & 1:
                continue
            back = (pattern.adj[v] & placed_mask).bit_count()
            score = (back, pdeg[v], -v)
            if score > best_score:
                best_score = score
                best = v
        order.append(best)
        placed_mask |= 1 << best

    pos_of = {v: i for i, v in enumerate(order)}
    back_adj: list[list[int]] = []
    back_non: list[list[int]] = []
    for i, v in enumerate(order):
        adjs = []
        nons = []
        for j in range(i):
            u = order[j]
            if pattern.adj[v] >> u & 1:
                adjs.append(j)
            else:
                nons.append(j)
        back_adj.append(adjs)
        back_non.append(nons)

    deg_ok = [0] * np_
    for i, v in enumerate(order):
        mask = 0
        for h in range(nh):
            if hdeg[h] >= pdeg[v]:
                mask |= 1 << h
        deg_ok[i] = mask

    images = [0] * np_
    used = 0
    full_host = (1 << nh) - 1

    def dfs(i: int) -> bool:
        nonlocal used
        if i == np_:
            return True
        cand = deg_ok[i] & ~used
        for j in back_adj[i]:
            cand &= host.adj[images[j]]
        for j in back_non[i]:
            cand &= ~host.adj[images[j]]
        cand &= full_host
        for h in bits(cand):
            images[i] = h
            used |= 1 << h
            if dfs(i + 1):
                return True
            used &= ~(1 << h)
        return False

    if not dfs(0):
        return None
    mapping = [0] * np_
    for v in range(np_):
        mapping[v] = images[pos_of[v]]
    return tuple(mapping)


def has_induced_subgraph(host: Graph, pattern: Graph) -> bool:
    return find_induced_embedding(host, pattern) is not None


# -- catalog files ---------------------------------------------------------------


def write_catalog(catalog: AtomCatalog, path: str) -> None:
    """One atom per line in graph6, after a 't=<level> minimal=<0|1>' header."""
    from .graph6 import write_graph6

    with open(path, "w") as fh:
        fh.write(f"t={catalog.level} minimal={1 if catalog.minimal_only else 0}\n")
        for g in catalog.graphs():
            fh.write(write_graph6(g) + "\n")


def read_catalog(path: str) -> AtomCatalog:
    from .graph6 import parse_graph6

    with open(path) as fh:
        header = fh.readline().strip()
        parts = dict(item.split("=", 1) for item in header.split())
        if "t" not in parts or "minimal" not in parts:
            raise ValueError(f"bad catalog header: {header!r}")
        level = int(parts["t"])
        minimal_only = parts["minimal"] == "1"
        atoms: dict[bytes, Graph] = {}
        for line in fh:
            line = line.strip()
            if not line:
                continue
            g = parse_graph6(line)
            atoms[canonical_form(g)] = g
    return AtomCatalog(level, None, None, atoms, minimal_only=minimal_only)
