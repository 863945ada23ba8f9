"""Constructors for the recursive graph families and named base graphs.

Two step-by-step families are supported. The "f3" family starts from the
complete bipartite graph on 2+3 vertices or from the 6-vertex near-bipartite
graph ``K*3,3`` (complete bipartite on 3+3 minus one edge), and grows by
disjoint unions, by edges between vertices of degree at most 2, and by new
vertices attached to three vertices of degree at most 2. Its cubic members
are exactly the connected cubic graphs whose every vertex passes a level-3
twin test. The "gstar" family for parameter r does the same with degree
budget r - 1, new vertices of degree r, and complete bipartite bases
``K(r-k, k+2)`` for 0 <= k <= (r-2)/2; its r-regular members have Grundy
number at most r.

Scripts are serialised one step per line::

    base K2,3
    edge 0 5
    vertex 2 7 9

``base``/``union`` lines graft a named base graph (fresh vertex labels are
appended after the current ones); ``edge u v`` and ``vertex u v w ...`` use
current 0-based labels. Step validation happens at application time and
reports the failing step index and the offending degrees.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from .canon import canonical_form
from .graphs import Graph

# -- named graphs ---------------------------------------------------------------

_NAME_RE = re.compile(r"^([PCKI])(\d+(?:,\d+)*)$")


def build_named(name: str) -> Graph:
    """Fixed-labelling constructor for named graphs.

    Supported: ``Pn`` paths, ``Cn`` cycles, ``In`` edgeless graphs, ``Kn``
    complete graphs, ``Ka,b,...`` complete multipartite graphs with
    consecutive blocks, ``K*3,3`` (complete bipartite 3+3 minus an edge,
    vertex 0 and vertex 5 being the degree-2 ends), and ``petersen``
    (vertices 0-4 the outer cycle, 5-9 the inner five-cycle taken with step
    two, spokes i to i+5).
    """
    label = name.strip()
    if label.lower() == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return Graph.from_edges(10, edges)
    if label == "K*3,3":
        edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
        return Graph.from_edges(6, edges)
    m = _NAME_RE.match(label)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, numbers = m.group(1), [int(x) for x in m.group(2).split(",")]
    if kind == "P":
        (n,) = numbers
        if n < 1:
            raise ValueError("path needs at least one vertex")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "C":
        (n,) = numbers
        if n < 3:
            raise ValueError("cycle needs at least three vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "I":
        (n,) = numbers
        return Graph.empty(n)
    if len(numbers) == 1:
        n = numbers[0]
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    # complete multipartite with consecutive blocks
    n = sum(numbers)
    block = []
    for b, size in enumerate(numbers):
        block.extend([b] * size)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if block[i] != block[j]]
    return Graph.from_edges(n, edges)


# -- build scripts ----------------------------------------------------------------


@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class UnionScript:
    script: "BuildScript"


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int


@dataclass(frozen=True)
class AddVertex:
    neighbors: tuple[int, ...]


Step = Union[Base, UnionScript, AddEdge, AddVertex]


@dataclass(frozen=True)
class BuildScript:
    steps: tuple[Step, ...]


class ScriptError(ValueError):
    """A step broke a family constraint; ``step`` is its index."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class ScriptResult(NamedTuple):
    graph: Graph
    regular: bool


class _Family:
    def __init__(self, degree_limit: int, new_vertex_degree: int, base_keys: dict[bytes, str]):
        self.degree_limit = degree_limit
        self.new_vertex_degree = new_vertex_degree
        self.base_keys = base_keys


def _f3_family() -> _Family:
    bases = {canonical_form(build_named(n)): n for n in ("K2,3", "K*3,3")}
    return _Family(degree_limit=2, new_vertex_degree=3, base_keys=bases)


def _gstar_family(r: int) -> _Family:
    if r < 2:
        raise ValueError("gstar family needs r >= 2")
    bases = {}
    for k in range((r - 2) // 2 + 1):
        name = f"K{r - k},{k + 2}"
        bases[canonical_form(build_named(name))] = name
    return _Family(degree_limit=r - 1, new_vertex_degree=r, base_keys=bases)


def family_base_names(family: str, r: int | None = None) -> list[str]:
    return sorted(_resolve_family(family, r).base_keys.values())


def _resolve_family(family: str, r: int | None) -> _Family:
    if family == "f3":
        return _f3_family()
    if family == "gstar":
        if r is None:
            raise ValueError("gstar family needs the regularity parameter r")
        return _gstar_family(r)
    raise ValueError(f"unknown family {family!r}, expected 'f3' or 'gstar'")


def run_script(script: BuildScript, family: str, r: int | None = None) -> ScriptResult:
    """Execute a build script under the family's step constraints.

    Returns the constructed graph and whether it ended up regular of the
    family's target degree (3 for "f3", r for "gstar").
    """
    fam = _resolve_family(family, r)
    target = fam.new_vertex_degree
    g = Graph.empty(0)
    for idx, step in enumerate(script.steps):
        if isinstance(step, Base):
            try:
                grafted = build_named(step.name)
            except ValueError as exc:
                raise ScriptError(idx, str(exc)) from exc
            if canonical_form(grafted) not in fam.base_keys:
                raise ScriptError(idx, f"{step.name} is not a base of this family")
            g = g.union(grafted)
        elif isinstance(step, UnionScript):
            g = g.union(run_script(step.script, family, r).graph)
        elif isinstance(step, AddEdge):
            u, v = step.u, step.v
            if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
                raise ScriptError(idx, f"bad edge endpoints {u}, {v} (order {g.n})")
            if g.has_edge(u, v):
                raise ScriptError(idx, f"edge {u}-{v} already present")
            du, dv = g.degree(u), g.degree(v)
            if du > fam.degree_limit or dv > fam.degree_limit:
                raise ScriptError(
                    idx,
                    f"edge {u}-{v} joins degrees {du} and {dv}, "
                    f"limit is {fam.degree_limit}",
                )
            g = g.add_edge(u, v)
        elif isinstance(step, AddVertex):
            nbrs = step.neighbors
            if len(set(nbrs)) != len(nbrs):
                raise ScriptError(idx, "repeated attachment vertex")
            if len(nbrs) != target:
                raise ScriptError(idx, f"new vertex needs exactly {target} neighbours")
            for u in nbrs:
                if not 0 <= u < g.n:
                    raise ScriptError(idx, f"attachment vertex {u} out of range")
                if g.degree(u) > fam.degree_limit:
                    raise ScriptError(
                        idx,
                        f"attachment vertex {u} has degree {g.degree(u)}, "
                        f"limit is {fam.degree_limit}",
                    )
            g = g.add_vertex(nbrs)
        else:
            raise ScriptError(idx, f"unknown step {step!r}")
    return ScriptResult(g, g.regularity() == target)


def parse_script(text: str) -> BuildScript:
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        op = parts[0].lower()
        if op in ("base", "union") and len(parts) == 2:
            steps.append(Base(parts[1]))
        elif op == "edge" and len(parts) == 3:
            steps.append(AddEdge(int(parts[1]), int(parts[2])))
        elif op == "vertex" and len(parts) >= 2:
            steps.append(AddVertex(tuple(int(x) for x in parts[1:])))
        else:
            raise ValueError(f"line {lineno}: cannot parse script line {raw!r}")
    return BuildScript(tuple(steps))


def format_script(script: BuildScript) -> str:
    lines = []
    for step in script.steps:
        if isinstance(step, Base):
            lines.append(f"base {step.name}")
        elif isinstance(step, AddEdge):
            lines.append(f"edge {step.u} {step.v}")
        elif isinstance(step, AddVertex):
            lines.append("vertex " + " ".join(str(v) for v in step.neighbors))
        else:
            raise ValueError("nested union scripts have no line form; inline them")
    return "\n".join(lines) + "\n"


# -- the regular family with prescribed Grundy number ------------------------------


def build_G_rki(r: int, k: int, parts: tuple[int, ...], i: int) -> Graph:
    """Connected r-regular graph on 2*i*r vertices with Grundy number k.

    Takes 2*i copies of the complete multipartite graph over ``parts`` (which
    must sum to r and have k-1 entries) and joins equal blocks of adjacent
    copies around a ring: for odd j, block 0 of copy j joins block 0 of copy
    j-1, and every other block l of copy j joins block l of copy j+1, indices
    mod 2*i. Vertex labels are (copy, block, index) flattened in that order.
    """
    if i < 2:
        raise ValueError("need i >= 2")
    if not 3 <= k <= r + 1:
        raise ValueError(f"need 3 <= k <= r + 1, got k={k} r={r}")
    parts = tuple(parts)
    if len(parts) != k - 1 or any(p < 1 for p in parts) or sum(parts) != r:
        raise ValueError(f"parts {parts} must be {k - 1} positive integers summing to {r}")
    copies = 2 * i
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)

    def vid(copy: int, block: int, idx: int) -> int:
        return copy * r + offsets[block] + idx

    edges = []
    for j in range(copies):
        for b1 in range(len(parts)):
            for b2 in range(b1 + 1, len(parts)):
                for x in range(parts[b1]):
                    for y in range(parts[b2]):
                        edges.append((vid(j, b1, x), vid(j, b2, y)))
    for j in range(1, copies, 2):
        for x in range(parts[0]):
            for y in range(parts[0]):
                edges.append((vid(j, 0, x), vid((j - 1) % copies, 0, y)))
        for l in range(1, len(parts)):
            for x in range(parts[l]):
                for y in range(parts[l]):
                    edges.append((vid(j, l, x), vid((j + 1) % copies, l, y)))
    return Graph.from_edges(copies * r, edges)


# -- catalogs and generators ---------------------------------------------------------


def catalog_f3_cubic(max_n: int) -> list[Graph]:
    """Connected cubic f3-family members with at most ``max_n`` vertices.

    Exhaustive closure of the family operations with canonical-form
    deduplication. Any derivation can be reordered so that union steps graft
    plain bases, so grafting bases, adding edges and adding vertices reaches
    every member.
    """
    if max_n > 16:
        raise ValueError("catalog supports at most 16 vertices")
    bases = [build_named("K2,3"), build_named("K*3,3")]
    states: dict[bytes, Graph] = {}
    work: list[Graph] = []

    def push(g: Graph) -> None:
        if g.n > max_n:
            return
        key = canonical_form(g)
        if key not in states:
            states[key] = g
            work.append(g)

    for b in bases:
        push(b)
    while work:
        g = work.pop()
        slots = [v for v in range(g.n) if g.degree(v) <= 2]
        for a in range(len(slots)):
            for b in range(a + 1, len(slots)):
                u, v = slots[a], slots[b]
                if not g.has_edge(u, v):
                    push(g.add_edge(u, v))
        if g.n + 1 <= max_n:
            for a in range(len(slots)):
                for b in range(a + 1, len(slots)):
                    for c in range(b + 1, len(slots)):
                        push(g.add_vertex((slots[a], slots[b], slots[c])))
        for base in bases:
            if g.n + base.n <= max_n:
                push(g.union(base))
    members = [
        g for g in states.values() if g.regularity() == 3 and g.is_connected()
    ]
    return sorted(members, key=lambda g: (g.n, canonical_form(g)))


def catalog_gstar(r: int, max_n: int) -> list[Graph]:
    """Every gstar(r) family member with at most ``max_n`` vertices.

    Same closure idea as :func:`catalog_f3_cubic`, returning all members
    (regular or not) so that non-membership of a given graph can be checked
    exhaustively at small orders.
    """
    if max_n > 16:
        raise ValueError("catalog supports at most 16 vertices")
    fam = _gstar_family(r)
    bases = [build_named(name) for name in sorted(fam.base_keys.values())]
    states: dict[bytes, Graph] = {}
    work: list[Graph] = []

    def push(g: Graph) -> None:
        if g.n > max_n:
            return
        key = canonical_form(g)
        if key not in states:
            states[key] = g
            work.append(g)

    for b in bases:
        push(b)
    while work:
        g = work.pop()
        slots = [v for v in range(g.n) if g.degree(v) <= r - 1]
        for a in range(len(slots)):
            for b in range(a + 1, len(slots)):
                u, v = slots[a], slots[b]
                if not g.has_edge(u, v):
                    push(g.add_edge(u, v))
        if g.n + 1 <= max_n and len(slots) >= r:
            from itertools import combinations

            for chosen in combinations(slots, r):
                push(g.add_vertex(chosen))
        for base in bases:
            if g.n + base.n <= max_n:
                push(g.union(base))
    return sorted(states.values(), key=lambda g: (g.n, canonical_form(g)))


def f3_ring(hubs: int) -> list[tuple[int, ...]]:
    """Connected cubic f3 member of order 16 * hubs, as raw adjacency lists.

    A ring of 3 * hubs bipartite 2+3 blocks: consecutive blocks are tied by
    one edge between degree-2 vertices, and every third block triple shares a
    new hub vertex. Sizes beyond the 64-vertex graph cap are fine, which is
    what the linear classifier benchmark needs.
    """
    if hubs < 1:
        raise ValueError("need at least one hub")
    copies = 3 * hubs
    n = 5 * copies + hubs
    adj: list[set[int]] = [set() for _ in range(n)]

    def connect(u: int, v: int) -> None:
        adj[u].add(v)
        adj[v].add(u)

    for c in range(copies):
        base = 5 * c
        for a in (base, base + 1):
            for b in (base + 2, base + 3, base + 4):
                connect(a, b)
    for c in range(copies):
        connect(5 * c + 3, 5 * ((c + 1) % copies) + 2)
    for h in range(hubs):
        hub = 5 * copies + h
        for c in (3 * h, 3 * h + 1, 3 * h + 2):
            connect(hub, 5 * c + 4)
    return [tuple(sorted(s)) for s in adj]


def f3_ring_script(hubs: int) -> BuildScript:
    """The build script equivalent of :func:`f3_ring` (small sizes only)."""
    copies = 3 * hubs
    steps: list[Step] = [Base("K2,3") for _ in range(copies)]
    for c in range(copies):
        steps.append(AddEdge(5 * c + 3, 5 * ((c + 1) % copies) + 2))
    for h in range(hubs):
        steps.append(AddVertex((5 * (3 * h) + 4, 5 * (3 * h + 1) + 4, 5 * (3 * h + 2) + 4)))
    return BuildScript(tuple(steps))


def random_gstar_script(r: int, max_n: int, rng: random.Random) -> BuildScript:
    """Random valid gstar(r) script, biased towards closing into a regular graph."""
    fam = _gstar_family(r)
    names = sorted(fam.base_keys.values())
    base_order = {name: build_named(name).n for name in names}
    steps: list[Step] = [Base(rng.choice(names))]
    g = run_script(BuildScript(tuple(steps)), "gstar", r).graph

    def apply(step: Step) -> None:
        nonlocal g
        steps.append(step)
        g = run_script(BuildScript(tuple(steps)), "gstar", r).graph

    # growth phase
    grow_moves = rng.randint(0, 6)
    for _ in range(grow_moves):
        choices = []
        fitting_bases = [nm for nm in names if g.n + base_order[nm] <= max_n]
        if fitting_bases:
            choices.append("base")
        slots = [v for v in range(g.n) if g.degree(v) <= r - 1]
        if g.n + 1 <= max_n and len(slots) >= r:
            choices.append("vertex")
        pairs = [
            (u, v)
            for ui, u in enumerate(slots)
            for v in slots[ui + 1:]
            if not g.has_edge(u, v)
        ]
        if pairs:
            choices.append("edge")
        if not choices:
            break
        move = rng.choice(choices)
        if move == "base":
            apply(Base(rng.choice(fitting_bases)))
        elif move == "vertex":
            apply(AddVertex(tuple(sorted(rng.sample(slots, r)))))
        else:
            apply(AddEdge(*rng.choice(pairs)))
    # closing phase: connect deficient vertices while legal
    while True:
        slots = [v for v in range(g.n) if g.degree(v) < r]
        pairs = [
            (u, v)
            for ui, u in enumerate(slots)
            for v in slots[ui + 1:]
            if not g.has_edge(u, v)
        ]
        if not pairs:
            break
        apply(AddEdge(*rng.choice(pairs)))
    return BuildScript(tuple(steps))
