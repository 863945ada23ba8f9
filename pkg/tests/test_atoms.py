import random

import pytest

from grundylab.atoms import (
    AtomCatalog,
    enumerate_atoms,
    find_induced_embedding,
    has_induced_minimal_atom,
    has_induced_subgraph,
    is_layered_atom,
    minimal_atoms,
    pendant_doubling_atom,
    read_catalog,
    write_catalog,
)
from grundylab.canon import canonical_form
from grundylab.families import build_named
from grundylab.generate import all_graphs
from grundylab.solver import grundy_exact, validate_grundy

from helpers import random_graph


def test_level_one_and_two():
    a1 = enumerate_atoms(1)
    assert [g.n for g in a1.graphs()] == [1]
    a2 = enumerate_atoms(2)
    assert len(a2) == 1
    (k2,) = a2.graphs()
    assert k2.n == 2 and k2.num_edges() == 1


def test_level_three_catalog():
    a3 = enumerate_atoms(3)
    assert len(a3) == 5
    assert a3.max_member_order() == 4
    m3 = minimal_atoms(a3)
    expected = {canonical_form(build_named("K3")), canonical_form(build_named("P4"))}
    assert set(m3.atoms) == expected


def test_minimal_three_atoms_by_independent_enumeration():
    # a minimal level-3 atom is a graph with Grundy number >= 3 none of whose
    # proper induced subgraphs reaches 3; enumerate all graphs up to order 4
    found = set()
    for n in range(1, 5):
        for g in all_graphs(n):
            if grundy_exact(g) < 3:
                continue
            proper = False
            for keep in range(1 << g.n):
                if keep.bit_count() in (0, g.n):
                    continue
                sub = g.induced([v for v in range(g.n) if keep >> v & 1])
                if grundy_exact(sub) >= 3:
                    proper = True
                    break
            if not proper:
                found.add(canonical_form(g))
    m3 = minimal_atoms(enumerate_atoms(3))
    assert found == set(m3.atoms)


def test_level_four_full_catalog():
    a4 = enumerate_atoms(4)
    assert a4.max_member_order() == 8
    # every member certifies Grundy number at least 4 via its layer colouring
    rng = random.Random(71)
    members = a4.graphs()
    sample = rng.sample(members, 60)
    for g in sample:
        key = canonical_form(g)
        witness = a4.witnesses[key]
        assert validate_grundy(g, witness)
        assert max(witness) == 4
    for g in rng.sample(members, 25):
        assert grundy_exact(g) >= 4


def test_layer_witnesses_all_validate_level3():
    a3 = enumerate_atoms(3)
    for key, g in a3.atoms.items():
        assert validate_grundy(g, a3.witnesses[key])


def test_catalog_closure_under_layer_stripping():
    for level in (3, 4):
        catalog = enumerate_atoms(level)
        prev_keys = set(enumerate_atoms(level - 1).atoms)
        for key, g in catalog.atoms.items():
            witness = catalog.witnesses[key]
            top = [v for v, c in enumerate(witness) if c > 1]
            assert canonical_form(g.induced(top)) in prev_keys


def test_unrestricted_level_five_is_rejected():
    with pytest.raises(ValueError):
        enumerate_atoms(5)
    with pytest.raises(ValueError):
        enumerate_atoms(7, max_degree=3)


def test_degree_capped_level_five_contains_doubling_tree():
    t5, witness = pendant_doubling_atom(5)
    assert t5.n == 16 and t5.max_degree() == 4
    assert validate_grundy(t5, witness)
    assert is_layered_atom(t5, 5)
    assert not is_layered_atom(t5, 6)
    # the doubling construction realises the maximum order at every level:
    # each layer at most doubles, so level 5 caps at 16 vertices
    a5_small = enumerate_atoms(5, max_degree=4, max_order=8)
    assert all(g.max_degree() <= 4 for g in a5_small.graphs())


def test_atom_matching_examples():
    assert not has_induced_minimal_atom(build_named("C4"), 3)
    assert has_induced_minimal_atom(build_named("P4"), 3)
    assert not has_induced_minimal_atom(build_named("petersen"), 5)
    assert has_induced_minimal_atom(build_named("petersen"), 4)


def test_matcher_basics():
    host = build_named("petersen")
    assert has_induced_subgraph(host, build_named("C5"))
    assert not has_induced_subgraph(host, build_named("C4"))
    assert not has_induced_subgraph(host, build_named("K3"))
    mapping = find_induced_embedding(host, build_named("P4"))
    assert mapping is not None
    p4 = build_named("P4")
    for u in range(4):
        for v in range(u + 1, 4):
            assert p4.has_edge(u, v) == host.has_edge(mapping[u], mapping[v])


def test_matcher_respects_induced_non_edges():
    from grundylab.graphs import Graph

    # the diamond (K4 minus an edge) has a C4 subgraph but not an induced one
    d = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert not has_induced_subgraph(d, build_named("C4"))
    assert has_induced_subgraph(d, build_named("K3"))


def test_matcher_agrees_with_exhaustive_subsets():
    rng = random.Random(73)
    from itertools import combinations

    from grundylab.canon import are_isomorphic

    for _ in range(40):
        host = random_graph(rng.randint(3, 7), 0.5, rng)
        pattern = random_graph(rng.randint(2, 4), 0.5, rng)
        expected = any(
            are_isomorphic(host.induced(sub), pattern)
            for sub in combinations(range(host.n), pattern.n)
        )
        assert has_induced_subgraph(host, pattern) == expected


def test_catalog_file_roundtrip(tmp_path):
    m3 = minimal_atoms(enumerate_atoms(3))
    path = tmp_path / "atoms3.g6"
    write_catalog(m3, str(path))
    text = path.read_text().splitlines()
    assert text[0] == "t=3 minimal=1"
    back = read_catalog(str(path))
    assert back.level == 3 and back.minimal_only
    assert set(back.atoms) == set(m3.atoms)
