import random

import pytest

from grundylab.graph6 import Graph6Error, parse_graph6, write_graph6
from grundylab.graphs import Graph

from helpers import graph_edges, random_graph, reference_decode_graph6


def test_hand_decoded_star():
    # 'D?{' is 5 vertices; bits 000000 111100 put vertex 4 adjacent to 0,1,2,3
    g = parse_graph6("D?{")
    assert g.n == 5
    assert graph_edges(g) == {(0, 4), (1, 4), (2, 4), (3, 4)}


def test_one_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.num_edges() == 0
    assert write_graph6(g) == "@"


def test_k4_both_ways():
    g = parse_graph6("C~")
    assert g.n == 4 and g.num_edges() == 6
    assert write_graph6(g) == "C~"


def test_optional_prefix():
    assert parse_graph6(">>graph6<<C~") == parse_graph6("C~")


def test_roundtrip_random_graphs():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randint(0, 16)
        g = random_graph(n, rng.choice([0.1, 0.3, 0.5, 0.8]), rng)
        assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_matches_reference_decoder():
    rng = random.Random(43)
    for _ in range(300):
        g = random_graph(rng.randint(1, 14), 0.4, rng)
        n, edges = reference_decode_graph6(write_graph6(g))
        assert n == g.n and edges == graph_edges(g)


def test_extended_header_orders_63_and_64():
    rng = random.Random(44)
    for n in (63, 64):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.1]
        g = Graph.from_edges(n, edges)
        text = write_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g
        n_ref, edges_ref = reference_decode_graph6(text)
        assert n_ref == n and edges_ref == graph_edges(g)


def test_malformed_character_reports_offset():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("C" + chr(20))
    assert err.value.offset == 1


def test_truncated_bit_field_reports_offset():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("E?")  # 6 vertices needs 3 data characters
    assert err.value.offset == 2


def test_trailing_garbage_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")


def test_order_above_cap_rejected():
    # extended header with n = 65
    text = "~" + chr(63) + chr(63 + 1) + chr(63 + 1)
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_nonzero_padding_rejected():
    # K2 is 'A_' (bit 1 then zero padding); force a padding bit on
    bad = "A" + chr(63 + 0b111111)
    with pytest.raises(Graph6Error):
        parse_graph6(bad)
