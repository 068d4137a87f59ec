import pytest

from intervalgraphs import Graph, Graph6Error, emit_graph6, parse_graph6

from oracles import unlabeled_graphs


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count() == 0
    assert emit_graph6(g) == "@"


def test_k2():
    g = parse_graph6("A_")
    assert g.n == 2 and g.has_edge(0, 1)
    assert emit_graph6(g) == "A_"


def test_header_stripped():
    assert parse_graph6(">>graph6<<A_").has_edge(0, 1)


def test_empty_graph_zero_vertices():
    g = parse_graph6("?")
    assert g.n == 0
    assert emit_graph6(g) == "?"


def test_round_trip_all_n5_classes():
    for g in unlabeled_graphs(5):
        text = emit_graph6(g)
        back = parse_graph6(text)
        assert back.rows == g.rows
        assert emit_graph6(back) == text


def test_against_reference_implementation():
    nx = pytest.importorskip("networkx")
    for n in range(6):
        for g in unlabeled_graphs(n):
            ours = emit_graph6(g)
            ng = nx.Graph()
            ng.add_nodes_from(range(g.n))
            ng.add_edges_from(g.edges())
            theirs = nx.to_graph6_bytes(ng, header=False).decode().strip()
            assert ours == theirs
            parsed = nx.from_graph6_bytes(ours.encode())
            assert set(parsed.edges()) == set(g.edges())


def test_four_byte_size_header():
    g = Graph(63, tuple([2] + [1] + [0] * 61))
    text = emit_graph6(g)
    assert text.startswith("~")
    back = parse_graph6(text)
    assert back.n == 63 and back.has_edge(0, 1)


def test_malformed_inputs():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("A")  # n=2 but edge byte missing
    with pytest.raises(Graph6Error):
        parse_graph6("A__")  # trailing garbage
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(30))  # byte below 63
    with pytest.raises(Graph6Error):
        parse_graph6("AO")  # nonzero padding bits
    with pytest.raises(Graph6Error):
        parse_graph6("~??@")  # long header for n <= 62
    with pytest.raises(Graph6Error):
        parse_graph6("Aé")  # non-ascii
