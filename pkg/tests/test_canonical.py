import random
from itertools import combinations

import pytest

from intervalgraphs import (
    CanonicalSizeError,
    Color,
    ColoredGraph,
    Graph,
    canonical_form,
    code_hex,
    colored_canonical_form,
    decode_canonical,
)

from oracles import ALL_GRAPH_COUNTS, brute_isomorphic, unlabeled_graphs


def p3(order):
    edges = [(order[0], order[1]), (order[1], order[2])]
    return Graph.from_edges(3, edges)


def test_relabeling_invariance():
    assert canonical_form(p3((0, 1, 2))) == canonical_form(p3((1, 0, 2)))
    assert canonical_form(p3((2, 0, 1))) == canonical_form(p3((0, 2, 1)))


def test_distinct_classes_distinct_codes():
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(k3) != canonical_form(p3((0, 1, 2)))


def test_color_classes_distinguish():
    k2 = Graph.from_edges(2, [(0, 1)])
    all_blue = ColoredGraph(k2, (Color.BLUE, Color.BLUE))
    blue_red = ColoredGraph(k2, (Color.BLUE, Color.RED))
    assert colored_canonical_form(all_blue) != colored_canonical_form(blue_red)
    # swapping which endpoint is blue is a color-preserving relabeling
    red_blue = ColoredGraph(k2, (Color.RED, Color.BLUE))
    assert colored_canonical_form(blue_red) == colored_canonical_form(red_blue)


def test_colored_code_sees_structure_not_labeling():
    g = Graph.from_edges(3, [(0, 1)])
    a = ColoredGraph(g, (Color.WHITE, Color.BLUE, Color.BLUE))
    # color-isomorphic: white joined to one blue, the other blue isolated
    h = Graph.from_edges(3, [(0, 2)])
    b = ColoredGraph(h, (Color.WHITE, Color.BLUE, Color.BLUE))
    assert colored_canonical_form(a) == colored_canonical_form(b)
    # not color-isomorphic: here the white vertex is the isolated one
    i = Graph.from_edges(3, [(1, 2)])
    c = ColoredGraph(i, (Color.WHITE, Color.BLUE, Color.BLUE))
    assert colored_canonical_form(a) != colored_canonical_form(c)


def test_class_counts_match_reference():
    for n, expected in enumerate(ALL_GRAPH_COUNTS):
        assert len(unlabeled_graphs(n)) == expected


def test_complete_invariant_small_n():
    # all pairs of class representatives up to n=4: distinct codes and
    # genuinely non-isomorphic by brute force
    for n in range(5):
        reps = unlabeled_graphs(n)
        for g, h in combinations(reps, 2):
            assert canonical_form(g) != canonical_form(h)
            assert not brute_isomorphic(g, h)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_random_relabelings_agree(n):
    rng = random.Random(n)
    reps = unlabeled_graphs(n)
    for _ in range(60):
        g = rng.choice(reps)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(
            n, [(perm[u], perm[v]) for u, v in g.edges()]
        )
        assert canonical_form(relabeled) == canonical_form(g)


def test_decode_round_trip():
    for g in unlabeled_graphs(5):
        code = canonical_form(g)
        back = decode_canonical(code)
        assert canonical_form(back) == code


def test_size_limit():
    big = Graph(17, (0,) * 17)
    with pytest.raises(CanonicalSizeError):
        canonical_form(big)
    assert canonical_form(big, limit=17) == canonical_form(big, limit=20)


def test_symmetric_graphs_are_cheap():
    # highly symmetric inputs must not blow up the search
    empty = Graph(10, (0,) * 10)
    full_rows = tuple(((1 << 10) - 1) ^ (1 << v) for v in range(10))
    complete = Graph(10, full_rows)
    assert canonical_form(empty) != canonical_form(complete)
    five_k2 = Graph.from_edges(10, [(2 * i, 2 * i + 1) for i in range(5)])
    assert decode_canonical(canonical_form(five_k2)).edge_count() == 5


def test_code_hex():
    g = Graph.from_edges(2, [(0, 1)])
    code = canonical_form(g)
    assert code_hex(code) == code.hex()
    assert code_hex(code).islower() or code_hex(code).isdigit()
