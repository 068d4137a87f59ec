from fractions import Fraction

import pytest

from intervalgraphs import (
    Color,
    ConstructionParams,
    InfeasibleParametersError,
    build_colored_graph,
    colored_canonical_form,
    decode_white_vertex,
    enumerate_family,
    family_size,
    intersection_graph,
    recognize,
    recover_white_indices,
    white_family,
)


def feasible_pairs(max_n, max_k):
    out = []
    for n in range(3, max_n + 1):
        for k in range(1, max_k + 1):
            if 2 * k < n and n - 2 * k <= k * k:
                out.append((n, k))
    return out


def test_params_validation():
    with pytest.raises(InfeasibleParametersError):
        ConstructionParams(4, 1)  # needs 2 whites, only 1 exists
    with pytest.raises(ValueError):
        ConstructionParams(4, 2)  # k not below n/2
    with pytest.raises(ValueError):
        ConstructionParams(10, 0)
    with pytest.raises(ValueError):
        ConstructionParams(5, 2, Fraction(1, 2))
    with pytest.raises(ValueError):
        ConstructionParams(5, 2, Fraction(0))


def test_wrong_white_count_rejected():
    p = ConstructionParams(5, 2)  # needs exactly 1 white
    with pytest.raises(ValueError):
        build_colored_graph(p, [(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        build_colored_graph(p, [])
    p2 = ConstructionParams(6, 2)
    with pytest.raises(ValueError):
        build_colored_graph(p2, [(1, 1), (1, 1)])  # duplicate
    with pytest.raises(ValueError):
        build_colored_graph(p2, [(1, 1), (3, 1)])  # out of range


def test_minimal_member_edges():
    # n=5, k=2, single white (1,1): the white meets exactly B_1 and R_1
    member = build_colored_graph(ConstructionParams(5, 2), [(1, 1)])
    g = member.graph
    # vertex order: B1 B2 R1 R2 w
    assert sorted(g.edges()) == [(0, 4), (2, 4)]
    assert member.colors == (
        Color.BLUE,
        Color.BLUE,
        Color.RED,
        Color.RED,
        Color.WHITE,
    )
    # scaled geometry: eps=1/4 means scale 8, so w = [-8, 8], B1 = [-10, -6]
    assert member.realization[4] == (-8, 8)
    assert member.realization[0] == (-10, -6)


def test_adjacency_rule_matches_geometry():
    for n, k in feasible_pairs(14, 4):
        for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
            params = ConstructionParams(n, k, eps)
            for member in enumerate_family(params):
                assert intersection_graph(member.realization).rows == member.graph.rows


def test_epsilon_never_changes_the_graph():
    params_by_eps = [
        ConstructionParams(9, 3, eps)
        for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(2, 5))
    ]
    families = [
        [m.graph.rows for m in enumerate_family(p)] for p in params_by_eps
    ]
    assert all(f == families[0] for f in families[1:])


def test_anchor_and_white_structure():
    params = ConstructionParams(10, 3)
    for member in enumerate_family(params):
        g = member.graph
        blues = member.colored.color_class(Color.BLUE)
        reds = member.colored.color_class(Color.RED)
        whites = member.colored.color_class(Color.WHITE)
        for cls in (blues, reds):
            assert not any(g.has_edge(u, v) for u in cls for v in cls if u < v)
        assert all(
            g.has_edge(u, v) for u in whites for v in whites if u < v
        )
        # no blue-red edges either: anchors are pairwise disjoint
        assert not any(g.has_edge(u, v) for u in blues for v in reds)


def test_decode_white_vertex():
    member = build_colored_graph(ConstructionParams(5, 2), [(1, 1)])
    assert decode_white_vertex(member, 4) == (1, 1)
    with pytest.raises(ValueError):
        decode_white_vertex(member, 0)  # blue vertex

    # degrees read the interval straight off: (a, b) = (2, 3) -> [-2, 3]
    params = ConstructionParams(8, 3)
    m = build_colored_graph(params, [(2, 3), (1, 1)])
    w23 = 6 + sorted([(2, 3), (1, 1)]).index((2, 3))
    assert decode_white_vertex(m, w23) == (2, 3)
    assert m.realization[w23] == (-2 * params.scale, 3 * params.scale)


def test_recover_examples():
    assert recover_white_indices(
        build_colored_graph(ConstructionParams(5, 2), [(2, 1)])
    ) == {(2, 1)}
    assert recover_white_indices(
        build_colored_graph(ConstructionParams(6, 2), [(1, 2), (2, 2)])
    ) == {(1, 2), (2, 2)}


def test_recover_round_trip_exhaustive():
    from itertools import combinations

    for n, k in ((7, 2), (10, 3)):
        params = ConstructionParams(n, k)
        pool = white_family(params).indices()
        count = 0
        for chosen in combinations(pool, params.white_count):
            member = build_colored_graph(params, chosen)
            assert recover_white_indices(member) == set(chosen)
            count += 1
        assert count == family_size(n, k)


def test_family_size_values():
    assert family_size(10, 3) == 126
    assert family_size(7, 2) == 4
    assert family_size(5, 2) == 4
    assert family_size(4, 1) == 0  # infeasible: zero members
    with pytest.raises(ValueError):
        family_size(4, 2)
    with pytest.raises(ValueError):
        family_size(10, 0)


def test_enumerate_family_counts_and_distinctness():
    params = ConstructionParams(7, 2)
    members = list(enumerate_family(params))
    assert len(members) == 4
    codes = {colored_canonical_form(m.colored) for m in members}
    assert len(codes) == 4
    # full white family: exactly one member
    full = ConstructionParams(8, 2)  # n - 2k = 4 = k^2
    assert len(list(enumerate_family(full))) == 1


def test_members_are_interval_graphs():
    for member in enumerate_family(ConstructionParams(9, 3)):
        assert recognize(member.graph).is_interval


def test_counting_inequality_small():
    from intervalgraphs import count_interval_graphs

    for n in range(3, 7):
        i_n = count_interval_graphs(n).i_n
        for k in range(1, (n - 1) // 2 + 1):
            size = family_size(n, k)
            assert i_n * 3**n >= size
