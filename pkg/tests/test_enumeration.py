import pytest

from intervalgraphs import (
    EndpointMatching,
    EnumerationCapError,
    canonical_form,
    count_interval_graphs,
    enumerate_interval_graphs,
    enumerate_matchings,
    intersection_graph,
    realization_from_matching,
    recognize,
)

from oracles import INTERVAL_GRAPH_COUNTS, is_interval_brute, unlabeled_graphs


def double_factorial(n):
    out = 1
    for j in range(1, 2 * n, 2):
        out *= j
    return out


@pytest.mark.parametrize("n,total", [(1, 1), (2, 3), (3, 15), (5, 945)])
def test_matching_totals(n, total):
    seen = set(m.pairs for m in enumerate_matchings(n))
    assert len(seen) == total == double_factorial(n)


def test_matching_validation():
    with pytest.raises(ValueError):
        EndpointMatching(((2, 1),))
    with pytest.raises(ValueError):
        EndpointMatching(((1, 2), (2, 3)))  # position 2 reused, 4 missing


def test_realization_from_matching():
    m = EndpointMatching(((1, 2),))
    assert realization_from_matching(m).intervals == ((1, 2),)
    crossing = intersection_graph(
        realization_from_matching(EndpointMatching(((1, 3), (2, 4))))
    )
    assert crossing.edge_count() == 1
    disjoint = intersection_graph(
        realization_from_matching(EndpointMatching(((1, 2), (3, 4))))
    )
    assert disjoint.edge_count() == 0


def test_counts_small():
    for n in range(1, 7):
        result = count_interval_graphs(n)
        assert result.i_n == INTERVAL_GRAPH_COUNTS[n]
        assert result.matchings_visited == double_factorial(n)


def test_counts_match_brute_force_oracle():
    # n=3: all four classes admit realizations; n=4: exactly C4 fails
    for n in (3, 4):
        expected = sum(1 for g in unlabeled_graphs(n) if is_interval_brute(g))
        assert count_interval_graphs(n).i_n == expected


def test_strict_upper_bound_and_monotonicity():
    counts = {n: count_interval_graphs(n).i_n for n in range(1, 7)}
    for n in range(2, 7):
        assert counts[n] < double_factorial(n)
        assert counts[n - 1] <= counts[n]


def test_dual_route_completeness():
    # sweep codes == codes of recognized-interval classes, for n <= 6
    for n in range(1, 7):
        via_recognize = {
            canonical_form(g)
            for g in unlabeled_graphs(n)
            if recognize(g).is_interval
        }
        assert set(enumerate_interval_graphs(n)) == via_recognize


def test_stream_is_sorted_and_deduped():
    codes = enumerate_interval_graphs(5)
    assert codes == sorted(set(codes))
    assert len(codes) == 27


def test_worker_determinism():
    assert enumerate_interval_graphs(6, workers=1) == enumerate_interval_graphs(
        6, workers=2
    )
    one = count_interval_graphs(6, workers=1)
    two = count_interval_graphs(6, workers=2)
    assert (one.i_n, one.matchings_visited) == (two.i_n, two.matchings_visited)


def test_cap_enforced():
    with pytest.raises(EnumerationCapError):
        count_interval_graphs(11)
    with pytest.raises(EnumerationCapError):
        list(enumerate_matchings(3, cap=2))
    with pytest.raises(ValueError):
        count_interval_graphs(0)
