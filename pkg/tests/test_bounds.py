import json

import pytest

from convex_crossings import (
    BalancedSplit,
    PreconditionError,
    c2_lower_bound,
    max_edges_balanced,
    nu1_bipartite,
    nu1_special,
    per_edge_bound,
    side_maxima_sum,
    total_lower_bound,
)

from oracles import brute_force_min, brute_max_edges


@pytest.mark.parametrize("v, n, expected", [(0, 1, 0), (0, 5, 0), (3, 3, 3), (5, 2, 6)])
def test_max_edges_balanced_examples(v, n, expected):
    assert max_edges_balanced(v, n) == expected


def test_max_edges_balanced_matches_partition_search():
    for v in range(13):
        for n in range(1, 7):
            assert max_edges_balanced(v, n) == brute_max_edges(v, n), (v, n)


def test_balanced_split_record():
    s = BalancedSplit.of(7, 3)
    assert (s.q, s.r) == (2, 1)
    assert s.part_sizes == [3, 2, 2]
    assert s.r * (s.q + 1) + (s.n - s.r) * s.q == s.v
    with pytest.raises(PreconditionError):
        BalancedSplit.of(-1, 2)


def test_per_edge_bound_examples():
    assert per_edge_bound(1, 1, 2) == 0
    assert all(per_edge_bound(k, 4, 1) == 0 for k in range(1, 5))
    # K_{2,2}: 4 edges, 2 at the endpoint, sides of 1 and 2 vertices.
    assert per_edge_bound(2, 2, 2) == 4 - 2 - 0 - 1 == 1
    with pytest.raises(PreconditionError):
        per_edge_bound(0, 2, 2)
    with pytest.raises(PreconditionError):
        per_edge_bound(5, 2, 2)


def test_per_edge_bound_nonnegative_and_symmetric():
    for m in range(1, 16):
        for n in range(1, 16):
            mn = m * n
            bounds = [per_edge_bound(k, m, n) for k in range(1, mn + 1)]
            assert min(bounds) >= 0
            assert bounds == bounds[::-1]


def test_side_maxima_floor_sum_route_matches_direct_sum():
    for m in range(1, 16):
        for n in range(1, 16):
            direct = sum(
                max_edges_balanced(k - 1, n) + max_edges_balanced(m * n - k, n)
                for k in range(1, m * n + 1)
            )
            assert side_maxima_sum(m, n) == direct


@pytest.mark.parametrize(
    "m, n, p, expected", [(1, 2, 1, 0), (2, 2, 2, 2), (1, 2, 2, 0)]
)
def test_c2_examples(m, n, p, expected):
    assert c2_lower_bound(m, n, p) == expected


def test_c2_is_the_bipartite_crossing_number():
    assert c2_lower_bound(2, 2, 2) == brute_force_min([2, 4])
    for m in range(1, 6):
        for n in range(1, 6):
            mn = m * n
            for p in range(1, 3 * mn + 1):
                if mn % p == 0:
                    assert c2_lower_bound(m, n, p) == nu1_bipartite(p, mn)
                elif p % mn == 0:
                    assert c2_lower_bound(m, n, p) == nu1_bipartite(mn, p)
    with pytest.raises(PreconditionError):
        c2_lower_bound(1, 2, 3)


def test_total_lower_bound_examples():
    assert total_lower_bound(1, 2, 1).total == 0
    b = total_lower_bound(2, 2, 2)
    # K_{2,2,2} minus a part: K_{2,2}; special part meets 4 small vertices.
    assert (b.fulek_term, b.c2_term) == (0, 2)
    assert b.per_edge_bounds == [0, 1, 1, 0]
    assert b.c3_term == 2 * 2 == 4
    assert b.total == 6
    assert total_lower_bound(1, 2, 4).total == 2


def test_breakdown_invariants_and_json():
    b = total_lower_bound(3, 2, 3)
    assert b.c3_term == b.p * sum(b.per_edge_bounds)
    assert b.total == b.fulek_term + b.c2_term + b.c3_term
    d = json.loads(b.to_json())
    assert d["total"] == str(b.total)
    assert len(d["per_edge_bounds"]) == 6


def test_lower_bound_reproduces_closed_forms():
    for m in range(1, 11):
        for n in range(1, 11):
            mn = m * n
            for p in range(1, 101):
                if mn % p == 0 or p % mn == 0:
                    assert total_lower_bound(m, n, p).total == nu1_special(m, n, p)[1]
