from itertools import combinations, product
from math import comb

import pytest

from convex_crossings import PartitionSpec, PreconditionError, edge_count_two_block, edges
from convex_crossings.multipartite import total_edges_balanced


def enumerate_edges(sizes):
    classes = [c for c, s in enumerate(sizes) for _ in range(s)]
    return sum(1 for u, v in combinations(range(len(classes)), 2) if classes[u] != classes[v])


@pytest.mark.parametrize(
    "args, expected",
    [((1, 4, 0, 0), 6), ((2, 1, 4, 1), 8), ((2, 3, 0, 0), 12)],
)
def test_edge_count_two_block_examples(args, expected):
    assert edge_count_two_block(*args) == expected


def test_k222_edge_count_by_enumeration():
    assert enumerate_edges([2, 2, 2]) == 12


@pytest.mark.parametrize("a, m_count, b, n_count", list(product(range(5), repeat=4)))
def test_edge_count_two_block_matches_enumeration(a, m_count, b, n_count):
    sizes = [a] * m_count + [b] * n_count
    assert edge_count_two_block(a, m_count, b, n_count) == enumerate_edges(sizes)


def test_edge_count_two_block_rejects_negative():
    with pytest.raises(PreconditionError):
        edge_count_two_block(-1, 1, 1, 1)


@pytest.mark.parametrize("m, n, expected", [(1, 4, 6), (2, 3, 12), (5, 1, 0), (3, 1, 0)])
def test_total_edges_balanced(m, n, expected):
    assert total_edges_balanced(m, n) == expected == enumerate_edges([m] * n)


def test_edges_small_cases():
    assert edges(PartitionSpec((1, 1))) == [(0, 1)]
    assert edges(PartitionSpec((2,))) == []
    assert len(edges(PartitionSpec((2, 1)))) == 2


def _all_specs(max_vertices):
    def rec(remaining, prefix):
        if prefix:
            yield tuple(prefix)
        for s in range(1, remaining + 1):
            yield from rec(remaining - s, prefix + [s])

    yield from rec(max_vertices, [])


def test_edges_count_identity_up_to_12_vertices():
    checked = 0
    for sizes in _all_specs(12):
        spec = PartitionSpec(sizes)
        expected = comb(spec.total_vertices, 2) - sum(comb(s, 2) for s in sizes)
        found = edges(spec)
        assert len(found) == expected == spec.edge_count()
        cls = spec.class_ids()
        assert all(u < v and cls[u] != cls[v] for u, v in found)
        checked += 1
    assert checked == 2**12 - 1


def test_special_constructor_and_block_labels():
    spec = PartitionSpec.special(m=2, n=3, p=4)
    assert spec.sizes == (4, 2, 2, 2)
    assert spec.total_vertices == 10
    assert [spec.class_of(v) for v in range(10)] == [0, 0, 0, 0, 1, 1, 2, 2, 3, 3]
    assert [v.class_id for v in spec.vertices()] == spec.class_ids()
    assert list(spec.members(2)) == [6, 7]


@pytest.mark.parametrize("sizes", [(), (0, 2), (3, -1), (1.5,)])
def test_invalid_sizes_rejected(sizes):
    with pytest.raises(PreconditionError):
        PartitionSpec(sizes)


def test_json_round_trip():
    spec = PartitionSpec((4, 2, 2, 2))
    assert spec.to_json() == "[4, 2, 2, 2]"
    assert PartitionSpec.from_json("[4,2,2,2]") == spec
    with pytest.raises(PreconditionError):
        PartitionSpec.from_json('{"sizes": [1]}')
