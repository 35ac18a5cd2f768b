"""Complete multipartite graphs: partitions, vertices, edges and edge counts.

Vertices are numbered ``0..N-1`` in block order, so the first ``sizes[0]``
ids belong to class 0, the next ``sizes[1]`` to class 1, and so on.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from math import comb
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .errors import PreconditionError


class Vertex(NamedTuple):
    id: int
    class_id: int


@dataclass(frozen=True)
class PartitionSpec:
    """Ordered partite-set sizes of a complete multipartite graph."""

    sizes: Tuple[int, ...]
    _offsets: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        sizes = tuple(self.sizes)
        if not sizes:
            raise PreconditionError("a partition needs at least one partite set")
        for s in sizes:
            if isinstance(s, bool) or not isinstance(s, int):
                raise PreconditionError(f"partite-set sizes must be integers, got {s!r}")
            if s < 1:
                raise PreconditionError(f"partite-set sizes must be >= 1, got {s}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "_offsets", (0,) + tuple(accumulate(sizes)))

    @classmethod
    def special(cls, m: int, n: int, p: int) -> "PartitionSpec":
        """K(p^(1), m^(n)): one set of size ``p`` (class 0) then ``n`` sets of size ``m``."""
        if min(m, n, p) < 1:
            raise PreconditionError("m, n and p must all be >= 1")
        return cls((p,) + (m,) * n)

    @property
    def total_vertices(self) -> int:
        return self._offsets[-1]

    @property
    def num_classes(self) -> int:
        return len(self.sizes)

    def class_of(self, vertex_id: int) -> int:
        if not 0 <= vertex_id < self.total_vertices:
            raise IndexError(f"vertex {vertex_id} out of range")
        return bisect_right(self._offsets, vertex_id) - 1

    def class_ids(self) -> List[int]:
        """Class id of every vertex, indexed by vertex id."""
        return [c for c, s in enumerate(self.sizes) for _ in range(s)]

    def members(self, class_id: int) -> range:
        return range(self._offsets[class_id], self._offsets[class_id + 1])

    def vertices(self) -> Iterator[Vertex]:
        for v, c in enumerate(self.class_ids()):
            yield Vertex(v, c)

    def edge_count(self) -> int:
        n = self.total_vertices
        return comb(n, 2) - sum(comb(s, 2) for s in self.sizes)

    def to_json(self) -> str:
        return json.dumps(list(self.sizes))

    @classmethod
    def from_json(cls, text: str) -> "PartitionSpec":
        data = json.loads(text)
        if not isinstance(data, list):
            raise PreconditionError("a partition is serialized as a JSON array of integers")
        return cls(tuple(data))


def edge_count_two_block(a: int, m_count: int, b: int, n_count: int) -> int:
    """Edges of K(a^(m_count), b^(n_count)).

    Zero sizes or counts are allowed and behave as empty blocks.
    """
    if min(a, m_count, b, n_count) < 0:
        raise PreconditionError("sizes and counts must be nonnegative")
    twice = m_count * a * ((m_count - 1) * a + n_count * b) + n_count * b * (
        (n_count - 1) * b + m_count * a
    )
    # Each cross-block pair is counted once from each side.
    assert twice % 2 == 0
    return twice // 2


def total_edges_balanced(m: int, n: int) -> int:
    """Edges of K_{m^(n)}, i.e. m^2 n (n-1) / 2."""
    if m < 1 or n < 1:
        raise PreconditionError("m and n must be >= 1")
    return m * m * n * (n - 1) // 2


def edges(spec: PartitionSpec) -> List[Tuple[int, int]]:
    """All vertex pairs ``(u, v)``, ``u < v``, lying in different partite sets."""
    cls = spec.class_ids()
    n = len(cls)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if cls[u] != cls[v]]


def class_sequence_edges(classes: Sequence[int]) -> List[Tuple[int, int]]:
    """Position pairs ``(i, j)``, ``i < j``, whose entries carry different classes."""
    n = len(classes)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if classes[i] != classes[j]]
