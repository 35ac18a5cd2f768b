"""Convex (circular) drawings and their crossing counts.

A drawing is a clockwise circular sequence of vertex ids. Edges are straight
chords, and two chords cross exactly when their endpoints interleave around
the circle. Concurrent crossings are counted pairwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .errors import PreconditionError
from .multipartite import PartitionSpec, class_sequence_edges

# Rows of the pairwise comparison matrix handled per numpy batch.
_CHUNK = 2048


class Chord(NamedTuple):
    """A chord between two circle positions, stored with ``first < second``."""

    first: int
    second: int

    @classmethod
    def of(cls, a: int, b: int) -> "Chord":
        if a == b:
            raise PreconditionError("a chord needs two distinct positions")
        return cls(a, b) if a < b else cls(b, a)


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """True iff the chords share no endpoint and their endpoints interleave."""
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class ConvexDrawing:
    spec: PartitionSpec
    order: Tuple[int, ...]
    _position: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        order = tuple(int(v) for v in self.order)
        n = self.spec.total_vertices
        if sorted(order) != list(range(n)):
            raise PreconditionError(f"order must be a permutation of 0..{n - 1}")
        position = [0] * n
        for pos, v in enumerate(order):
            position[v] = pos
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_position", tuple(position))

    @classmethod
    def from_classes(cls, spec: PartitionSpec, classes: Sequence[int]) -> "ConvexDrawing":
        """Drawing whose positions carry ``classes``; ids are assigned in order of appearance."""
        if len(classes) != spec.total_vertices:
            raise PreconditionError("class sequence length must equal the vertex count")
        pools = [iter(spec.members(c)) for c in range(spec.num_classes)]
        try:
            order = [next(pools[c]) for c in classes]
        except (StopIteration, IndexError):
            raise PreconditionError(
                "class sequence does not match the partite-set sizes"
            ) from None
        return cls(spec, tuple(order))

    def position(self, vertex_id: int) -> int:
        return self._position[vertex_id]

    @property
    def classes(self) -> Tuple[int, ...]:
        """Class id at each circle position."""
        return tuple(self.spec.class_of(v) for v in self.order)

    def chords(self) -> List[Chord]:
        return [Chord(i, j) for i, j in class_sequence_edges(self.classes)]

    def to_dict(self) -> dict:
        return {"sizes": list(self.spec.sizes), "order": list(self.order)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ConvexDrawing":
        try:
            sizes, order = data["sizes"], data["order"]
        except (KeyError, TypeError):
            raise PreconditionError('drawing JSON needs "sizes" and "order"') from None
        if not isinstance(sizes, list) or not isinstance(order, list):
            raise PreconditionError('"sizes" and "order" must be JSON arrays')
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in order):
            raise PreconditionError('"order" must contain integers')
        return cls(PartitionSpec(tuple(sizes)), tuple(order))

    @classmethod
    def from_json(cls, text: str) -> "ConvexDrawing":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed drawing JSON: {exc}") from None
        return cls.from_dict(data)


def count_class_crossings(classes: Sequence[int]) -> int:
    """Pairwise chord-crossing count for a circular class sequence.

    Each crossing pair ``(a, b), (c, d)`` is counted once, from the chord with
    the smaller first endpoint: ``a < c < b < d``.
    """
    chords = class_sequence_edges(classes)
    if len(chords) < 2:
        return 0
    arr = np.asarray(chords, dtype=np.int64)
    a, b = arr[:, 0], arr[:, 1]
    total = 0
    for start in range(0, len(arr), _CHUNK):
        ra = a[start : start + _CHUNK, None]
        rb = b[start : start + _CHUNK, None]
        hits = (ra < a[None, :]) & (a[None, :] < rb) & (rb < b[None, :])
        total += int(hits.sum())
    return total


def count_crossings(drawing: ConvexDrawing) -> int:
    """cr_1 of the drawing: number of unordered edge pairs whose chords cross."""
    return count_class_crossings(drawing.classes)


def count_crossings_by_quadruples(classes: Sequence[int]) -> int:
    """Independent oracle over all 4-subsets of positions.

    For positions ``i < j < k < l`` the only interleaving pair is
    ``(i, k), (j, l)``; it contributes iff both are edges.
    """
    total = 0
    for i, j, k, l in combinations(range(len(classes)), 4):
        if classes[i] != classes[k] and classes[j] != classes[l]:
            total += 1
    return total


def _rotations(seq: Tuple[int, ...]):
    for r in range(len(seq)):
        yield seq[r:] + seq[:r]


def canonical_classes(classes: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least class sequence over all rotations and the reflection."""
    seq = tuple(classes)
    if not seq:
        return seq
    return min(min(_rotations(seq)), min(_rotations(seq[::-1])))


def canonical_form(drawing: ConvexDrawing) -> Tuple[int, ...]:
    return canonical_classes(drawing.classes)


def is_canonical(classes: Sequence[int]) -> bool:
    """True iff ``classes`` is already its own canonical form."""
    seq = tuple(classes)
    for rev in (seq, seq[::-1]):
        for r in range(len(seq)):
            if rev[r:] + rev[:r] < seq:
                return False
    return True
