"""Evenly distributed circular drawings of K(p^(1), m^(n)).

The mn small vertices run round-robin through classes 1..n, and the p
vertices of class 0 are merged in with a Bresenham (balanced-word) spacing.
Certification counts the crossings of the result against the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .drawing import ConvexDrawing, canonical_classes, count_class_crossings
from .errors import PreconditionError
from .formulas import FormulaInput, nu1_special
from .multipartite import PartitionSpec


def even_classes(m: int, n: int, p: int, offset: int = 0) -> List[int]:
    """Class sequence with special slots at positions i where floor((i+offset+1)p/N) steps."""
    total = p + m * n
    small = iter(1 + (j % n) for j in range(m * n))
    out = []
    for i in range(total):
        s = i + offset
        out.append(0 if (s + 1) * p // total > s * p // total else next(small))
    return out


def circular_gaps(classes: Sequence[int], class_id: int) -> List[int]:
    """Distances between consecutive occurrences of ``class_id`` around the circle."""
    pos = [i for i, c in enumerate(classes) if c == class_id]
    if len(pos) < 2:
        return []
    n = len(classes)
    return [(pos[(i + 1) % len(pos)] - pos[i]) % n or n for i in range(len(pos))]


def _checked_input(m: int, n: int, p: int) -> Tuple[PartitionSpec, int, str]:
    args = FormulaInput(m, n, p)
    if not args.applicable:
        raise PreconditionError("needs p | mn or mn | p")
    theorem, value = nu1_special(m, n, p)
    return PartitionSpec.special(m, n, p), value, theorem


def _construct(m: int, n: int, p: int) -> Tuple[ConvexDrawing, int, Optional[int]]:
    """Return (drawing, crossings, certifying offset or None)."""
    spec, target, _ = _checked_input(m, n, p)
    base = even_classes(m, n, p)
    crossings = count_class_crossings(base)
    if crossings == target:
        return ConvexDrawing.from_classes(spec, base), crossings, 0
    certified = []
    for offset in range(1, spec.total_vertices):
        cand = even_classes(m, n, p, offset)
        if count_class_crossings(cand) == target:
            certified.append((canonical_classes(cand), offset, cand))
    if certified:
        _, offset, cand = min(certified)
        return ConvexDrawing.from_classes(spec, cand), target, offset
    return ConvexDrawing.from_classes(spec, base), crossings, None


def even_drawing(m: int, n: int, p: int) -> ConvexDrawing:
    return _construct(m, n, p)[0]


@dataclass(frozen=True)
class CertificationReport:
    m: int
    n: int
    p: int
    theorem: str
    drawing: ConvexDrawing
    crossings: int
    expected: int
    offset: Optional[int]

    @property
    def passed(self) -> bool:
        return self.crossings == self.expected

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "theorem": self.theorem,
            "drawing": self.drawing.to_dict(),
            "crossings": str(self.crossings),
            "expected": str(self.expected),
            "offset": self.offset,
            "pass": self.passed,
        }


def certify(m: int, n: int, p: int) -> CertificationReport:
    _, expected, theorem = _checked_input(m, n, p)
    drawing, crossings, offset = _construct(m, n, p)
    return CertificationReport(m, n, p, theorem, drawing, crossings, expected, offset)
