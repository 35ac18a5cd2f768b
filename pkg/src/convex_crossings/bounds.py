"""Lower-bound pipeline for nu_1(K(p^(1), m^(n))).

Any convex drawing splits its crossings into three groups:

* crossings inside the induced K_{m^(n)}, bounded by ``nu1_balanced``;
* crossings among edges at the p special vertices, a K_{p,mn} (the C2 term);
* crossings between one edge of each kind (the C3 term).

For the C3 term, fix a special vertex and its k-th small neighbour
counterclockwise. The k-1 small vertices on one side and the mn-k on the
other each span a multipartite graph, and every K_{m^(n)} edge that joins the
two sides crosses that chord. Making both sides as dense as possible (a
balanced split over n parts) yields the per-chord bound. The bound does not
depend on which special vertex is fixed, so the sum over special vertices is
p times the sum over k.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import comb
from typing import List

from .errors import PreconditionError
from .formulas import FormulaInput, floor_sum, nu1_balanced
from .multipartite import edge_count_two_block, total_edges_balanced


@dataclass(frozen=True)
class BalancedSplit:
    """v vertices over n parts: r parts of size q+1 and n-r of size q."""

    v: int
    n: int
    q: int
    r: int

    @classmethod
    def of(cls, v: int, n: int) -> "BalancedSplit":
        if v < 0 or n < 1:
            raise PreconditionError("need v >= 0 and n >= 1")
        q, r = divmod(v, n)
        return cls(v, n, q, r)

    @property
    def part_sizes(self) -> List[int]:
        return [self.q + 1] * self.r + [self.q] * (self.n - self.r)

    def edge_count(self) -> int:
        return edge_count_two_block(self.q + 1, self.r, self.q, self.n - self.r)


def max_edges_balanced(v: int, n: int) -> int:
    """Most edges any complete multipartite graph on v vertices with n parts can have."""
    return BalancedSplit.of(v, n).edge_count()


def per_edge_bound(k: int, m: int, n: int) -> int:
    """Least number of K_{m^(n)} edges crossing the chord to the k-th small vertex."""
    mn = m * n
    if not 1 <= k <= mn:
        raise PreconditionError(f"k must lie in 1..{mn}, got {k}")
    return (
        total_edges_balanced(m, n)
        - m * (n - 1)
        - max_edges_balanced(k - 1, n)
        - max_edges_balanced(mn - k, n)
    )


def side_maxima_sum(m: int, n: int) -> int:
    """Sum over k of M_L(k) + M_R(k), via the floor-sum identity.

    Both sides range over balanced splits of v = 0..mn-1 vertices. Grouping v
    by its quotient i = floor(v/n) gives
    C(mn,3) - n^2 C(m,3) - (n-1)/2 * sum_k floor((k-1)/n) per side.
    """
    if m < 1 or n < 1:
        raise PreconditionError("m and n must be >= 1")
    mn = m * n
    return 2 * (comb(mn, 3) - n * n * comb(m, 3)) - (n - 1) * floor_sum(m, n)


def c2_lower_bound(m: int, n: int, p: int) -> int:
    """nu_1(K_{p,mn}) in whichever divisibility direction holds."""
    args = FormulaInput(m, n, p)
    mn = args.mn
    if args.p_divides_mn:
        twelfths = mn * (p - 1) * (2 * p * mn - 3 * p - mn)
    elif args.mn_divides_p:
        twelfths = p * (mn - 1) * (2 * p * mn - 3 * mn - p)
    else:
        raise PreconditionError("needs p | mn or mn | p")
    if twelfths % 12:
        raise ArithmeticError(f"C2 bound {twelfths}/12 is not an integer")
    return twelfths // 12


@dataclass(frozen=True)
class BoundBreakdown:
    m: int
    n: int
    p: int
    fulek_term: int
    c2_term: int
    per_edge_bounds: List[int]
    c3_term: int
    total: int

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("fulek_term", "c2_term", "c3_term", "total"):
            d[key] = str(d[key])
        d["per_edge_bounds"] = [str(v) for v in self.per_edge_bounds]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def total_lower_bound(m: int, n: int, p: int) -> BoundBreakdown:
    c2 = c2_lower_bound(m, n, p)  # validates the divisibility first
    fulek = nu1_balanced(m, n)
    per_edge = [per_edge_bound(k, m, n) for k in range(1, m * n + 1)]
    c3 = p * sum(per_edge)
    return BoundBreakdown(m, n, p, fulek, c2, per_edge, c3, fulek + c2 + c3)
