"""Searching circular orderings for the fewest crossings.

The crossing count of a drawing depends only on its class sequence, so the
exact search enumerates class sequences rather than vertex permutations.
Position 0 is fixed to class 0 and only sequences that equal their own
canonical form (least over rotations and the reflection) are evaluated.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial, prod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .drawing import ConvexDrawing, canonical_classes, count_class_crossings, is_canonical
from .errors import PreconditionError
from .multipartite import PartitionSpec

THREADS_ENV = "CONVEX_CROSSINGS_THREADS"
MAX_EXACT_VERTICES = 12
DEFAULT_BUDGET = 2_000_000


def resolve_workers(workers: Optional[int] = None) -> int:
    """Worker count from the argument or the environment; 0 means one per CPU."""
    if workers is None:
        raw = os.environ.get(THREADS_ENV, "1").strip() or "1"
        try:
            workers = int(raw)
        except ValueError:
            raise PreconditionError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if workers < 0:
        raise PreconditionError("worker count must be >= 0")
    return workers or (os.cpu_count() or 1)


@dataclass(frozen=True)
class SearchResult:
    spec: PartitionSpec
    min: Optional[int]
    witness: Optional[ConvexDrawing]
    nodes_explored: int
    exact: bool
    status: str = "ok"

    def to_dict(self) -> dict:
        return {
            "sizes": list(self.spec.sizes),
            "min": None if self.min is None else str(self.min),
            "witness_order": None if self.witness is None else list(self.witness.order),
            "nodes_explored": self.nodes_explored,
            "exact": self.exact,
            "status": self.status,
        }


def fast_class_crossings(classes: Sequence[int], num_classes: int) -> int:
    """Crossing count in O(N^2) from prefix class counts.

    Sums, over middle positions j < k, the chords (i, k) with i < j times the
    chords (j, l) with l > k.
    """
    n = len(classes)
    prefix = [[0] * num_classes]
    for c in classes:
        row = prefix[-1][:]
        row[c] += 1
        prefix.append(row)
    totals = prefix[-1]
    count = 0
    for j in range(1, n - 2):
        cj = classes[j]
        after_j = totals[cj]
        pj = prefix[j]
        for k in range(j + 1, n - 1):
            left = j - pj[classes[k]]
            if left:
                right = (n - 1 - k) - (after_j - prefix[k + 1][cj])
                count += left * right
    return count


def _leaf_count(counts: Sequence[int]) -> int:
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


def _dfs(counts: List[int], prefix: List[int], budget: int):
    """Enumerate multiset permutations extending ``prefix`` in lexicographic order.

    Returns (best value, best sequence, sequences enumerated, finished).
    """
    k = len(counts)
    n = len(prefix) + sum(counts)
    seq = list(prefix)
    best_val: Optional[int] = None
    best_seq: Optional[Tuple[int, ...]] = None
    explored = 0

    def rec() -> bool:
        nonlocal best_val, best_seq, explored
        if len(seq) == n:
            if explored >= budget:
                return False
            explored += 1
            if is_canonical(seq):
                val = fast_class_crossings(seq, k)
                if best_val is None or val < best_val:
                    best_val, best_seq = val, tuple(seq)
            return True
        for c in range(k):
            if counts[c]:
                counts[c] -= 1
                seq.append(c)
                ok = rec()
                seq.pop()
                counts[c] += 1
                if not ok:
                    return False
        return True

    finished = rec()
    return best_val, best_seq, explored, finished


def _subtree(args):
    counts, prefix, budget = args
    return _dfs(list(counts), list(prefix), budget)


def exact_min(
    spec: PartitionSpec,
    budget: int = DEFAULT_BUDGET,
    workers: Optional[int] = 1,
    allow_large: bool = False,
) -> SearchResult:
    """True minimum crossing count over all circular orderings of ``spec``.

    ``budget`` caps the number of enumerated class sequences. When it runs
    out the result has ``status == "budget_exhausted"`` and ``exact`` False,
    and ``min`` is only the best value seen so far.
    """
    n = spec.total_vertices
    if n > MAX_EXACT_VERTICES and not allow_large:
        raise PreconditionError(
            f"exact search refuses N={n} > {MAX_EXACT_VERTICES} without allow_large"
        )
    counts = list(spec.sizes)
    counts[0] -= 1
    workers = resolve_workers(workers)
    total = _leaf_count(counts)

    if workers > 1 and total <= budget and n > 2:
        jobs = []
        for c in range(len(counts)):
            if counts[c]:
                sub = counts[:]
                sub[c] -= 1
                jobs.append((tuple(sub), (0, c), budget))
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            parts = list(pool.map(_subtree, jobs))
        explored = sum(p[2] for p in parts)
        found = [(p[0], p[1]) for p in parts if p[0] is not None]
        best_val, best_seq = min(found)
        finished = True
    else:
        best_val, best_seq, explored, finished = _dfs(counts, [0], budget)

    witness = None if best_seq is None else ConvexDrawing.from_classes(spec, best_seq)
    return SearchResult(
        spec,
        best_val,
        witness,
        explored,
        exact=finished,
        status="ok" if finished else "budget_exhausted",
    )


def swap_delta(classes: Sequence[int], i: int) -> int:
    """Change in crossings from swapping positions i and i+1 (mod N).

    Only chord pairs (u, x), (v, y) with u, v the swapped vertices change, and
    every such pair with x != y flips between crossing and not crossing. With
    the rest of the circle read from just after v, the pair crosses iff x
    comes before y.
    """
    n = len(classes)
    j = (i + 1) % n
    u, v = classes[i], classes[j]
    if u == v or n < 4:
        return 0
    crossing = 0
    not_u = not_v = neither = 0
    for t in range(n - 2):
        c = classes[(j + 1 + t) % n]
        if c != v:
            crossing += not_u
            not_v += 1
        if c != u:
            not_u += 1
            if c != v:
                neither += 1
    pairs = not_u * not_v - neither
    return pairs - 2 * crossing


def _climb(args):
    classes, num_classes, seed_seq, iters = args
    rng = np.random.default_rng(seed_seq)
    seq = [int(c) for c in rng.permutation(classes)]
    n = len(seq)
    value = fast_class_crossings(seq, num_classes)
    evaluations = 0
    improved = True
    while improved and evaluations < iters:
        improved = False
        for i in rng.permutation(n):
            if evaluations >= iters:
                break
            evaluations += 1
            d = swap_delta(seq, int(i))
            if d < 0:
                j = (int(i) + 1) % n
                seq[i], seq[j] = seq[j], seq[i]
                value += d
                improved = True
    return value, canonical_classes(seq), tuple(seq), evaluations


def heuristic_min(
    spec: PartitionSpec,
    seed: int = 0,
    restarts: int = 20,
    iters: int = 10_000,
    workers: Optional[int] = 1,
) -> SearchResult:
    """Adjacent-transposition hill climbing from ``restarts`` random orderings.

    ``iters`` caps swap evaluations per restart. Each restart draws from its
    own child of ``numpy.random.SeedSequence(seed)``, so the outcome does not
    depend on the worker count.
    """
    if restarts < 1 or iters < 0:
        raise PreconditionError("need restarts >= 1 and iters >= 0")
    classes = spec.class_ids()
    children = np.random.SeedSequence(seed).spawn(restarts)
    jobs = [(classes, spec.num_classes, child, iters) for child in children]
    workers = resolve_workers(workers)
    if workers > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=min(workers, restarts)) as pool:
            runs = list(pool.map(_climb, jobs))
    else:
        runs = [_climb(job) for job in jobs]
    value, _, seq, _ = min(runs, key=lambda r: (r[0], r[1]))
    return SearchResult(
        spec,
        value,
        ConvexDrawing.from_classes(spec, seq),
        sum(r[3] for r in runs),
        exact=False,
    )
