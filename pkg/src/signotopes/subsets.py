"""Ground machinery: d-subsets of [n] = {1..n}, series, sources, move graph.

Subsets are stored as strictly increasing 1-based tuples.  The (B,i)-series
of a subset B replaces its i-th element by every other available element of
the ground set in increasing order; two subsets are adjacent when they are
consecutive in some series, which is the same as moving one element to the
nearest free integer up or down.
"""

from __future__ import annotations

import itertools as it
import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

Subset = tuple[int, ...]


@dataclass(frozen=True, order=True)
class GroundParams:
    """Ground-set size n and subset size d, with 1 <= d <= n-1."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n - 1:
            raise ValueError(f"need 1 <= d <= n-1, got n={self.n}, d={self.d}")

    @property
    def r(self) -> int:
        """Rank of the complement-side sign functions."""
        return self.n - self.d

    @property
    def series_len(self) -> int:
        return self.n - self.d + 1


def check_subset(params: GroundParams, B: Subset) -> None:
    if len(B) != params.d:
        raise ValueError(f"{B} has {len(B)} elements, want d={params.d}")
    if any(b2 <= b1 for b1, b2 in zip(B, B[1:])):
        raise ValueError(f"{B} is not strictly increasing")
    if B[0] < 1 or B[-1] > params.n:
        raise ValueError(f"{B} is not contained in [1,{params.n}]")


def all_d_subsets(params: GroundParams) -> Iterator[Subset]:
    """All C(n,d) subsets in lexicographic order."""
    return it.combinations(range(1, params.n + 1), params.d)


def subset_rank(params: GroundParams, B: Subset) -> int:
    """Lexicographic rank in [0, C(n,d)): position within all_d_subsets."""
    check_subset(params, B)
    rank = 0
    prev = 0
    for j, b in enumerate(B):
        for x in range(prev + 1, b):
            rank += math.comb(params.n - x, params.d - j - 1)
        prev = b
    return rank


def insert_element(rest: Subset, x: int) -> Subset:
    """rest with x spliced in, keeping the tuple sorted."""
    k = bisect_left(rest, x)
    return rest[:k] + (x,) + rest[k:]


def series(params: GroundParams, B: Subset, i: int) -> list[Subset]:
    """The (B,i)-series: B with its i-th element replaced by every available

    x, in increasing order of x.  Length is n-d+1 and B itself occurs (at
    x = b_i).
    """
    check_subset(params, B)
    if not 1 <= i <= params.d:
        raise ValueError(f"series index i={i} not in [1,{params.d}]")
    rest = B[: i - 1] + B[i:]
    rest_set = set(rest)
    return [
        insert_element(rest, x)
        for x in range(1, params.n + 1)
        if x not in rest_set
    ]


def source_subset(params: GroundParams, i: int) -> Subset:
    """The i-th source: (1,...,i, n-d+i+1,...,n).

    These are the only subsets that sit at an end of every series through
    them, hence the only possible singleton +-sets.
    """
    if not 0 <= i <= params.d:
        raise ValueError(f"source index i={i} not in [0,{params.d}]")
    n, d = params.n, params.d
    return tuple(range(1, i + 1)) + tuple(range(n - d + i + 1, n + 1))


def neighbors(params: GroundParams, B: Subset) -> set[Subset]:
    """Subsets immediately before or after B in some series.

    Token view: move one element of B to the nearest integer (up or down)
    not occupied by another element.
    """
    check_subset(params, B)
    occupied = set(B)
    out: set[Subset] = set()
    for idx, b in enumerate(B):
        rest = B[:idx] + B[idx + 1 :]
        y = b - 1
        while y in occupied:
            y -= 1
        if y >= 1:
            out.add(insert_element(rest, y))
        y = b + 1
        while y in occupied:
            y += 1
        if y <= params.n:
            out.add(insert_element(rest, y))
    return out


def distance_lower_bound(params: GroundParams, B: Subset, i: int) -> int:
    """Lower bound on the move-graph distance from B to source_subset(i).

    Formula max(0, b_i - b_{i+1} + n - d + 1) with the conventions b_0 = 0
    and b_{d+1} = n+1; clamped at 0 since graph distance is non-negative.
    """
    check_subset(params, B)
    if not 0 <= i <= params.d:
        raise ValueError(f"source index i={i} not in [0,{params.d}]")
    padded = (0,) + B + (params.n + 1,)
    return max(0, padded[i] - padded[i + 1] + params.n - params.d + 1)
