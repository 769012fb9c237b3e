"""Generalized Ferrers diagrams: local coordinates of one +-component.

A co-signotope whose plus set is a single component anchored at source i can
be re-coordinatized: slot j of a subset is measured from the matching edge
of the source (from below for j <= i, from above for j > i).  The images
form a downward-closed point set inside the region

    Z(d,i) = { a in Z_{>0}^d : a_2 <= ... is weakly increasing up to slot i,
               weakly decreasing from slot i+1 on },

a (d,i)-Ferrers diagram.  For d=2, i=1 the region is unconstrained and the
diagrams are exactly the Ferrers diagrams of integer partitions; i=0 or i=d
forces distinct parts.  The correspondence is one-to-one and does not depend
on n, so counting one-component co-signotopes reduces to counting diagrams.

Diagrams are enumerated by growing them point by point: a point may be added
when every in-region lower cover (one coordinate decremented) is already
present.  Every down-set of size k+1 has a removable maximal point, so each
one is reached from some down-set of size k and level-by-level growth with
deduplication is exhaustive.  Coordinates never exceed the point count, so
no explicit bound is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .components import plus_components
from .cosignotopes import CoSignotope, cosignotope_is_valid
from .errors import BoundRefusal, InternalCheckError
from .subsets import GroundParams, Subset, check_subset, source_subset

Point = tuple[int, ...]


def _check_region_params(d: int, i: int) -> None:
    if d < 1:
        raise ValueError(f"dimension d={d} must be >= 1")
    if not 0 <= i <= d:
        raise ValueError(f"source index i={i} not in [0,{d}]")


def local_coord(n: int, d: int, i: int, j: int, x: int) -> int:
    """Local coordinate of ground element x in slot j, relative to source i.

    x - j + 1 for slots in the lower block (j <= i), (n-x) - (d-j) + 1 for
    slots in the upper block.
    """
    _check_region_params(d, i)
    if not 1 <= j <= d:
        raise ValueError(f"slot j={j} not in [1,{d}]")
    if not 1 <= x <= n:
        raise ValueError(f"element x={x} not in [1,{n}]")
    if j <= i:
        return x - j + 1
    return (n - x) - (d - j) + 1


def local_coord_inverse(n: int, d: int, i: int, j: int, a: int) -> int:
    _check_region_params(d, i)
    if not 1 <= j <= d:
        raise ValueError(f"slot j={j} not in [1,{d}]")
    x = a + j - 1 if j <= i else n - a - (d - j) + 1
    if not 1 <= x <= n:
        raise ValueError(f"coordinate {a} in slot {j} has no preimage in [1,{n}]")
    return x


def subset_to_point(n: int, d: int, i: int, B: Subset) -> Point:
    """Slot-wise local coordinates of B."""
    check_subset(GroundParams(n, d), B)
    return tuple(local_coord(n, d, i, j, B[j - 1]) for j in range(1, d + 1))


def point_to_subset(n: int, d: int, i: int, pt: Point) -> Subset:
    """Inverse of subset_to_point; rejects points whose preimage is not a subset."""
    if len(pt) != d:
        raise ValueError(f"point {pt} has dimension {len(pt)}, want {d}")
    B = tuple(local_coord_inverse(n, d, i, j, pt[j - 1]) for j in range(1, d + 1))
    if any(b2 <= b1 for b1, b2 in zip(B, B[1:])):
        raise ValueError(f"point {pt} maps to non-increasing tuple {B}")
    return B


def in_region(d: int, i: int, pt: Point) -> bool:
    """Membership in Z(d,i)."""
    _check_region_params(d, i)
    if len(pt) != d:
        raise ValueError(f"point {pt} has dimension {len(pt)}, want {d}")
    if any(a < 1 for a in pt):
        return False
    for j in range(2, i + 1):  # 1-based: a_j >= a_{j-1}
        if pt[j - 1] < pt[j - 2]:
            return False
    for j in range(i + 1, d):  # 1-based: a_j >= a_{j+1}
        if pt[j - 1] < pt[j]:
            return False
    return True


@dataclass(frozen=True)
class FerrersDiagram:
    d: int
    i: int
    points: frozenset[Point] = frozenset()

    def __post_init__(self) -> None:
        _check_region_params(self.d, self.i)
        for pt in self.points:
            if len(pt) != self.d or any(a < 1 for a in pt):
                raise ValueError(f"bad point {pt} for dimension {self.d}")

    @property
    def size(self) -> int:
        return len(self.points)

    def sorted_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.points))


def is_ferrers(diagram: FerrersDiagram) -> bool:
    """Downward-closed subset of Z(d,i)?

    Cover-step check: decrementing any single coordinate of any point must
    land either outside the region or on another point.  This equals the
    full all-dominated-points definition because the region is cut out by
    adjacent-slot chains only (the tests compare both).
    """
    d, i, pts = diagram.d, diagram.i, diagram.points
    for pt in pts:
        if not in_region(d, i, pt):
            return False
        for j in range(d):
            if pt[j] <= 1:
                continue
            down = pt[:j] + (pt[j] - 1,) + pt[j + 1 :]
            if in_region(d, i, down) and down not in pts:
                return False
    return True


def _can_increment(d: int, i: int, pt: Point, j0: int) -> bool:
    """Does raising coordinate j0 (0-based) by one stay inside Z(d,i)?

    Only the two adjacent-slot constraints can bind, so this is O(1).
    """
    j = j0 + 1
    v = pt[j0] + 1
    if j < i and v > pt[j0 + 1]:  # next slot of the increasing block caps us
        return False
    if j >= i + 2 and v > pt[j0 - 1]:  # previous slot of the decreasing block
        return False
    return True


def _can_decrement(d: int, i: int, pt: Point, k0: int) -> bool:
    """Does lowering coordinate k0 (0-based) by one stay inside Z(d,i)?"""
    k = k0 + 1
    v = pt[k0] - 1
    if v < 1:
        return False
    if 2 <= k <= i and v < pt[k0 - 1]:
        return False
    if i + 1 <= k <= d - 1 and v < pt[k0 + 1]:
        return False
    return True


def _extensions(d: int, i: int, pts: frozenset[Point]) -> list[Point]:
    """Minimal new points: candidates all of whose in-region covers are present."""
    ones = (1,) * d
    if ones not in pts:
        return [] if pts else [ones]
    cands: set[Point] = set()
    for pt in pts:
        for j0 in range(d):
            if not _can_increment(d, i, pt, j0):
                continue
            cand = pt[:j0] + (pt[j0] + 1,) + pt[j0 + 1 :]
            if cand in pts or cand in cands:
                continue
            if all(
                cand[:k0] + (cand[k0] - 1,) + cand[k0 + 1 :] in pts
                for k0 in range(d)
                if _can_decrement(d, i, cand, k0)
            ):
                cands.add(cand)
    return sorted(cands)


def _grow(d: int, i: int, frontier: set[frozenset[Point]]) -> set[frozenset[Point]]:
    nxt: set[frozenset[Point]] = set()
    for pts in frontier:
        for cand in _extensions(d, i, pts):
            nxt.add(pts | {cand})
    return nxt


def enumerate_ferrers(d: int, i: int, p: int) -> list[FerrersDiagram]:
    """All (d,i)-Ferrers diagrams with exactly p points, canonically ordered."""
    _check_region_params(d, i)
    if p < 0:
        raise ValueError(f"point count p={p} must be >= 0")
    frontier: set[frozenset[Point]] = {frozenset()}
    for _ in range(p):
        frontier = _grow(d, i, frontier)
    return [
        FerrersDiagram(d, i, pts)
        for pts in sorted(frontier, key=lambda s: tuple(sorted(s)))
    ]


# Deepest frontier reached per (d,i), with the counts of every level passed:
# counts are cheap to keep and the formula asks for many (d,i,p) triples.
_growth_state: dict[tuple[int, int], tuple[list[int], set[frozenset[Point]]]] = {}


def count_ferrers(d: int, i: int, p: int) -> int:
    """F_{d,i}(p): number of (d,i)-Ferrers diagrams with exactly p points."""
    _check_region_params(d, i)
    if p < 0:
        raise ValueError(f"point count p={p} must be >= 0")
    counts, frontier = _growth_state.setdefault((d, i), ([1], {frozenset()}))
    while len(counts) <= p:
        frontier = _grow(d, i, frontier)
        counts.append(len(frontier))
        _growth_state[(d, i)] = (counts, frontier)
    return counts[p]


def diagram_of(t: CoSignotope, i: int) -> FerrersDiagram:
    """Local-coordinate diagram of a one-component co-signotope at source i."""
    params = t.params
    if not 0 <= i <= params.d:
        raise ValueError(f"source index i={i} not in [0,{params.d}]")
    if t.plus_count == 0:
        raise ValueError("empty plus set has no component diagram")
    if t.plus_count > params.n - params.d:
        raise BoundRefusal(
            f"plus count {t.plus_count} exceeds n-d = {params.n - params.d}"
        )
    comps = plus_components(t)
    if len(comps) != 1:
        raise ValueError(f"plus set has {len(comps)} components, want exactly one")
    if source_subset(params, i) not in t.plus:
        raise ValueError(f"component does not contain source subset {i}")
    pts = frozenset(subset_to_point(params.n, params.d, i, B) for B in t.plus)
    return FerrersDiagram(params.d, i, pts)


def cosignotope_of(n: int, diagram: FerrersDiagram) -> CoSignotope:
    """Inverse of diagram_of over the ground set [n]."""
    params = GroundParams(n, diagram.d)
    if not is_ferrers(diagram):
        raise ValueError("points are not a Ferrers diagram")
    if diagram.size == 0:
        raise ValueError("empty diagram has no anchored component")
    if diagram.size > n - diagram.d:
        raise BoundRefusal(f"{diagram.size} points exceed n-d = {n - diagram.d}")
    plus = frozenset(
        point_to_subset(n, diagram.d, diagram.i, pt) for pt in diagram.points
    )
    t = CoSignotope(params, plus)
    if (
        not cosignotope_is_valid(t)
        or len(plus_components(t)) != 1
        or source_subset(params, diagram.i) not in plus
    ):
        raise InternalCheckError(
            "diagram preimage is not a one-component co-signotope"
        )
    return t


def transfer_component(t: CoSignotope, new_n: int, p: int, i: int) -> CoSignotope:
    """Move a one-component co-signotope at source i to the ground set [new_n].

    Defined as the diagram round trip: re-coordinatize locally over [n],
    read the same diagram back over [new_n].  Level-preserving and inverted
    by the reverse transfer.
    """
    params = t.params
    if p < 1 or p > min(params.n, new_n) - params.d:
        raise BoundRefusal(
            f"level p={p} outside [1, min(n,new_n)-d = "
            f"{min(params.n, new_n) - params.d}]; no such transfer exists"
        )
    if t.plus_count != p:
        raise ValueError(f"plus count {t.plus_count} does not match stated level {p}")
    return cosignotope_of(new_n, diagram_of(t, i))
