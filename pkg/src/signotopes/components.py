"""+-components of a co-signotope, source classification, decompose/merge.

Within the theory's range plus_count <= n-d each connected component of the
plus set contains exactly one source subset, so a co-signotope splits into
d+1 single-source parts (most of them empty) and the split is reversible.
"""

from __future__ import annotations

from .cosignotopes import (
    Alignment,
    CoSignotope,
    cosignotope_is_valid,
    series_alignment,
)
from .errors import BoundRefusal, InternalCheckError
from .subsets import Subset, neighbors, source_subset


def _check_level(t: CoSignotope) -> None:
    limit = t.params.n - t.params.d
    if t.plus_count > limit:
        raise BoundRefusal(
            f"plus count {t.plus_count} exceeds n-d = {limit}; "
            "component structure is only guaranteed up to that level"
        )


def plus_components(t: CoSignotope) -> list[tuple[Subset, ...]]:
    """Connected components of the plus set under one-move adjacency.

    Each component is returned sorted; the list is sorted by smallest member.
    """
    remaining = set(t.plus)
    comps: list[tuple[Subset, ...]] = []
    while remaining:
        seed = min(remaining)
        remaining.discard(seed)
        comp = {seed}
        stack = [seed]
        while stack:
            cur = stack.pop()
            for nb in neighbors(t.params, cur):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def classify(t: CoSignotope, B: Subset) -> int:
    """Source index of the component containing B.

    The largest j in [1,d] whose (B,j)-series is left-aligned, or 0 when no
    series is.  Requires a valid t with 1 <= plus_count <= n-d; agreement
    with the traversal-based source lookup is a tested property.
    """
    if tuple(B) not in t.plus:
        raise ValueError(f"{B} is not a +-subset")
    _check_level(t)
    for j in range(t.params.d, 0, -1):
        if series_alignment(t, B, j) is Alignment.LEFT_ALIGNED:
            return j
    return 0


def p_sequence(t: CoSignotope) -> tuple[int, ...]:
    """Component sizes indexed by source index; sums to the plus count."""
    _check_level(t)
    sizes = [0] * (t.params.d + 1)
    for comp in plus_components(t):
        sizes[classify(t, comp[0])] += len(comp)
    return tuple(sizes)


def decompose(t: CoSignotope) -> tuple[CoSignotope, ...]:
    """Split t into d+1 parts, part i holding the component at source i."""
    _check_level(t)
    parts: list[set[Subset]] = [set() for _ in range(t.params.d + 1)]
    for comp in plus_components(t):
        i = classify(t, comp[0])
        if parts[i]:
            raise InternalCheckError(f"two components classified to source {i}")
        parts[i].update(comp)
    return tuple(CoSignotope(t.params, frozenset(p)) for p in parts)


def merge(parts) -> CoSignotope:
    """Union of d+1 disjoint single-source parts.

    Validates the shape (sparse sizes, one component per non-empty part,
    source membership) and re-validates its own output instead of trusting
    the uniqueness lemma.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("no parts given")
    params = parts[0].params
    if any(part.params != params for part in parts):
        raise ValueError("parts disagree on (n,d)")
    if len(parts) != params.d + 1:
        raise ValueError(f"need d+1 = {params.d + 1} parts, got {len(parts)}")
    sizes = tuple(part.plus_count for part in parts)
    for i in range(1, len(sizes)):
        if sizes[i] and sizes[i - 1]:
            raise ValueError(f"component sizes {sizes} are not a sparse composition")
    if sum(sizes) > params.n - params.d:
        raise BoundRefusal(
            f"total size {sum(sizes)} exceeds n-d = {params.n - params.d}"
        )
    union: set[Subset] = set()
    for i, part in enumerate(parts):
        if not part.plus:
            continue
        if not cosignotope_is_valid(part):
            raise ValueError(f"part {i} is not a valid co-signotope")
        if len(plus_components(part)) != 1:
            raise ValueError(f"part {i} has more than one component")
        if source_subset(params, i) not in part.plus:
            raise ValueError(f"part {i} does not contain source subset {i}")
        if union & part.plus:
            raise ValueError("parts have overlapping plus sets")
        union |= part.plus
    merged = CoSignotope(params, frozenset(union))
    if not cosignotope_is_valid(merged):
        raise InternalCheckError("merged parts do not form a valid co-signotope")
    return merged
