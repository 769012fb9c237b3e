"""Level-preserving maps between co-signotope families over different ground sets.

Two constructions of the same bijection between the levels <= p of the
families over [n] and [new_n], defined whenever p <= min(n, new_n) - d:

* map_cosignotope shifts each +-subset coordinatewise, moving a slot by
  new_n - n exactly when its series is right-aligned (i.e. the slot is
  anchored at the top of the ground set rather than the bottom);
* map_by_components decomposes the plus set into its components, replays
  each one over the new ground set through its local Ferrers diagram, and
  merges the results.

The two agree pointwise; the second exists as an independent code path so
the tests can play them against each other.  Beyond the bound no such map
exists at all (the two families differ in size already at p = n - d + 1),
so out-of-bound requests are refused rather than answered.
"""

from __future__ import annotations

from .components import decompose, merge
from .cosignotopes import Alignment, CoSignotope, cosignotope_is_valid, series_alignment
from .errors import BoundRefusal, InternalCheckError
from .ferrers import transfer_component
from .subsets import GroundParams, Subset


def _check_level_bound(params: GroundParams, new_n: int, p: int) -> None:
    if p < 0:
        raise ValueError(f"level p={p} must be >= 0")
    bound = min(params.n, new_n) - params.d
    if p > bound:
        raise BoundRefusal(
            f"level p={p} exceeds min(n, new_n) - d = {bound}; the families "
            "already differ in size one level higher, so no level-preserving "
            "map is possible and none is attempted"
        )


def shift_plus_subset(t: CoSignotope, new_n: int, B: Subset) -> Subset:
    """Image of the +-subset B over the ground set [new_n].

    Slot j moves by new_n - n when the slot-j series of B is right-aligned
    and stays put when it is left-aligned.  Requires plus count within the
    bound; a flat or invalid series means t itself is out of contract.
    """
    params = t.params
    if B not in t.plus:
        raise ValueError(f"{B} is not a +-subset of the input")
    _check_level_bound(params, new_n, t.plus_count)
    delta = new_n - params.n
    shifted = []
    for j in range(1, params.d + 1):
        a = series_alignment(t, B, j)
        if a is Alignment.LEFT_ALIGNED:
            shifted.append(B[j - 1])
        elif a is Alignment.RIGHT_ALIGNED:
            shifted.append(B[j - 1] + delta)
        else:
            raise ValueError(
                f"slot-{j} series of {B} is {a.value}; the input is not a "
                "valid co-signotope within the level bound"
            )
    out = tuple(shifted)
    if any(not 1 <= x <= new_n for x in out) or any(
        x >= y for x, y in zip(out, out[1:])
    ):
        raise InternalCheckError(f"shift of {B} produced non-subset {out}")
    return out


def map_cosignotope(t: CoSignotope, new_n: int, p: int) -> CoSignotope:
    """The direct level-preserving map onto the family over [new_n].

    Shifts every +-subset via shift_plus_subset.  p states the level budget:
    the input must lie in levels <= p and p must respect the bound.
    """
    params = t.params
    if new_n <= params.d:
        raise ValueError(f"new ground set size {new_n} must exceed d={params.d}")
    _check_level_bound(params, new_n, p)
    if t.plus_count > p:
        raise ValueError(f"plus count {t.plus_count} exceeds stated level {p}")
    if not cosignotope_is_valid(t):
        raise ValueError("input is not a valid co-signotope")
    images = [shift_plus_subset(t, new_n, B) for B in t.plus]
    plus = frozenset(images)
    if len(plus) != len(images):
        raise InternalCheckError("subset shift collapsed two +-subsets")
    out = CoSignotope(GroundParams(new_n, params.d), plus)
    if not cosignotope_is_valid(out):
        raise InternalCheckError("image of a valid co-signotope is invalid")
    return out


def map_by_components(t: CoSignotope, new_n: int, p: int) -> CoSignotope:
    """Compositional form of map_cosignotope: decompose, replay, merge.

    Each +-component is re-read from its Ferrers diagram over the new ground
    set; empty parts stay empty.  Agrees with map_cosignotope pointwise.
    """
    params = t.params
    if new_n <= params.d:
        raise ValueError(f"new ground set size {new_n} must exceed d={params.d}")
    _check_level_bound(params, new_n, p)
    if t.plus_count > p:
        raise ValueError(f"plus count {t.plus_count} exceeds stated level {p}")
    if not cosignotope_is_valid(t):
        raise ValueError("input is not a valid co-signotope")
    new_params = GroundParams(new_n, params.d)
    parts = []
    for i, part in enumerate(decompose(t)):
        if part.plus_count == 0:
            parts.append(CoSignotope.all_minus(new_params))
        else:
            parts.append(transfer_component(part, new_n, part.plus_count, i))
    return merge(parts)
