"""Sign functions on d-subsets (co-signotopes) and on r-subsets (signotopes).

A co-signotope of rank d on [n] assigns + or - to every d-subset so that
every (B,i)-series carries at most one sign change.  Complementing every
subset identifies co-signotopes of rank d with classical signotopes of rank
r = n-d, where the same condition reads: at most one sign change along every
packet (sigma(X \\ x_1), ..., sigma(X \\ x_{r+1})) of an (r+1)-subset X.

Values with two or more sign changes are representable on purpose: validity
is a predicate, not a type invariant, so invalid series can be reported.
"""

from __future__ import annotations

import enum
import itertools as it
from dataclasses import dataclass
from typing import Iterable, Iterator

from .subsets import GroundParams, Subset, check_subset, insert_element


class Alignment(enum.Enum):
    LEFT_ALIGNED = "left-aligned"    # starts +, ends -
    RIGHT_ALIGNED = "right-aligned"  # starts -, ends +
    FLAT = "flat"                    # no sign change
    INVALID = "invalid"              # two or more sign changes


@dataclass(frozen=True)
class CoSignotope:
    params: GroundParams
    plus: frozenset[Subset] = frozenset()

    @classmethod
    def from_plus(cls, params: GroundParams, subsets: Iterable[Subset]) -> "CoSignotope":
        plus = frozenset(tuple(B) for B in subsets)
        for B in plus:
            check_subset(params, B)
        return cls(params, plus)

    @classmethod
    def all_minus(cls, params: GroundParams) -> "CoSignotope":
        return cls(params, frozenset())

    def is_plus(self, B: Subset) -> bool:
        return tuple(B) in self.plus

    @property
    def plus_count(self) -> int:
        return len(self.plus)

    def sorted_plus(self) -> tuple[Subset, ...]:
        """Canonical ordering of the plus set; also the sort key."""
        return tuple(sorted(self.plus))

    def with_plus(self, B: Subset) -> "CoSignotope":
        return CoSignotope(self.params, self.plus | {tuple(B)})


@dataclass(frozen=True)
class Signotope:
    n: int
    r: int
    plus: frozenset[Subset] = frozenset()

    def __post_init__(self) -> None:
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")

    @classmethod
    def from_plus(cls, n: int, r: int, subsets: Iterable[Subset]) -> "Signotope":
        plus = frozenset(tuple(X) for X in subsets)
        for X in plus:
            if len(X) != r or any(b <= a for a, b in zip(X, X[1:])) or X[0] < 1 or X[-1] > n:
                raise ValueError(f"{X} is not an r-subset of [1,{n}] with r={r}")
        return cls(n, r, plus)

    @property
    def plus_count(self) -> int:
        return len(self.plus)


def _sign_changes_ok(signs: Iterator[bool]) -> bool:
    """At most one change along the boolean sequence, with early exit."""
    changes = 0
    prev = None
    for s in signs:
        if prev is not None and s != prev:
            changes += 1
            if changes > 1:
                return False
        prev = s
    return True


def _series_signs(t: CoSignotope, rest: Subset) -> Iterator[bool]:
    rest_set = set(rest)
    for x in range(1, t.params.n + 1):
        if x not in rest_set:
            yield insert_element(rest, x) in t.plus


def cosignotope_is_valid(t: CoSignotope) -> bool:
    """True iff every (B,i)-series has at most one sign change.

    Only series meeting the plus set are scanned: a series with two changes
    necessarily carries a +, so all-minus series can never violate.  The
    tests compare this against a full scan over every series.
    """
    d = t.params.d
    seen: set[Subset] = set()
    for B in t.plus:
        for i in range(d):
            rest = B[:i] + B[i + 1 :]
            if rest in seen:
                continue
            seen.add(rest)
            if not _sign_changes_ok(_series_signs(t, rest)):
                return False
    return True


def signotope_is_valid(s: Signotope) -> bool:
    """True iff every packet of an (r+1)-subset has at most one sign change."""
    for X in it.combinations(range(1, s.n + 1), s.r + 1):
        signs = (X[:k] + X[k + 1 :] in s.plus for k in range(s.r + 1))
        if not _sign_changes_ok(signs):
            return False
    return True


def series_alignment(t: CoSignotope, B: Subset, j: int) -> Alignment:
    """Shape of the (B,j)-series of t."""
    check_subset(t.params, B)
    if not 1 <= j <= t.params.d:
        raise ValueError(f"series index j={j} not in [1,{t.params.d}]")
    rest = B[: j - 1] + B[j:]
    signs = list(_series_signs(t, rest))
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    if changes == 0:
        return Alignment.FLAT
    if changes > 1:
        return Alignment.INVALID
    return Alignment.LEFT_ALIGNED if signs[0] else Alignment.RIGHT_ALIGNED


def complement_subset(n: int, B: Subset) -> Subset:
    members = set(B)
    return tuple(x for x in range(1, n + 1) if x not in members)


def cosignotope_from_signotope(s: Signotope) -> CoSignotope:
    """Complement every subset: rank r on [n] becomes rank d = n-r.

    Series of the image correspond one-to-one to packets of the preimage,
    so validity, plus counts, and single steps are all preserved.
    """
    params = GroundParams(s.n, s.n - s.r)  # rejects r = n (d = 0 unsupported)
    return CoSignotope(params, frozenset(complement_subset(s.n, X) for X in s.plus))


def signotope_from_cosignotope(t: CoSignotope) -> Signotope:
    n = t.params.n
    return Signotope(n, t.params.r, frozenset(complement_subset(n, B) for B in t.plus))


def single_step(a, b) -> bool:
    """True iff b's plus set extends a's by exactly one subset.

    Both operands are assumed valid; works for co-signotopes and signotopes
    alike, but not across the two types.
    """
    if type(a) is not type(b):
        raise ValueError("single_step operands must have the same type")
    space_a = a.params if isinstance(a, CoSignotope) else (a.n, a.r)
    space_b = b.params if isinstance(b, CoSignotope) else (b.n, b.r)
    if space_a != space_b:
        raise ValueError(f"operands live in different spaces: {space_a} vs {space_b}")
    return len(b.plus) == len(a.plus) + 1 and a.plus < b.plus
