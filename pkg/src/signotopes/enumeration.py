"""Brute-force enumeration of the low levels, and the truncated step order.

Two independent enumerations of the levels 0..p of the co-signotope family:

* enumerate_level_bfs grows level k+1 from level k by flipping one --subset
  to +.  Candidate flips are restricted to source subsets and to subsets
  adjacent to the current plus set (any other flip starts a component with
  no source and cannot be valid); every candidate is re-validated from the
  definition, so the restriction can only lose members, never admit bad
  ones.  That each level-(k+1) member is reachable from level k at all is
  a tested hypothesis, not a theorem: the naive enumeration is the check.

* enumerate_naive filters every subset of the d-subset family of size <= p.
  Definition-level and guarded (at most 10^7 candidates); the ground truth
  the BFS is measured against.

hasse_truncated assembles the cover graph of the single-step order on the
enumerated members.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cosignotopes import CoSignotope, cosignotope_is_valid
from .errors import InternalCheckError, OracleGuardError
from .subsets import GroundParams, all_d_subsets, neighbors, source_subset

NAIVE_CANDIDATE_GUARD = 10**7


def _canonical(members: list[CoSignotope]) -> tuple[CoSignotope, ...]:
    return tuple(sorted(members, key=lambda t: t.sorted_plus()))


@dataclass(frozen=True)
class LevelEnumeration:
    """Levels 0..max_level of one family, each in canonical order."""

    params: GroundParams
    levels: tuple[tuple[CoSignotope, ...], ...]

    @property
    def max_level(self) -> int:
        return len(self.levels) - 1

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def members(self) -> tuple[CoSignotope, ...]:
        return tuple(t for level in self.levels for t in level)


def enumerate_level_bfs(params: GroundParams, p: int) -> LevelEnumeration:
    """Levels 0..p, grown one flip at a time from the all-minus minimum."""
    if p < 0:
        raise ValueError(f"level p={p} must be >= 0")
    sources = [source_subset(params, i) for i in range(params.d + 1)]
    levels: list[tuple[CoSignotope, ...]] = [(CoSignotope.all_minus(params),)]
    for _ in range(p):
        found: dict[frozenset, CoSignotope] = {}
        for t in levels[-1]:
            candidates = {s for s in sources if s not in t.plus}
            for B in t.plus:
                candidates.update(
                    nb for nb in neighbors(params, B) if nb not in t.plus
                )
            for B in candidates:
                plus = t.plus | {B}
                if plus in found:
                    continue
                t2 = CoSignotope(params, plus)
                if cosignotope_is_valid(t2):
                    found[plus] = t2
        levels.append(_canonical(list(found.values())))
    return LevelEnumeration(params, tuple(levels))


def enumerate_naive(params: GroundParams, p: int) -> LevelEnumeration:
    """Definition-level enumeration: test every candidate plus set of size <= p.

    A sign function is valid exactly when, inside every series, its + entries
    occupy a prefix or a suffix of the positions.  Each candidate is screened
    by that positional test and every survivor is re-checked against
    cosignotope_is_valid, so a screening bug cannot let a bad member through.
    """
    if p < 0:
        raise ValueError(f"level p={p} must be >= 0")
    n, d = params.n, params.d
    family = list(all_d_subsets(params))
    top = min(p, len(family))
    total = sum(comb(len(family), k) for k in range(top + 1))
    if total > NAIVE_CANDIDATE_GUARD:
        raise OracleGuardError(
            f"{total} candidate plus sets exceed the naive guard of "
            f"{NAIVE_CANDIDATE_GUARD}"
        )

    # incidence[s] lists (series id, position) for each of the d series
    # through subset s; position of B in its slot-i series is b_i - i.
    series_ids: dict[tuple, int] = {}
    incidence: list[tuple[tuple[int, int], ...]] = []
    for B in family:
        pairs = []
        for idx in range(d):
            rest = B[:idx] + B[idx + 1 :]
            sid = series_ids.setdefault(rest, len(series_ids))
            pairs.append((sid, B[idx] - (idx + 1)))
        incidence.append(tuple(pairs))

    length = params.series_len
    levels: list[tuple[CoSignotope, ...]] = [(CoSignotope.all_minus(params),)]
    for k in range(1, top + 1):
        members = []
        for combo in combinations(range(len(family)), k):
            acc: dict[int, list[int]] = {}
            for s in combo:
                for sid, pos in incidence[s]:
                    entry = acc.get(sid)
                    if entry is None:
                        acc[sid] = [1, pos, pos]
                    else:
                        entry[0] += 1
                        if pos < entry[1]:
                            entry[1] = pos
                        elif pos > entry[2]:
                            entry[2] = pos
            for count, mn, mx in acc.values():
                if mx != count - 1 and mn != length - count:
                    break
            else:
                t = CoSignotope(params, frozenset(family[s] for s in combo))
                if not cosignotope_is_valid(t):
                    raise InternalCheckError(
                        f"positional screen passed invalid plus set {t.sorted_plus()}"
                    )
                members.append(t)
        levels.append(_canonical(members))
    for _ in range(top, p):  # candidate sets larger than the family: empty levels
        levels.append(())
    return LevelEnumeration(params, tuple(levels))


@dataclass(frozen=True)
class HasseDiagram:
    """Cover graph of the single-step order on levels 0..max_level."""

    params: GroundParams
    max_level: int
    nodes: tuple[CoSignotope, ...]
    node_levels: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def hasse_truncated(params: GroundParams, p: int) -> HasseDiagram:
    """Nodes are the enumerated members; edge a -> b when b adds one +-subset."""
    enum = enumerate_level_bfs(params, p)
    nodes: list[CoSignotope] = []
    node_levels: list[int] = []
    index: dict[frozenset, int] = {}
    for level, members in enumerate(enum.levels):
        for t in members:
            index[t.plus] = len(nodes)
            nodes.append(t)
            node_levels.append(level)
    edges = []
    for t in nodes:
        for B in t.plus:
            below = t.plus - {B}
            a = index.get(below)
            if a is not None:
                edges.append((a, index[t.plus]))
    return HasseDiagram(
        params, p, tuple(nodes), tuple(node_levels), tuple(sorted(edges))
    )
