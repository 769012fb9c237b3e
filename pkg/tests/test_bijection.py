"""The level-preserving maps between ground sets and their equivalence."""

import pytest

from signotopes.bijection import map_by_components, map_cosignotope, shift_plus_subset
from signotopes.cosignotopes import CoSignotope, single_step
from signotopes.enumeration import enumerate_level_bfs
from signotopes.errors import BoundRefusal
from signotopes.subsets import GroundParams


def _cs(n, d, plus):
    return CoSignotope.from_plus(GroundParams(n, d), plus)


def test_shift_examples():
    assert shift_plus_subset(_cs(5, 2, [(1, 5)]), 6, (1, 5)) == (1, 6)
    assert shift_plus_subset(_cs(5, 2, [(4, 5)]), 6, (4, 5)) == (5, 6)
    assert shift_plus_subset(_cs(5, 2, [(1, 5)]), 5, (1, 5)) == (1, 5)  # zero shift


def test_shift_can_move_down():
    assert shift_plus_subset(_cs(6, 2, [(1, 6)]), 5, (1, 6)) == (1, 5)


def test_shift_requires_plus_member():
    t = _cs(5, 2, [(1, 5)])
    with pytest.raises(ValueError):
        shift_plus_subset(t, 6, (1, 2))


def test_shift_refuses_over_bound():
    t = _cs(6, 2, [(1, 2), (1, 3), (1, 4), (1, 5)])  # level 4 = n - d
    with pytest.raises(BoundRefusal):
        shift_plus_subset(t, 5, (1, 2))  # min(6,5) - 2 = 3 < 4


def test_map_examples():
    assert map_cosignotope(_cs(5, 2, [(1, 5)]), 6, 1).plus == frozenset({(1, 6)})
    assert map_cosignotope(_cs(5, 2, []), 6, 0).plus == frozenset()
    got = map_cosignotope(_cs(5, 2, [(1, 2), (4, 5)]), 6, 2)
    assert got.plus == frozenset({(1, 2), (5, 6)})
    assert (got.params.n, got.params.d) == (6, 2)


def test_map_identity_on_same_ground_set():
    for t in enumerate_level_bfs(GroundParams(5, 2), 3).members():
        assert map_cosignotope(t, 5, 3).plus == t.plus


def test_map_rejections():
    t = _cs(5, 2, [(1, 2), (4, 5)])
    with pytest.raises(BoundRefusal):
        map_cosignotope(t, 6, 4)  # p above min(5,6) - 2
    with pytest.raises(ValueError):
        map_cosignotope(t, 6, 1)  # plus count above the stated level
    with pytest.raises(ValueError):
        map_cosignotope(_cs(5, 2, [(2, 4)]), 6, 1)  # invalid input
    with pytest.raises(ValueError):
        map_cosignotope(t, 2, 0)  # ground set smaller than d


def test_compositional_map_agrees_on_examples():
    for plus in ([(1, 5)], [], [(1, 2), (4, 5)]):
        t = _cs(5, 2, plus)
        assert map_by_components(t, 6, 2).plus == map_cosignotope(t, 6, 2).plus
    t = _cs(5, 2, [(1, 2), (4, 5)])
    assert map_by_components(t, 5, 2).plus == t.plus


def test_compositional_map_agrees_exhaustively():
    enum = enumerate_level_bfs(GroundParams(5, 2), 3)
    for t in enum.members():
        assert map_by_components(t, 6, 3).plus == map_cosignotope(t, 6, 3).plus


def test_map_preserves_level():
    for t in enumerate_level_bfs(GroundParams(6, 3), 3).members():
        assert map_cosignotope(t, 7, 3).plus_count == t.plus_count


def test_map_is_inverted_by_reverse_map():
    for n, new_n, d, p in [(5, 6, 2, 3), (6, 5, 2, 3), (5, 7, 2, 3), (4, 6, 1, 3)]:
        for t in enumerate_level_bfs(GroundParams(n, d), p).members():
            image = map_cosignotope(t, new_n, p)
            assert map_cosignotope(image, n, p).plus == t.plus


def test_map_is_a_level_bijection():
    for n, new_n, d, p in [(5, 6, 2, 3), (5, 7, 3, 2), (6, 7, 3, 3)]:
        src = enumerate_level_bfs(GroundParams(n, d), p)
        dst = enumerate_level_bfs(GroundParams(new_n, d), p)
        for level in range(p + 1):
            images = {map_cosignotope(t, new_n, p).plus for t in src.levels[level]}
            assert images == {t.plus for t in dst.levels[level]}


def test_map_preserves_single_steps_both_ways():
    n, new_n, d, p = 5, 6, 2, 3
    members = list(enumerate_level_bfs(GroundParams(n, d), p).members())
    mapped = {t.plus: map_cosignotope(t, new_n, p) for t in members}
    for a in members:
        for b in members:
            assert single_step(a, b) == single_step(mapped[a.plus], mapped[b.plus])
