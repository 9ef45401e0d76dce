import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from griffin.partitions import (
    INF,
    ShapeError,
    conjugate,
    dominated,
    enumerate_A,
    enumerate_C,
    in_C,
    multinomial,
    p_stat,
    parse_partition,
    partition,
    partitions_of,
    remove_corner,
    rho,
    shuffles,
    staircases,
    valid_corners,
)


def corners_oracle(n, lam):
    """Decrement each conjugate entry and keep those that stay partitions."""
    conj = list(conjugate(lam))
    out = [] if sum(lam) == n + 1 else [0]
    for j in range(1, len(conj) + 1):
        c = conj[:]
        c[j - 1] -= 1
        if all(a >= b for a, b in zip(c, c[1:])):
            out.append(j)
    return out


def shuffles_oracle(*words):
    letters = [(w, i) for w in range(len(words)) for i in range(len(words[w]))]
    out = set()
    for perm in itertools.permutations(letters):
        pos = [0] * len(words)
        ok = True
        for w, i in perm:
            if i != pos[w]:
                ok = False
                break
            pos[w] += 1
        if ok:
            out.add(tuple(words[w][i] for w, i in perm))
    return out


def all_partitions(max_size):
    return [lam for k in range(1, max_size + 1) for lam in partitions_of(k)]


# -- partitions -----------------------------------------------------------


def test_conjugate_examples():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


@given(st.lists(st.integers(1, 7), max_size=7))
def test_conjugate_is_an_involution(parts):
    lam = tuple(sorted(parts, reverse=True))
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_partition_canonical_form():
    assert partition([3, 2, 0, 0]) == (3, 2)
    with pytest.raises(ShapeError):
        partition([1, 2])
    with pytest.raises(ShapeError):
        partition([2, -1])
    assert parse_partition("3, 2,2,1") == (3, 2, 2, 1)
    with pytest.raises(ShapeError):
        parse_partition("")
    with pytest.raises(ShapeError):
        parse_partition("3,a")


def test_partitions_of_counts():
    assert [len(list(partitions_of(k))) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_p_stat_examples():
    lam = (3, 2)
    assert p_stat(7, 7, lam) == 5
    assert p_stat(6, 7, lam) == 3
    assert p_stat(5, 7, lam) == 1
    for m in range(5):
        assert p_stat(m, 7, lam) == 0
    with pytest.raises(ShapeError):
        p_stat(8, 7, lam)


@pytest.mark.parametrize("lam", all_partitions(6))
def test_p_n_n_is_size(lam):
    assert p_stat(len(conjugate(lam)) + 2, len(conjugate(lam)) + 2, lam) == sum(lam)


def test_remove_corner_examples():
    assert remove_corner((3, 2), 2) == (3, 1)
    assert remove_corner((3, 2), 3) == (2, 2)
    assert remove_corner((3, 2), 1) is None
    assert remove_corner((3, 2), 0) == (3, 2)
    assert remove_corner((3, 2), 4) is None
    assert remove_corner((1,), 1) == ()


def test_valid_corners_examples():
    # (2,2,1) has conjugate (3,2); dropping the first entry gives (2,2), a partition
    assert valid_corners(5, (2, 2, 1)) == [0, 1, 2]
    assert valid_corners(1, (2,)) == [2]
    assert valid_corners(3, (1,)) == [0, 1]
    with pytest.raises(ShapeError):
        valid_corners(2, (2, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_valid_corners_match_oracle(n):
    for lam in all_partitions(n + 1):
        assert valid_corners(n, lam) == corners_oracle(n, lam)


# -- staircases -----------------------------------------------------------


def test_rho():
    assert rho(3) == (2, 1, 0)
    assert rho(0) == ()


def test_staircase_examples():
    assert staircases(3, (2, 1), 2) == {(1, 0, 0), (0, 1, 0)}
    assert staircases(1, (1,), 1) == {(0,)}
    assert staircases(2, (1,), 2) == {(0, 1), (1, 0)}


def test_staircase_errors():
    with pytest.raises(ShapeError):
        staircases(3, (1, 1), 1)
    with pytest.raises(ShapeError):
        staircases(3, (1,), INF)
    with pytest.raises(ShapeError):
        staircases(2, (2, 1), 3)


@pytest.mark.parametrize(
    "words", [((1, 0), (0,)), ((2, 1, 0), (1, 0)), ((0,), (0,), (3,)), ((1, 0), (1, 0), (2,))]
)
def test_shuffles_match_oracle(words):
    assert shuffles(*words) == shuffles_oracle(*words)


@pytest.mark.parametrize("n", range(1, 5))
def test_staircases_match_oracle(n):
    for lam in all_partitions(n):
        for s in range(len(lam), 4):
            words = [rho(k) for k in conjugate(lam)] + [(s - 1,)] * (n - sum(lam))
            assert staircases(n, lam, s) == shuffles_oracle(*words)


# -- C and A --------------------------------------------------------------


def test_enumerate_A_examples():
    assert len(enumerate_A(3, (1, 1, 1), 3)) == 6
    assert enumerate_A(3, (2, 1), 2) == {(0, 0, 0), (0, 1, 0), (1, 0, 0)}
    assert enumerate_A(1, (1,), 1) == {(0,)}
    with pytest.raises(ShapeError):
        enumerate_A(2, (1,), INF)


def test_in_C_examples():
    assert not in_C((1, 0, 1, 3, 4, 2, 3, 0, 0, 2, 1), 11, (3, 2, 2, 1), INF)
    assert in_C((0,) * 5, 5, (2, 2, 1), INF)
    assert not in_C((1, 1), 2, (1,), INF)
    assert in_C((0, 5), 2, (1,), INF)
    assert not in_C((0, 0), 2, (2, 1), INF)
    with pytest.raises(ShapeError):
        in_C((0, 0), 3, (1,), INF)


@pytest.mark.parametrize("n", range(1, 5))
def test_enumerate_C_matches_domination_oracle(n):
    for lam in all_partitions(n):
        for s in range(len(lam), 5):
            sts = staircases(n, lam, s)
            top = max(max(st) for st in sts)
            brute = {
                a
                for a in itertools.product(range(top + 1), repeat=n)
                if any(dominated(a, st) for st in sts)
            }
            assert enumerate_C(n, lam, s) == brute
            assert all(in_C(a, n, lam, s) for a in brute)


@pytest.mark.parametrize("n", range(1, 6))
def test_size_n_gives_multinomial_count(n):
    for lam in partitions_of(n):
        for s in range(len(lam), n + 2):
            assert len(enumerate_C(n, lam, s)) == multinomial(lam)


def test_multinomial():
    assert multinomial((1, 1, 1)) == 6
    assert multinomial((2, 1)) == 3
    assert multinomial((3,)) == 1
    assert multinomial((2, 2, 1)) == math.factorial(5) // 4
