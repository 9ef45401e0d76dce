"""Partitions, p-statistics, staircase shuffles and Griffin's monomial basis."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product
from typing import Iterable

INF = math.inf


class ShapeError(ValueError):
    """Invalid combinatorial input (bad partition, out-of-range parameters)."""


def partition(parts: Iterable[int]) -> tuple:
    """Canonical form: a weakly decreasing tuple of positive ints."""
    if type(parts) is tuple and parts in _CANONICAL:
        return parts
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"negative part in {parts}")
    parts = tuple(p for p in parts if p)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{parts} is not weakly decreasing")
    if len(_CANONICAL) < 100_000:
        _CANONICAL.add(parts)
    return parts


_CANONICAL: set = set()


def parse_partition(text: str) -> tuple:
    """Parse ``"3,2,2,1"``; the empty partition is not accepted here."""
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError as err:
        raise ShapeError(f"cannot parse partition {text!r}") from err
    lam = partition(parts)
    if not lam:
        raise ShapeError("the empty partition is not accepted")
    return lam


def conjugate(lam: Iterable[int]) -> tuple:
    return _conjugate(partition(lam))


@lru_cache(maxsize=4096)
def _conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def size(lam) -> int:
    return sum(lam)


def length(lam) -> int:
    return len(partition(lam))


def partitions_of(k: int, max_part: int | None = None):
    """All partitions of k, largest parts first."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest


def p_stat(m: int, n: int, lam) -> int:
    """p_m^n(lam): the tail sum of the conjugate from index n - m + 1 on."""
    if m > n or m < 0:
        raise ShapeError(f"p-statistic needs 0 <= m <= n, got m={m}, n={n}")
    conj = conjugate(lam)
    return sum(conj[n - m:])


def remove_corner(lam, j: int):
    """lam^(j): decrement the j-th entry of the conjugate. None when undefined."""
    lam = partition(lam)
    if j < 0:
        raise ShapeError(f"corner index must be >= 0, got {j}")
    if j == 0:
        return lam
    conj = list(conjugate(lam))
    if j > len(conj):
        return None
    nxt = conj[j] if j < len(conj) else 0
    if conj[j - 1] <= nxt:
        return None
    conj[j - 1] -= 1
    return conjugate(conj)


def valid_corners(n: int, lam) -> list:
    """Admissible j for the recursion on the D-sets.

    j = 0 is excluded when |lam| = n + 1; corners whose removal empties the
    partition are kept (their branch is empty).
    """
    lam = partition(lam)
    if not 1 <= size(lam) <= n + 1:
        raise ShapeError(f"need 1 <= |lambda| <= n + 1, got |lambda|={size(lam)}, n={n}")
    out = []
    for j in range(0, len(conjugate(lam)) + 1):
        if j == 0 and size(lam) == n + 1:
            continue
        if remove_corner(lam, j) is not None:
            out.append(j)
    return out


def rho(k: int) -> tuple:
    """The reversed staircase (k-1, ..., 1, 0)."""
    return tuple(range(k - 1, -1, -1))


def _check_s(lam, s):
    if s != INF and (not isinstance(s, int) or s < len(lam)):
        raise ShapeError(f"s must be an integer >= l(lambda) = {len(lam)} or inf, got {s}")


def shuffles(*words) -> set:
    """All distinct shuffles of the given sequences."""
    words = [tuple(w) for w in words if len(w)]

    @lru_cache(maxsize=None)
    def rec(pos: tuple) -> frozenset:
        if all(p == len(w) for p, w in zip(pos, words)):
            return frozenset({()})
        out = set()
        for i, (p, w) in enumerate(zip(pos, words)):
            if p < len(w):
                nxt = pos[:i] + (p + 1,) + pos[i + 1:]
                out.update((w[p],) + tail for tail in rec(nxt))
        return frozenset(out)

    return set(rec(tuple(0 for _ in words)))


@lru_cache(maxsize=None)
def _staircases(n: int, lam: tuple, s: int) -> frozenset:
    words = [rho(k) for k in conjugate(lam)]
    words += [(s - 1,)] * (n - size(lam))
    return frozenset(shuffles(*words))


def staircases(n: int, lam, s: int) -> set:
    """All (n, lam, s)-staircases."""
    lam = partition(lam)
    _check_s(lam, s)
    if s == INF:
        raise ShapeError("staircases need a finite s")
    if not 1 <= size(lam) <= n:
        raise ShapeError(f"need 1 <= |lambda| <= n, got |lambda|={size(lam)}, n={n}")
    return set(_staircases(n, lam, s))


def dominated(alpha, beta) -> bool:
    """alpha <=_e beta (entrywise)."""
    return all(a <= b for a, b in zip(alpha, beta))


def in_C(alpha, n: int, lam, s) -> bool:
    """Membership in C_{n, lam, s}; for s = inf uses the container-diagram test."""
    lam = partition(lam)
    alpha = tuple(alpha)
    if len(alpha) != n:
        raise ShapeError(f"composition {alpha} does not have length {n}")
    _check_s(lam, s)
    if size(lam) > n:
        return False
    if s == INF:
        from .diagrams import code_inv

        return code_inv(alpha, n, lam).num_empty() == 0
    return any(dominated(alpha, st) for st in _staircases(n, lam, s))


def enumerate_C(n: int, lam, s: int) -> set:
    """C_{n, lam, s} for finite s: the union of the downsets of all staircases."""
    lam = partition(lam)
    _check_s(lam, s)
    if s == INF:
        raise ShapeError("C_{n,lambda,inf} is infinite; use in_C for membership")
    if size(lam) > n:
        return set()
    out = set()
    for st in _staircases(n, lam, s):
        out.update(product(*(range(a + 1) for a in st)))
    return out


enumerate_A = enumerate_C


def multinomial(lam) -> int:
    """|lam|! / prod(lam_i!)."""
    out = math.factorial(size(lam))
    for p in lam:
        out //= math.factorial(p)
    return out
