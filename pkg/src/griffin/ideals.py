"""Generators of Griffin's ideals and polynomials carrying a membership certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .partitions import INF, ShapeError, p_stat, partition
from .poly import Polynomial, elementary, pure_power


class GeneratorKey(NamedTuple):
    """Names the generator e_d(S); S is a sorted tuple of 1-based indices."""

    d: int
    S: tuple

    def __str__(self):
        return f"e{self.d}({{{','.join(map(str, self.S))}}})"

    def poly(self, n: int) -> Polynomial:
        return elementary(self.d, self.S, n)

    def shifted(self, k: int = 1) -> "GeneratorKey":
        return GeneratorKey(self.d, tuple(i + k for i in self.S))


def is_key(d: int, S, n: int, lam) -> bool:
    """Whether e_d(S) is a nonzero generator of I_{n, lam, inf}."""
    m = len(S)
    return m - p_stat(m, n, lam) < d <= m


def _key_order(key: GeneratorKey):
    return (-len(key.S), key.S, key.d)


@lru_cache(maxsize=None)
def _generator_keys(n: int, lam: tuple) -> tuple:
    keys = []
    for m in range(n, -1, -1):
        p = p_stat(m, n, lam)
        if p < 1:
            continue
        for S in combinations(range(1, n + 1), m):
            for d in range(max(m - p + 1, 0), m + 1):
                keys.append(GeneratorKey(d, S))
    keys.sort(key=_key_order)
    return tuple(keys)


def generator_keys(n: int, lam) -> list:
    """The (d, S) with |S| - p_{|S|}^n(lam) < d <= |S|, in a fixed order.

    Sorted by |S| descending, then S lexicographically, then d ascending.
    """
    return list(_generator_keys(n, partition(lam)))


def all_definition_keys(n: int, lam) -> list:
    """Every (d, S) with d > |S| - p, without pruning the vanishing ones (d <= n)."""
    lam = partition(lam)
    keys = []
    for m in range(n, -1, -1):
        p = p_stat(m, n, lam)
        for S in combinations(range(1, n + 1), m):
            for d in range(max(m - p + 1, 0), n + 1):
                keys.append(GeneratorKey(d, S))
    return keys


def generators(n: int, lam, s=INF) -> list:
    """Generators of I_{n, lam, s}: the e_d(S), then x_1^s..x_n^s for finite s."""
    lam = partition(lam)
    if s != INF and (not isinstance(s, int) or s < len(lam)):
        raise ShapeError(f"s must be an integer >= l(lambda) = {len(lam)} or inf, got {s}")
    gens = [k.poly(n) for k in generator_keys(n, lam)]
    if s != INF:
        gens += [pure_power(i, s, n) for i in range(1, n + 1)]
    return gens


@dataclass(frozen=True)
class TrackedPolynomial:
    """A polynomial together with cofactors g_{d,S} over the generators e_d(S)."""

    value: Polynomial
    combination: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.value.n

    @classmethod
    def generator(cls, key: GeneratorKey, n: int) -> "TrackedPolynomial":
        return cls(key.poly(n), {key: Polynomial.constant(1, n)})

    def expand(self) -> Polynomial:
        total = Polynomial.zero(self.n)
        for key, g in self.combination.items():
            total = total + g * key.poly(self.n)
        return total

    def keys(self):
        return self.combination.keys()

    def combination_json(self) -> list:
        return [
            {"d": k.d, "S": list(k.S), "cofactor": g.to_json()}
            for k, g in sorted(self.combination.items(), key=lambda kv: _key_order(kv[0]))
        ]

    def combination_str(self) -> str:
        parts = []
        for k, g in sorted(self.combination.items(), key=lambda kv: _key_order(kv[0])):
            parts.append(f"({g})*{k}")
        return " + ".join(parts) if parts else "0"


def combine(pairs, n: int) -> dict:
    """Merge (key, cofactor) pairs, dropping zero cofactors."""
    out: dict = {}
    for key, g in pairs:
        h = out.get(key, Polynomial.zero(n)) + g
        if h:
            out[key] = h
        else:
            out.pop(key, None)
    return out


def certify(t: TrackedPolynomial, n: int | None = None, lam=None) -> bool:
    """Re-expand the combination and compare with the value.

    With ``(n, lam)`` given, every key must also be a generator of I_{n, lam, inf}
    and every cofactor must have integer coefficients.
    """
    if lam is not None:
        n = t.n if n is None else n
        lam = partition(lam)
        for key, g in t.combination.items():
            if not is_key(key.d, key.S, n, lam) or not g.has_integer_coefficients():
                return False
    return t.expand() == t.value

