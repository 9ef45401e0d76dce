"""Recursive construction of the Groebner basis G_{n, lam} of I_{n, lam, inf}.

Every element carries its expansion over the generators e_d(S) of the ideal,
starting from the one-variable base cases. Going from n - 1 to n variables,
an element of G_{n-1, lam^(j)} is shifted to x_2..x_n and each generator
e_d(S) in its expansion is replaced by a lift F_{d,S} that agrees with
x_1^a e_d(S) modulo x_1^(a+1), where a = lam'_{j+1}. This prepends a to the
leading exponent and keeps the leading coefficient equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagrams import build_D, corner_for_first_entry
from .ideals import GeneratorKey, TrackedPolynomial, combine, is_key
from .partitions import INF, ShapeError, conjugate, partition, remove_corner, size
from .poly import Polynomial, elementary, pure_power


class ConstructionError(AssertionError):
    """An internal invariant of the construction failed."""


@dataclass(frozen=True)
class GroebnerElement:
    target: tuple
    poly: TrackedPolynomial

    @property
    def value(self) -> Polynomial:
        return self.poly.value


def _x1_power(a: int, n: int) -> Polynomial:
    return pure_power(1, a, n) if a else Polynomial.constant(1, n)


def lift_F(d: int, S, j: int, n: int, lam) -> TrackedPolynomial:
    """F_{d,S} for a generator e_d(S), S inside {2..n}, of the shifted J_{n-1, lam^(j)}.

    The value is computed directly; the combination over the generators of
    J_{n, lam} is the single key (d, S + {1}) when |S| >= n - j and the
    telescoping expansion otherwise.
    """
    lam = partition(lam)
    S = tuple(sorted(S))
    if any(not 2 <= i <= n for i in S):
        raise ShapeError(f"index set {S} must lie inside 2..{n}")
    child = remove_corner(lam, j)
    if child is None:
        raise ShapeError(f"lambda^({j}) is not defined for {lam}")
    if not is_key(d, tuple(i - 1 for i in S), n - 1, child):
        raise ShapeError(f"e_{d}({set(S)}) is not a generator of the shifted J_(n-1, {child})")
    conj = conjugate(lam)
    a = conj[j] if j < len(conj) else 0
    S1 = (1,) + S
    xa = _x1_power(a, n)
    if len(S) >= n - j:
        value = xa * elementary(d, S1, n)
        pairs = [(GeneratorKey(d, S1), xa)]
    else:
        value = xa * elementary(d, S, n)
        pairs = []
        for k in range(1, a + 1):
            if d + k <= len(S1):
                sign = 1 if k % 2 else -1
                pairs.append((GeneratorKey(d + k, S1), _x1_power(a - k, n).scale(sign)))
        if d + a <= len(S):
            pairs.append((GeneratorKey(d + a, S), Polynomial.constant((-1) ** a, n)))
    for key, _ in pairs:
        if not is_key(key.d, key.S, n, lam):
            raise ConstructionError(f"{key} is not a generator of J_({n}, {lam})")
    rest = value - xa * elementary(d, S, n)
    if any(e[0] < a + 1 for e in rest.monomials()):
        raise ConstructionError(f"x1^{a + 1} does not divide F - x1^{a} e_{d}(S) for S={S}")
    return TrackedPolynomial(value, combine(pairs, n))


def shift_up(t: TrackedPolynomial, k: int = 1) -> TrackedPolynomial:
    """Rename x_i -> x_{i+k} in the value, the cofactors and the generator keys."""
    return TrackedPolynomial(
        t.value.shift(k), {key.shifted(k): g.shift(k) for key, g in t.combination.items()}
    )


def _base(lam: tuple) -> dict:
    if lam == (1,):
        key = GeneratorKey(1, (1,))
        return {(1,): GroebnerElement((1,), TrackedPolynomial.generator(key, 1))}
    if lam in ((2,), (1, 1)):
        key = GeneratorKey(0, (1,))
        return {(0,): GroebnerElement((0,), TrackedPolynomial.generator(key, 1))}
    raise ShapeError(f"no base case for n=1, lambda={lam}")


@lru_cache(maxsize=None)
def _lift_cached(d, S, j, n, lam):
    return lift_F(d, S, j, n, lam)


@lru_cache(maxsize=None)
def _build(n: int, lam: tuple) -> dict:
    if not lam:
        return {}
    if n == 1:
        return _base(lam)
    corner = corner_for_first_entry(n, lam)
    out = {}
    for alpha in sorted(build_D(n, lam)):
        if alpha[0] not in corner:
            raise ConstructionError(f"first entry of {alpha} matches no corner of {lam}")
        j = corner[alpha[0]]
        child = _build(n - 1, remove_corner(lam, j))
        f = shift_up(child[alpha[1:]].poly)
        value = Polynomial.zero(n)
        pairs = []
        for key, g in f.combination.items():
            F = _lift_cached(key.d, key.S, j, n, lam)
            value = value + g * F.value
            pairs.extend((k2, g * c2) for k2, c2 in F.combination.items())
        out[alpha] = GroebnerElement(alpha, TrackedPolynomial(value, combine(pairs, n)))
    return out


def build_G(n: int, lam) -> list:
    """G_{n, lam}: one element per alpha in D_{n, lam}, sorted by target."""
    lam = partition(lam)
    if n < 1 or not 1 <= size(lam) <= n + 1:
        raise ShapeError(f"need n >= 1 and 1 <= |lambda| <= n + 1, got n={n}, lambda={lam}")
    elements = _build(n, lam)
    return [elements[a] for a in sorted(elements)]


def lineage(n: int, lam, target) -> list:
    """The chain of (n_k, lam_k, element) from the base case up to ``target``."""
    lam = partition(lam)
    target = tuple(target)
    chain = []
    while True:
        chain.append((n, lam, _build(n, lam)[target]))
        if n == 1:
            break
        j = corner_for_first_entry(n, lam)[target[0]]
        n, lam, target = n - 1, remove_corner(lam, j), target[1:]
    return chain[::-1]


def check_element(el: GroebnerElement, n: int, lam) -> list:
    """Return a list of violated invariants (empty when the element is sound)."""
    problems = []
    v = el.value
    if v.is_zero():
        return ["zero polynomial"]
    if not v.is_homogeneous():
        problems.append("not homogeneous")
    if v.degree() != sum(el.target):
        problems.append("degree differs from |target|")
    if not v.has_integer_coefficients():
        problems.append("non-integer coefficient")
    lm, lc = v.leading_term("grevlex")
    if lm != el.target:
        problems.append(f"leading monomial {lm} != target {el.target}")
    if lc != 1:
        problems.append(f"leading coefficient {lc} != 1")
    from .ideals import certify

    if not certify(el.poly, n, lam):
        problems.append("membership certificate does not re-expand to the value")
    return problems


def build_G_s(n: int, lam, s) -> list:
    """G_{n, lam} plus x_1^s, ..., x_n^s (s finite), duplicates dropped."""
    lam = partition(lam)
    if s == INF:
        return [el.value for el in build_G(n, lam)]
    if not isinstance(s, int) or s < len(lam):
        raise ShapeError(f"s must be an integer >= l(lambda) = {len(lam)}, got {s}")
    out = []
    for p in [el.value for el in build_G(n, lam)] + [pure_power(i, s, n) for i in range(1, n + 1)]:
        if p not in out:
            out.append(p)
    return out
