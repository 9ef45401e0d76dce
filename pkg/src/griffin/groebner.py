"""From-scratch Groebner machinery over Q: division, Buchberger, reduced bases,
standard monomials and Hilbert functions.

Nothing here knows about the recursive construction; it is the independent
oracle used to check it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product

from gmpy2 import mpq

from .poly import Polynomial, PolynomialError, divides, heap_key, lcm, order_key


@dataclass(frozen=True)
class GroebnerBasis:
    order: str
    elements: tuple
    reduced: bool = False

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


class _Lead:
    """A basis polynomial with its leading data cached."""

    __slots__ = ("poly", "terms", "lm", "lc")

    def __init__(self, poly: Polynomial, order: str):
        self.poly = poly
        self.terms = list(poly.items())
        self.lm, self.lc = poly.leading_term(order)


def _reduce(terms: dict, n: int, leads: list, order: str, full: bool = True) -> dict:
    """Divide ``terms`` by ``leads``; returns the remainder as a dict."""
    hk = heap_key(order)
    p = dict(terms)
    heap = [(hk(e), e) for e in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for g in leads:
            lm = g.lm
            if all(a >= b for a, b in zip(e, lm)):
                q = c / g.lc
                shift = tuple(a - b for a, b in zip(e, lm))
                for ge, gc in g.terms:
                    if ge == lm:
                        continue
                    ne = tuple(a + b for a, b in zip(ge, shift))
                    old = p.get(ne)
                    if old is None:
                        p[ne] = -q * gc
                        heapq.heappush(heap, (hk(ne), ne))
                    else:
                        v = old - q * gc
                        if v:
                            p[ne] = v
                        else:
                            del p[ne]
                break
        else:
            rem[e] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def normal_form(f: Polynomial, G, order: str = "grevlex") -> Polynomial:
    """Remainder of f on division by G: no term is divisible by any lm(g)."""
    leads = [_Lead(g, order) for g in G if g]
    for g in leads:
        if g.poly.n != f.n:
            raise PolynomialError("ambient mismatch between f and G")
    return Polynomial._raw(_reduce(f.terms, f.n, leads, order), f.n)


def s_polynomial(f: Polynomial, g: Polynomial, order: str = "grevlex") -> Polynomial:
    if not f or not g:
        raise PolynomialError("S-polynomial of the zero polynomial")
    (a, ca), (b, cb) = f.leading_term(order), g.leading_term(order)
    m = lcm(a, b)
    fa = tuple(x - y for x, y in zip(m, a))
    gb = tuple(x - y for x, y in zip(m, b))
    return f.mul_monomial(fa, 1 / ca) - g.mul_monomial(gb, 1 / cb)


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def buchberger(gens, order: str = "grevlex", criteria: bool = True) -> GroebnerBasis:
    """A Groebner basis of <gens> by Buchberger's algorithm.

    Pairs are chosen by the normal strategy (smallest lcm, ties by index).
    With ``criteria`` the coprime-leading-monomial and Gebauer-Moeller chain
    criteria prune pairs; without it every pair is reduced.
    """
    gens = [g for g in gens if g]
    if not gens:
        return GroebnerBasis(order, (), False)
    n = gens[0].n
    key = order_key(order)
    basis: list = []  # _Lead objects, index = position
    active: list = []  # indices still in the (non-redundant) basis
    pairs: list = []  # (i, j) with i < j

    def add(poly: Polynomial):
        nonlocal pairs, active
        h = len(basis)
        basis.append(_Lead(poly.monic(order), order))
        lh = basis[h].lm
        if not criteria:
            pairs.extend((g, h) for g in active)
            active.append(h)
            return
        # Gebauer-Moeller: candidates are examined one by one against the
        # still-unexamined ones (C) and the already-kept ones (D)
        C = [(g, lcm(basis[g].lm, lh)) for g in active]
        D = []
        while C:
            g, m = C.pop(0)
            if _coprime(basis[g].lm, lh) or not any(divides(m2, m) for _, m2 in C + D):
                D.append((g, m))
        new_pairs = [(g, h) for g, m in D if not _coprime(basis[g].lm, lh)]
        old = []
        for i, j in pairs:
            m = lcm(basis[i].lm, basis[j].lm)
            if (divides(lh, m) and lcm(basis[i].lm, lh) != m and lcm(basis[j].lm, lh) != m):
                continue
            old.append((i, j))
        pairs = old + new_pairs
        active = [g for g in active if not divides(lh, basis[g].lm)] + [h]

    for g in gens:
        if g.n != n:
            raise PolynomialError("generators live in different rings")
        r = Polynomial._raw(_reduce(g.terms, n, [basis[i] for i in active], order), n)
        if r:
            add(r)
            if r.is_constant():
                return GroebnerBasis(order, (Polynomial.constant(1, n),), True)

    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda k: (key(lcm(basis[pairs[k][0]].lm, basis[pairs[k][1]].lm)), pairs[k]),
        )
        i, j = pairs.pop(best)
        s = s_polynomial(basis[i].poly, basis[j].poly, order)
        r = Polynomial._raw(_reduce(s.terms, n, [basis[k] for k in active], order), n)
        if r:
            add(r)
            if r.is_constant():
                return GroebnerBasis(order, (Polynomial.constant(1, n),), True)
    return GroebnerBasis(order, tuple(basis[k].poly for k in active), False)


def reduce_basis(G, order: str | None = None) -> GroebnerBasis:
    """The reduced Groebner basis generated by a Groebner basis G."""
    if isinstance(G, GroebnerBasis):
        order = G.order if order is None else order
        elems = list(G.elements)
    else:
        order = order or "grevlex"
        elems = list(G)
    elems = [g.monic(order) for g in elems if g]
    key = order_key(order)
    elems.sort(key=lambda g: key(g.leading_monomial(order)))
    minimal = []
    for g in elems:
        lm = g.leading_monomial(order)
        if not any(divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = [_Lead(h, order) for k, h in enumerate(minimal) if k != idx]
        lm, _ = g.leading_term(order)
        tail = {e: c for e, c in g.items() if e != lm}
        r = _reduce(tail, g.n, others, order)
        r[lm] = mpq(1)
        reduced.append(Polynomial._raw(r, g.n))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return GroebnerBasis(order, tuple(reduced), True)


def groebner(gens, order: str = "grevlex") -> GroebnerBasis:
    """Reduced Groebner basis of <gens>."""
    return reduce_basis(buchberger(gens, order))


def is_groebner(G, order: str = "grevlex") -> bool:
    """Buchberger's criterion; pairs with coprime leading monomials are skipped."""
    G = [g for g in G if g]
    if not G:
        return True
    n = G[0].n
    leads = [_Lead(g, order) for g in G]
    if any(g.lm == (0,) * n for g in leads):
        return True
    for a in range(len(leads)):
        for b in range(a + 1, len(leads)):
            if _coprime(leads[a].lm, leads[b].lm):
                continue
            s = s_polynomial(leads[a].poly, leads[b].poly, order)
            if _reduce(s.terms, n, leads, order, full=False):
                return False
    return True


def is_reduced(G, order: str = "grevlex") -> bool:
    """Both reduced-basis conditions: monic, and no lm(g_i) divides a term of g_j."""
    G = list(G)
    for i, g in enumerate(G):
        lm, lc = g.leading_term(order)
        if lc != 1:
            return False
        for j, h in enumerate(G):
            if i != j and any(divides(lm, e) for e in h.monomials()):
                return False
    return True


# -- monomial ideals -------------------------------------------------------


def minimal_generators(monomials) -> set:
    mons = sorted(set(map(tuple, monomials)), key=sum)
    out = []
    for m in mons:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return set(out)


def monomial_ideal_equal(A, B) -> bool:
    """Whether two finite monomial sets generate the same ideal."""
    A, B = set(map(tuple, A)), set(map(tuple, B))
    return all(any(divides(b, a) for b in B) for a in A) and all(
        any(divides(a, b) for a in A) for b in B
    )


def _lms(G, order) -> list:
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.elements
    return [g.leading_monomial(order) for g in G if g]


def standard_monomials(G, degree_bound: int | None = None, order: str = "grevlex", n: int | None = None) -> set:
    """Monomials divisible by no leading monomial of G (up to a total degree bound)."""
    lms = _lms(G, order)
    if n is None:
        if isinstance(G, GroebnerBasis) and G.elements:
            n = G.elements[0].n
        elif not isinstance(G, GroebnerBasis) and G:
            n = G[0].n
        else:
            raise PolynomialError("ambient n is required for an empty basis")
    caps = []
    for i in range(n):
        pure = [m[i] for m in lms if all(a == 0 for k, a in enumerate(m) if k != i)]
        caps.append(min(pure) - 1 if pure else None)
    if degree_bound is None:
        if any(c is None for c in caps):
            raise PolynomialError("quotient is infinite-dimensional; a degree bound is required")
        degree_bound = sum(caps)
    ranges = [range(min(degree_bound, c if c is not None else degree_bound) + 1) for c in caps]
    out = set()
    for m in product(*ranges):
        if sum(m) <= degree_bound and not any(divides(l, m) for l in lms):
            out.add(m)
    return out


def hilbert_function(G, max_degree: int, order: str = "grevlex", n: int | None = None) -> list:
    """Number of standard monomials in each degree 0..max_degree."""
    counts = [0] * (max_degree + 1)
    for m in standard_monomials(G, max_degree, order, n):
        counts[sum(m)] += 1
    return counts
