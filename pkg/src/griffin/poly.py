"""Sparse multivariate polynomials over Q with the two monomial orders used here.

Monomial orders follow a *reversed* convention: x_n is the dominant variable.

* ``grevlex``: compare total degree first; on a tie, the monomial with the
  larger exponent at the first differing index is the *smaller* one.
* ``lex``: the monomial with the larger exponent at the last differing index
  is the larger one.
"""

from __future__ import annotations

import json
import re
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from gmpy2 import mpq

MAX_VARS = 64

ORDERS = ("grevlex", "lex")

Exp = tuple  # exponent vector, a tuple of non-negative ints


class PolynomialError(ValueError):
    """Raised for malformed polynomial input (length/ambient mismatches etc)."""


def order_key(order: str):
    """Return a sort key function; a larger key means a larger monomial."""
    if order == "grevlex":
        return lambda e: (sum(e), tuple(-a for a in e))
    if order == "lex":
        return lambda e: e[::-1]
    raise PolynomialError(f"unknown monomial order {order!r}")


def heap_key(order: str):
    """Key whose *minimum* is the order-maximal monomial (for heapq)."""
    if order == "grevlex":
        return lambda e: (-sum(e), e)
    if order == "lex":
        return lambda e: tuple(-a for a in reversed(e))
    raise PolynomialError(f"unknown monomial order {order!r}")


def compare(order: str, a: Exp, b: Exp) -> int:
    """Three-way comparison of exponent vectors: -1, 0 or 1."""
    if len(a) != len(b):
        raise PolynomialError(f"exponent length mismatch: {len(a)} vs {len(b)}")
    key = order_key(order)
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


def divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coerce(c):
    if isinstance(c, str):
        return mpq(c.strip())
    return mpq(c)


class Polynomial:
    """Immutable sparse polynomial in x_1..x_n with rational coefficients."""

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None, n: int = 1):
        if not 0 <= n <= MAX_VARS:
            raise PolynomialError(f"ambient variable count must be in 0..{MAX_VARS}, got {n}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != n:
                raise PolynomialError(f"exponent {exp} does not have length {n}")
            if any(a < 0 for a in exp):
                raise PolynomialError(f"negative exponent in {exp}")
            c = _coerce(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._n = n
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, n: int) -> "Polynomial":
        # trusted constructor: keys are tuples of length n, coefficients nonzero mpq
        p = object.__new__(cls)
        p._terms = terms
        p._n = n
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        c = _coerce(c)
        return cls._raw({(0,) * n: c} if c else {}, n)

    @classmethod
    def monomial(cls, exp: Iterable[int], n: int | None = None, coeff=1) -> "Polynomial":
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp) if n is None else n)

    @classmethod
    def var(cls, i: int, n: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise PolynomialError(f"variable x{i} outside x1..x{n}")
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw({tuple(exp): mpq(1)}, n)

    # -- inspection -------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, exp: Iterable[int]):
        return self._terms.get(tuple(exp), mpq(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def leading_term(self, order: str = "grevlex"):
        """Return ``(exponent, coefficient)`` of the order-maximal term."""
        if not self._terms:
            raise PolynomialError("the zero polynomial has no leading term")
        exp = max(self._terms, key=order_key(order))
        return exp, self._terms[exp]

    def leading_monomial(self, order: str = "grevlex") -> Exp:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: str = "grevlex"):
        """Terms in descending order."""
        key = order_key(order)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self._n != other._n:
            raise PolynomialError(f"ambient mismatch: {self._n} vs {other._n}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self._n)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._n)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(out, self._n)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise PolynomialError("negative powers are not supported")
        result = Polynomial.constant(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw({e: v * c for e, v in self._terms.items()}, self._n)

    def mul_monomial(self, exp: Iterable[int], c=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self._n:
            raise PolynomialError(f"monomial {exp} does not have length {self._n}")
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()},
            self._n,
        )

    def monic(self, order: str = "grevlex") -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def shift(self, k: int = 1) -> "Polynomial":
        """Substitute x_i -> x_{i+k}; the ambient grows by k."""
        pad = (0,) * k
        return Polynomial._raw({pad + e: c for e, c in self._terms.items()}, self._n + k)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, mpq)) or type(other).__name__ == "Fraction":
            return self == Polynomial.constant(other, self._n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    # -- text / json ------------------------------------------------------

    def to_str(self, order: str = "grevlex") -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms(order):
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exp) if a
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, n={self._n})"

    def to_json(self) -> list:
        """Terms sorted grevlex-descending, coefficients as strings."""
        return [{"coeff": str(c), "exp": list(e)} for e, c in self.sorted_terms("grevlex")]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        if n is None:
            if not data:
                raise PolynomialError("cannot infer ambient n of an empty term list")
            n = len(data[0]["exp"])
        terms: dict = {}
        for t in data:
            e = tuple(t["exp"])
            terms[e] = terms.get(e, 0) + _coerce(t["coeff"])
        return cls(terms, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Parse the text form ``c*x1^a*x2 - x3 + ...``."""
        s = text.replace(" ", "")
        if not s:
            raise PolynomialError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        result: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff = mpq(1)
            exp = [0] * n
            for factor in body.split("*"):
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if m:
                    i = int(m.group(1))
                    if not 1 <= i <= n:
                        raise PolynomialError(f"variable x{i} outside x1..x{n}")
                    exp[i - 1] += int(m.group(2) or 1)
                else:
                    try:
                        coeff *= mpq(factor)
                    except ValueError as err:
                        raise PolynomialError(f"cannot parse factor {factor!r}") from err
            if sign == "-":
                coeff = -coeff
            e = tuple(exp)
            result[e] = result.get(e, 0) + coeff
        if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
            raise PolynomialError(f"cannot parse polynomial {text!r}")
        return cls(result, n)


def elementary(d: int, S: Iterable[int], n: int) -> Polynomial:
    """e_d(S) in x_1..x_n; S holds 1-based indices."""
    S = sorted(set(S))
    if any(not 1 <= i <= n for i in S):
        raise PolynomialError(f"index set {S} not inside 1..{n}")
    if d < 0 or d > len(S):
        return Polynomial.zero(n)
    terms = {}
    one = mpq(1)
    for sub in combinations(S, d):
        exp = [0] * n
        for i in sub:
            exp[i - 1] = 1
        terms[tuple(exp)] = one
    return Polynomial._raw(terms, n)


def complete_homogeneous(d: int, m: int, n: int) -> Polynomial:
    """h_d(x_1, ..., x_m) in the ambient ring of n variables."""
    if d < 0:
        raise PolynomialError("degree must be non-negative")
    if not 0 <= m <= n:
        raise PolynomialError(f"need 0 <= m <= n, got m={m}, n={n}")
    terms = {}
    one = mpq(1)
    for sub in combinations_with_replacement(range(m), d):
        exp = [0] * n
        for i in sub:
            exp[i] += 1
        terms[tuple(exp)] = one
    return Polynomial._raw(terms, n)


def pure_power(i: int, s: int, n: int) -> Polynomial:
    """x_i^s."""
    exp = [0] * n
    exp[i - 1] = s
    return Polynomial._raw({tuple(exp): mpq(1)}, n)
