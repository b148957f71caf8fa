"""Exact sparse multivariate polynomials keyed by exponent tuples.

Coefficients are ints or fractions.Fraction; zero terms are never stored.
The same class backs the 6-variable minor alphabet, the 27 matrix entries
of the oracle and the 30-variable invariant alphabet.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping

Coeff = "int | Fraction"
ExpVec = tuple[int, ...]


class SparsePoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[ExpVec, object] | None = None):
        self.nvars = nvars
        clean: dict[ExpVec, object] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {tuple([0] * nvars): c} if c else None)

    @classmethod
    def monomial(cls, nvars: int, exp: Iterable[int], c=1) -> "SparsePoly":
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, idx: int) -> "SparsePoly":
        exp = [0] * nvars
        exp[idx] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, exp: Iterable[int]):
        return self.terms.get(tuple(exp), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if self.nvars != other.nvars or len(self.terms) != len(other.terms):
            return False
        for exp, c in self.terms.items():
            if other.terms.get(exp, 0) != c:
                return False
        return True

    def __hash__(self):
        raise TypeError("SparsePoly is not hashable")

    def __repr__(self) -> str:
        n = len(self.terms)
        return f"SparsePoly(nvars={self.nvars}, {n} terms)"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            nc = terms.get(exp, 0) + c
            if nc:
                terms[exp] = nc
            else:
                terms.pop(exp, None)
        out = SparsePoly(self.nvars)
        out.terms = terms
        return out

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + other.scaled(-1)

    def scaled(self, c) -> "SparsePoly":
        if not c:
            return SparsePoly(self.nvars)
        out = SparsePoly(self.nvars)
        out.terms = {exp: v * c for exp, v in self.terms.items()}
        return out

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[ExpVec, object] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                nc = acc.get(key, 0) + c1 * c2
                if nc:
                    acc[key] = nc
                else:
                    acc.pop(key, None)
        out = SparsePoly(self.nvars)
        out.terms = acc
        return out

    def pow(self, e: int) -> "SparsePoly":
        if e < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def diff(self, var: int) -> "SparsePoly":
        acc: dict[ExpVec, object] = {}
        for exp, c in self.terms.items():
            k = exp[var]
            if k:
                nexp = exp[:var] + (k - 1,) + exp[var + 1:]
                nc = acc.get(nexp, 0) + c * k
                if nc:
                    acc[nexp] = nc
                else:
                    acc.pop(nexp, None)
        out = SparsePoly(self.nvars)
        out.terms = acc
        return out

    # -- evaluation ----------------------------------------------------------

    def value_at_ones(self):
        total = 0
        for c in self.terms.values():
            total = total + c
        return Fraction(total)

    def value_at_signs(self, signs: Iterable[int]):
        signs = tuple(signs)
        total = 0
        for exp, c in self.terms.items():
            neg = sum(e for e, s in zip(exp, signs) if s < 0)
            total = total + (-c if neg & 1 else c)
        return Fraction(total)

    def map_coeffs(self, fn: Callable) -> "SparsePoly":
        out = SparsePoly(self.nvars)
        out.terms = {e: fn(c) for e, c in self.terms.items() if fn(c)}
        return out


def scalar_product(f: SparsePoly, h: SparsePoly) -> Fraction:
    """Invariant pairing: sum over common monomials of f_a * h_a * a!.

    Equivalently f(d/dA) applied to h, evaluated at the origin.
    """
    if f.nvars != h.nvars:
        raise ValueError("variable count mismatch")
    small, big = (f.terms, h.terms) if len(f.terms) <= len(h.terms) else (h.terms, f.terms)
    total = Fraction(0)
    for exp, c1 in small.items():
        c2 = big.get(exp)
        if c2 is None:
            continue
        w = 1
        for e in exp:
            if e > 1:
                w *= factorial(e)
        total += Fraction(c1 * c2 * w)
    return total


def substitute(poly: SparsePoly, images: list[SparsePoly]) -> SparsePoly:
    """Evaluate poly at variable -> images[i]; images share one variable set."""
    if len(images) != poly.nvars:
        raise ValueError("need one image per variable")
    nvars = images[0].nvars
    power_cache: dict[tuple[int, int], SparsePoly] = {}

    def power(i: int, e: int) -> SparsePoly:
        key = (i, e)
        got = power_cache.get(key)
        if got is None:
            got = images[i].pow(e)
            power_cache[key] = got
        return got

    acc = SparsePoly.zero(nvars)
    for exp, c in poly.terms.items():
        term = SparsePoly.constant(nvars, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        acc = acc + term
    return acc


def sorted_terms(poly: SparsePoly) -> list[tuple[ExpVec, object]]:
    """Graded-lex ordered term list (largest first); deterministic."""
    return sorted(poly.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
