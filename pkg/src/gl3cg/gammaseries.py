"""Terminating Gamma series over integer lattices.

A series is determined by an integer shift vector and a lattice: its support
is the set of componentwise-nonnegative points of the shifted lattice, and
each point x contributes z^x / x!.  Negative integer components annihilate a
term, which is what makes every series here a finite sum.  The weighted
variant attaches binomial prefactors read off per-letter projections; it is
what the 30-variable numerator stack evaluates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .lattices import IntegerLattice, Vec, orthant_walker
from .polynomials import SparsePoly

_FACT_CACHE: dict[int, int] = {}


def fact(n: int) -> int:
    f = _FACT_CACHE.get(n)
    if f is None:
        f = factorial(n)
        _FACT_CACHE[n] = f
    return f


def binom_int(t: int, s: int) -> int:
    """binomial(t, s) for s >= 0 as the degree-s polynomial in t.

    Defined for every integer t (negative included); the product of s
    consecutive integers is always divisible by s!.
    """
    if s < 0:
        raise ValueError("negative lower index")
    if s == 0:
        return 1
    num = 1
    for j in range(s):
        num *= t - j
    return num // fact(s)


@dataclass(frozen=True)
class GammaSeriesSpec:
    shift: Vec
    lattice: IntegerLattice

    def __post_init__(self) -> None:
        if len(self.shift) != self.lattice.ambient:
            raise ValueError("shift dimension mismatch")
        if not orthant_walker(self.lattice.basis).bounded:
            raise ValueError("unbounded support polytope")


def support_points(spec: GammaSeriesSpec) -> list[Vec]:
    """All nonnegative points shift + b, b in the lattice; sorted."""
    walker = orthant_walker(spec.lattice.basis)
    shift = spec.shift
    basis = spec.lattice.basis
    pts = []
    for t in walker.enumerate(shift):
        pts.append(tuple(shift[j] + sum(t[i] * basis[i][j] for i in range(len(basis)))
                         for j in range(len(shift))))
    pts.sort()
    return pts


def gamma_value(spec: GammaSeriesSpec, signs: Optional[Sequence[int]] = None) -> Fraction:
    """Sum over the support of signs^x / x!; empty support gives 0."""
    total = Fraction(0)
    for x in support_points(spec):
        denom = 1
        for e in x:
            if e > 1:
                denom *= fact(e)
        if signs is None:
            total += Fraction(1, denom)
        else:
            neg = sum(e for e, s in zip(x, signs) if s < 0)
            total += Fraction(-1 if neg & 1 else 1, denom)
    return total


def gamma_poly(spec: GammaSeriesSpec) -> SparsePoly:
    """The series as an exact polynomial (monomial x -> 1/x!)."""
    terms = {}
    for x in support_points(spec):
        denom = 1
        for e in x:
            if e > 1:
                denom *= fact(e)
        terms[x] = Fraction(1, denom)
    return SparsePoly(len(spec.shift), terms)


@dataclass(frozen=True)
class WeightedLattice:
    """A rank-6 lattice in 30 ambient dimensions with per-letter projections.

    letter_slots[l][j] tells which minor slot (0..5) of letter l the ambient
    coordinate j feeds, or None; direction is the 6-dim series generator all
    per-letter projections of basis vectors must be parallel to.
    """

    basis: tuple[Vec, ...]
    letter_slots: tuple[tuple[Optional[int], ...], ...]
    direction: Vec

    def project(self, letter: int, vec: Sequence[int]) -> Vec:
        out = [0] * 6
        slots = self.letter_slots[letter]
        for j, x in enumerate(vec):
            if x:
                slot = slots[j]
                if slot is not None:
                    out[slot] += x
        return tuple(out)


def weighted_gamma_value(
    shift: Vec,
    lattice: WeightedLattice,
    s: tuple[int, int, int],
    signs: Sequence[int],
    refs: Optional[tuple[Vec, Vec, Vec]] = None,
) -> Fraction:
    """Binomially weighted signed series over a shifted rank-6 lattice.

    Each support point h contributes
        prod_l binom(tau_l(h) + s_l, s_l) * signs^h / h!
    where tau_l(h) is the integer displacement, along the series direction,
    of the letter-l projection of h from refs[l] (default: the projection of
    the shift itself).  With s = (0,0,0) this is the plain signed series.
    """
    if refs is None:
        refs = tuple(lattice.project(l, shift) for l in range(3))
    walker = orthant_walker(lattice.basis)
    basis = lattice.basis
    n = len(shift)
    direction = lattice.direction
    # direction has a +1 entry in the single-column-1 slot; use it to read tau
    probe = direction.index(1)
    total = Fraction(0)
    for t in walker.enumerate(shift):
        h = tuple(shift[j] + sum(t[i] * basis[i][j] for i in range(len(basis)))
                  for j in range(n))
        coeff = 1
        for l in range(3):
            pr = lattice.project(l, h)
            tau = pr[probe] - refs[l][probe]
            if any(pr[j] - refs[l][j] != tau * direction[j] for j in range(6)):
                raise ValueError("support point does not match reference coset")
            coeff *= binom_int(tau + s[l], s[l])
            if coeff == 0:
                break
        if coeff == 0:
            continue
        denom = 1
        neg = 0
        for e, sg in zip(h, signs):
            if e > 1:
                denom *= fact(e)
            if sg < 0:
                neg += e
        total += Fraction(-coeff if neg & 1 else coeff, denom)
    return total
