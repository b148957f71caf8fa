"""Exact integer lattice algebra.

Hand-rolled on purpose: everything here must be exact and deterministic,
and the needed subset (extended gcd, Hermite form, membership solve,
bounded enumeration of lattice points in a shifted orthant) is small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

Vec = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def row_hnf(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U * rows = H, H in row echelon form
    with positive pivots and reduced entries above each pivot.
    """
    H = [list(map(int, r)) for r in rows]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if H[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            # gcd loop on (H[r][c], H[i][c])
            while H[i][c] != 0:
                q = H[r][c] // H[i][c]
                for j in range(n):
                    H[r][j] -= q * H[i][j]
                for j in range(m):
                    U[r][j] -= q * U[i][j]
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                for j in range(n):
                    H[i][j] -= q * H[r][j]
                for j in range(m):
                    U[i][j] -= q * U[r][j]
        r += 1
    return H, U


def _pivot(row: Sequence[int]) -> Optional[int]:
    for j, x in enumerate(row):
        if x != 0:
            return j
    return None


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    H, _ = row_hnf(rows)
    return sum(1 for row in H if _pivot(row) is not None)


@dataclass(frozen=True)
class IntegerLattice:
    """An integer lattice given by linearly independent basis vectors."""

    ambient: int
    basis: tuple[Vec, ...]

    def __post_init__(self) -> None:
        for b in self.basis:
            if len(b) != self.ambient:
                raise ValueError("basis vector dimension mismatch")
        if self.basis and int_rank(self.basis) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)


def lattice_solve(lattice: IntegerLattice | Sequence[Vec], target: Sequence[int]) -> Optional[Vec]:
    """Integer coefficients c with sum(c_i * basis_i) == target, or None.

    Accepts an IntegerLattice or a plain sequence of basis vectors.
    """
    basis = lattice.basis if isinstance(lattice, IntegerLattice) else tuple(tuple(b) for b in lattice)
    target = list(map(int, target))
    if not basis:
        return () if not any(target) else None
    if len(target) != len(basis[0]):
        raise ValueError("target dimension mismatch")
    H, U = row_hnf(basis)
    m = len(basis)
    y = [0] * m
    resid = target[:]
    for i in range(m):
        piv = _pivot(H[i])
        if piv is None:
            continue
        if resid[piv] % H[i][piv] != 0:
            return None
        q = resid[piv] // H[i][piv]
        y[i] = q
        if q:
            for j in range(len(resid)):
                resid[j] -= q * H[i][j]
    if any(resid):
        return None
    return tuple(sum(y[i] * U[i][j] for i in range(m)) for j in range(m))


def lattice_member(lattice: IntegerLattice | Sequence[Vec], target: Sequence[int]) -> bool:
    return lattice_solve(lattice, target) is not None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    return a // b


class OrthantWalker:
    """Enumerates integer t with shift + sum(t_i * basis_i) >= 0 componentwise.

    Built once per basis via Fourier-Motzkin elimination with symbolic right
    hand sides, so repeated queries with different shifts reuse the projection
    structure.  Each derived inequality is stored as (tcoeffs, lam) meaning

        sum_i tcoeffs[i] * t_i  >=  -sum_j lam[j] * shift[j]

    where lam is the nonnegative multiplier vector over original rows.
    """

    _MAX_INEQS = 200000

    def __init__(self, basis: Sequence[Vec]):
        self.basis = tuple(tuple(b) for b in basis)
        self.k = len(self.basis)
        self.n = len(self.basis[0]) if self.basis else 0
        system = []
        for j in range(self.n):
            tc = tuple(self.basis[i][j] for i in range(self.k))
            lam = tuple(int(jj == j) for jj in range(self.n))
            system.append((tc, lam))
        # levels[d] constrains variables t_0..t_{d-1}; levels[k] is the input.
        self.levels: list[list[tuple[Vec, Vec]]] = [[] for _ in range(self.k + 1)]
        self.levels[self.k] = self._normalize(system)
        for d in range(self.k, 0, -1):
            self.levels[d - 1] = self._eliminate(self.levels[d], d - 1)
        self._bounded = self._check_bounded()

    @staticmethod
    def _normalize(ineqs: list[tuple[Vec, Vec]]) -> list[tuple[Vec, Vec]]:
        from math import gcd

        seen = set()
        out = []
        for tc, lam in ineqs:
            g = 0
            for x in tc:
                g = gcd(g, x)
            for x in lam:
                g = gcd(g, x)
            if g > 1:
                tc = tuple(x // g for x in tc)
                lam = tuple(x // g for x in lam)
            key = (tc, lam)
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out

    def _eliminate(self, ineqs: list[tuple[Vec, Vec]], var: int) -> list[tuple[Vec, Vec]]:
        lowers = []  # coefficient on var > 0
        uppers = []  # coefficient on var < 0
        keep = []
        for tc, lam in ineqs:
            c = tc[var]
            if c > 0:
                lowers.append((tc, lam))
            elif c < 0:
                uppers.append((tc, lam))
            else:
                keep.append((tc, lam))
        out = list(keep)
        for tc1, lam1 in lowers:
            c1 = tc1[var]
            for tc2, lam2 in uppers:
                c2 = -tc2[var]
                # c2*ineq1 + c1*ineq2 cancels var
                tc = tuple(c2 * a + c1 * b for a, b in zip(tc1, tc2))
                lam = tuple(c2 * a + c1 * b for a, b in zip(lam1, lam2))
                if any(tc):
                    out.append((tc, lam))
                if len(out) > self._MAX_INEQS:
                    raise RuntimeError("Fourier-Motzkin blow-up; lattice too unstructured")
        return self._normalize(out)

    def _check_bounded(self) -> bool:
        # Recession cone {t : basis^T t >= 0} must be {0}: walking the
        # homogeneous system along the zero prefix, every level must pin the
        # next coordinate to the interval [0, 0].
        if self.k == 0:
            return True
        for d in range(self.k):
            lo, hi = None, None
            for tc, _lam in self.levels[d + 1]:
                c = tc[d]
                if c > 0:
                    lo = 0 if lo is None else max(lo, 0)
                elif c < 0:
                    hi = 0 if hi is None else min(hi, 0)
            if lo is None or hi is None:
                return False
        return True

    @property
    def bounded(self) -> bool:
        return self._bounded

    def enumerate(self, shift: Sequence[int]) -> Iterator[Vec]:
        """Yield coefficient tuples t (deterministic order)."""
        if not self._bounded:
            raise ValueError("unbounded support polytope")
        shift = tuple(map(int, shift))
        if len(shift) != self.n:
            raise ValueError("shift dimension mismatch")
        if self.k == 0:
            if all(x >= 0 for x in shift):
                yield ()
            return
        rhs_levels = []
        for d in range(self.k + 1):
            rhs_levels.append(
                [
                    (tc, -sum(l * s for l, s in zip(lam, shift) if l))
                    for tc, lam in self.levels[d]
                ]
            )
        # feasibility of the fully projected system (no variables left)
        for tc, rhs in rhs_levels[0]:
            if rhs > 0:
                return
        t = [0] * self.k
        yield from self._recurse(rhs_levels, 0, t)

    def _recurse(self, rhs_levels, depth: int, t: list[int]) -> Iterator[Vec]:
        lo, hi = None, None
        for tc, rhs in rhs_levels[depth + 1]:
            c = tc[depth]
            if c == 0:
                continue
            resid = rhs - sum(tc[i] * t[i] for i in range(depth))
            if c > 0:
                b = _ceil_div(resid, c)
                lo = b if lo is None else max(lo, b)
            else:
                b = _floor_div(resid, c)
                hi = b if hi is None else min(hi, b)
        if lo is None or hi is None:
            raise RuntimeError("missing bound during enumeration")
        for val in range(lo, hi + 1):
            t[depth] = val
            if depth + 1 == self.k:
                yield tuple(t)
            else:
                yield from self._recurse(rhs_levels, depth + 1, t)
        t[depth] = 0


_WALKERS: dict[tuple[Vec, ...], OrthantWalker] = {}


def orthant_walker(basis: Sequence[Vec]) -> OrthantWalker:
    key = tuple(tuple(b) for b in basis)
    w = _WALKERS.get(key)
    if w is None:
        w = OrthantWalker(key)
        _WALKERS[key] = w
    return w
