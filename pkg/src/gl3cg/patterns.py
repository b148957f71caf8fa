"""gl(3) highest weights, Gelfand-Tsetlin patterns and their shift vectors.

Shift vectors are integer 6-vectors of exponents over the ordered minor
alphabet (x3, x1, x2, x13, x23, x12) of a single letter.  The index map is

    0 -> {3},  1 -> {1},  2 -> {2},  3 -> {1,3},  4 -> {2,3},  5 -> {1,2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .lattices import IntegerLattice, lattice_solve

Vec = tuple[int, ...]

MINOR_COLS: tuple[frozenset[int], ...] = (
    frozenset({3}),
    frozenset({1}),
    frozenset({2}),
    frozenset({1, 3}),
    frozenset({2, 3}),
    frozenset({1, 2}),
)
MINOR_NAMES = ("3", "1", "2", "13", "23", "12")
MINOR_INDEX: dict[frozenset[int], int] = {cols: i for i, cols in enumerate(MINOR_COLS)}

# Generator of the rank-1 lattice that indexes one-letter Gamma series.
V_GEN: Vec = (0, 1, -1, -1, 1, 0)
# Step vector of the basis families (one step down the coset order).
R_STEP: Vec = (1, -1, 0, 0, -1, 1)
# x3 + x12 direction; fixed-coordinate part shared by V_GEN-cosets.
W_STEP: Vec = (1, 0, 0, 0, 0, 1)

GC_LATTICE = IntegerLattice(6, (V_GEN,))


@dataclass(frozen=True, order=True)
class HighestWeight:
    m1: int
    m2: int
    m3: int

    def __post_init__(self) -> None:
        if not (self.m1 >= self.m2 >= self.m3):
            raise ValueError(f"not dominant: {(self.m1, self.m2, self.m3)}")

    def as_tuple(self) -> Vec:
        return (self.m1, self.m2, self.m3)

    @property
    def dim(self) -> int:
        a = self.m1 - self.m2 + 1
        b = self.m2 - self.m3 + 1
        return a * b * (a + b) // 2


@dataclass(frozen=True, order=True)
class GTPattern:
    """Triangular pattern: top (m1,m2,m3), middle (k1,k2), bottom entry."""

    top: Vec
    mid: Vec
    bot: int

    def __post_init__(self) -> None:
        m1, m2, m3 = self.top
        k1, k2 = self.mid
        if not (m1 >= k1 >= m2 >= k2 >= m3):
            raise ValueError(f"betweenness violated: {self}")
        if not (k1 >= self.bot >= k2):
            raise ValueError(f"betweenness violated: {self}")

    def as_tuple(self) -> tuple[Vec, Vec, int]:
        return (self.top, self.mid, self.bot)


def make_pattern(top, mid, bot) -> GTPattern:
    return GTPattern(tuple(map(int, top)), tuple(map(int, mid)), int(bot))


def patterns_for_weight(hw: HighestWeight | Vec) -> list[GTPattern]:
    """All GT patterns with the given top row, in lexicographic order."""
    if isinstance(hw, HighestWeight):
        m1, m2, m3 = hw.as_tuple()
    else:
        m1, m2, m3 = hw
    out = []
    for k1 in range(m2, m1 + 1):
        for k2 in range(m3, m2 + 1):
            for s in range(k2, k1 + 1):
                out.append(GTPattern((m1, m2, m3), (k1, k2), s))
    out.sort()
    return out


def pattern_shift_vector(p: GTPattern) -> Vec:
    """Shift vector of the one-letter Gamma series attached to a pattern.

    Only top rows of the form [m1, m2, 0] are supported here; third factors
    with m3 != 0 must first be reduced by the determinant twist in the
    pipeline module.
    """
    m1, m2, m3 = p.top
    if m3 != 0:
        raise ValueError("pattern_shift_vector requires top row [m1, m2, 0]")
    k1, k2 = p.mid
    s = p.bot
    return (m1 - k1, s - m2, k1 - s, m2 - k2, 0, k2)


def weight_of_pattern(p: GTPattern) -> Vec:
    """GT weight by row sums."""
    m1, m2, m3 = p.top
    k1, k2 = p.mid
    return (p.bot, k1 + k2 - p.bot, m1 + m2 + m3 - k1 - k2)


def shift_letter_weight(mu: Vec) -> Vec:
    """Per-index weight of a shift vector: w_i = sum of mu_X over X containing i."""
    w = [0, 0, 0]
    for idx, cols in enumerate(MINOR_COLS):
        for i in cols:
            w[i - 1] += mu[idx]
    return tuple(w)


def pattern_from_shift(mu: Vec) -> Optional[GTPattern]:
    """Invert the shift-vector map on the coset of mu, or None.

    The coset mod the series lattice contains at most one vector with zero
    x23 component; its entries decode to a pattern when betweenness holds.
    """
    t = -mu[4]
    nu = tuple(mu[i] + t * V_GEN[i] for i in range(6))
    a3, a1, a2, a13, _, a12 = nu
    # a1 may be negative in a valid pattern (bottom entry below the second
    # top entry); betweenness below rules out everything else
    k2 = a12
    m2 = a13 + k2
    s = a1 + m2
    k1 = a2 + s
    m1 = a3 + k1
    try:
        return GTPattern((m1, m2, 0), (k1, k2), s)
    except ValueError:
        return None


def dual_slot_pattern(p: GTPattern) -> GTPattern:
    """Pattern of the contragredient vector paired with p in the third slot.

    The third tensor factor enters the pairing through its dual, whose top is
    (M1-M3, M1-M2, 0); rows flip end to end and subtract from M1.  Betweenness
    carries over, so this always yields a valid pattern.
    """
    m1, m2, m3 = p.top
    k1, k2 = p.mid
    return GTPattern((m1 - m3, m1 - m2, 0), (m1 - k2, m1 - k1), m1 - p.bot)


def coset_leq(mu: Vec, nu: Vec) -> bool:
    """True iff mu = nu - s*R_STEP modulo the series lattice, s >= 0."""
    diff = tuple(nu[i] - mu[i] for i in range(6))
    sol = lattice_solve((R_STEP, V_GEN), diff)
    return sol is not None and sol[0] >= 0


def dominant_weights(max_m1: int, *, m3_zero: bool = True) -> Iterator[HighestWeight]:
    """Dominant weights with m1 <= max_m1 (by default restricted to m3 = 0)."""
    for m1 in range(max_m1 + 1):
        for m2 in range(m1 + 1):
            if m3_zero:
                yield HighestWeight(m1, m2, 0)
            else:
                for m3 in range(m2 + 1):
                    yield HighestWeight(m1, m2, m3)
