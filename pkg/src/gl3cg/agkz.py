"""Polynomial families attached to minor-exponent shifts, and their algebra.

Everything here lives in six variables, one per column set of a 3x3 matrix
(order: x3, x1, x2, x13, x23, x12).  The plain terminating series at a shift
is the building block; two derived families matter downstream:

* the alternating family: an alternating sum of binomially staged series
  walked down the step direction; it is triangular against plain series in
  the coset order;
* the corrected family: the plain series plus rational multiples of powers
  of the quadratic A1*A23 - A2*A13 times series at lowered shifts; it pairs
  diagonally against plain series.

Both are annihilated by the same second-order operator, which is how the
correction coefficients are pinned down.  The expansion tables relating the
two families along the step direction feed the coupling pipeline.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .gammaseries import GammaSeriesSpec, binom_int, fact, gamma_poly, gamma_value
from .lattices import Vec
from .patterns import GC_LATTICE, MINOR_COLS, MINOR_INDEX, R_STEP, W_STEP
from .polynomials import SparsePoly, scalar_product

NVARS = 6

#: Supported coefficient rules for the corrected family.  "recurrence" is the
#: one that actually satisfies the annihilation identity and is the default
#: everywhere; the others are kept so the difference can be demonstrated.
CONVENTIONS = ("recurrence", "single-factor", "normalized", "normalized-truncated")

# A1*A23 - A2*A13 in the fixed variable order
QUADRATIC = SparsePoly(NVARS, {(0, 1, 0, 0, 1, 0): Fraction(1),
                               (0, 0, 1, 1, 0, 0): Fraction(-1)})


def vec_sub(a: Vec, b: Vec, times: int = 1) -> Vec:
    return tuple(x - times * y for x, y in zip(a, b))


def support_empty(shift: Vec) -> bool:
    """True when the shifted coset has no componentwise-nonnegative point."""
    if shift[0] < 0 or shift[5] < 0:
        return True
    return min(shift[2], shift[3]) < max(-shift[1], -shift[4])


def plain_poly(shift: Vec) -> SparsePoly:
    """The terminating series at this shift as a polynomial."""
    return gamma_poly(GammaSeriesSpec(shift, GC_LATTICE))


def plain_value(shift: Vec) -> Fraction:
    """The series summed at all variables equal to 1."""
    return gamma_value(GammaSeriesSpec(shift, GC_LATTICE))


def staged_poly(shift: Vec, stage: int) -> SparsePoly:
    """Stage-s member of the staged family at a shift.

    The support point at lattice coordinate t carries binomial(t + stage,
    stage) on top of the usual 1/x! weight, with the binomial read as a
    degree-stage polynomial in t so that negative t contribute too.  Stage 0
    is the plain series.
    """
    if stage < 0:
        raise ValueError("stage must be nonnegative")
    terms: dict[Vec, Fraction] = {}
    if shift[0] >= 0 and shift[5] >= 0:
        lo = max(-shift[1], -shift[4])
        hi = min(shift[2], shift[3])
        for t in range(lo, hi + 1):
            weight = binom_int(t + stage, stage)
            if weight == 0:
                continue
            x = (shift[0], shift[1] + t, shift[2] - t,
                 shift[3] - t, shift[4] + t, shift[5])
            denom = 1
            for e in x:
                if e > 1:
                    denom *= fact(e)
            terms[x] = Fraction(weight, denom)
    return SparsePoly(NVARS, terms)


def alternating_poly(mu: Vec) -> SparsePoly:
    """Alternating sum of staged members along the step direction.

    Term s is the stage-s member at mu - s*step, with sign (-1)^s; the sum
    stops at the first empty support.
    """
    total = SparsePoly.zero(NVARS)
    s = 0
    while True:
        node = vec_sub(mu, R_STEP, s)
        if support_empty(node):
            break
        part = staged_poly(node, s)
        total = total - part if s & 1 else total + part
        s += 1
    return total


def t_coeff(j: int, c: int) -> Fraction:
    """Single corrective factor at depth j for chain constant c.

    t_coeff(0, c) is 1 for any c; deeper factors are 1/(j*(j+1) + j*c).
    """
    if j < 0:
        raise ValueError("depth must be nonnegative")
    if j == 0:
        return Fraction(1)
    denom = j * (j + 1) + j * c
    if denom == 0:
        raise ValueError("corrective factor undefined at this chain constant")
    return Fraction(1, denom)


def _family_coeffs(c: int, depth: int, convention: str) -> list[Fraction]:
    """Coefficients c_0..c_depth multiplying the quadratic-power terms."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    singles = [t_coeff(j, c) for j in range(depth + 1)]
    if convention == "recurrence":
        out = [Fraction(1)]
        for j in range(1, depth + 1):
            out.append(-out[-1] * singles[j])
        return out
    if convention == "single-factor":
        return singles
    if convention == "normalized-truncated":
        total = sum(singles, Fraction(0))
        return [t / total for t in singles]
    # "normalized": divide by the full infinite sum of single factors, which
    # telescopes to 1 + H_{c+1}/(c+1) for integer c >= 0
    if c < 0:
        raise ValueError("normalized convention needs a nonnegative chain constant")
    harmonic = sum(Fraction(1, k) for k in range(1, c + 2))
    total = 1 + harmonic / (c + 1)
    return [t / total for t in singles]


def chain_constant(mu: Vec) -> int:
    """The constant controlling the corrective recurrence for this shift."""
    return mu[1] + mu[2] + mu[3] + mu[4]


def corrected_poly(mu: Vec, convention: str = "recurrence") -> SparsePoly:
    """Plain series corrected by quadratic-power terms down the w-chain.

    Term s is coeff_s * QUADRATIC^s * plain(mu - s*(e0 + e5)); the chain
    stops at the first empty support.  With the default convention the
    result is annihilated by the full second-order operator and pairs
    diagonally against plain series.
    """
    nodes = []
    s = 0
    while True:
        node = vec_sub(mu, W_STEP, s)
        if support_empty(node):
            break
        nodes.append(node)
        s += 1
    if not nodes:
        return SparsePoly.zero(NVARS)
    coeffs = _family_coeffs(chain_constant(mu), len(nodes) - 1, convention)
    total = SparsePoly.zero(NVARS)
    zpow = SparsePoly.constant(NVARS, 1)
    for s, node in enumerate(nodes):
        total = total + (zpow * plain_poly(node)).scaled(coeffs[s])
        zpow = zpow * QUADRATIC
    return total


def pair_derivative(poly: SparsePoly, i: int, j: int) -> SparsePoly:
    return poly.diff(i).diff(j)


def gkz_residual(poly: SparsePoly) -> SparsePoly:
    """Box operator of the series lattice: d2/dA1 dA23 - d2/dA2 dA13.

    Kills every plain series (and every staged member at stage 0); the
    staged and corrected families need the extra term in apply_annihilator.
    """
    return pair_derivative(poly, 1, 4) - pair_derivative(poly, 2, 3)


def apply_annihilator(poly: SparsePoly) -> SparsePoly:
    """Full second-order operator; zero on both derived families."""
    return gkz_residual(poly) + pair_derivative(poly, 0, 5)


_COLS_SORTED = tuple(tuple(sorted(MINOR_COLS[i])) for i in range(NVARS))


def _column_swap(var: int, j: int, i: int) -> Optional[tuple[int, int]]:
    """Effect of sending column j to column i on one minor variable.

    Returns (sign, new_var) or None when the action kills the variable.
    """
    cols = _COLS_SORTED[var]
    if j not in cols or i in cols:
        return None
    raw = tuple(i if c == j else c for c in cols)
    sign = 1
    if len(raw) == 2 and raw[0] > raw[1]:
        sign = -1
    return sign, MINOR_INDEX[frozenset(raw)]


def act_E(poly: SparsePoly, i: int, j: int) -> SparsePoly:
    """gl(3) generator E_{i,j} acting on a minor polynomial by derivation.

    Columns are 1-based.  E_{i,j} replaces column j by column i in one minor
    factor at a time; the diagonal case counts column occurrences.
    """
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError("column indices must be 1..3")
    out: dict[Vec, Fraction] = {}
    if i == j:
        for expvec, coeff in poly.terms.items():
            mult = sum(e for var, e in enumerate(expvec) if e and j in _COLS_SORTED[var])
            if mult:
                out[expvec] = out.get(expvec, 0) + coeff * mult
        return SparsePoly(poly.nvars, out)
    swaps = [_column_swap(var, j, i) for var in range(NVARS)]
    for expvec, coeff in poly.terms.items():
        for var, e in enumerate(expvec):
            if not e or swaps[var] is None:
                continue
            sign, new_var = swaps[var]
            moved = list(expvec)
            moved[var] -= 1
            moved[new_var] += 1
            key = tuple(moved)
            val = out.get(key, 0) + coeff * e * sign
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return SparsePoly(poly.nvars, out)


def _default_depth(mu: Vec) -> int:
    return max(min(mu[0], mu[5]), 0)


def expand_alternating(mu: Vec, smax: Optional[int] = None,
                       convention: str = "recurrence") -> list[Fraction]:
    """Chain coefficients writing the alternating family in the corrected one.

    Entry s multiplies corrected(mu - s*step).  The table is found by an
    exact triangular solve of the pairing system against plain series; the
    system's strict triangularity is asserted, not assumed.  Entries at
    empty-support chain nodes are zero.
    """
    if smax is None:
        smax = _default_depth(mu)
    nodes = [vec_sub(mu, R_STEP, s) for s in range(smax + 1)]
    plains = [plain_poly(n) for n in nodes]
    correcteds = [corrected_poly(n, convention) for n in nodes]
    alt = alternating_poly(mu)
    gram = [[scalar_product(correcteds[s], plains[sp]) for s in range(smax + 1)]
            for sp in range(smax + 1)]
    rhs = [scalar_product(alt, plains[sp]) for sp in range(smax + 1)]
    for sp in range(smax + 1):
        for s in range(sp + 1, smax + 1):
            if gram[sp][s] != 0:
                raise ArithmeticError("expansion system is not triangular")
    out: list[Fraction] = []
    for sp in range(smax + 1):
        acc = rhs[sp] - sum((gram[sp][s] * out[s] for s in range(sp)), Fraction(0))
        diag = gram[sp][sp]
        if diag == 0:
            if acc != 0:
                raise ArithmeticError("expansion system is inconsistent")
            out.append(Fraction(0))
        else:
            out.append(acc / diag)
    return out


def expand_corrected(mu: Vec, smax: Optional[int] = None,
                     convention: str = "recurrence") -> list[Fraction]:
    """Inverse table: corrected(mu) as a chain combination of alternating ones.

    Obtained by inverting the unitriangular array of expand_alternating
    tables at the chain nodes.  Entries at empty-support nodes are zero; an
    empty mu gives the all-zero table.
    """
    if smax is None:
        smax = _default_depth(mu)
    n = smax + 1
    if support_empty(mu):
        return [Fraction(0)] * n
    table = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        node = vec_sub(mu, R_STEP, i)
        if support_empty(node):
            table[i][i] = Fraction(1)
            continue
        row = expand_alternating(node, smax - i, convention)
        for j in range(i, n):
            table[i][j] = row[j - i]
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for j in range(1, n):
        out[j] = -sum((out[i] * table[i][j] for i in range(j)), Fraction(0)) / table[j][j]
    for s in range(n):
        if support_empty(vec_sub(mu, R_STEP, s)):
            out[s] = Fraction(0)
    return out
