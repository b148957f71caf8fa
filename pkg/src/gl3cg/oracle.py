"""Brute-force cross-check for coupling coefficients.

This route never touches the hypergeometric machinery.  It realizes every
basis vector of an irreducible as an explicit polynomial in the 27 matrix
entries, multiplies out the invariant determinants, and recovers coupling
coefficients by exact linear algebra: expand the invariant over products of
basis vectors, one weight block at a time.

Deliberately kept independent of the 30-variable alphabet; all it shares
with the closed-form route is the pattern/shift layer, the plain series and
the entry-level minors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .gammaseries import GammaSeriesSpec, fact, gamma_poly
from .lattices import Vec
from .minors import (BLOCK_ORDER, ENTRY_NVARS, LETTER_NAMES, block_det_poly,
                     entry_index, label_exponents, minor_poly)
from .patterns import (GC_LATTICE, MINOR_COLS, GTPattern, HighestWeight,
                       dual_slot_pattern, pattern_shift_vector,
                       patterns_for_weight, weight_of_pattern)
from .polynomials import SparsePoly, substitute

#: refuse weights whose entry polynomials would be too large to solve
DEGREE_CAP = 12

PatternKey = tuple[Vec, int]
TripleKey = tuple[PatternKey, PatternKey, PatternKey, tuple[int, ...]]


def pattern_key(p: GTPattern) -> PatternKey:
    """Hashable (mid, bot) key; tops are fixed per call so they are omitted."""
    return (p.mid, p.bot)


@lru_cache(maxsize=None)
def _minor_images(letter: int) -> tuple[SparsePoly, ...]:
    return tuple(minor_poly(letter, tuple(sorted(cols))) for cols in MINOR_COLS)


@lru_cache(maxsize=None)
def gt_vector_poly(letter: int, pattern: GTPattern) -> SparsePoly:
    """Basis vector of the pattern, realized in the entries of one matrix.

    The plain series in the six column minors, with each minor substituted
    by its entry-level expansion.  Normalization is the inverse-factorial
    one baked into the series, which is what makes the solved coefficients
    comparable with the closed-form route without extra scaling.
    """
    shift = pattern_shift_vector(pattern)
    six = gamma_poly(GammaSeriesSpec(shift, GC_LATTICE))
    return substitute(six, _minor_images(letter))


def e_action(poly: SparsePoly, i: int, j: int,
             letter: Optional[int] = None) -> SparsePoly:
    """Column action sum_rows x[r,i] d/dx[r,j] on entry polynomials.

    letter selects one matrix; None acts on all three at once, which is the
    operator the invariants must be killed by (i != j) or weighed by (i == j).
    """
    letters = (letter,) if letter is not None else (0, 1, 2)
    pairs = [(entry_index(l, r, j), entry_index(l, r, i))
             for l in letters for r in (1, 2, 3)]
    acc: dict[tuple[int, ...], Fraction] = {}
    for exp, coeff in poly.terms.items():
        for src, dst in pairs:
            e = exp[src]
            if not e:
                continue
            if src == dst:
                key = exp
            else:
                lst = list(exp)
                lst[src] -= 1
                lst[dst] += 1
                key = tuple(lst)
            val = acc.get(key, Fraction(0)) + coeff * e
            if val:
                acc[key] = val
            elif key in acc:
                del acc[key]
    return SparsePoly(ENTRY_NVARS, acc)


def invariance_check(poly: SparsePoly) -> bool:
    """True iff the total action annihilates poly off-diagonal and the
    diagonal actions all agree (equal weight in every direction)."""
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i != j and not e_action(poly, i, j).is_zero():
                return False
    d1 = e_action(poly, 1, 1)
    d2 = e_action(poly, 2, 2)
    d3 = e_action(poly, 3, 3)
    return (d1 - d2).is_zero() and (d2 - d3).is_zero()


@lru_cache(maxsize=None)
def g_entry_poly(label: tuple[int, ...]) -> SparsePoly:
    """Product of determinant powers for a label, each power divided by its
    factorial.  This is the invariant the coupling coefficients expand."""
    exps = label_exponents(label)
    poly = SparsePoly.constant(ENTRY_NVARS, Fraction(1))
    for name in BLOCK_ORDER:
        e = exps[name]
        if e:
            poly = poly * block_det_poly(name).pow(e)
            poly = poly.scaled(Fraction(1, fact(e)))
    return poly


def _column_profile(exp: tuple[int, ...]) -> tuple[Vec, Vec, Vec]:
    """Per-letter column degrees of a monomial; the block key for solving."""
    out = []
    for letter in range(3):
        base = letter * 9
        cols = []
        for col in range(3):
            start = base + col * 3
            cols.append(exp[start] + exp[start + 1] + exp[start + 2])
        out.append(tuple(cols))
    return tuple(out)  # type: ignore[return-value]


def _check_cap(hw: Sequence[int]) -> None:
    if sum(hw) > DEGREE_CAP:
        raise ValueError(f"weight {tuple(hw)} exceeds oracle degree cap {DEGREE_CAP}")


def _solve_block(columns: list[SparsePoly],
                 rhs: list[SparsePoly]) -> list[list[Fraction]]:
    """Solve columns * x = b exactly for each b in rhs, asserting the columns
    are independent and every system is consistent.  Returns one coefficient
    list per rhs."""
    row_index: dict[tuple[int, ...], int] = {}
    for poly in columns:
        for exp in poly.terms:
            row_index.setdefault(exp, len(row_index))
    for poly in rhs:
        for exp in poly.terms:
            if exp not in row_index:
                raise ArithmeticError("invariant monomial outside basis span")
    nrows = len(row_index)
    ncols = len(columns)
    nrhs = len(rhs)
    mat = [[Fraction(0)] * (ncols + nrhs) for _ in range(nrows)]
    for c, poly in enumerate(columns):
        for exp, val in poly.terms.items():
            mat[row_index[exp]][c] = Fraction(val)
    for k, poly in enumerate(rhs):
        for exp, val in poly.terms.items():
            mat[row_index[exp]][ncols + k] = Fraction(val)

    pivot_row_of_col: list[int] = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            raise ArithmeticError("basis vectors dependent inside a weight block")
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(nrows):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivot_row_of_col.append(row)
        row += 1
    for r in range(row, nrows):
        if any(mat[r][ncols:]):
            raise ArithmeticError("inconsistent expansion over the basis")
    return [[mat[pivot_row_of_col[c]][ncols + k] for c in range(ncols)]
            for k in range(nrhs)]


def oracle_threej_all(v_top: Sequence[int], w_top: Sequence[int],
                      u_top: Sequence[int],
                      labels: Sequence[tuple[int, ...]],
                      ) -> dict[TripleKey, Fraction]:
    """Expand every labelled invariant of (V, W, U) over triple products of
    basis vectors.  Keys carry the original third-slot pattern; the dual
    twist that actually enters the pairing stays internal.

    Returns a complete table: every (pV, pW, pU, label) maps to its exact
    coefficient, zeros included.
    """
    for hw in (v_top, w_top, u_top):
        _check_cap(hw)
    pvs = patterns_for_weight(HighestWeight(*v_top))
    pws = patterns_for_weight(HighestWeight(*w_top))
    pus = patterns_for_weight(HighestWeight(*u_top))

    blocks: dict[tuple, list[tuple[GTPattern, GTPattern, GTPattern]]] = {}
    for pv in pvs:
        for pw in pws:
            for pu in pus:
                dual = dual_slot_pattern(pu)
                key = (weight_of_pattern(pv), weight_of_pattern(pw),
                       weight_of_pattern(dual))
                blocks.setdefault(key, []).append((pv, pw, pu))

    rhs_polys = [g_entry_poly(tuple(label)) for label in labels]
    rhs_parts: list[dict[tuple, SparsePoly]] = []
    for poly in rhs_polys:
        parts: dict[tuple, dict] = {}
        for exp, coeff in poly.terms.items():
            parts.setdefault(_column_profile(exp), {})[exp] = coeff
        rhs_parts.append({key: SparsePoly(ENTRY_NVARS, terms)
                          for key, terms in parts.items()})
    for parts in rhs_parts:
        for key in parts:
            if key not in blocks:
                raise ArithmeticError("invariant has weight outside the product")

    out: dict[TripleKey, Fraction] = {}
    zero = Fraction(0)
    for key, triples in sorted(blocks.items()):
        partial = [parts.get(key) for parts in rhs_parts]
        if not any(partial):
            for pv, pw, pu in triples:
                for label in labels:
                    out[(pattern_key(pv), pattern_key(pw), pattern_key(pu),
                         tuple(label))] = zero
            continue
        columns = [gt_vector_poly(0, pv) * gt_vector_poly(1, pw)
                   * gt_vector_poly(2, dual_slot_pattern(pu))
                   for pv, pw, pu in triples]
        live = [(i, p) for i, p in enumerate(partial) if p is not None]
        sols = _solve_block(columns, [p for _, p in live])
        per_label: dict[int, list[Fraction]] = {i: s for (i, _), s in zip(live, sols)}
        for k, label in enumerate(labels):
            coeffs = per_label.get(k)
            for t, (pv, pw, pu) in enumerate(triples):
                val = coeffs[t] if coeffs is not None else zero
                out[(pattern_key(pv), pattern_key(pw), pattern_key(pu),
                     tuple(label))] = val
    return out


def invariant_rank(labels: Sequence[tuple[int, ...]]) -> int:
    """Rank over Q of the labelled invariants, by exact elimination on their
    monomial coordinates.  Used to confirm the labels really form a basis."""
    rows: list[dict[tuple[int, ...], Fraction]] = []
    for label in labels:
        rows.append(dict(g_entry_poly(tuple(label)).terms))
    rank = 0
    for _ in range(len(rows)):
        pivot_i = None
        for i, r in enumerate(rows):
            if r:
                pivot_i = i
                break
        if pivot_i is None:
            break
        row = rows.pop(pivot_i)
        key = min(row)
        inv = 1 / row[key]
        row = {e: c * inv for e, c in row.items()}
        rank += 1
        for i, other in enumerate(rows):
            f = other.get(key)
            if f:
                new = dict(other)
                for e, c in row.items():
                    v = new.get(e, Fraction(0)) - f * c
                    if v:
                        new[e] = v
                    elif e in new:
                        del new[e]
                rows[i] = new
    return rank


# -- independent multiplicity count ------------------------------------------


def _weight_multiplicities(hw: Sequence[int]) -> dict[Vec, int]:
    counts: dict[Vec, int] = {}
    for p in patterns_for_weight(HighestWeight(*hw)):
        w = weight_of_pattern(p)
        counts[w] = counts.get(w, 0) + 1
    return counts


def littlewood_richardson(v_top: Sequence[int], w_top: Sequence[int],
                          u_top: Sequence[int]) -> int:
    """Multiplicity of U in V tensor W, by character arithmetic only.

    Convolve the weight multiplicities of V and W, then repeatedly peel the
    highest surviving dominant weight: subtract that many copies of its
    whole character.  No polynomials, no bases; a genuinely third route used
    to referee the other two counts.
    """
    total: dict[Vec, int] = {}
    for wv, cv in _weight_multiplicities(v_top).items():
        for ww, cw in _weight_multiplicities(w_top).items():
            key = (wv[0] + ww[0], wv[1] + ww[1], wv[2] + ww[2])
            total[key] = total.get(key, 0) + cv * cw
    want = tuple(u_top)
    result = 0
    while True:
        dominant = [w for w, c in total.items() if c and w[0] >= w[1] >= w[2]]
        if not dominant:
            break
        top = max(dominant)
        mult = total[top]
        if mult < 0:
            raise ArithmeticError("negative multiplicity while peeling characters")
        if top == want:
            result = mult
        for w, c in _weight_multiplicities(top).items():
            total[w] = total.get(w, 0) - mult * c
            if not total[w]:
                del total[w]
    return result
