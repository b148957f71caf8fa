"""Matrix-entry polynomials for three 3x3 letter matrices a, b, c.

27 variables, indexed letter*9 + (col-1)*3 + (row-1).  This module holds the
column minors and the eight fixed determinants whose products span the
invariants of a triple tensor product; the row conventions below are the
single source of truth for both the closed-form route and the brute-force
oracle.
"""

from __future__ import annotations

from typing import Sequence

from .polynomials import SparsePoly

LETTER_NAMES = ("a", "b", "c")
ENTRY_NVARS = 27

# all permutations of (0, 1, 2) with their signs, fixed order
_PERM3 = (
    ((0, 1, 2), 1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((1, 0, 2), -1),
    ((0, 2, 1), -1),
    ((2, 1, 0), -1),
)


def entry_index(letter: int, row: int, col: int) -> int:
    """Variable index of entry (row, col) of the given letter matrix (1-based)."""
    if not (0 <= letter <= 2 and 1 <= row <= 3 and 1 <= col <= 3):
        raise ValueError("bad entry coordinates")
    return letter * 9 + (col - 1) * 3 + (row - 1)


def entry_name(letter: int, row: int, col: int) -> str:
    return f"{LETTER_NAMES[letter]}[{row}{col}]"


def _monomial(entries: Sequence[int], coeff: int = 1) -> SparsePoly:
    exp = [0] * ENTRY_NVARS
    for idx in entries:
        exp[idx] += 1
    return SparsePoly.monomial(ENTRY_NVARS, exp, coeff)


def minor_poly(letter: int, cols: Sequence[int]) -> SparsePoly:
    """Column minor taken on the top rows: k columns against rows 1..k."""
    cols = sorted(cols)
    k = len(cols)
    if k == 1:
        return _monomial([entry_index(letter, 1, cols[0])])
    if k == 2:
        plus = _monomial([entry_index(letter, 1, cols[0]), entry_index(letter, 2, cols[1])])
        minus = _monomial([entry_index(letter, 1, cols[1]), entry_index(letter, 2, cols[0])], -1)
        return plus + minus
    if k == 3:
        acc = SparsePoly.zero(ENTRY_NVARS)
        for perm, sign in _PERM3:
            acc = acc + _monomial(
                [entry_index(letter, r + 1, cols[perm[r]]) for r in range(3)], sign)
        return acc
    raise ValueError("minor needs 1..3 columns")


def composite_det_poly(rows: Sequence[tuple[int, int]]) -> SparsePoly:
    """Determinant of a 3x3 matrix assembled from letter rows.

    rows is a sequence of three (letter, row) pairs; columns run 1..3.
    """
    if len(rows) != 3:
        raise ValueError("need exactly three rows")
    acc = SparsePoly.zero(ENTRY_NVARS)
    for perm, sign in _PERM3:
        acc = acc + _monomial(
            [entry_index(rows[r][0], rows[r][1], perm[r] + 1) for r in range(3)], sign)
    return acc


def cofactor_row(letter: int) -> tuple[SparsePoly, SparsePoly, SparsePoly]:
    """Top-rows cofactor vector: (minor 23, -minor 13, minor 12)."""
    return (minor_poly(letter, (2, 3)),
            minor_poly(letter, (1, 3)).scaled(-1),
            minor_poly(letter, (1, 2)))


def cofactor_det_poly() -> SparsePoly:
    """Determinant of the three cofactor rows of a, b, c."""
    tilde = [cofactor_row(letter) for letter in range(3)]
    acc = SparsePoly.zero(ENTRY_NVARS)
    for perm, sign in _PERM3:
        term = SparsePoly.constant(ENTRY_NVARS, sign)
        for r in range(3):
            term = term * tilde[r][perm[r]]
        acc = acc + term
    return acc


#: Determinant blocks in the fixed alphabet order.  Single letters denote a
#: top row, doubled letters the top two rows; the six-minor block at the end
#: is the cofactor-row determinant.
BLOCK_ORDER = ("aac", "acc", "bbc", "bcc", "aab", "abb", "abc", "aabbcc")

_BLOCK_ROWS: dict[str, tuple[tuple[int, int], ...]] = {
    "aac": ((0, 1), (0, 2), (2, 1)),
    "acc": ((0, 1), (2, 1), (2, 2)),
    "bbc": ((1, 1), (1, 2), (2, 1)),
    "bcc": ((1, 1), (2, 1), (2, 2)),
    "aab": ((0, 1), (0, 2), (1, 1)),
    "abb": ((0, 1), (1, 1), (1, 2)),
    "abc": ((0, 1), (1, 1), (2, 1)),
}

_BLOCK_CACHE: dict[str, SparsePoly] = {}


def block_det_poly(name: str) -> SparsePoly:
    got = _BLOCK_CACHE.get(name)
    if got is None:
        if name == "aabbcc":
            got = cofactor_det_poly()
        else:
            got = composite_det_poly(_BLOCK_ROWS[name])
        _BLOCK_CACHE[name] = got
    return got


#: determinant block attached to each position of a multiplicity label
DET_FOR_LABEL = ("acc", "bcc", "aac", "bbc", "abc", "abb", "aab", "aabbcc")
_LABEL_POS = {name: i for i, name in enumerate(DET_FOR_LABEL)}


def label_exponents(label: Sequence[int]) -> dict[str, int]:
    """Map a multiplicity label to determinant exponents keyed by block."""
    if len(label) != 8 or any(e < 0 for e in label):
        raise ValueError("label must be 8 nonnegative exponents")
    return {name: label[_LABEL_POS[name]] for name in BLOCK_ORDER}
