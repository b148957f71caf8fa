"""The 30-variable invariant alphabet and its combinatorics.

Each variable is a product of column minors drawn from one of the eight
determinant blocks in minors.BLOCK_ORDER; expanding every determinant power
multinomially turns an invariant monomial in determinants into a signed
Gamma-series-shaped sum over this alphabet.  This module owns

* the variable table with per-letter minor content and derived signs,
* the cycle vectors and the rank-6 lattices they span (one per block kind),
* the per-letter step vectors used to walk between congruence classes,
* the multiplicity labels of a triple of highest weights, and
* support enumeration and congruence-class indexing for invariant monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterator, Optional, Sequence

from .gammaseries import WeightedLattice, fact
from .lattices import IntegerLattice, Vec, lattice_solve, row_hnf
from .minors import (DET_FOR_LABEL, _LABEL_POS, BLOCK_ORDER, LETTER_NAMES,
                     block_det_poly, label_exponents, minor_poly)
from .patterns import MINOR_INDEX, R_STEP, V_GEN
from .polynomials import SparsePoly

NVARS = 30
A, B, C = 0, 1, 2


@dataclass(frozen=True)
class ZVariable:
    """One alphabet variable: a product of minors of distinct letters."""

    index: int
    name: str
    block: str
    factors: tuple[tuple[int, tuple[int, ...]], ...]


def _factors(*parts: tuple[int, tuple[int, ...]]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    # canonical factor order: entries before 2x2 minors, then by letter
    return tuple(sorted(parts, key=lambda f: (len(f[1]), f[0])))


_BLOCK_VARS: dict[str, tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]] = {
    "aac": (
        _factors((C, (1,)), (A, (2, 3))),
        _factors((C, (2,)), (A, (1, 3))),
        _factors((C, (3,)), (A, (1, 2))),
    ),
    "acc": (
        _factors((A, (1,)), (C, (2, 3))),
        _factors((A, (2,)), (C, (1, 3))),
        _factors((A, (3,)), (C, (1, 2))),
    ),
    "bbc": (
        _factors((C, (1,)), (B, (2, 3))),
        _factors((C, (2,)), (B, (1, 3))),
        _factors((C, (3,)), (B, (1, 2))),
    ),
    "bcc": (
        _factors((B, (1,)), (C, (2, 3))),
        _factors((B, (2,)), (C, (1, 3))),
        _factors((B, (3,)), (C, (1, 2))),
    ),
    "aab": (
        _factors((B, (1,)), (A, (2, 3))),
        _factors((B, (2,)), (A, (1, 3))),
        _factors((B, (3,)), (A, (1, 2))),
    ),
    "abb": (
        _factors((A, (1,)), (B, (2, 3))),
        _factors((A, (2,)), (B, (1, 3))),
        _factors((A, (3,)), (B, (1, 2))),
    ),
    "abc": (
        _factors((A, (1,)), (B, (2,)), (C, (3,))),
        _factors((A, (2,)), (B, (3,)), (C, (1,))),
        _factors((A, (3,)), (B, (1,)), (C, (2,))),
        _factors((A, (2,)), (B, (1,)), (C, (3,))),
        _factors((A, (1,)), (B, (3,)), (C, (2,))),
        _factors((A, (3,)), (B, (2,)), (C, (1,))),
    ),
    "aabbcc": (
        _factors((A, (2, 3)), (B, (1, 3)), (C, (1, 2))),
        _factors((A, (1, 3)), (B, (1, 2)), (C, (2, 3))),
        _factors((A, (1, 2)), (B, (2, 3)), (C, (1, 3))),
        _factors((A, (1, 3)), (B, (2, 3)), (C, (1, 2))),
        _factors((A, (2, 3)), (B, (1, 2)), (C, (1, 3))),
        _factors((A, (1, 2)), (B, (1, 3)), (C, (2, 3))),
    ),
}


def _build_alphabet() -> tuple[ZVariable, ...]:
    out = []
    for block in BLOCK_ORDER:
        for factors in _BLOCK_VARS[block]:
            name = "*".join(f"{LETTER_NAMES[l]}{''.join(map(str, cols))}"
                            for l, cols in factors)
            out.append(ZVariable(len(out), name, block, factors))
    return tuple(out)


ZVARS: tuple[ZVariable, ...] = _build_alphabet()
BLOCK_SPAN: dict[str, range] = {}
for _zv in ZVARS:
    r = BLOCK_SPAN.get(_zv.block)
    BLOCK_SPAN[_zv.block] = range(_zv.index, _zv.index + 1) if r is None \
        else range(r.start, _zv.index + 1)

#: per-letter minor slot of each variable (None when the letter is absent)
LETTER_SLOTS: tuple[tuple[Optional[int], ...], ...] = tuple(
    tuple(next((MINOR_INDEX[frozenset(cols)] for l, cols in zv.factors if l == letter), None)
          for zv in ZVARS)
    for letter in range(3)
)


def letter_projection(letter: int, vec: Sequence[int]) -> Vec:
    """Total minor-exponent profile of one letter inside an alphabet vector."""
    out = [0] * 6
    slots = LETTER_SLOTS[letter]
    for j, x in enumerate(vec):
        if x:
            slot = slots[j]
            if slot is not None:
                out[slot] += x
    return tuple(out)


def variable_entry_poly(zv: ZVariable) -> SparsePoly:
    poly = SparsePoly.constant(27, 1)
    for letter, cols in zv.factors:
        poly = poly * minor_poly(letter, cols)
    return poly


@lru_cache(maxsize=1)
def variable_signs() -> tuple[int, ...]:
    """Sign of each variable inside its block determinant, derived exactly.

    Each determinant is expanded in matrix entries and compared against the
    entry polynomials of its block's variables; the supports must tile the
    determinant's support, which pins every sign down to a unit.
    """
    signs = [0] * NVARS
    for block in BLOCK_ORDER:
        det = block_det_poly(block)
        recon = SparsePoly.zero(27)
        seen: set[tuple[int, ...]] = set()
        for idx in BLOCK_SPAN[block]:
            poly = variable_entry_poly(ZVARS[idx])
            sign = None
            for exp, c in poly.terms.items():
                if exp in seen:
                    raise ArithmeticError(f"overlapping supports in block {block}")
                seen.add(exp)
                if c not in (1, -1):
                    raise ArithmeticError("non-unit coefficient in minor product")
                d = det.terms.get(exp, 0)
                cur = d * c
                if sign is None:
                    sign = cur
                elif sign != cur:
                    raise ArithmeticError(f"inconsistent sign in block {block}")
            if sign not in (1, -1):
                raise ArithmeticError(f"degenerate sign in block {block}")
            signs[idx] = sign
            recon = recon + poly.scaled(sign)
        if recon != det:
            raise ArithmeticError(f"block {block} does not tile its determinant")
    return tuple(signs)


def sign_of_point(h: Sequence[int]) -> int:
    """Product of variable signs raised to the point's exponents."""
    signs = variable_signs()
    neg = sum(e for e, s in zip(h, signs) if s < 0)
    return -1 if neg & 1 else 1


# -- cycle vectors and kind lattices ----------------------------------------

#: which determinant blocks a construction of each kind may touch
KIND_BLOCKS: dict[str, tuple[str, ...]] = {
    "first": tuple(n for n in BLOCK_ORDER if n != "abc"),
    "second": tuple(n for n in BLOCK_ORDER if n != "aabbcc"),
    "all": BLOCK_ORDER,
}


def _proj_is_series_multiple(pr: Vec) -> bool:
    t = pr[1]
    return all(pr[i] == t * V_GEN[i] for i in range(6))


@lru_cache(maxsize=None)
def cycle_vectors(kind: str = "all") -> tuple[Vec, ...]:
    """Elementary cycles: four-term swaps across two determinant blocks.

    A cycle exchanges one variable pair inside each of two distinct blocks
    such that every letter's projection is a multiple of the series
    generator.  Vectors are sign-normalized (first nonzero entry positive)
    and returned sorted.
    """
    blocks = KIND_BLOCKS[kind]
    found: set[Vec] = set()
    for i in range(len(blocks)):
        span1 = BLOCK_SPAN[blocks[i]]
        for j in range(i + 1, len(blocks)):
            span2 = BLOCK_SPAN[blocks[j]]
            for z in span1:
                for zp in span1:
                    if z == zp:
                        continue
                    for y in span2:
                        for yp in span2:
                            if y == yp:
                                continue
                            vec = [0] * NVARS
                            vec[z] += 1
                            vec[zp] -= 1
                            vec[y] += 1
                            vec[yp] -= 1
                            tvec = tuple(vec)
                            if all(_proj_is_series_multiple(letter_projection(l, tvec))
                                   for l in range(3)):
                                lead = next(x for x in tvec if x)
                                if lead < 0:
                                    tvec = tuple(-x for x in tvec)
                                found.add(tvec)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def cycle_lattice(kind: str) -> IntegerLattice:
    """Hermite-form lattice spanned by the cycles of a kind.

    The two restricted kinds must come out rank 6; the unrestricted span is
    larger and is only used for diagnostics.
    """
    vecs = cycle_vectors(kind)
    H, _ = row_hnf(vecs)
    rows = tuple(tuple(r) for r in H if any(r))
    if kind in ("first", "second") and len(rows) != 6:
        raise ArithmeticError(f"cycle lattice of kind {kind!r} has rank {len(rows)}")
    return IntegerLattice(NVARS, rows)


def _vec30(*pairs: tuple[int, int]) -> Vec:
    out = [0] * NVARS
    for idx, val in pairs:
        out[idx] = val
    return tuple(out)


# Step vectors: four-term swaps whose own-letter projection is exactly the
# chain step and whose other-letter projections vanish.  One triple per kind,
# constrained to that kind's blocks; validated in _checked_step_vectors.
_STEP_VECTORS: dict[str, tuple[Vec, Vec, Vec]] = {
    "first": (
        _vec30((3, -1), (5, 1), (24, -1), (29, 1)),
        _vec30((9, -1), (11, 1), (27, -1), (25, 1)),
        _vec30((0, -1), (2, 1), (24, 1), (29, -1)),
    ),
    "second": (
        _vec30((0, -1), (2, 1), (18, -1), (23, 1)),
        _vec30((6, -1), (8, 1), (21, -1), (19, 1)),
        _vec30((3, -1), (5, 1), (23, -1), (18, 1)),
    ),
}


@lru_cache(maxsize=None)
def step_vectors(kind: str) -> tuple[Vec, Vec, Vec]:
    triple = _STEP_VECTORS[kind]
    allowed = set(KIND_BLOCKS[kind])
    for letter, vec in enumerate(triple):
        for j, x in enumerate(vec):
            if x and ZVARS[j].block not in allowed:
                raise ArithmeticError(f"step vector for kind {kind!r} leaves its blocks")
        for other in range(3):
            pr = letter_projection(other, vec)
            want = R_STEP if other == letter else (0,) * 6
            if pr != want:
                raise ArithmeticError(
                    f"step vector {letter} of kind {kind!r} has projection {pr}")
    return triple


@lru_cache(maxsize=None)
def class_lattice(kind: str) -> IntegerLattice:
    """All differences between equally-classed support points of a kind.

    Integer kernel of: per-block degree sums vanish, coordinates outside the
    kind's blocks vanish, and every letter projection is a multiple of the
    series generator.  Two support points of one label share their class
    triple exactly when they differ by a kernel vector, so this is the
    lattice the numerator walk must use.  The swap cycles above span a
    strict sublattice (rank 6 of 10), which is why they are kept only as a
    reconstruction check and not used for enumeration.
    """
    blocks = KIND_BLOCKS[kind]
    cols: list[list[int]] = []
    for name, span in BLOCK_SPAN.items():
        total = [0] * NVARS
        for j in span:
            total[j] = 1
        cols.append(total)
        if name not in blocks:
            for j in span:
                unit = [0] * NVARS
                unit[j] = 1
                cols.append(unit)
    # projection onto letter slots must be a multiple of (0,1,-1,-1,1,0):
    # slots 0 and 5 vanish, slots 1+2, 1+3 and 1-4 cancel
    selectors = (
        lambda s: 1 if s == 0 else 0,
        lambda s: 1 if s == 5 else 0,
        lambda s: 1 if s in (1, 2) else 0,
        lambda s: 1 if s in (1, 3) else 0,
        lambda s: (1 if s == 1 else -1 if s == 4 else 0),
    )
    for letter in range(3):
        slots = LETTER_SLOTS[letter]
        for sel in selectors:
            cols.append([sel(slots[j]) if slots[j] is not None else 0
                         for j in range(NVARS)])
    rows = [tuple(col[j] for col in cols) for j in range(NVARS)]
    H, U = row_hnf(rows)
    kernel = [U[i] for i in range(NVARS) if not any(H[i])]
    KH, _ = row_hnf(kernel)
    basis = tuple(tuple(r) for r in KH if any(r))
    for vec in cycle_lattice(kind).basis:
        if lattice_solve(basis, vec) is None:
            raise ArithmeticError("swap cycles escape the class kernel")
    return IntegerLattice(NVARS, basis)


@lru_cache(maxsize=None)
def kind_weighted_lattice(kind: str) -> WeightedLattice:
    return WeightedLattice(class_lattice(kind).basis, LETTER_SLOTS, V_GEN)


# -- multiplicity labels -----------------------------------------------------


def kind_for_label(label: Sequence[int]) -> str:
    """Block kind compatible with a label; labels never use both extremes."""
    has_abc = label[_LABEL_POS["abc"]] > 0
    has_six = label[_LABEL_POS["aabbcc"]] > 0
    if has_abc and has_six:
        raise ValueError("label mixes the triple-entry and triple-minor blocks")
    return "second" if has_abc else "first"


def multiplicity_basis(v_top: Sequence[int], w_top: Sequence[int],
                       u_top: Sequence[int]) -> list[tuple[int, ...]]:
    """All determinant-exponent labels for the triple (V, W, U).

    Labels are 8-tuples ordered like DET_FOR_LABEL; their count is the
    multiplicity of U inside V tensor W.  The first two tops must have a
    zero third entry; U may not.
    """
    m1, m2, m3 = map(int, v_top)
    p1, p2, p3 = map(int, w_top)
    M1, M2, M3 = map(int, u_top)
    if m3 != 0 or p3 != 0:
        raise ValueError("first two highest weights must end in 0")
    if not (m1 >= m2 >= 0 and p1 >= p2 >= 0 and M1 >= M2 >= M3 >= 0):
        raise ValueError("tops must be dominant and nonnegative")
    if m1 + m2 + p1 + p2 != M1 + M2 + M3:
        return []
    out = []
    for phi in range(0, min(m1 - m2, M3) + 1):
        for psi in range(0, M3 - phi + 1):
            theta = M3 - phi - psi
            gamma = m2 - theta - psi
            delta = p2 - phi - theta
            omega = M2 - M3 - gamma - delta
            alpha = m1 - m2 - omega - phi
            beta = p1 - p2 - omega - psi
            if min(alpha, beta, gamma, delta, omega) < 0:
                continue
            if omega and theta:
                continue
            if alpha + beta + gamma + delta + omega + phi + psi + 2 * theta != M1:
                continue
            out.append((alpha, beta, gamma, delta, omega, phi, psi, theta))
    out.sort()
    return out


# -- invariant support enumeration -------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def invariant_support(label: tuple[int, ...]) -> tuple[Vec, ...]:
    """Alphabet exponent vectors of the invariant with these determinant powers."""
    exps = label_exponents(label)
    per_block = []
    for block in BLOCK_ORDER:
        span = BLOCK_SPAN[block]
        per_block.append(tuple(_compositions(exps[block], len(span))))
    out = []
    for combo in iproduct(*per_block):
        vec = []
        for part in combo:
            vec.extend(part)
        out.append(tuple(vec))
    out.sort()
    return tuple(out)


def canonical_class(pr: Sequence[int]) -> Vec:
    """Canonical representative of a 6-vector modulo the series generator."""
    t = pr[1]
    return tuple(pr[i] - t * V_GEN[i] for i in range(6))


@lru_cache(maxsize=None)
def class_index(label: tuple[int, ...]) -> dict[tuple[Vec, Vec, Vec], tuple[Vec, ...]]:
    """Support points grouped by per-letter congruence classes.

    The key is the triple of canonical class representatives of the three
    letter projections; each value lists the points lexicographically.
    """
    groups: dict[tuple[Vec, Vec, Vec], list[Vec]] = {}
    for h in invariant_support(label):
        key = tuple(canonical_class(letter_projection(l, h)) for l in range(3))
        groups.setdefault(key, []).append(h)
    return {k: tuple(sorted(v)) for k, v in groups.items()}


def invariant_alphabet_poly(label: Sequence[int]) -> SparsePoly:
    """The invariant as a signed series-shaped polynomial in the alphabet."""
    terms = {}
    for h in invariant_support(tuple(label)):
        denom = 1
        for e in h:
            if e > 1:
                denom *= fact(e)
        terms[h] = Fraction(sign_of_point(h), denom)
    return SparsePoly(NVARS, terms)
