"""Closed-form route for coupling coefficients.

A coefficient is a ratio: a weighted sum over one invariant's support points
divided by the three plain-series normalizers of the patterns involved.  The
numerator walks the nonnegative points of shifted 30-variable lattices; the
weight attached to a point factors over the letters, each factor a short
convolution of a binomial column against the pattern's correction table.

Everything is exact Fraction arithmetic end to end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .agkz import expand_corrected, plain_value
from .gammaseries import binom_int, fact
from .invariants import (canonical_class, class_index, class_lattice,
                         kind_for_label, letter_projection,
                         multiplicity_basis, sign_of_point, step_vectors)
from .lattices import Vec, lattice_solve
from .patterns import (R_STEP, V_GEN, GTPattern, HighestWeight,
                       dual_slot_pattern, pattern_shift_vector,
                       patterns_for_weight)

Vec30 = tuple[int, ...]
PatternKey = tuple[Vec, int]
TripleKey = tuple[PatternKey, PatternKey, PatternKey, tuple[int, ...]]


def chain_bound(shift: Vec) -> int:
    """Depth at which the descending chain of a shift leaves the orthant."""
    return max(min(shift[0], shift[5]), 0)


def _node(shift: Vec, s: int) -> Vec:
    return tuple(shift[i] - s * R_STEP[i] for i in range(6))


def _as_pattern(top: Sequence[int], spec) -> GTPattern:
    if isinstance(spec, GTPattern):
        if spec.top != tuple(top):
            raise ValueError("pattern top does not match the weight")
        return spec
    mid, bot = spec
    return GTPattern(tuple(top), tuple(mid), bot)


def pattern_key(p: GTPattern) -> PatternKey:
    return (p.mid, p.bot)


# -- selection rules ----------------------------------------------------------


def selection_state(pv: GTPattern, pw: GTPattern, pu: GTPattern) -> dict[str, bool]:
    """Necessary row-wise conditions for a nonzero coefficient.

    Each key reports one GT row: the tops must conserve total weight with a
    compatible overlap window, the middle rows must conserve their sums with
    a nonnegative slack, and the bottom entries must add up exactly.
    """
    m1, m2, _ = pv.top
    p1, p2, _ = pw.top
    mm1, mm2, mm3 = pu.top
    k1, k2 = pv.mid
    k1p, k2p = pw.mid
    kk1, kk2 = pu.mid
    d1 = m1 + p1 - mm1
    d2 = mm2 - m2 - p2
    top_ok = (m1 + m2 + p1 + p2 == mm1 + mm2 + mm3
              and d1 >= 0 and max(0, d2) <= d1)
    slack = k1 + k1p - kk1
    mid_ok = slack == kk2 - k2 - k2p and slack >= 0
    bot_ok = pv.bot + pw.bot == pu.bot
    return {"top_rows": top_ok, "middle_rows": mid_ok, "bottom_rows": bot_ok}


def selection_ok(pv: GTPattern, pw: GTPattern, pu: GTPattern) -> bool:
    return all(selection_state(pv, pw, pu).values())


# -- numerator ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _ftab(shift: Vec, depth: int, convention: str) -> tuple[Fraction, ...]:
    return tuple(expand_corrected(shift, depth, convention))


@lru_cache(maxsize=None)
def _denominator(shift: Vec) -> Fraction:
    return plain_value(shift)


@lru_cache(maxsize=None)
def _wconv(ftab: tuple[Fraction, ...], tau: int, m: int) -> Fraction:
    """Letter weight at lattice offset tau, chain depth m.

    Convolves the correction table against the alternating binomial column;
    this is what one letter of the invariant contributes at a support point.
    """
    total = Fraction(0)
    sign = 1
    for q in range(m + 1):
        f = ftab[m - q]
        if f:
            total += sign * binom_int(tau + q, q) * f
        sign = -sign
    return total


def _hfact(h: Vec30) -> int:
    out = 1
    for e in h:
        if e > 1:
            out *= fact(e)
    return out


@lru_cache(maxsize=None)
def solve_varpi(mu: Vec, nu: Vec, rho: Vec,
                label: tuple[int, ...]) -> Optional[Vec30]:
    """Anchor point of the numerator: lowest invariant point whose letter
    classes match the three shifts somewhere down their chains.

    Scans chain depths in lexicographic order, translating the first class
    match back up by the per-letter step vectors.  None means the invariant
    never meets these cosets and the coefficient is zero.
    """
    kind = kind_for_label(label)
    idx = class_index(label)
    steps = step_vectors(kind)
    bounds = (chain_bound(mu), chain_bound(nu), chain_bound(rho))
    for s0 in range(bounds[0] + 1):
        c0 = canonical_class(_node(mu, s0))
        for s1 in range(bounds[1] + 1):
            c1 = canonical_class(_node(nu, s1))
            for s2 in range(bounds[2] + 1):
                c2 = canonical_class(_node(rho, s2))
                pts = idx.get((c0, c1, c2))
                if pts:
                    h0 = pts[0]
                    return tuple(h0[j] + s0 * steps[0][j] + s1 * steps[1][j]
                                 + s2 * steps[2][j] for j in range(30))
    return None


def _point_term(h: Vec30, nodes: tuple[Vec, Vec, Vec], ms: tuple[int, int, int],
                ftabs, err: str) -> Fraction:
    """Contribution of one support point: signed product of letter weights
    over the point's factorial.  Raises if the point sits off the coset of
    any reference node, which would mean the bookkeeping upstream is wrong."""
    coeff = Fraction(1)
    for l in range(3):
        pr = letter_projection(l, h)
        tau = pr[1] - nodes[l][1]
        for k in range(6):
            if pr[k] - nodes[l][k] != tau * V_GEN[k]:
                raise ArithmeticError(err)
        w = _wconv(ftabs[l], tau, ms[l])
        if not w:
            return Fraction(0)
        coeff *= w
    return sign_of_point(h) * coeff / _hfact(h)


@lru_cache(maxsize=None)
def numerator_value(mu: Vec, nu: Vec, rho: Vec, label: tuple[int, ...],
                    convention: str = "recurrence") -> Fraction:
    """Weighted sum over the invariant's support, one chain-depth triple at
    a time.

    Each depth translates the anchor by the step vectors; the support points
    in the translated coset are one bucket of the class index, and the first
    of them is checked to really lie on the anchor's lattice coset.  Empty
    pattern nodes have empty buckets, so no emptiness bookkeeping is needed.
    """
    kind = kind_for_label(label)
    varpi = solve_varpi(mu, nu, rho, label)
    if varpi is None:
        return Fraction(0)
    steps = step_vectors(kind)
    lattice = class_lattice(kind)
    idx = class_index(label)
    shifts = (mu, nu, rho)
    bounds = tuple(chain_bound(s) for s in shifts)
    ftabs = tuple(_ftab(s, b, convention) for s, b in zip(shifts, bounds))

    total = Fraction(0)
    for m0 in range(bounds[0] + 1):
        for m1 in range(bounds[1] + 1):
            for m2 in range(bounds[2] + 1):
                ms = (m0, m1, m2)
                nodes = tuple(_node(s, m) for s, m in zip(shifts, ms))
                base = tuple(varpi[j] - m0 * steps[0][j] - m1 * steps[1][j]
                             - m2 * steps[2][j] for j in range(30))
                key = tuple(canonical_class(letter_projection(l, base))
                            for l in range(3))
                if key != tuple(canonical_class(n) for n in nodes):
                    raise ArithmeticError("translated anchor misses its nodes")
                pts = idx.get(key, ())
                if pts:
                    diff = tuple(pts[0][j] - base[j] for j in range(30))
                    if lattice_solve(lattice, diff) is None:
                        raise ArithmeticError(
                            "class bucket off the anchor's lattice coset")
                for h in pts:
                    total += _point_term(h, nodes, ms, ftabs,
                                         "support point off the reference coset")
    return total


def numerator_direct(mu: Vec, nu: Vec, rho: Vec, label: tuple[int, ...],
                     convention: str = "recurrence") -> Fraction:
    """Same sum assembled from the class index instead of lattice walks.

    Looks up the invariant points whose letter classes equal each depth's
    nodes directly.  Slower bookkeeping, no anchor, no step vectors; kept as
    an internal cross-check that the two readings of the support agree.
    """
    idx = class_index(label)
    shifts = (mu, nu, rho)
    bounds = tuple(chain_bound(s) for s in shifts)
    ftabs = tuple(_ftab(s, b, convention) for s, b in zip(shifts, bounds))

    total = Fraction(0)
    for m0 in range(bounds[0] + 1):
        for m1 in range(bounds[1] + 1):
            for m2 in range(bounds[2] + 1):
                ms = (m0, m1, m2)
                nodes = tuple(_node(s, m) for s, m in zip(shifts, ms))
                key = tuple(canonical_class(n) for n in nodes)
                for h in idx.get(key, ()):
                    total += _point_term(h, nodes, ms, ftabs,
                                         "class match with mismatched coset")
    return total


# -- public evaluation --------------------------------------------------------


def threej(v_top: Sequence[int], w_top: Sequence[int], u_top: Sequence[int],
           pv, pw, pu, label: Sequence[int],
           convention: str = "recurrence") -> Fraction:
    """Coupling coefficient of three patterns at one multiplicity label.

    pv, pw, pu are GTPattern instances or ((k1, k2), bot) pairs; the third
    slot is given in the original representation, its dual twist happens
    here.  The label must belong to the multiplicity basis of the triple.
    """
    pvp = _as_pattern(v_top, pv)
    pwp = _as_pattern(w_top, pw)
    pup = _as_pattern(u_top, pu)
    label_t = tuple(label)
    if label_t not in multiplicity_basis(v_top, w_top, u_top):
        raise ValueError(f"label {label_t} not in the multiplicity basis")
    if not selection_ok(pvp, pwp, pup):
        return Fraction(0)
    mu = pattern_shift_vector(pvp)
    nu = pattern_shift_vector(pwp)
    rho = pattern_shift_vector(dual_slot_pattern(pup))
    num = numerator_value(mu, nu, rho, label_t, convention)
    if not num:
        return Fraction(0)
    return num / (_denominator(mu) * _denominator(nu) * _denominator(rho))


def clebsch_gordan(v_top, w_top, u_top, pv, pw, pu, label,
                   convention: str = "recurrence") -> Fraction:
    """Alias for threej: the third slot already carries the dual pairing, so
    the same number is the Clebsch-Gordan coefficient in this normalization."""
    return threej(v_top, w_top, u_top, pv, pw, pu, label, convention)


def formula_threej_all(v_top: Sequence[int], w_top: Sequence[int],
                       u_top: Sequence[int],
                       labels: Optional[Sequence[tuple[int, ...]]] = None,
                       convention: str = "recurrence",
                       ) -> dict[TripleKey, Fraction]:
    """Full table for a weight triple, keyed like the oracle's output."""
    if labels is None:
        labels = multiplicity_basis(v_top, w_top, u_top)
    pvs = patterns_for_weight(HighestWeight(*v_top))
    pws = patterns_for_weight(HighestWeight(*w_top))
    pus = patterns_for_weight(HighestWeight(*u_top))
    out: dict[TripleKey, Fraction] = {}
    for pv in pvs:
        for pw in pws:
            for pu in pus:
                for label in labels:
                    out[(pattern_key(pv), pattern_key(pw), pattern_key(pu),
                         tuple(label))] = threej(v_top, w_top, u_top,
                                                 pv, pw, pu, label, convention)
    return out


def tensor_decomposition(v_top: Sequence[int], w_top: Sequence[int],
                         ) -> list[tuple[Vec, list[tuple[int, ...]]]]:
    """All constituents of V tensor W with their labels, highest first."""
    total = sum(v_top) + sum(w_top)
    out = []
    for mm1 in range(total, -1, -1):
        for mm2 in range(min(mm1, total - mm1), -1, -1):
            mm3 = total - mm1 - mm2
            if not mm1 >= mm2 >= mm3 >= 0:
                continue
            labels = multiplicity_basis(v_top, w_top, (mm1, mm2, mm3))
            if labels:
                out.append(((mm1, mm2, mm3), labels))
    return out
