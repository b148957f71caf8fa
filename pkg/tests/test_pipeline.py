from __future__ import annotations

from fractions import Fraction

import pytest

from gl3cg.invariants import multiplicity_basis
from gl3cg.oracle import oracle_threej_all
from gl3cg.patterns import GTPattern, dual_slot_pattern, pattern_shift_vector
from gl3cg.pipeline import (clebsch_gordan, formula_threej_all,
                            numerator_direct, numerator_value, selection_ok,
                            selection_state, tensor_decomposition, threej)

V1 = (1, 0, 0)
SYM = (1, 1, 0, 0, 0, 0, 0, 0)
ANTI = (0, 0, 0, 0, 1, 0, 0, 0)


def test_threej_micro_symmetric():
    top = ((1, 0), 1)
    assert threej(V1, V1, (2, 0, 0), top, top, ((2, 0), 2), SYM) == Fraction(2)
    low = ((0, 0), 0)
    assert threej(V1, V1, (2, 0, 0), low, low, ((0, 0), 0), SYM) == Fraction(2)
    mixed = threej(V1, V1, (2, 0, 0), top, low, ((1, 0), 1), SYM)
    assert mixed == Fraction(1)


def test_threej_micro_antisymmetric():
    a = ((1, 0), 1)
    b = ((1, 0), 0)
    pu = ((1, 1), 1)
    plus = threej(V1, V1, (1, 1, 0), a, b, pu, ANTI)
    minus = threej(V1, V1, (1, 1, 0), b, a, pu, ANTI)
    assert plus == -minus != 0
    assert abs(plus) == 1


def test_threej_rejects_foreign_label():
    with pytest.raises(ValueError):
        threej(V1, V1, (2, 0, 0), ((1, 0), 1), ((1, 0), 1), ((2, 0), 2), ANTI)


def test_threej_rejects_wrong_top():
    with pytest.raises(ValueError):
        threej(V1, V1, (2, 0, 0), GTPattern((2, 0, 0), (2, 0), 2),
               ((1, 0), 1), ((2, 0), 2), SYM)


def test_clebsch_gordan_alias():
    top = ((1, 0), 1)
    assert clebsch_gordan(V1, V1, (2, 0, 0), top, top, ((2, 0), 2), SYM) == \
        threej(V1, V1, (2, 0, 0), top, top, ((2, 0), 2), SYM)


def test_selection_state():
    pv = GTPattern(V1, (1, 0), 1)
    pw = GTPattern(V1, (1, 0), 1)
    good = GTPattern((2, 0, 0), (2, 0), 2)
    assert selection_state(pv, pw, good) == {
        "top_rows": True, "middle_rows": True, "bottom_rows": True}
    bad_bot = GTPattern((2, 0, 0), (2, 0), 1)
    state = selection_state(pv, pw, bad_bot)
    assert not state["bottom_rows"]
    assert not selection_ok(pv, pw, bad_bot)
    bad_mid = GTPattern((2, 0, 0), (1, 0), 1)
    assert not selection_state(pv, pw, bad_mid)["middle_rows"]


def test_selection_zero_is_zero_coefficient():
    pv = ((1, 0), 1)
    pw = ((1, 0), 1)
    assert threej(V1, V1, (2, 0, 0), pv, pw, ((2, 0), 1), SYM) == 0


def test_series_equals_direct_numerator():
    pv = GTPattern((1, 1, 0), (1, 1), 1)
    pw = GTPattern((1, 1, 0), (1, 0), 1)
    pu = GTPattern((2, 1, 1), (2, 1), 2)
    labels = multiplicity_basis((1, 1, 0), (1, 1, 0), (2, 1, 1))
    assert labels == [(0, 0, 0, 0, 0, 0, 0, 1)]
    mu = pattern_shift_vector(pv)
    nu = pattern_shift_vector(pw)
    rho = pattern_shift_vector(dual_slot_pattern(pu))
    lab = labels[0]
    assert numerator_value(mu, nu, rho, lab, "recurrence") == \
        numerator_direct(mu, nu, rho, lab, "recurrence")


def test_formula_matches_oracle_on_triples():
    cases = [
        (V1, V1, (2, 0, 0)),
        (V1, V1, (1, 1, 0)),
        ((1, 1, 0), V1, (2, 1, 0)),
        ((2, 0, 0), V1, (2, 1, 0)),
        ((1, 1, 0), (1, 1, 0), (2, 1, 1)),
    ]
    for vt, wt, ut in cases:
        labels = multiplicity_basis(vt, wt, ut)
        assert labels, (vt, wt, ut)
        assert formula_threej_all(vt, wt, ut, labels) == \
            oracle_threej_all(vt, wt, ut, labels)


def test_tensor_decomposition_frozen():
    got = tensor_decomposition((1, 1, 0), (1, 1, 0))
    assert got == [
        ((2, 2, 0), [(0, 0, 1, 1, 0, 0, 0, 0)]),
        ((2, 1, 1), [(0, 0, 0, 0, 0, 0, 0, 1)]),
    ]
    got = tensor_decomposition(V1, V1)
    assert got == [
        ((2, 0, 0), [SYM]),
        ((1, 1, 0), [ANTI]),
    ]


def test_tensor_decomposition_dimensions():
    from gl3cg.patterns import HighestWeight
    for vt, wt in (((2, 1, 0), (1, 1, 0)), ((2, 2, 0), (2, 0, 0))):
        pieces = tensor_decomposition(vt, wt)
        total = sum(len(labels) * HighestWeight(*ut).dim for ut, labels in pieces)
        assert total == HighestWeight(*vt).dim * HighestWeight(*wt).dim
