from __future__ import annotations

from fractions import Fraction

import pytest

from gl3cg.minors import entry_index
from gl3cg.oracle import (DEGREE_CAP, e_action, g_entry_poly, gt_vector_poly,
                          invariance_check, invariant_rank,
                          littlewood_richardson, oracle_threej_all,
                          pattern_key)
from gl3cg.patterns import GTPattern
from gl3cg.polynomials import SparsePoly

V1 = (1, 0, 0)
TOP_PV = GTPattern(V1, (1, 0), 1)
TOP_PW = GTPattern(V1, (1, 0), 1)


def test_gt_vector_poly_fundamental():
    # highest vector of the vector representation is the (1,1) entry
    poly = gt_vector_poly(0, TOP_PV)
    assert poly.terms == {tuple(1 if i == entry_index(0, 1, 1) else 0
                                for i in range(27)): Fraction(1)}
    # lowest vector is the (1,3) entry
    low = gt_vector_poly(0, GTPattern(V1, (0, 0), 0))
    assert low.terms == {tuple(1 if i == entry_index(0, 1, 3) else 0
                               for i in range(27)): Fraction(1)}


def test_e_action_raising_lowering():
    low = gt_vector_poly(0, GTPattern(V1, (0, 0), 0))
    mid = e_action(low, 2, 3, letter=0)
    assert mid.terms == {tuple(1 if i == entry_index(0, 1, 2) else 0
                               for i in range(27)): Fraction(1)}
    # raising past the top kills the vector
    top = gt_vector_poly(0, TOP_PV)
    assert e_action(top, 1, 2, letter=0).is_zero()


def test_invariance_of_labelled_invariants():
    assert invariance_check(g_entry_poly((1, 1, 0, 0, 0, 0, 0, 0)))
    assert invariance_check(g_entry_poly((0, 0, 0, 0, 1, 0, 0, 0)))
    assert invariance_check(g_entry_poly((0, 0, 0, 0, 0, 0, 0, 1)))
    # a bare matrix entry is not invariant
    probe = SparsePoly.variable(27, entry_index(0, 1, 1))
    assert not invariance_check(probe)


def test_invariant_rank_matches_count():
    labels = [(0, 1, 1, 0, 0, 1, 0, 0), (1, 0, 0, 1, 0, 0, 1, 0)]
    assert invariant_rank(labels) == 2
    assert invariant_rank(labels[:1]) == 1


def test_littlewood_richardson_micros():
    assert littlewood_richardson(V1, V1, (2, 0, 0)) == 1
    assert littlewood_richardson(V1, V1, (1, 1, 0)) == 1
    assert littlewood_richardson(V1, V1, (2, 1, 0)) == 0
    assert littlewood_richardson((1, 1, 0), (1, 1, 0), (2, 1, 1)) == 1
    assert littlewood_richardson((2, 1, 0), (2, 1, 0), (3, 2, 1)) == 2


def test_oracle_micro_symmetric():
    table = oracle_threej_all(V1, V1, (2, 0, 0), [(1, 1, 0, 0, 0, 0, 0, 0)])
    label = (1, 1, 0, 0, 0, 0, 0, 0)
    top_u = pattern_key(GTPattern((2, 0, 0), (2, 0), 2))
    key = (pattern_key(TOP_PV), pattern_key(TOP_PW), top_u, label)
    assert table[key] == Fraction(2)
    # table is complete: 3 * 3 * 6 pattern triples
    assert len(table) == 54


def test_oracle_micro_antisymmetric():
    label = (0, 0, 0, 0, 1, 0, 0, 0)
    table = oracle_threej_all(V1, V1, (1, 1, 0), [label])
    pu = pattern_key(GTPattern((1, 1, 0), (1, 1), 1))
    k12 = (pattern_key(GTPattern(V1, (1, 0), 1)),
           pattern_key(GTPattern(V1, (1, 0), 0)), pu, label)
    k21 = (pattern_key(GTPattern(V1, (1, 0), 0)),
           pattern_key(GTPattern(V1, (1, 0), 1)), pu, label)
    assert table[k12] == -table[k21] != 0
    assert table[k12] in (Fraction(1), Fraction(-1))


def test_oracle_degree_cap():
    with pytest.raises(ValueError):
        oracle_threej_all((13, 0, 0), V1, (14, 0, 0), [])


def test_oracle_zero_when_label_impossible():
    # (2,1,0) does not occur in V1 x V1; the solver is never consulted, but
    # the multiplicity basis is empty so there is nothing to ask for
    from gl3cg.invariants import multiplicity_basis
    assert multiplicity_basis(V1, V1, (2, 1, 0)) == []
