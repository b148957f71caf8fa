from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from gl3cg.lattices import (IntegerLattice, OrthantWalker, int_rank,
                            lattice_member, lattice_solve, orthant_walker,
                            row_hnf, xgcd)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_row_hnf_unimodular_and_echelon():
    rows = [(2, 4, 4), (-6, 6, 12), (10, 4, 16)]
    H, U = row_hnf(rows)
    # U * rows == H
    for i in range(3):
        for j in range(3):
            assert sum(U[i][k] * rows[k][j] for k in range(3)) == H[i][j]
    # pivots positive, zeros below
    pivots = []
    for r in H:
        nz = [j for j, x in enumerate(r) if x]
        if nz:
            assert r[nz[0]] > 0
            pivots.append(nz[0])
    assert pivots == sorted(pivots)


@given(st.lists(st.tuples(*[st.integers(-5, 5)] * 4), min_size=1, max_size=4))
@settings(max_examples=60)
def test_hnf_preserves_lattice(rows):
    H, _u = row_hnf(rows)
    kept = [tuple(r) for r in H if any(r)]
    # every original row solves over the Hermite rows and vice versa
    if kept:
        for r in rows:
            assert lattice_solve(tuple(kept), tuple(r)) is not None
    else:
        assert all(not any(r) for r in rows)


def test_int_rank():
    assert int_rank([(1, 0), (0, 1)]) == 2
    assert int_rank([(2, 4), (1, 2)]) == 1
    assert int_rank([(0, 0)]) == 0


def test_lattice_solve_and_member():
    lat = IntegerLattice(3, ((1, 2, 0), (0, 0, 3)))
    sol = lattice_solve(lat, (2, 4, 3))
    assert sol == (2, 1)
    assert lattice_member(lat, (2, 4, 3))
    assert lattice_solve(lat, (1, 1, 0)) is None
    assert lattice_solve(lat, (1, 2, 1)) is None


def test_walker_enumerates_line():
    # one generator (1, -1): points of shift + t*(1,-1) in the orthant
    w = OrthantWalker(((1, -1),))
    assert w.bounded
    pts = [t for t in w.enumerate((2, 3))]
    # -2 <= t <= 3
    assert len(pts) == 6


def test_walker_unbounded_direction():
    w = OrthantWalker(((1, 0),))
    assert not w.bounded


def test_walker_cache_returns_same_object():
    basis = ((0, 1, -1, -1, 1, 0),)
    assert orthant_walker(basis) is orthant_walker(basis)


def test_walker_rank_two():
    basis = ((1, -1, 0), (0, 1, -1))
    w = OrthantWalker(basis)
    got = set()
    for t in w.enumerate((1, 1, 1)):
        pt = tuple(1 + t[0] * basis[0][i] + t[1] * basis[1][i] for i in range(3))
        assert min(pt) >= 0
        assert sum(pt) == 3
        got.add(pt)
    want = {(a, b, c) for a in range(4) for b in range(4) for c in range(4)
            if a + b + c == 3}
    assert got == want
