"""Self-contained verification suites behind the verify command.

Each suite is a list of independent work items; items run in any order (or
in worker processes) and the report is merged back in item order, so output
is byte-identical no matter how many jobs execute it.  No timestamps or
durations appear in the report body.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .agkz import (alternating_poly, apply_annihilator, corrected_poly,
                   expand_alternating, expand_corrected, gkz_residual,
                   plain_poly, support_empty)
from .invariants import (NVARS, class_lattice, cycle_lattice, cycle_vectors,
                         multiplicity_basis, step_vectors)
from .lattices import lattice_solve, row_hnf
from .oracle import (e_action, g_entry_poly, invariance_check, invariant_rank,
                     littlewood_richardson, oracle_threej_all)
from .patterns import (R_STEP, GTPattern, coset_leq, dominant_weights,
                       pattern_shift_vector, patterns_for_weight)
from .pipeline import formula_threej_all, selection_ok, threej
from .polynomials import SparsePoly, scalar_product

SUITES = ("micro", "oracle-equality", "annihilation", "gkz-residual",
          "invariance", "contravariance", "triangularity", "multiplicity",
          "selection", "lattices")

CONTRAVARIANCE_SEED = 1729
CONTRAVARIANCE_CHECKS = 100

#: six independent first-kind cycles kept as a regression reference; the
#: generated swap cycles must span exactly this lattice
FIRST_KIND_REFERENCE_BASIS = (
    ((15, -1), (16, 1), (24, -1), (27, 1)),
    ((3, -1), (4, 1), (28, -1), (25, 1)),
    ((12, -1), (13, 1), (27, -1), (24, 1)),
    ((9, -1), (10, 1), (26, -1), (29, 1)),
    ((0, -1), (1, 1), (25, -1), (28, 1)),
    ((6, -1), (7, 1), (29, -1), (26, 1)),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{self.suite}] {mark} {self.name}{tail}"


def _corpus(max_weight: int) -> list[tuple[int, int, int]]:
    return [hw.as_tuple() for hw in dominant_weights(max_weight)]


def _constituents(vt, wt):
    total = sum(vt) + sum(wt)
    for m1 in range(total, -1, -1):
        for m2 in range(min(m1, total - m1), -1, -1):
            m3 = total - m1 - m2
            if m1 >= m2 >= m3 >= 0:
                ut = (m1, m2, m3)
                labels = multiplicity_basis(vt, wt, ut)
                if labels:
                    yield ut, labels


def _annihilation_shifts() -> list[tuple[int, ...]]:
    out = []
    for hw in dominant_weights(3):
        for p in patterns_for_weight(hw):
            out.append(pattern_shift_vector(p))
    return out


# -- individual items ----------------------------------------------------------


def _item_micro(idx: int) -> list[CheckResult]:
    cases = (
        (((1, 0, 0), (1, 0, 0), (2, 0, 0), ((1, 0), 1), ((1, 0), 1),
          ((2, 0), 2), (1, 1, 0, 0, 0, 0, 0, 0)), Fraction(2)),
        (((1, 0, 0), (1, 0, 0), (1, 1, 0), ((1, 0), 1), ((1, 0), 0),
          ((1, 1), 1), (0, 0, 0, 0, 1, 0, 0, 0)), Fraction(1)),
        (((1, 0, 0), (1, 0, 0), (1, 1, 0), ((1, 0), 0), ((1, 0), 1),
          ((1, 1), 1), (0, 0, 0, 0, 1, 0, 0, 0)), Fraction(-1)),
    )
    args, want = cases[idx]
    got = threej(*args)
    vt, wt, ut = args[0], args[1], args[2]
    oracle = oracle_threej_all(vt, wt, ut, [args[6]])
    okey = (args[3], args[4], args[5], args[6])
    ogot = oracle[okey]
    ok = got == want and ogot == want
    return [CheckResult("micro", f"case-{idx}", ok,
                        f"formula={got} oracle={ogot} expected={want}")]


def _item_oracle_equality(vt, wt) -> list[CheckResult]:
    checked = 0
    bad = 0
    for ut, labels in _constituents(vt, wt):
        f = formula_threej_all(vt, wt, ut, labels)
        o = oracle_threej_all(vt, wt, ut, labels)
        checked += len(f)
        if f != o:
            bad += sum(1 for k in f if f[k] != o[k])
    name = f"V={vt} W={wt}"
    return [CheckResult("oracle-equality", name, bad == 0,
                        f"{checked} coefficients, {bad} mismatched")]


def _item_annihilation(shift) -> list[CheckResult]:
    c_ok = apply_annihilator(corrected_poly(shift)).is_zero()
    a_ok = apply_annihilator(alternating_poly(shift)).is_zero()
    name = "shift=" + ",".join(map(str, shift))
    return [CheckResult("annihilation", name, c_ok and a_ok,
                        f"corrected={'0' if c_ok else 'nonzero'} "
                        f"alternating={'0' if a_ok else 'nonzero'}")]


def _item_gkz_residual(shift) -> list[CheckResult]:
    ok = gkz_residual(plain_poly(shift)).is_zero()
    name = "shift=" + ",".join(map(str, shift))
    return [CheckResult("gkz-residual", name, ok, "")]


def _item_invariance(label) -> list[CheckResult]:
    ok = invariance_check(g_entry_poly(tuple(label)))
    return [CheckResult("invariance", f"label={label}", ok, "")]


def _random_entry_poly(rng: random.Random) -> SparsePoly:
    terms = {}
    for _ in range(rng.randint(2, 5)):
        exp = [0] * 27
        for _ in range(rng.randint(1, 4)):
            exp[rng.randrange(27)] += rng.randint(1, 2)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            terms[tuple(exp)] = terms.get(tuple(exp), Fraction(0)) + coeff
    return SparsePoly(27, {e: c for e, c in terms.items() if c})


def _item_contravariance(idx: int) -> list[CheckResult]:
    rng = random.Random(CONTRAVARIANCE_SEED + idx)
    f = _random_entry_poly(rng)
    h = _random_entry_poly(rng)
    i, j = rng.sample((1, 2, 3), 2)
    lhs = scalar_product(e_action(f, i, j), h)
    rhs = scalar_product(f, e_action(h, j, i))
    return [CheckResult("contravariance", f"random-{idx}", lhs == rhs,
                        f"i={i} j={j} lhs={lhs} rhs={rhs}")]


def _item_triangularity(shift) -> list[CheckResult]:
    alt = alternating_poly(shift)
    bad_pairs = 0
    for other in _annihilation_shifts():
        val = scalar_product(alt, plain_poly(other))
        if val and not coset_leq(other, shift):
            bad_pairs += 1
    # the two expansion tables must be mutually inverse along the chain
    depth = max(min(shift[0], shift[5]), 0)
    ident_ok = True
    if not support_empty(shift):
        nodes = [tuple(shift[i] - s * r for i, r in enumerate(R_STEP))
                 for s in range(depth + 1)]
        n_max = max(s for s in range(depth + 1) if not support_empty(nodes[s]))
        d = [expand_alternating(nodes[s], depth) for s in range(n_max + 1)]
        f = expand_corrected(shift, depth)
        for n in range(n_max + 1):
            acc = sum((f[s] * d[s][n - s] for s in range(n + 1)), Fraction(0))
            want = Fraction(1) if n == 0 else Fraction(0)
            if acc != want:
                ident_ok = False
    name = "shift=" + ",".join(map(str, shift))
    return [CheckResult("triangularity", name, bad_pairs == 0 and ident_ok,
                        f"pairs-off-cone={bad_pairs} inverse={'ok' if ident_ok else 'bad'}")]


def _item_multiplicity(vt, wt) -> list[CheckResult]:
    bad = []
    total = 0
    for ut, labels in _constituents(vt, wt):
        total += 1
        n = len(labels)
        r = invariant_rank(labels)
        lr = littlewood_richardson(vt, wt, ut)
        if not n == r == lr:
            bad.append((ut, n, r, lr))
    # constituents with zero labels must also have zero character multiplicity
    tot = sum(vt) + sum(wt)
    for m1 in range(tot, -1, -1):
        for m2 in range(min(m1, tot - m1), -1, -1):
            m3 = tot - m1 - m2
            if m1 >= m2 >= m3 >= 0:
                ut = (m1, m2, m3)
                if not multiplicity_basis(vt, wt, ut):
                    if littlewood_richardson(vt, wt, ut) != 0:
                        bad.append((ut, 0, None, "nonzero"))
    name = f"V={vt} W={wt}"
    return [CheckResult("multiplicity", name, not bad,
                        f"{total} constituents" + (f" bad={bad}" if bad else ""))]


def _item_selection(vt, wt) -> list[CheckResult]:
    violations = 0
    zeros_confirmed = 0
    zeros_total = 0
    for ut, labels in _constituents(vt, wt):
        f = formula_threej_all(vt, wt, ut, labels)
        o = oracle_threej_all(vt, wt, ut, labels)
        for (kv, kw, ku, label), val in f.items():
            pv = GTPattern(tuple(vt), *kv)
            pw = GTPattern(tuple(wt), *kw)
            pu = GTPattern(tuple(ut), *ku)
            passes = selection_ok(pv, pw, pu)
            if val != 0 and not passes:
                violations += 1
            if passes and val == 0:
                zeros_total += 1
                if o[(kv, kw, ku, label)] == 0:
                    zeros_confirmed += 1
    name = f"V={vt} W={wt}"
    ok = violations == 0 and zeros_confirmed == zeros_total
    return [CheckResult("selection", name, ok,
                        f"violations={violations} "
                        f"passing-zeros={zeros_confirmed}/{zeros_total}")]


def _item_lattices(_: int) -> list[CheckResult]:
    out = []
    for kind in ("first", "second"):
        vecs = cycle_vectors(kind)
        lat = cycle_lattice(kind)
        out.append(CheckResult("lattices", f"{kind}-kind-cycles",
                               len(vecs) == 9 and lat.rank == 6,
                               f"cycles={len(vecs)} rank={lat.rank}"))
    ref = []
    for pairs in FIRST_KIND_REFERENCE_BASIS:
        vec = [0] * NVARS
        for idx, val in pairs:
            vec[idx] = val
        ref.append(tuple(vec))
    href, _u = row_hnf(ref)
    href_rows = tuple(tuple(r) for r in href if any(r))
    out.append(CheckResult("lattices", "first-kind-reference-basis",
                           href_rows == cycle_lattice("first").basis,
                           "reduced to Hermite form and compared"))
    try:
        for kind in ("first", "second"):
            step_vectors(kind)
        steps_ok = True
    except ArithmeticError:
        steps_ok = False
    out.append(CheckResult("lattices", "step-vector-projections", steps_ok, ""))
    for kind in ("first", "second"):
        cl = class_lattice(kind)
        inside = all(lattice_solve(cl, v) is not None
                     for v in cycle_lattice(kind).basis)
        out.append(CheckResult("lattices", f"{kind}-kind-class-kernel",
                               cl.rank == 10 and inside,
                               f"rank={cl.rank} cycles-inside={inside}"))
    return out


# -- scheduling ----------------------------------------------------------------


def suite_items(suite: str, max_weight: int) -> list[tuple]:
    """Work items for one suite; each is a picklable argument tuple."""
    if suite == "micro":
        return [(i,) for i in range(3)]
    if suite in ("oracle-equality", "multiplicity", "selection"):
        corpus = _corpus(max_weight)
        return [(vt, wt) for vt in corpus for wt in corpus]
    if suite in ("annihilation", "gkz-residual", "triangularity"):
        return [(s,) for s in _annihilation_shifts()]
    if suite == "invariance":
        corpus = _corpus(max_weight)
        labels = set()
        for vt in corpus:
            for wt in corpus:
                for _ut, labs in _constituents(vt, wt):
                    labels.update(labs)
        return [(label,) for label in sorted(labels)]
    if suite == "contravariance":
        return [(i,) for i in range(CONTRAVARIANCE_CHECKS)]
    if suite == "lattices":
        return [(0,)]
    raise ValueError(f"unknown suite {suite!r}")


_ITEM_FUNCS = {
    "micro": _item_micro,
    "oracle-equality": _item_oracle_equality,
    "annihilation": _item_annihilation,
    "gkz-residual": _item_gkz_residual,
    "invariance": _item_invariance,
    "contravariance": _item_contravariance,
    "triangularity": _item_triangularity,
    "multiplicity": _item_multiplicity,
    "selection": _item_selection,
    "lattices": _item_lattices,
}


def run_item(suite: str, args: tuple) -> list[CheckResult]:
    return _ITEM_FUNCS[suite](*args)


def run_verification(suites: Optional[Sequence[str]] = None, max_weight: int = 2,
                     jobs: int = 1) -> list[CheckResult]:
    """Run the requested suites and return results in a fixed order.

    Results are ordered by (suite position, item position) regardless of how
    many worker processes executed them.
    """
    chosen = list(suites) if suites else list(SUITES)
    for s in chosen:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
    plan = [(s, args) for s in chosen for args in suite_items(s, max_weight)]
    if jobs <= 1:
        chunks = [run_item(s, args) for s, args in plan]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_item, s, args) for s, args in plan]
            chunks = [f.result() for f in futures]
    results: list[CheckResult] = []
    for chunk in chunks:
        results.extend(chunk)
    return results


def render_report(results: Sequence[CheckResult], max_weight: int,
                  suites: Optional[Sequence[str]] = None) -> str:
    lines = ["verification report",
             f"suites: {' '.join(suites) if suites else 'all'}",
             f"max-weight: {max_weight}", ""]
    lines.extend(r.line() for r in results)
    failed = sum(1 for r in results if not r.ok)
    lines.append("")
    lines.append(f"summary: {len(results)} checks, {failed} failed")
    return "\n".join(lines) + "\n"
