"""Exact Clebsch-Gordan and 3j machinery for rank-three matrix groups.

Two independent routes to every coupling coefficient: a closed-form ratio of
hypergeometric-style lattice sums (pipeline) and a brute-force expansion of
invariant determinants over explicit basis vectors (oracle).  All arithmetic
is exact; floats never appear.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .agkz import (alternating_poly, apply_annihilator, corrected_poly,
                   expand_alternating, expand_corrected, gkz_residual,
                   plain_poly, plain_value)
from .invariants import class_lattice, cycle_lattice, multiplicity_basis
from .oracle import (e_action, g_entry_poly, invariance_check,
                     littlewood_richardson, oracle_threej_all)
from .patterns import (GTPattern, HighestWeight, dual_slot_pattern,
                       make_pattern, pattern_shift_vector, patterns_for_weight)
from .pipeline import (clebsch_gordan, formula_threej_all, selection_state,
                       tensor_decomposition, threej)
from .verify import SUITES, render_report, run_verification

__all__ = [
    "__version__",
    "alternating_poly", "apply_annihilator", "corrected_poly",
    "expand_alternating", "expand_corrected", "gkz_residual",
    "plain_poly", "plain_value",
    "class_lattice", "cycle_lattice", "multiplicity_basis",
    "e_action", "g_entry_poly", "invariance_check",
    "littlewood_richardson", "oracle_threej_all",
    "GTPattern", "HighestWeight", "dual_slot_pattern", "make_pattern",
    "pattern_shift_vector", "patterns_for_weight",
    "clebsch_gordan", "formula_threej_all", "selection_state",
    "tensor_decomposition", "threej",
    "SUITES", "render_report", "run_verification",
]
