"""FastAPI service exposing the exact core.

Three endpoints mirror the CLI subcommands; every computation stays exact
and the JSON layer only formats.  Invalid weights, patterns or labels come
back as 422 with a message, never as a 500.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, HTTPException

from . import __version__, oracle, pipeline
from .invariants import multiplicity_basis
from .patterns import GTPattern
from .schemas import (Constituent, CheckModel, HealthResponse, Label,
                      TableRequest, TableResponse, TableRow, ThreeJRequest,
                      ThreeJResponse, VerifyRequest, VerifyResponse)
from .verify import SUITES, render_report, run_verification

app = FastAPI(title="gl3cg", version=__version__)


def _bad(msg: str) -> HTTPException:
    return HTTPException(status_code=422, detail=msg)


def _resolve_label(v, w, u, label, label_index) -> Label:
    labels = multiplicity_basis(v, w, u)
    if not labels:
        raise _bad(f"U={tuple(u)} does not occur in V tensor W")
    if label is not None:
        if tuple(label) not in labels:
            raise _bad(f"label {tuple(label)} not in the multiplicity basis "
                       f"{labels}")
        return tuple(label)
    if label_index is not None:
        if not 0 <= label_index < len(labels):
            raise _bad(f"label index {label_index} out of range, "
                       f"{len(labels)} labels available")
        return labels[label_index]
    if len(labels) == 1:
        return labels[0]
    raise _bad(f"multiplicity is {len(labels)}; pass label or label_index")


def _pattern(top, spec, name: str) -> GTPattern:
    try:
        return GTPattern(tuple(top), tuple(spec.mid), spec.bot)
    except ValueError as exc:
        raise _bad(f"invalid {name} pattern: {exc}")


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(version=__version__)


@app.post("/api/v1/threej", response_model=ThreeJResponse)
def threej_endpoint(req: ThreeJRequest) -> ThreeJResponse:
    label = _resolve_label(req.v, req.w, req.u, req.label, req.label_index)
    pv = _pattern(req.v, req.pv, "pv")
    pw = _pattern(req.w, req.pw, "pw")
    pu = _pattern(req.u, req.pu, "pu")
    timings: dict[str, float] = {}
    formula_val: Optional[Fraction] = None
    oracle_val: Optional[Fraction] = None
    try:
        if req.method in ("formula", "both"):
            t0 = time.perf_counter()
            formula_val = pipeline.threej(req.v, req.w, req.u, pv, pw, pu,
                                          label, req.convention)
            timings["formula"] = time.perf_counter() - t0
        if req.method in ("oracle", "both"):
            t0 = time.perf_counter()
            table = oracle.oracle_threej_all(req.v, req.w, req.u, [label])
            key = (oracle.pattern_key(pv), oracle.pattern_key(pw),
                   oracle.pattern_key(pu), label)
            oracle_val = table[key]
            timings["oracle"] = time.perf_counter() - t0
    except ValueError as exc:
        raise _bad(str(exc))
    agree = None
    if req.method == "both":
        agree = formula_val == oracle_val
    primary = formula_val if formula_val is not None else oracle_val
    return ThreeJResponse(
        value=str(primary),
        label=label,
        method=req.method,
        formula_value=None if formula_val is None else str(formula_val),
        oracle_value=None if oracle_val is None else str(oracle_val),
        agree=agree,
        timings=timings if req.timings else None,
    )


@app.post("/api/v1/table", response_model=TableResponse)
def table_endpoint(req: TableRequest) -> TableResponse:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    if req.u is None:
        try:
            decomp = pipeline.tensor_decomposition(req.v, req.w)
        except ValueError as exc:
            raise _bad(str(exc))
        constituents = [Constituent(u=ut, multiplicity=len(labels),
                                    labels=list(labels))
                        for ut, labels in decomp]
        timings["decomposition"] = time.perf_counter() - t0
        return TableResponse(constituents=constituents,
                             timings=timings if req.timings else None)

    if req.label is not None or req.label_index is not None:
        labels = [_resolve_label(req.v, req.w, req.u, req.label,
                                 req.label_index)]
    else:
        labels = multiplicity_basis(req.v, req.w, req.u)
        if not labels:
            raise _bad(f"U={tuple(req.u)} does not occur in V tensor W")
    try:
        formula_tab = oracle_tab = None
        if req.method in ("formula", "both"):
            formula_tab = pipeline.formula_threej_all(req.v, req.w, req.u,
                                                      labels, req.convention)
        if req.method in ("oracle", "both"):
            oracle_tab = oracle.oracle_threej_all(req.v, req.w, req.u, labels)
    except ValueError as exc:
        raise _bad(str(exc))
    primary = formula_tab if formula_tab is not None else oracle_tab
    rows = []
    agree = True
    for key in sorted(primary):
        kv, kw, ku, label = key
        val = primary[key]
        if req.nonzero_only and val == 0:
            continue
        row = TableRow(
            v_pattern=(kv[0][0], kv[0][1], kv[1]),
            w_pattern=(kw[0][0], kw[0][1], kw[1]),
            u_pattern=(ku[0][0], ku[0][1], ku[1]),
            label=label,
            value=str(val),
        )
        if req.method == "both":
            other = oracle_tab[key]
            row.oracle_value = str(other)
            if other != val:
                agree = False
        rows.append(row)
    timings["table"] = time.perf_counter() - t0
    return TableResponse(rows=rows,
                         agree=agree if req.method == "both" else None,
                         timings=timings if req.timings else None)


@app.post("/api/v1/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    suites = req.suites
    if suites:
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise _bad(f"unknown suites {unknown}; available: {list(SUITES)}")
    t0 = time.perf_counter()
    results = run_verification(suites, req.max_weight, req.jobs)
    elapsed = time.perf_counter() - t0
    checks = [CheckModel(suite=r.suite, name=r.name, ok=r.ok, detail=r.detail)
              for r in results]
    return VerifyResponse(
        passed=all(r.ok for r in results),
        checks=checks,
        report=render_report(results, req.max_weight, suites),
        timings={"verify": elapsed} if req.timings else None,
    )
