"""Stable JSON interchange: input parsing, schema validation, and output
document construction for batch classification."""

from __future__ import annotations

import cmath
import json
from fractions import Fraction
from importlib import resources
from typing import Optional

import jsonschema
import numpy as np

from .chern import ChernData, chern_class
from .classify import SplittingResult, classify
from .config import DEFAULT, Tolerances
from .errors import LogrootsError, SchemaError
from .linalg import principal_log
from .rep import MonodromyRep, analyze

VERSION = "1"


def _load_schema(name: str) -> dict:
    text = resources.files("logroots").joinpath(f"schema/{name}").read_text()
    return json.loads(text)


def input_schema() -> dict:
    return _load_schema("input.schema.json")


def output_schema() -> dict:
    return _load_schema("output.schema.json")


def _parse_entry(entry) -> complex:
    if isinstance(entry, (list, tuple)):
        if len(entry) != 2:
            raise SchemaError(f"numeric entry must be [re, im], got {entry!r}")
        return complex(float(entry[0]), float(entry[1]))
    if isinstance(entry, dict):
        frac = Fraction(entry["angle"])
        modulus = float(entry.get("modulus", 1.0))
        return modulus * cmath.exp(2j * cmath.pi * float(frac % 1))
    raise SchemaError(f"unrecognized matrix entry {entry!r}")


def _parse_matrix(rows, n: int) -> np.ndarray:
    m = np.array([[_parse_entry(e) for e in row] for row in rows])
    if m.shape != (n, n):
        raise SchemaError(f"matrix shape {m.shape} does not match n = {n}")
    return m


def parse_input_document(doc: dict) -> list[MonodromyRep]:
    """Validate an input document against the schema and build the reps."""
    try:
        jsonschema.validate(doc, input_schema())
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"input document invalid: {exc.message}") from exc
    reps = []
    for item in doc["reps"]:
        n = item["n"]
        reps.append(MonodromyRep(
            _parse_matrix(item["m0"], n),
            _parse_matrix(item["m1"], n),
            label=item.get("label"),
        ))
    return reps


def load_input(path: str) -> list[MonodromyRep]:
    with open(path) as fh:
        return parse_input_document(json.load(fh))


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def chern_to_json(data: ChernData) -> dict:
    return {
        "c1": data.c1,
        "raw_sum": data.raw_sum,
        "per_pole": [
            {
                "pole": p.pole,
                "trace_of_log": _complex_pair(p.trace_of_log),
                "q_sum": p.q_sum,
                **({"exact_q_sum": str(p.exact_q_sum)}
                   if p.exact_q_sum is not None else {}),
            }
            for p in data.per_pole
        ],
        "wrap_integers": list(data.wrap_integers),
        "det_wrap": data.det_wrap,
        "branch_sensitive": data.branch_sensitive,
        "exact": data.exact,
    }


def result_to_json(result: SplittingResult) -> dict:
    return {
        "status": result.status,
        "options": [list(o.roots) for o in result.options],
        "canonical": [str(o) for o in result.options],
        "provenance": list(result.provenance),
        "minimal_weight_range": list(result.minimal_weight_range),
        "notes": list(result.notes),
    }


def classify_rep_to_json(rep: MonodromyRep, tol: Tolerances = DEFAULT,
                         exact: bool = False) -> dict:
    """Full per-rep output record: degree data, composition structure,
    splitting result, and quality flags."""
    comp = analyze(rep, tol)
    result = classify(rep, tol, exact=exact)
    record = {
        "label": rep.label,
        "n": rep.n,
        "chern": chern_to_json(result.chern),
        "composition": {"kind": comp.kind},
        "result": result_to_json(result),
        "flags": {
            "branch_sensitive": result.chern.branch_sensitive,
            "low_confidence": _low_confidence(rep, tol),
            "non_isolated": comp.non_isolated,
            "conjectural_notes": [n for n in result.notes if "conjectur" in n],
        },
    }
    if comp.kind not in ("irreducible",) and comp.sequences:
        seq = comp.sequences[0]
        record["composition"]["sequence"] = {
            "sub_dim": seq.sub_dim,
            "sub_roots": [list(o.roots)
                          for o in classify(seq.sub_rep, tol, exact=exact).options],
            "quotient_roots": [list(o.roots)
                               for o in classify(seq.quotient_rep, tol,
                                                 exact=exact).options],
        }
    return record


def _low_confidence(rep: MonodromyRep, tol: Tolerances) -> bool:
    for m in (rep.m0, rep.m1, rep.m_infinity):
        if principal_log(m, tol).low_confidence:
            return True
    return False


def classify_document(reps: list[MonodromyRep], tol: Tolerances = DEFAULT,
                      exact: bool = False, keep_going: bool = False) -> dict:
    """Batch-classify; with keep_going, failures become per-rep error
    objects instead of aborting the batch."""
    results = []
    for rep in reps:
        try:
            results.append(classify_rep_to_json(rep, tol, exact=exact))
        except LogrootsError as exc:
            if not keep_going:
                raise
            results.append({
                "label": rep.label,
                "n": rep.n,
                "error": {"type": type(exc).__name__, "message": str(exc)},
            })
    doc = {"version": VERSION, "results": results}
    jsonschema.validate(doc, output_schema())
    return doc


def chern_document(reps: list[MonodromyRep], tol: Tolerances = DEFAULT,
                   exact: bool = False, keep_going: bool = False) -> dict:
    results = []
    for rep in reps:
        try:
            results.append({
                "label": rep.label,
                "n": rep.n,
                "chern": chern_to_json(chern_class(rep, tol, exact=exact)),
            })
        except LogrootsError as exc:
            if not keep_going:
                raise
            results.append({
                "label": rep.label,
                "n": rep.n,
                "error": {"type": type(exc).__name__, "message": str(exc)},
            })
    return {"version": VERSION, "results": results}
