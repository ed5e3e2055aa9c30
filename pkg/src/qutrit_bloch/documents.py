"""JSON document shapes shared by the CLI and the service.

Every document is a pure function of its inputs: no timestamps, no
hidden state, floats rendered with 17 significant digits so repeated
runs are byte-identical. ``dumps_canonical`` is the single serializer
used on every output channel.
"""

from __future__ import annotations

import json
import math
from typing import Any

from . import __version__
from .bloch import BlochVector, bloch_triple
from .clusters import (
    TRANSCRIPTION_NOTES,
    CLUSTER_IDS,
    RegionGrid,
    cluster_cases,
    errata_report,
)
from .physicality import TOLERANCE, physicality_report
from .sampling import SamplerConfig, sample
from .state_core import ParamVector

SCHEMA_VERSION = 1


def _float_repr(value: float) -> str:
    if value == 0.0:
        return "0"  # normalizes -0.0 as well
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite float {value!r}")
    return format(value, ".17g")


def dumps_canonical(obj: Any) -> str:
    """Serialize to JSON with deterministic bytes.

    Floats use 17 significant digits (round-trip exact for float64), key
    order follows insertion order, and no whitespace is emitted.
    """
    parts: list[str] = []
    _write(obj, parts)
    return "".join(parts)


def _write(obj: Any, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif isinstance(obj, bool):
        parts.append("true" if obj else "false")
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        parts.append(_float_repr(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                parts.append(",")
            parts.append(json.dumps(str(key)))
            parts.append(":")
            _write(value, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, value in enumerate(obj):
            if i:
                parts.append(",")
            _write(value, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _vector_block(vec: BlochVector) -> dict[str, Any]:
    return {
        "squares": list(vec.squares),
        "length": vec.length,
        "negative_components": list(vec.negative_components),
    }


def scene_document(params: ParamVector) -> dict[str, Any]:
    """Full evaluation of one parameter point, ready for serialization.

    Holds the 8 parameters, both inequality LHS values, purity,
    eigenvalues, characteristic coefficients, the physicality verdict
    and the three Bloch vectors. Never a cache: consumers may re-derive
    every numeric field from ``params`` and must get the same values.
    """
    report = physicality_report(params)
    triple = bloch_triple(params)
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params.to_dict(),
        "invariants_block": {
            "lhs1": report.ineq1.lhs_direct,
            "lhs2": report.ineq2.lhs_direct,
            "purity": report.purity,
            "eigenvalues": list(report.eigenvalues),
            "e2": report.coeffs.e2,
            "e3": report.coeffs.e3,
            "physical": report.physical,
        },
        "bloch": {
            "u": _vector_block(triple.u),
            "v": _vector_block(triple.v),
            "w": _vector_block(triple.w),
        },
        "meta": {"tolerance": TOLERANCE, "artifact_version": __version__},
    }


def region_document(grid: RegionGrid) -> dict[str, Any]:
    """JSON shape of a scanned region grid (cells in s-major order)."""
    return {
        "schema_version": SCHEMA_VERSION,
        "cluster": grid.case.cluster_id,
        "sub_case": grid.case.sub_case,
        "step": grid.step,
        "fixed": {name: value for name, value in grid.fixed},
        "s_values": list(grid.s_values),
        "t_values": list(grid.t_values),
        "cells": [
            {
                "s": c.s,
                "t": c.t,
                "lhs1": c.lhs1,
                "lhs2": c.lhs2,
                "physical": c.physical,
                "u_squares": list(c.u_squares),
                "v_squares": list(c.v_squares),
                "w_squares": list(c.w_squares),
            }
            for c in grid.cells
        ],
    }


def catalog_document() -> dict[str, Any]:
    """JSON shape of the cluster catalog."""
    return {
        "schema_version": SCHEMA_VERSION,
        "clusters": [
            {
                "cluster_id": cid,
                "arity": cluster_cases(cid)[0].arity,
                "sub_cases": [
                    {"name": case.sub_case, "slots": list(case.slots)}
                    for case in cluster_cases(cid)
                ],
            }
            for cid in CLUSTER_IDS
        ],
    }


def errata_document() -> dict[str, Any]:
    """JSON shape of the errata report plus transcription notes."""
    return {
        "schema_version": SCHEMA_VERSION,
        "entries": [
            {
                "table": e.table,
                "row": e.row,
                "printed_expression": e.printed_expression,
                "discrepancy": e.discrepancy,
                "verdict": e.verdict,
            }
            for e in errata_report()
        ],
        "notes": list(TRANSCRIPTION_NOTES),
    }


def sample_document(config: SamplerConfig) -> dict[str, Any]:
    """JSON shape of a sampling run: each record echoes the parameters and
    the full scene evaluated at them."""
    points = sample(config)
    return {
        "schema_version": SCHEMA_VERSION,
        "method": config.method,
        "seed": config.seed,
        "count": config.count,
        "records": [
            {"params": p.to_dict(), "scene": scene_document(p)} for p in points
        ],
    }
