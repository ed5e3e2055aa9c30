"""Shared fixtures: seeded parameter clouds and the big equivalence sweep."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest

from qutrit_bloch import ParamVector, physicality_report

SWEEP_SEED = 109823


def random_param_rows(seed: int, n: int, scale: float = 1.0) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.uniform(-scale, scale, size=(n, 8))


def param_vectors(seed: int, n: int, scale: float = 1.0) -> list[ParamVector]:
    return [ParamVector(*row) for row in random_param_rows(seed, n, scale)]


@dataclass(frozen=True)
class SweepArrays:
    lhs1: np.ndarray
    lhs2: np.ndarray
    lhs1_closed: np.ndarray
    lhs2_closed: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    min_eig: np.ndarray
    holds1: np.ndarray
    holds2: np.ndarray
    physical: np.ndarray
    purity: np.ndarray


@pytest.fixture(scope="session")
def sweep_100k() -> SweepArrays:
    """Full physicality reports over 1e5 seeded points in [-1, 1]^8.

    Computed once per session; several modules assert different
    invariants against the same sweep.
    """
    rows = random_param_rows(SWEEP_SEED, 100_000)
    n = len(rows)
    out = {name: np.empty(n) for name in
           ("lhs1", "lhs2", "lhs1_closed", "lhs2_closed", "e2", "e3", "min_eig", "purity")}
    flags = {name: np.empty(n, dtype=bool) for name in ("holds1", "holds2", "physical")}
    for i, row in enumerate(rows):
        report = physicality_report(ParamVector(*row))
        out["lhs1"][i] = report.ineq1.lhs_direct
        out["lhs2"][i] = report.ineq2.lhs_direct
        out["lhs1_closed"][i] = report.ineq1.lhs_closed
        out["lhs2_closed"][i] = report.ineq2.lhs_closed
        out["e2"][i] = report.coeffs.e2
        out["e3"][i] = report.coeffs.e3
        out["min_eig"][i] = report.eigenvalues[2]
        out["purity"][i] = report.purity
        flags["holds1"][i] = report.ineq1.holds
        flags["holds2"][i] = report.ineq2.holds
        flags["physical"][i] = report.physical
    return SweepArrays(**out, **flags)
