"""Trace inequalities, characteristic coefficients and the physicality verdict.

A unit-trace Hermitian 3x3 matrix is a density matrix iff it is positive
semidefinite. With ``rho = (1/3) I + t`` the two trace inequalities

* ``(3/2) Tr(t^2) <= 1``            (equivalently ``Tr rho^2 <= 1``)
* ``9 Tr(t^2 / 2 - t^3) <= 1``      (equivalently ``3 Tr rho^2 - 2 Tr rho^3 <= 1``)

are linear rescalings of the characteristic-polynomial coefficients:
``lhs1 = 1 - 3 e2`` and ``lhs2 = 1 - 27 e3`` with ``e2`` the sum of
pairwise eigenvalue products and ``e3 = det rho``. Since the eigenvalues
are real and sum to 1, positivity is exactly ``e2 >= 0 and e3 >= 0``, so
the two inequalities together decide physicality.

Every evaluation carries both the matrix-arithmetic value (normative) and
the closed form in the raw parameters (cross-check); disagreement beyond
1e-10 is flagged on the result, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bloch
from .errors import InvalidMatrixError
from .state_core import (
    SQRT2,
    SQRT6,
    HermitianMatrix3,
    ParamVector,
    build_rho,
    build_t,
    power_traces,
)

#: Single physicality tolerance, applied to e2, e3, eigenvalues and the
#: inequality bounds alike. Boundary points within it count as physical.
TOLERANCE = 1e-10

#: Closed forms are cross-checks; they must track the matrix path this closely.
CLOSED_FORM_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class InequalityResult:
    """One trace inequality evaluated along both routes.

    ``lhs_direct`` comes from matrix arithmetic and is normative;
    ``lhs_closed`` is the closed form in the raw parameters. ``holds``
    means ``lhs_direct <= 1 + TOLERANCE``; ``margin = 1 - lhs_direct``.
    """

    lhs_direct: float
    lhs_closed: float
    holds: bool
    margin: float

    @property
    def consistent(self) -> bool:
        """Whether the closed form agrees with the matrix path within tolerance."""
        return abs(self.lhs_direct - self.lhs_closed) <= CLOSED_FORM_TOL


@dataclass(frozen=True, slots=True)
class CharCoeffs:
    """Characteristic-polynomial coefficients of a unit-trace matrix.

    ``e2`` is the sum of pairwise eigenvalue products (sum of principal
    2x2 minors); ``e3`` is the determinant. Physical states have
    ``e2 in [0, 1/3]`` and ``e3 in [0, 1/27]``.
    """

    e2: float
    e3: float


@dataclass(frozen=True, slots=True)
class PhysicalityReport:
    """Both inequalities, characteristic data and the physicality verdict."""

    ineq1: InequalityResult
    ineq2: InequalityResult
    coeffs: CharCoeffs
    eigenvalues: tuple[float, float, float]
    physical: bool
    purity: float


def _lhs1_closed(params: ParamVector, agg: bloch.Aggregates) -> float:
    return 3.0 * ((params.x * params.x + params.y * params.y) / 2.0 + agg.A2 + agg.B2)


def _lhs2_closed(params: ParamVector, agg: bloch.Aggregates) -> float:
    x, y = params.x, params.y
    return 9.0 * (
        (x * x + y * y) / 2.0
        + y * (y * y - 3.0 * x * x) / SQRT6
        + (1.0 + (SQRT6 / 2.0) * y) * agg.A2
        + (1.0 - SQRT6 * y) * agg.B2
        - 3.0 * SQRT2 * x * agg.C2
        - 3.0 * agg.D3
    )


def _ineq1_from_trace(params: ParamVector, trace2: float) -> InequalityResult:
    lhs = 1.5 * trace2
    closed = _lhs1_closed(params, bloch.aggregates(params))
    return InequalityResult(lhs_direct=lhs, lhs_closed=closed, holds=lhs <= 1.0 + TOLERANCE, margin=1.0 - lhs)


def _ineq2_from_traces(params: ParamVector, trace2: float, trace3: float) -> InequalityResult:
    lhs = 9.0 * (trace2 / 2.0 - trace3)
    closed = _lhs2_closed(params, bloch.aggregates(params))
    return InequalityResult(lhs_direct=lhs, lhs_closed=closed, holds=lhs <= 1.0 + TOLERANCE, margin=1.0 - lhs)


def inequality1(params: ParamVector) -> InequalityResult:
    """First trace inequality, ``(3/2) Tr(t^2) <= 1``.

    Saturated exactly by pure states; zero at the maximally mixed state.
    """
    trace2, _ = power_traces(build_t(params))
    return _ineq1_from_trace(params, trace2)


def inequality2(params: ParamVector) -> InequalityResult:
    """Second trace inequality, ``9 Tr(t^2/2 - t^3) <= 1``.

    Equals ``1 - 27 det(rho)``, so it fails precisely when the determinant
    goes negative; the first inequality alone does not catch that.
    """
    trace2, trace3 = power_traces(build_t(params))
    return _ineq2_from_traces(params, trace2, trace3)


def char_coeffs(rho: HermitianMatrix3 | np.ndarray) -> CharCoeffs:
    """Characteristic coefficients of a unit-trace Hermitian matrix.

    ``e2`` is computed from the principal 2x2 minors and ``e3`` by
    cofactor expansion of the determinant.
    """
    if not isinstance(rho, HermitianMatrix3):
        rho = HermitianMatrix3.from_array(rho)
    if abs(rho.trace_real() - 1.0) > 1e-10:
        raise InvalidMatrixError("unit_trace", f"trace is {rho.trace_real()!r}, expected 1")
    m = rho.matrix
    d0, d1, d2 = m[0, 0].real, m[1, 1].real, m[2, 2].real
    q01 = abs(m[0, 1]) ** 2
    q02 = abs(m[0, 2]) ** 2
    q12 = abs(m[1, 2]) ** 2
    e2 = float(d0 * d1 - q01 + d0 * d2 - q02 + d1 * d2 - q12)
    e3 = _det3_hermitian(m)
    return CharCoeffs(e2=e2, e3=e3)


def _det3_hermitian(m: np.ndarray) -> float:
    det = (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )
    return complex(det).real


def eigenvalues3(m: HermitianMatrix3 | np.ndarray) -> tuple[float, float, float]:
    """Eigenvalues of a Hermitian 3x3 matrix, sorted descending.

    Uses the trigonometric closed form on the trace-deflated matrix:
    with ``p = Tr(t^2)/2`` and ``q = det(t)`` the roots of
    ``lambda^3 - p lambda - q`` are
    ``2 sqrt(p/3) cos(arccos(arg)/3 - 2 pi k / 3)`` where
    ``arg = (3 sqrt(3)/2) q p^(-3/2)`` is clamped to [-1, 1] against
    roundoff. ``p <= 1e-30`` short-circuits to the triple-degenerate
    case, and exactly diagonal input returns its diagonal unchanged.
    """
    if not isinstance(m, HermitianMatrix3):
        m = HermitianMatrix3.from_array(m)
    a = m.matrix
    if a[0, 1] == 0 and a[0, 2] == 0 and a[1, 2] == 0:
        d = sorted((float(a[0, 0].real), float(a[1, 1].real), float(a[2, 2].real)), reverse=True)
        return (d[0], d[1], d[2])

    mu = m.trace_real() / 3.0
    d0 = float(a[0, 0].real) - mu
    d1 = float(a[1, 1].real) - mu
    d2 = float(a[2, 2].real) - mu
    q01 = abs(a[0, 1]) ** 2
    q02 = abs(a[0, 2]) ** 2
    q12 = abs(a[1, 2]) ** 2
    p = float((d0 * d0 + d1 * d1 + d2 * d2) / 2.0 + q01 + q02 + q12)
    if p <= 1e-30:
        return (mu, mu, mu)

    # det of the deflated matrix, by cofactor expansion
    t = a - mu * np.eye(3)
    q = _det3_hermitian(t)
    arg = (3.0 * math.sqrt(3.0) / 2.0) * q / p**1.5
    arg = min(1.0, max(-1.0, arg))
    theta = math.acos(arg) / 3.0
    r = 2.0 * math.sqrt(p / 3.0)
    lams = sorted(
        (r * math.cos(theta - 2.0 * math.pi * k / 3.0) + mu for k in range(3)),
        reverse=True,
    )
    return (lams[0], lams[1], lams[2])


def physicality_report(params: ParamVector) -> PhysicalityReport:
    """Evaluate both inequalities, coefficients and eigenvalues for one point.

    The verdict is ``ineq1.holds and ineq2.holds``, which for unit-trace
    Hermitian matrices coincides with the smallest eigenvalue being
    nonnegative (within :data:`TOLERANCE`) and with ``e2, e3 >= 0``.
    """
    t = build_t(params)
    trace2, trace3 = power_traces(t)
    ineq1 = _ineq1_from_trace(params, trace2)
    ineq2 = _ineq2_from_traces(params, trace2, trace3)
    rho = build_rho(params)
    coeffs = char_coeffs(rho)
    eigs = eigenvalues3(rho)
    return PhysicalityReport(
        ineq1=ineq1,
        ineq2=ineq2,
        coeffs=coeffs,
        eigenvalues=eigs,
        physical=ineq1.holds and ineq2.holds,
        purity=1.0 / 3.0 + trace2,
    )
