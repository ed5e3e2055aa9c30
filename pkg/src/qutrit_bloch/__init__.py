"""Qutrit states as three Bloch-like 3-vectors.

A qutrit density matrix carries 8 real parameters. This package evaluates
the two trace inequalities that bound those parameters, splits them into
three 3-dimensional vectors (u, v, w) that fit inside a unit sphere,
decides physicality exactly from the characteristic polynomial, catalogs
the printed two- and four-variable special cases together with an errata
report, and exposes the whole thing through samplers, a CLI and a small
JSON service.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    InvalidMatrixError,
    InvalidParameterError,
    NoPrintedFormError,
    QutritBlochError,
    SamplerStallError,
)
from .state_core import (
    PARAM_NAMES,
    DerivedSymbols,
    HermitianMatrix3,
    ParamVector,
    TCubedDiagonal,
    TSquaredElements,
    build_rho,
    build_t,
    derived_symbols,
    extract_params,
    power_traces,
    t_cubed_diag_closed,
    t_squared_closed,
)
from .physicality import (
    CharCoeffs,
    InequalityResult,
    PhysicalityReport,
    char_coeffs,
    eigenvalues3,
    inequality1,
    inequality2,
    physicality_report,
)
from .bloch import (
    Aggregates,
    BlochTriple,
    BlochVector,
    aggregates,
    bloch_triple,
    u_vector,
    v_vector,
    w_vector,
)
from .sampling import SamplerConfig, sample

__all__ = [
    "__version__",
    "QutritBlochError",
    "InvalidParameterError",
    "InvalidMatrixError",
    "NoPrintedFormError",
    "SamplerStallError",
    "PARAM_NAMES",
    "ParamVector",
    "HermitianMatrix3",
    "DerivedSymbols",
    "TSquaredElements",
    "TCubedDiagonal",
    "build_t",
    "build_rho",
    "derived_symbols",
    "extract_params",
    "power_traces",
    "t_squared_closed",
    "t_cubed_diag_closed",
    "InequalityResult",
    "CharCoeffs",
    "PhysicalityReport",
    "inequality1",
    "inequality2",
    "char_coeffs",
    "eigenvalues3",
    "physicality_report",
    "Aggregates",
    "BlochVector",
    "BlochTriple",
    "aggregates",
    "u_vector",
    "v_vector",
    "w_vector",
    "bloch_triple",
    "SamplerConfig",
    "sample",
]
