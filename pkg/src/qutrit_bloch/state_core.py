"""Polarization parametrization of a qutrit state.

A qutrit density matrix splits as ``rho = (1/3) I + t`` with ``t`` a
traceless Hermitian 3x3 matrix carrying 8 real parameters
``(x, y, a, b, alpha1, beta1, alpha2, beta2)``. This module builds ``t``
and ``rho`` from parameters, inverts the map, and provides closed forms
for the elements of ``t^2`` and for the real diagonal of ``t^3`` next to
the plain matrix-arithmetic path, so each side can check the other.

Unphysical parameter points are representable on purpose: region scanning
needs to evaluate both inequalities outside the physical body.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Iterator, Mapping

import numpy as np

from .errors import InvalidMatrixError, InvalidParameterError

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)

#: Canonical ordering of the 8 polarization parameters.
PARAM_NAMES = ("x", "y", "a", "b", "alpha1", "beta1", "alpha2", "beta2")

#: Absolute tolerance for Hermiticity / unit-trace checks on input matrices.
MATRIX_INPUT_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class ParamVector:
    """The 8 real, dimensionless polarization parameters.

    No physicality constraint is imposed here; any finite point of R^8 is
    a valid ``ParamVector``.
    """

    x: float = 0.0
    y: float = 0.0
    a: float = 0.0
    b: float = 0.0
    alpha1: float = 0.0
    beta1: float = 0.0
    alpha2: float = 0.0
    beta2: float = 0.0

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise InvalidParameterError(f"{f.name} must be a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise InvalidParameterError(f"{f.name} must be finite, got {value!r}")
            object.__setattr__(self, f.name, value)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float]) -> "ParamVector":
        """Build from a (possibly partial) name->value mapping; unset names are 0."""
        unknown = set(mapping) - set(PARAM_NAMES)
        if unknown:
            raise InvalidParameterError(f"unknown parameter names: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in mapping.items()})

    def to_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in PARAM_NAMES}

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def replace(self, **changes: float) -> "ParamVector":
        merged = self.to_dict()
        merged.update(changes)
        return ParamVector.from_mapping(merged)

    def __iter__(self) -> Iterator[float]:
        return iter(self.as_tuple())


@dataclass(frozen=True, eq=False, slots=True)
class HermitianMatrix3:
    """A 3x3 complex Hermitian matrix as an immutable value.

    Hermiticity is enforced at construction: the lower triangle is derived
    from the upper one and diagonal imaginary parts are dropped, so
    downstream code never re-checks it. Use :meth:`from_array` for
    externally produced matrices (validates first) and :meth:`from_upper`
    when the entries are trusted by construction.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    @classmethod
    def from_upper(
        cls,
        diag: tuple[float, float, float],
        upper: tuple[complex, complex, complex],
    ) -> "HermitianMatrix3":
        """Assemble from real diagonal and upper-triangle entries (e12, e13, e23)."""
        e12, e13, e23 = upper
        m = np.array(
            [
                [diag[0], e12, e13],
                [e12.conjugate(), diag[1], e23],
                [e13.conjugate(), e23.conjugate(), diag[2]],
            ],
            dtype=np.complex128,
        )
        return cls(m)

    @classmethod
    def from_array(cls, arr: np.ndarray, tol: float = MATRIX_INPUT_TOL) -> "HermitianMatrix3":
        """Validate Hermiticity within ``tol`` and normalize the lower triangle.

        Raises
        ------
        InvalidMatrixError
            If the array is not 3x3 or deviates from Hermiticity by more
            than ``tol`` in any entry.
        """
        a = np.asarray(arr, dtype=np.complex128)
        if a.shape != (3, 3):
            raise InvalidMatrixError("shape", f"expected a 3x3 matrix, got shape {a.shape}")
        deviation = float(np.abs(a - a.conj().T).max())
        if not deviation <= tol:
            raise InvalidMatrixError(
                "hermiticity", f"matrix deviates from Hermiticity by {deviation:.3e} (tol {tol:.1e})"
            )
        return cls.from_upper(
            (a[0, 0].real, a[1, 1].real, a[2, 2].real),
            (complex(a[0, 1]), complex(a[0, 2]), complex(a[1, 2])),
        )

    def trace_real(self) -> float:
        return float(self.matrix[0, 0].real + self.matrix[1, 1].real + self.matrix[2, 2].real)

    def __array__(self, dtype=None) -> np.ndarray:
        return self.matrix if dtype is None else self.matrix.astype(dtype)


@dataclass(frozen=True, slots=True)
class DerivedSymbols:
    """Shorthand symbols for the entries of ``t``.

    ``gamma1 = y/sqrt(6) + x/sqrt(2)``, ``gamma2 = y/sqrt(6) - x/sqrt(2)``,
    ``m1 = (a + alpha1)/sqrt(2)``, ``n1 = (b + beta1)/sqrt(2)``,
    ``m2 = (a - alpha1)/sqrt(2)``, ``n2 = (b - beta1)/sqrt(2)``.
    """

    gamma1: float
    gamma2: float
    m1: float
    n1: float
    m2: float
    n2: float


@dataclass(frozen=True, slots=True)
class TSquaredElements:
    """Closed-form elements of ``t^2``: real diagonal ``Gamma_i`` and
    off-diagonal entries ``X_i + i Y_i`` (upper triangle, row-major)."""

    Gamma1: float
    Gamma2: float
    Gamma3: float
    X1: float
    X2: float
    X3: float
    Y1: float
    Y2: float
    Y3: float


@dataclass(frozen=True, slots=True)
class TCubedDiagonal:
    """Real parts of the diagonal of ``t^3``.

    The imaginary parts sum to zero (the trace of an odd power of a
    Hermitian matrix is real) and are not stored.
    """

    Delta1R: float
    Delta2R: float
    Delta3R: float


def derived_symbols(params: ParamVector) -> DerivedSymbols:
    """Evaluate the entry symbols gamma/m/n from the raw parameters."""
    return DerivedSymbols(
        gamma1=params.y / SQRT6 + params.x / SQRT2,
        gamma2=params.y / SQRT6 - params.x / SQRT2,
        m1=(params.a + params.alpha1) / SQRT2,
        n1=(params.b + params.beta1) / SQRT2,
        m2=(params.a - params.alpha1) / SQRT2,
        n2=(params.b - params.beta1) / SQRT2,
    )


def build_t(params: ParamVector) -> HermitianMatrix3:
    """Build the traceless part ``t`` of the density matrix.

    Layout (upper triangle; lower follows by conjugation)::

        [ gamma1        -(m1 + i n1)   alpha2 + i beta2 ]
        [    .          -2 y/sqrt(6)   -(m2 + i n2)     ]
        [    .               .         gamma2           ]

    The trace vanishes identically: ``gamma1 + gamma2 = 2 y / sqrt(6)``.
    """
    s = derived_symbols(params)
    return HermitianMatrix3.from_upper(
        (s.gamma1, -2.0 * params.y / SQRT6, s.gamma2),
        (
            complex(-s.m1, -s.n1),
            complex(params.alpha2, params.beta2),
            complex(-s.m2, -s.n2),
        ),
    )


def build_rho(params: ParamVector) -> HermitianMatrix3:
    """Build the density-matrix candidate ``rho = (1/3) I + t``.

    The result has unit trace by construction but is positive
    semidefinite only for physical parameter points.
    """
    s = derived_symbols(params)
    third = 1.0 / 3.0
    return HermitianMatrix3.from_upper(
        (third + s.gamma1, third - 2.0 * params.y / SQRT6, third + s.gamma2),
        (
            complex(-s.m1, -s.n1),
            complex(params.alpha2, params.beta2),
            complex(-s.m2, -s.n2),
        ),
    )


def extract_params(rho: HermitianMatrix3 | np.ndarray) -> ParamVector:
    """Invert the parametrization: recover the 8 parameters from a matrix.

    Accepts any Hermitian unit-trace 3x3 matrix (positivity is not
    required). Satisfies ``build_rho(extract_params(rho)) == rho``
    entrywise to 1e-12 and ``extract_params(build_rho(p)) == p``.

    Raises
    ------
    InvalidMatrixError
        For non-Hermitian (within 1e-10) or non-unit-trace input, with
        ``check`` naming the violated requirement.
    """
    if not isinstance(rho, HermitianMatrix3):
        rho = HermitianMatrix3.from_array(rho)
    m = rho.matrix
    trace = rho.trace_real()
    if abs(trace - 1.0) > MATRIX_INPUT_TOL:
        raise InvalidMatrixError("unit_trace", f"trace is {trace!r}, expected 1 within {MATRIX_INPUT_TOL:.1e}")

    third = 1.0 / 3.0
    gamma1 = m[0, 0].real - third
    gamma2 = m[2, 2].real - third
    m1 = -m[0, 1].real
    n1 = -m[0, 1].imag
    m2 = -m[1, 2].real
    n2 = -m[1, 2].imag
    return ParamVector(
        x=(gamma1 - gamma2) / SQRT2,
        y=(gamma1 + gamma2) * SQRT6 / 2.0,
        a=(m1 + m2) / SQRT2,
        b=(n1 + n2) / SQRT2,
        alpha1=(m1 - m2) / SQRT2,
        beta1=(n1 - n2) / SQRT2,
        alpha2=m[0, 2].real,
        beta2=m[0, 2].imag,
    )


def power_traces(t: HermitianMatrix3 | np.ndarray) -> tuple[float, float]:
    """Return ``(Tr t^2, Re Tr t^3)`` by direct matrix multiplication.

    ``Tr t^2`` is nonnegative and ``Tr t^3`` is real for Hermitian input;
    an imaginary residue above 1e-12 is rejected as a broken matrix.
    """
    if not isinstance(t, HermitianMatrix3):
        t = HermitianMatrix3.from_array(t)
    m = t.matrix
    m2 = m @ m
    trace2 = float(m2[0, 0].real + m2[1, 1].real + m2[2, 2].real)
    trace3_c = complex(np.einsum("ij,ji->", m2, m))
    if abs(trace3_c.imag) > 1e-12:
        raise InvalidMatrixError("real_trace_cubed", f"Im Tr(t^3) = {trace3_c.imag!r} exceeds 1e-12")
    return trace2, trace3_c.real


def t_squared_closed(sym: DerivedSymbols, params: ParamVector) -> TSquaredElements:
    """Closed-form elements of ``t^2`` in terms of the entry symbols."""
    g1, g2 = sym.gamma1, sym.gamma2
    m1, n1, m2, n2 = sym.m1, sym.n1, sym.m2, sym.n2
    a2, b2 = params.alpha2, params.beta2
    gs = g1 + g2
    return TSquaredElements(
        Gamma1=g1 * g1 + m1 * m1 + n1 * n1 + a2 * a2 + b2 * b2,
        Gamma2=gs * gs + m1 * m1 + n1 * n1 + m2 * m2 + n2 * n2,
        Gamma3=g2 * g2 + m2 * m2 + n2 * n2 + a2 * a2 + b2 * b2,
        X1=g2 * m1 - (a2 * m2 + b2 * n2),
        X2=gs * a2 + m1 * m2 - n1 * n2,
        X3=g1 * m2 - a2 * m1 - b2 * n1,
        Y1=g2 * n1 + a2 * n2 - b2 * m2,
        Y2=gs * b2 + m2 * n1 + m1 * n2,
        Y3=g1 * n2 + a2 * n1 - b2 * m1,
    )


def t_cubed_diag_closed(
    sym: DerivedSymbols, t2: TSquaredElements, params: ParamVector
) -> TCubedDiagonal:
    """Closed-form real diagonal of ``t^3`` from the ``t^2`` elements.

    ``Delta_iR`` is the real part of ``(t^3)_{ii} = sum_k t_{ik} (t^2)_{ki}``,
    expanded with the signs of the off-diagonal entries of ``t``.
    """
    g1, g2 = sym.gamma1, sym.gamma2
    m1, n1, m2, n2 = sym.m1, sym.n1, sym.m2, sym.n2
    a2, b2 = params.alpha2, params.beta2
    mx1 = m1 * t2.X1 + n1 * t2.Y1
    mx3 = m2 * t2.X3 + n2 * t2.Y3
    ax2 = a2 * t2.X2 + b2 * t2.Y2
    return TCubedDiagonal(
        Delta1R=g1 * t2.Gamma1 - mx1 + ax2,
        Delta2R=-(g1 + g2) * t2.Gamma2 - mx1 - mx3,
        Delta3R=g2 * t2.Gamma3 - mx3 + ax2,
    )
