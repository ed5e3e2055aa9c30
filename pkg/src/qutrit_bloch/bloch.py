"""The three Bloch-like 3-vectors u, v, w of a qutrit point.

Each vector is defined through its *squared* components:

* ``u_i^2 = (3/2) (t^2)_{ii}``            -- sums to the first inequality LHS
* ``v_i^2 = 9 ((t^2)_{ii}/2 - Re (t^3)_{ii})`` -- sums to the second
* ``w_i^2 = rho_{ii}``                    -- sums to 1 (unit trace)

The u squares are diagonals of a squared Hermitian matrix, hence never
negative. The v squares can go negative even for pure basis states, and
the w squares go negative exactly when a diagonal of rho does, so squares
are stored *signed* and negativity is recorded, never clamped away.
Unphysical points still produce vectors; region scanning depends on it.

Every vector is computed by matrix arithmetic (normative); the
``*_squares_closed`` functions give the closed forms in the raw
parameters via :class:`Aggregates`, used as cross-checking oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .state_core import (
    SQRT2,
    SQRT6,
    ParamVector,
    build_rho,
    build_t,
    derived_symbols,
)

SQRT3 = math.sqrt(3.0)
SQRT2_3 = math.sqrt(2.0 / 3.0)

#: A squared component below this is flagged negative (roundoff stays unflagged).
NEGATIVITY_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Aggregates:
    """Parameter aggregates shared by the closed forms.

    ``A2 = a^2 + b^2 + alpha1^2 + beta1^2`` and ``B2 = alpha2^2 + beta2^2``
    are nonnegative; ``C2``, ``D3`` and the F's carry their sign (the
    superscripts in the names are powers of their scale, not squares).
    ``(3/2)(f1sq + f2sq)`` and ``(3/2)(f1sq - f2sq)`` are the first and
    third u squares.
    """

    A2: float
    B2: float
    C2: float
    D3: float
    f1sq: float
    f2sq: float
    F1: float
    F2: float
    F3: float


@dataclass(frozen=True, slots=True)
class BlochVector:
    """Signed squared components, length and negativity flags of one vector."""

    label: str
    squares: tuple[float, float, float]
    length: float
    negative_components: tuple[bool, bool, bool]

    @classmethod
    def from_squares(cls, label: str, squares: tuple[float, float, float]) -> "BlochVector":
        sq = (float(squares[0]), float(squares[1]), float(squares[2]))
        total = sq[0] + sq[1] + sq[2]
        return cls(
            label=label,
            squares=sq,
            length=math.sqrt(max(0.0, total)),
            negative_components=tuple(bool(s < -NEGATIVITY_TOL) for s in sq),
        )

    @property
    def sum_squares(self) -> float:
        return self.squares[0] + self.squares[1] + self.squares[2]


@dataclass(frozen=True, slots=True)
class BlochTriple:
    """The u, v, w vectors of one parameter point, with the point echoed back."""

    u: BlochVector
    v: BlochVector
    w: BlochVector
    params_echo: ParamVector


def aggregates(params: ParamVector) -> Aggregates:
    """Evaluate all closed-form aggregates for one parameter point."""
    x, y = params.x, params.y
    a, b = params.a, params.b
    al1, be1 = params.alpha1, params.beta1
    al2, be2 = params.alpha2, params.beta2

    A2 = a * a + b * b + al1 * al1 + be1 * be1
    B2 = al2 * al2 + be2 * be2
    C2 = a * al1 + b * be1
    D3 = al2 * (a * a - b * b - al1 * al1 + be1 * be1) + 2.0 * be2 * (a * b - al1 * be1)

    x2, y2 = x * x, y * y
    f1sq = x2 / 2.0 + y2 / 6.0 + A2 / 2.0 + B2
    f2sq = x * y / SQRT3 + C2

    F1 = (
        (3.0 * x2 + y2) / 12.0
        - y * (9.0 * x2 + y2) / (6.0 * SQRT6)
        + A2 / 4.0
        + (1.0 - SQRT6 * y) * B2 / 2.0
        - SQRT2 * x * C2
        - D3
    )
    F2 = (y2 / 3.0) * (1.0 + 2.0 * SQRT2_3 * y) + (A2 / 2.0) * (1.0 + SQRT6 * y) - SQRT2 * x * C2 - D3
    F3 = (x / (2.0 * SQRT2)) * (SQRT2_3 * y - (x2 + y2)) - (x / SQRT2) * (A2 + B2) + C2 / 2.0

    return Aggregates(A2=A2, B2=B2, C2=C2, D3=D3, f1sq=f1sq, f2sq=f2sq, F1=F1, F2=F2, F3=F3)


def u_squares_closed(params: ParamVector) -> tuple[float, float, float]:
    """Closed form of the u squares: ``(3/2)(f1^2 ± f2^2)`` and ``y^2 + (3/2)A^2``."""
    agg = aggregates(params)
    return (
        1.5 * (agg.f1sq + agg.f2sq),
        params.y * params.y + 1.5 * agg.A2,
        1.5 * (agg.f1sq - agg.f2sq),
    )


def v_squares_closed(params: ParamVector) -> tuple[float, float, float]:
    """Closed form of the v squares: ``(9(F1+F3), 9 F2, 9(F1-F3))``."""
    agg = aggregates(params)
    return (9.0 * (agg.F1 + agg.F3), 9.0 * agg.F2, 9.0 * (agg.F1 - agg.F3))


def w_squares_closed(params: ParamVector) -> tuple[float, float, float]:
    """Closed form of the w squares: ``1/3 + gamma1, 1/3 - (gamma1+gamma2), 1/3 + gamma2``."""
    s = derived_symbols(params)
    third = 1.0 / 3.0
    return (third + s.gamma1, third - (s.gamma1 + s.gamma2), third + s.gamma2)


def u_vector(params: ParamVector) -> BlochVector:
    """First Bloch vector: squares are ``(3/2)`` times the diagonal of ``t^2``.

    Componentwise nonnegative for every parameter point; the sum of
    squares equals the first inequality LHS, so physical points keep the
    vector inside the unit ball.
    """
    m = build_t(params).matrix
    m2 = m @ m
    return BlochVector.from_squares(
        "u", (1.5 * m2[0, 0].real, 1.5 * m2[1, 1].real, 1.5 * m2[2, 2].real)
    )


def v_vector(params: ParamVector) -> BlochVector:
    """Second Bloch vector: squares are ``9 (diag(t^2)/2 - Re diag(t^3))``.

    Individual squares may be negative (already for ``rho = diag(1,0,0)``);
    they are reported signed with negativity flags. The sum equals the
    second inequality LHS.
    """
    m = build_t(params).matrix
    m2 = m @ m
    m3 = m2 @ m
    squares = tuple(9.0 * (m2[i, i].real / 2.0 - m3[i, i].real) for i in range(3))
    return BlochVector.from_squares("v", squares)


def w_vector(params: ParamVector) -> BlochVector:
    """Third Bloch vector: squares are the diagonal of ``rho``.

    Always sums to 1 (unit trace); components go negative only for
    unphysical points whose rho diagonal does.
    """
    m = build_rho(params).matrix
    return BlochVector.from_squares("w", (m[0, 0].real, m[1, 1].real, m[2, 2].real))


def bloch_triple(params: ParamVector) -> BlochTriple:
    """Bundle u, v, w for one parameter point."""
    return BlochTriple(u=u_vector(params), v=v_vector(params), w=w_vector(params), params_echo=params)
