"""Reproducible samplers over qutrit parameter space.

Three methods, all driven by a PCG64 stream seeded from the config:

* ``rejection`` -- uniform proposals in the box implied by the first
  inequality (``|x|, |y| <= sqrt(2/3)``, the six remaining parameters
  within ``1/sqrt(3)``), accepted iff the point is physical.
* ``pure`` -- Haar-random pure states: three complex standard normals,
  normalized to a unit ket ``psi``, then ``rho = |psi><psi|``.
* ``hilbert_schmidt`` -- ``rho = G G^dag / Tr(G G^dag)`` with ``G`` a 3x3
  complex standard-normal (Ginibre) matrix.

Determinism contract: identical ``(method, seed, count)`` yields a
bitwise-identical parameter list. To keep the stream portable, Gaussian
variates are produced by the Box-Muller transform from the raw uniform
doubles of the generator, not by the generator's own normal method; the
rejection accept test consumes nothing from the stream, so its batch size
does not affect the output either.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, SamplerStallError
from .state_core import SQRT2, SQRT6, HermitianMatrix3, ParamVector, extract_params

METHODS = ("rejection", "pure", "hilbert_schmidt")

#: Rejection-box half-widths per parameter, in PARAM_NAMES order. Each bound
#: comes from the first inequality with all other parameters zero.
REJECTION_BOX = (
    np.sqrt(2.0 / 3.0),
    np.sqrt(2.0 / 3.0),
    1.0 / np.sqrt(3.0),
    1.0 / np.sqrt(3.0),
    1.0 / np.sqrt(3.0),
    1.0 / np.sqrt(3.0),
    1.0 / np.sqrt(3.0),
    1.0 / np.sqrt(3.0),
)

_STALL_LIMIT = 1_000_000
_BATCH = 16384
_ACCEPT_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class SamplerConfig:
    """Which sampler to run, from which seed, and how many points."""

    method: str
    seed: int
    count: int

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise InvalidParameterError(f"unknown sampling method {self.method!r}; expected one of {METHODS}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or not 0 <= self.seed < 2**64:
            raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isinstance(self.count, int) or isinstance(self.count, bool) or self.count < 1:
            raise InvalidParameterError(f"count must be a positive integer, got {self.count!r}")


def _standard_normals(rng: np.random.Generator, n: int) -> np.ndarray:
    """Box-Muller normals from raw uniform doubles (fixed, portable stream)."""
    pairs = (n + 1) // 2
    u = rng.random(2 * pairs)
    u1 = 1.0 - u[0::2]  # (0, 1]: keeps the log finite
    u2 = u[1::2]
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(2.0 * np.pi * u2)
    z[1::2] = r * np.sin(2.0 * np.pi * u2)
    return z[:n]


def _lhs_batch(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized closed-form LHS of both inequalities, one row per point."""
    x, y, a, b, al1, be1, al2, be2 = (points[:, i] for i in range(8))
    A2 = a * a + b * b + al1 * al1 + be1 * be1
    B2 = al2 * al2 + be2 * be2
    C2 = a * al1 + b * be1
    D3 = al2 * (a * a - b * b - al1 * al1 + be1 * be1) + 2.0 * be2 * (a * b - al1 * be1)
    quad = (x * x + y * y) / 2.0
    lhs1 = 3.0 * (quad + A2 + B2)
    lhs2 = 9.0 * (
        quad
        + y * (y * y - 3.0 * x * x) / SQRT6
        + (1.0 + (SQRT6 / 2.0) * y) * A2
        + (1.0 - SQRT6 * y) * B2
        - 3.0 * SQRT2 * x * C2
        - 3.0 * D3
    )
    return lhs1, lhs2


def _accept_mask(points: np.ndarray) -> np.ndarray:
    """Physicality mask. The second inequality is only evaluated on points
    that already pass the cheap first one; elementwise results are identical
    to evaluating everything (no reductions involved), so the accepted
    stream does not depend on this shortcut."""
    lhs1, _ = _lhs_batch(points)
    mask = lhs1 <= 1.0 + _ACCEPT_TOL
    if mask.any():
        _, lhs2 = _lhs_batch(points[mask])
        mask[mask] = lhs2 <= 1.0 + _ACCEPT_TOL
    return mask


def _sample_rejection(rng: np.random.Generator, count: int) -> list[ParamVector]:
    box = np.asarray(REJECTION_BOX)
    out: list[ParamVector] = []
    since_last_accept = 0
    while len(out) < count:
        u = rng.random((_BATCH, 8))
        points = (2.0 * u - 1.0) * box
        mask = _accept_mask(points)
        positions = np.flatnonzero(mask)
        if positions.size == 0:
            since_last_accept += _BATCH
        else:
            gaps = np.diff(positions, prepend=-1)
            gaps[0] += since_last_accept + 1
            if int(gaps.max()) > _STALL_LIMIT:
                raise SamplerStallError(f"no acceptance within {_STALL_LIMIT} proposals")
            since_last_accept = _BATCH - int(positions[-1]) - 1
            for pos in positions:
                out.append(ParamVector(*points[pos]))
                if len(out) == count:
                    break
        if since_last_accept > _STALL_LIMIT:
            raise SamplerStallError(f"no acceptance within {_STALL_LIMIT} proposals")
    return out


def _sample_pure(rng: np.random.Generator, count: int) -> list[ParamVector]:
    out: list[ParamVector] = []
    for _ in range(count):
        while True:
            z = _standard_normals(rng, 6)
            psi = z[0::2] + 1j * z[1::2]
            norm2 = float(np.vdot(psi, psi).real)
            if norm2 > 0.0:
                break
        psi /= np.sqrt(norm2)
        rho = np.outer(psi, psi.conj())
        out.append(extract_params(HermitianMatrix3.from_array(rho)))
    return out


def _sample_hilbert_schmidt(rng: np.random.Generator, count: int) -> list[ParamVector]:
    out: list[ParamVector] = []
    for _ in range(count):
        while True:
            z = _standard_normals(rng, 18)
            g = (z[0::2] + 1j * z[1::2]).reshape(3, 3)
            h = g @ g.conj().T
            tr = float(h.trace().real)
            if tr > 0.0:
                break
        out.append(extract_params(HermitianMatrix3.from_array(h / tr)))
    return out


def sample(config: SamplerConfig) -> list[ParamVector]:
    """Draw ``config.count`` parameter points with the configured method.

    Returns
    -------
    list[ParamVector]
        Physical points for every method; for ``pure`` each point has
        purity 1 up to roundoff.

    Raises
    ------
    SamplerStallError
        If rejection sampling sees a million consecutive misses, which
        cannot happen with the stated box and a sane core.
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    if config.method == "rejection":
        return _sample_rejection(rng, config.count)
    if config.method == "pure":
        return _sample_pure(rng, config.count)
    return _sample_hilbert_schmidt(rng, config.count)
