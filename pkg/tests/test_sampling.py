"""Tests for the three samplers: determinism, physicality, stream contract."""

from __future__ import annotations

import numpy as np
import pytest

import qutrit_bloch.sampling as sampling
from qutrit_bloch import (
    InvalidParameterError,
    ParamVector,
    SamplerConfig,
    SamplerStallError,
    build_rho,
    eigenvalues3,
    physicality_report,
    sample,
    u_vector,
    v_vector,
    w_vector,
)


def reference_normals(rng: np.random.Generator, n: int) -> np.ndarray:
    """Independent re-implementation of the documented Gaussian stream:
    Box-Muller over raw uniform doubles, cos/sin interleaved."""
    pairs = (n + 1) // 2
    u = rng.random(2 * pairs)
    r = np.sqrt(-2.0 * np.log(1.0 - u[0::2]))
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(2.0 * np.pi * u[1::2])
    z[1::2] = r * np.sin(2.0 * np.pi * u[1::2])
    return z[:n]


class TestConfig:
    def test_rejects_unknown_method(self):
        with pytest.raises(InvalidParameterError):
            SamplerConfig(method="bures", seed=1, count=1)

    def test_rejects_bad_seed(self):
        with pytest.raises(InvalidParameterError):
            SamplerConfig(method="pure", seed=-1, count=1)
        with pytest.raises(InvalidParameterError):
            SamplerConfig(method="pure", seed=2**64, count=1)

    def test_rejects_bad_count(self):
        with pytest.raises(InvalidParameterError):
            SamplerConfig(method="pure", seed=1, count=0)


class TestDeterminism:
    @pytest.mark.parametrize("method", sampling.METHODS)
    def test_bitwise_identical_streams(self, method):
        config = SamplerConfig(method=method, seed=20260811, count=50)
        first = sample(config)
        second = sample(config)
        assert first == second  # exact float equality, not approx

    def test_different_seeds_differ(self):
        a = sample(SamplerConfig(method="pure", seed=1, count=5))
        b = sample(SamplerConfig(method="pure", seed=2, count=5))
        assert a != b


class TestRejection:
    def test_all_samples_physical(self):
        for p in sample(SamplerConfig(method="rejection", seed=5, count=200)):
            assert physicality_report(p).physical

    def test_samples_stay_in_box(self):
        box = np.asarray(sampling.REJECTION_BOX)
        for p in sample(SamplerConfig(method="rejection", seed=6, count=200)):
            assert np.all(np.abs(np.asarray(p.as_tuple())) <= box)

    def test_purity_band_10k(self):
        points = sample(SamplerConfig(method="rejection", seed=7, count=10_000))
        purities = [physicality_report(p).purity for p in points]
        mean = float(np.mean(purities))
        assert 1 / 3 < mean < 1.0

    def test_stall_guard(self, monkeypatch):
        def always_reject(points):
            n = len(points)
            return np.full(n, 2.0), np.full(n, 2.0)

        monkeypatch.setattr(sampling, "_lhs_batch", always_reject)
        with pytest.raises(SamplerStallError):
            sample(SamplerConfig(method="rejection", seed=1, count=1))


class TestPure:
    def test_unit_purity_and_unit_vectors(self):
        for p in sample(SamplerConfig(method="pure", seed=11, count=200)):
            report = physicality_report(p)
            assert report.purity == pytest.approx(1.0, abs=1e-12)
            assert u_vector(p).length == pytest.approx(1.0, abs=1e-9)
            assert v_vector(p).length == pytest.approx(1.0, abs=1e-9)

    def test_w_squares_are_ket_amplitudes(self):
        seed, count = 13, 50
        points = sample(SamplerConfig(method="pure", seed=seed, count=count))
        rng = np.random.Generator(np.random.PCG64(seed))
        for p in points:
            z = reference_normals(rng, 6)
            psi = z[0::2] + 1j * z[1::2]
            psi /= np.linalg.norm(psi)
            expected = np.abs(psi) ** 2
            assert w_vector(p).squares == pytest.approx(tuple(expected), abs=1e-12)


class TestHilbertSchmidt:
    def test_spectra_are_states(self):
        for p in sample(SamplerConfig(method="hilbert_schmidt", seed=17, count=200)):
            eigs = eigenvalues3(build_rho(p))
            assert eigs[2] >= -1e-12
            assert sum(eigs) == pytest.approx(1.0, abs=1e-10)

    def test_all_samples_physical(self):
        for p in sample(SamplerConfig(method="hilbert_schmidt", seed=18, count=200)):
            assert physicality_report(p).physical

    def test_mixed_not_pure(self):
        purities = [
            physicality_report(p).purity
            for p in sample(SamplerConfig(method="hilbert_schmidt", seed=19, count=100))
        ]
        assert max(purities) < 1.0 - 1e-6  # Ginibre states are a.s. full rank


class TestGaussianStream:
    def test_matches_reference_implementation(self):
        ours = sampling._standard_normals(np.random.Generator(np.random.PCG64(3)), 101)
        ref = reference_normals(np.random.Generator(np.random.PCG64(3)), 101)
        np.testing.assert_array_equal(ours, ref)

    def test_moments_are_sane(self):
        z = sampling._standard_normals(np.random.Generator(np.random.PCG64(4)), 200_000)
        assert abs(float(z.mean())) < 0.01
        assert float(z.std()) == pytest.approx(1.0, abs=0.01)
