"""Tests for the parametrization, inversion and closed matrix-power forms."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qutrit_bloch import (
    HermitianMatrix3,
    InvalidMatrixError,
    InvalidParameterError,
    ParamVector,
    build_rho,
    build_t,
    derived_symbols,
    extract_params,
    power_traces,
    t_cubed_diag_closed,
    t_squared_closed,
)
from conftest import param_vectors

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)

PURE_BASIS = ParamVector(x=1.0 / SQRT2, y=1.0 / SQRT6)

finite_param = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
param_vectors_strategy = st.builds(
    ParamVector, *[finite_param for _ in range(8)]
)


class TestParamVector:
    def test_defaults_are_zero(self):
        p = ParamVector()
        assert p.as_tuple() == (0.0,) * 8

    def test_rejects_nan(self):
        with pytest.raises(InvalidParameterError):
            ParamVector(x=float("nan"))

    def test_rejects_infinity(self):
        with pytest.raises(InvalidParameterError):
            ParamVector(beta2=float("inf"))

    def test_from_mapping_rejects_unknown_names(self):
        with pytest.raises(InvalidParameterError):
            ParamVector.from_mapping({"x": 0.1, "zeta": 2.0})

    def test_unphysical_points_are_representable(self):
        # far outside the physical body on purpose
        p = ParamVector(x=5.0, beta2=-7.0)
        assert p.x == 5.0 and p.beta2 == -7.0


class TestBuildT:
    def test_zero_params_give_zero_matrix(self):
        assert np.all(build_t(ParamVector()).matrix == 0)

    def test_pure_basis_point_is_diagonal(self):
        m = build_t(PURE_BASIS).matrix
        np.testing.assert_allclose(np.diag(m).real, [2 / 3, -1 / 3, -1 / 3], atol=1e-15)
        assert np.abs(m - np.diag(np.diag(m))).max() == 0

    def test_single_a_parameter(self):
        m = build_t(ParamVector(a=0.1)).matrix
        expected = -0.1 / SQRT2
        assert m[0, 1] == pytest.approx(expected, abs=1e-15)
        assert m[1, 2] == pytest.approx(expected, abs=1e-15)
        assert m[0, 1].imag == 0 and m[1, 2].imag == 0
        assert np.all(np.diag(m) == 0)

    def test_hermitian_by_construction(self):
        m = build_t(ParamVector(x=0.3, b=-0.2, alpha2=0.15, beta1=0.7)).matrix
        assert np.array_equal(m, m.conj().T)

    @given(param_vectors_strategy)
    @settings(max_examples=200, deadline=None)
    def test_trace_vanishes(self, p):
        assert abs(build_t(p).trace_real()) < 1e-15


class TestBuildRho:
    def test_zero_params_give_maximally_mixed(self):
        np.testing.assert_array_equal(build_rho(ParamVector()).matrix, np.eye(3) / 3)

    def test_pure_basis_point_is_projector(self):
        m = build_rho(PURE_BASIS).matrix
        np.testing.assert_allclose(m, np.diag([1.0, 0.0, 0.0]), atol=1e-15)

    def test_rho_minus_t_is_third_identity(self):
        p = ParamVector(x=0.3, y=-0.4, a=0.1, beta2=0.2)
        diff = build_rho(p).matrix - build_t(p).matrix
        np.testing.assert_allclose(diff, np.eye(3) / 3, atol=1e-16)

    def test_first_diagonal_entry_closed_form(self):
        m = build_rho(ParamVector(x=0.2, y=0.3)).matrix
        assert m[0, 0].real == pytest.approx(1 / 3 + 0.3 / SQRT6 + 0.2 / SQRT2, abs=1e-15)

    @given(param_vectors_strategy)
    @settings(max_examples=200, deadline=None)
    def test_unit_trace(self, p):
        assert build_rho(p).trace_real() == pytest.approx(1.0, abs=1e-15)


class TestDerivedSymbols:
    def test_zero(self):
        s = derived_symbols(ParamVector())
        assert (s.gamma1, s.gamma2, s.m1, s.n1, s.m2, s.n2) == (0.0,) * 6

    def test_pure_basis_gammas(self):
        s = derived_symbols(PURE_BASIS)
        assert s.gamma1 == pytest.approx(2 / 3, abs=1e-15)
        assert s.gamma2 == pytest.approx(-1 / 3, abs=1e-15)

    def test_m_symbols(self):
        s = derived_symbols(ParamVector(a=0.3, alpha1=0.1))
        assert s.m1 == pytest.approx(0.4 / SQRT2, abs=1e-15)
        assert s.m2 == pytest.approx(0.2 / SQRT2, abs=1e-15)

    @given(param_vectors_strategy)
    @settings(max_examples=100, deadline=None)
    def test_defining_expressions(self, p):
        s = derived_symbols(p)
        assert s.gamma1 == pytest.approx(p.y / SQRT6 + p.x / SQRT2, abs=1e-15)
        assert s.gamma2 == pytest.approx(p.y / SQRT6 - p.x / SQRT2, abs=1e-15)
        assert s.n1 == pytest.approx((p.b + p.beta1) / SQRT2, abs=1e-15)
        assert s.n2 == pytest.approx((p.b - p.beta1) / SQRT2, abs=1e-15)


class TestExtractParams:
    def test_maximally_mixed_gives_zero(self):
        p = extract_params(HermitianMatrix3.from_array(np.eye(3) / 3))
        assert p.as_tuple() == pytest.approx((0.0,) * 8, abs=0.0)

    def test_pure_projector(self):
        p = extract_params(HermitianMatrix3.from_array(np.diag([1.0, 0.0, 0.0])))
        assert p.x == pytest.approx(1 / SQRT2, abs=1e-15)
        assert p.y == pytest.approx(1 / SQRT6, abs=1e-15)
        assert p.as_tuple()[2:] == (0.0,) * 6

    def test_off_diagonal_recipe(self):
        m = np.eye(3, dtype=complex) / 3
        m[0, 1] = -0.1 - 0.2j
        m[1, 0] = -0.1 + 0.2j
        p = extract_params(HermitianMatrix3.from_array(m))
        assert p.a == pytest.approx(0.1 / SQRT2, abs=1e-15)
        assert p.alpha1 == pytest.approx(0.1 / SQRT2, abs=1e-15)
        assert p.b == pytest.approx(0.2 / SQRT2, abs=1e-15)
        assert p.beta1 == pytest.approx(0.2 / SQRT2, abs=1e-15)

    def test_rejects_non_hermitian(self):
        m = np.eye(3, dtype=complex) / 3
        m[0, 1] = 0.5
        with pytest.raises(InvalidMatrixError) as err:
            extract_params(m)
        assert err.value.check == "hermiticity"

    def test_rejects_wrong_trace(self):
        with pytest.raises(InvalidMatrixError) as err:
            extract_params(HermitianMatrix3.from_array(np.eye(3)))
        assert err.value.check == "unit_trace"

    def test_positivity_not_required(self):
        p = extract_params(HermitianMatrix3.from_array(np.diag([0.7, 0.5, -0.2])))
        assert p.x == pytest.approx(0.9 / SQRT2, abs=1e-15)

    def test_round_trip_10k(self):
        for p in param_vectors(seed=4021, n=10_000):
            q = extract_params(build_rho(p))
            assert max(abs(pi - qi) for pi, qi in zip(p, q)) < 1e-12

    def test_matrix_round_trip(self):
        rng = np.random.Generator(np.random.PCG64(77))
        for _ in range(200):
            g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            h = g + g.conj().T
            h = h - np.eye(3) * (np.trace(h).real - 1.0) / 3.0  # unit trace, not positive
            rho = HermitianMatrix3.from_array(h)
            rebuilt = build_rho(extract_params(rho)).matrix
            assert np.abs(rebuilt - rho.matrix).max() < 1e-12


class TestPowerTraces:
    def test_zero_matrix(self):
        assert power_traces(HermitianMatrix3.from_array(np.zeros((3, 3)))) == (0.0, 0.0)

    def test_pure_basis_diagonal(self):
        trace2, trace3 = power_traces(build_t(PURE_BASIS))
        assert trace2 == pytest.approx(2 / 3, abs=1e-15)
        assert trace3 == pytest.approx(2 / 9, abs=1e-15)

    def test_x_y_only_gives_sum_of_squares(self):
        trace2, _ = power_traces(build_t(ParamVector(x=0.2, y=0.3)))
        assert trace2 == pytest.approx(0.13, abs=1e-15)

    def test_rejects_non_hermitian(self):
        m = np.zeros((3, 3), dtype=complex)
        m[0, 2] = 1.0
        with pytest.raises(InvalidMatrixError):
            power_traces(m)

    @given(param_vectors_strategy)
    @settings(max_examples=200, deadline=None)
    def test_trace2_nonnegative_trace3_real(self, p):
        trace2, trace3 = power_traces(build_t(p))
        assert trace2 >= 0.0
        # realness of Tr t^3 is checked inside power_traces; also compare
        # against the eigenvalue route
        eigs = np.linalg.eigvalsh(build_t(p).matrix)
        assert trace3 == pytest.approx(float((eigs**3).sum()), abs=1e-12)


class TestClosedForms:
    def test_zero(self):
        p = ParamVector()
        t2 = t_squared_closed(derived_symbols(p), p)
        assert all(getattr(t2, f) == 0.0 for f in ("Gamma1", "Gamma2", "Gamma3", "X1", "X2", "X3", "Y1", "Y2", "Y3"))
        d3 = t_cubed_diag_closed(derived_symbols(p), t2, p)
        assert (d3.Delta1R, d3.Delta2R, d3.Delta3R) == (0.0, 0.0, 0.0)

    def test_pure_basis_squares(self):
        p = PURE_BASIS
        t2 = t_squared_closed(derived_symbols(p), p)
        assert t2.Gamma1 == pytest.approx(4 / 9, abs=1e-15)
        assert t2.Gamma2 == pytest.approx(1 / 9, abs=1e-15)
        assert t2.Gamma3 == pytest.approx(1 / 9, abs=1e-15)
        assert (t2.X1, t2.X2, t2.X3, t2.Y1, t2.Y2, t2.Y3) == (0.0,) * 6

    def test_pure_basis_cubes(self):
        p = PURE_BASIS
        d3 = t_cubed_diag_closed(derived_symbols(p), t_squared_closed(derived_symbols(p), p), p)
        assert d3.Delta1R == pytest.approx(8 / 27, abs=1e-15)
        assert d3.Delta2R == pytest.approx(-1 / 27, abs=1e-15)
        assert d3.Delta3R == pytest.approx(-1 / 27, abs=1e-15)

    def test_single_a_squares(self):
        p = ParamVector(a=0.1)
        t2 = t_squared_closed(derived_symbols(p), p)
        assert t2.Gamma2 == pytest.approx(0.01, abs=1e-15)
        assert t2.X2 == pytest.approx(0.005, abs=1e-15)

    def test_against_direct_multiplication_10k(self):
        for p in param_vectors(seed=5150, n=10_000):
            sym = derived_symbols(p)
            t2 = t_squared_closed(sym, p)
            d3 = t_cubed_diag_closed(sym, t2, p)
            m = build_t(p).matrix
            m2 = m @ m
            m3 = m2 @ m
            closed = np.array(
                [
                    [t2.Gamma1, t2.X1 + 1j * t2.Y1, t2.X2 + 1j * t2.Y2],
                    [t2.X1 - 1j * t2.Y1, t2.Gamma2, t2.X3 + 1j * t2.Y3],
                    [t2.X2 - 1j * t2.Y2, t2.X3 - 1j * t2.Y3, t2.Gamma3],
                ]
            )
            assert np.abs(closed - m2).max() < 1e-12
            deltas = (d3.Delta1R, d3.Delta2R, d3.Delta3R)
            assert max(abs(d - m3[i, i].real) for i, d in enumerate(deltas)) < 1e-12

    def test_gamma_diagonals_nonnegative(self):
        for p in param_vectors(seed=88, n=500, scale=2.0):
            t2 = t_squared_closed(derived_symbols(p), p)
            assert min(t2.Gamma1, t2.Gamma2, t2.Gamma3) >= 0.0

    def test_delta_sum_matches_trace(self):
        for p in param_vectors(seed=31337, n=500):
            sym = derived_symbols(p)
            t2 = t_squared_closed(sym, p)
            d3 = t_cubed_diag_closed(sym, t2, p)
            _, trace3 = power_traces(build_t(p))
            assert d3.Delta1R + d3.Delta2R + d3.Delta3R == pytest.approx(trace3, abs=1e-12)


class TestHermitianMatrix3:
    def test_from_array_normalizes_lower_triangle(self):
        m = np.eye(3, dtype=complex) / 3
        m[0, 1] = 0.1 + 0.2j
        m[1, 0] = 0.1 - 0.2j + 5e-11  # inside tolerance
        h = HermitianMatrix3.from_array(m)
        assert h.matrix[1, 0] == h.matrix[0, 1].conjugate()

    def test_diagonal_imag_dropped(self):
        m = np.eye(3, dtype=complex) / 3
        m[1, 1] = 1 / 3 + 1e-11j
        h = HermitianMatrix3.from_array(m)
        assert h.matrix[1, 1].imag == 0.0

    def test_matrix_is_read_only(self):
        h = build_t(ParamVector(x=0.5))
        with pytest.raises(ValueError):
            h.matrix[0, 0] = 9.0

    def test_rejects_wrong_shape(self):
        with pytest.raises(InvalidMatrixError):
            HermitianMatrix3.from_array(np.zeros((2, 2)))
