"""Generators and propagators for the rotating-polarization pair."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from photonclock import (
    ClockSpec,
    global_hamiltonian,
    ket,
    product_state_at,
    product_state_phase,
    propagator,
    single_photon_hamiltonian,
    wd_residual,
)

SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
EVEN_PAIR = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)

times = st.floats(min_value=0.0, max_value=40.0, allow_nan=False)
frequencies = st.floats(min_value=0.05, max_value=20.0, allow_nan=False)


class TestClockSpec:
    def test_period(self):
        assert ClockSpec(omega=2.0).period == pytest.approx(np.pi, abs=1e-15)

    def test_rejects_bad_frequency(self):
        for omega in (0.0, -1.0, np.inf, np.nan):
            with pytest.raises(ValueError):
                ClockSpec(omega=omega)


class TestSinglePhotonHamiltonian:
    def test_matrix_at_unit_frequency(self):
        h = single_photon_hamiltonian(ClockSpec(1.0))
        np.testing.assert_allclose(
            h, np.array([[0, 1j], [-1j, 0]]), atol=1e-15
        )

    def test_scales_linearly_with_frequency(self):
        h1 = single_photon_hamiltonian(ClockSpec(1.0))
        h25 = single_photon_hamiltonian(ClockSpec(2.5))
        np.testing.assert_allclose(h25, 2.5 * h1, atol=1e-15)

    def test_eigenvalues(self):
        h = single_photon_hamiltonian(ClockSpec(2.0))
        np.testing.assert_allclose(np.linalg.eigvalsh(h), [-2.0, 2.0], atol=1e-12)

    def test_square_is_isotropic(self):
        h = single_photon_hamiltonian(ClockSpec(3.0))
        np.testing.assert_allclose(h @ h, 9.0 * np.eye(2), atol=1e-12)


class TestGlobalHamiltonian:
    def test_is_sum_of_local_terms(self):
        spec = ClockSpec(1.7)
        h = single_photon_hamiltonian(spec)
        eye = np.eye(2, dtype=complex)
        expected = np.kron(h, eye) + np.kron(eye, h)
        np.testing.assert_allclose(global_hamiltonian(spec), expected, atol=1e-15)

    def test_spectrum(self):
        # Two zero modes plus a symmetric pair at twice the photon splitting.
        evals = np.linalg.eigvalsh(global_hamiltonian(ClockSpec(1.0)))
        np.testing.assert_allclose(evals, [-2.0, 0.0, 0.0, 2.0], atol=1e-10)

    def test_zero_modes_span(self):
        h = global_hamiltonian(ClockSpec(1.3))
        assert np.linalg.norm(h @ SINGLET) <= 1e-12
        assert np.linalg.norm(h @ EVEN_PAIR) <= 1e-12


class TestPropagator:
    def test_identity_at_zero_time(self):
        h = single_photon_hamiltonian(ClockSpec(1.0))
        for method in ("closed", "series", "auto"):
            np.testing.assert_allclose(
                propagator(h, 0.0, method=method), np.eye(2), atol=1e-15
            )

    def test_quarter_turn_sends_h_to_minus_v(self):
        h = single_photon_hamiltonian(ClockSpec(1.0))
        u = propagator(h, np.pi / 2)
        np.testing.assert_allclose(u @ ket("H"), -ket("V"), atol=1e-12)
        np.testing.assert_allclose(u @ ket("V"), ket("H"), atol=1e-12)

    def test_rotation_matrix_form(self):
        spec = ClockSpec(0.8)
        h = single_photon_hamiltonian(spec)
        t = 1.9
        c, s = np.cos(spec.omega * t), np.sin(spec.omega * t)
        np.testing.assert_allclose(
            propagator(h, t), np.array([[c, s], [-s, c]]), atol=1e-12
        )

    def test_closed_route_rejects_anisotropic_square(self):
        h = global_hamiltonian(ClockSpec(1.0))
        with pytest.raises(ValueError):
            propagator(h, 1.0, method="closed")

    def test_rejects_non_hermitian_generator(self):
        with pytest.raises(ValueError):
            propagator(np.array([[0, 1], [0, 0]], dtype=complex), 1.0)

    def test_rejects_unknown_method(self):
        h = single_photon_hamiltonian(ClockSpec(1.0))
        with pytest.raises(ValueError):
            propagator(h, 1.0, method="pade")

    def test_closed_and_series_agree_on_100_random_times(self):
        rng = np.random.default_rng(7)
        spec = ClockSpec(1.0)
        h = single_photon_hamiltonian(spec)
        for t in rng.uniform(0.0, 10.0 * spec.period, size=100):
            a = propagator(h, t, method="closed")
            b = propagator(h, t, method="series")
            assert np.max(np.abs(a - b)) <= 1e-12

    @given(times, frequencies)
    def test_unitary_single_photon(self, t, omega):
        u = propagator(single_photon_hamiltonian(ClockSpec(omega)), t)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(2), atol=1e-11)

    @given(times, times)
    def test_group_law_single_photon(self, t1, t2):
        h = single_photon_hamiltonian(ClockSpec(1.0))
        lhs = propagator(h, t1) @ propagator(h, t2)
        rhs = propagator(h, t1 + t2)
        np.testing.assert_allclose(lhs, rhs, atol=1e-11)

    @given(times)
    def test_unitary_two_photon_series(self, t):
        u = propagator(global_hamiltonian(ClockSpec(1.0)), t, method="series")
        np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-11)

    def test_two_photon_series_matches_spectral_oracle(self):
        spec = ClockSpec(1.0)
        h = global_hamiltonian(spec)
        evals, evecs = np.linalg.eigh(h)
        for t in (0.3, 1.1, 5.0):
            oracle = evecs @ np.diag(np.exp(-1j * evals * t)) @ evecs.conj().T
            np.testing.assert_allclose(
                propagator(h, t, method="series"), oracle, atol=1e-12
            )


class TestIntertwinedConstraint:
    def test_zero_modes_have_tiny_residual(self):
        h = global_hamiltonian(ClockSpec(1.0))
        assert wd_residual(h, SINGLET) <= 1e-12
        assert wd_residual(h, EVEN_PAIR) <= 1e-12

    def test_product_basis_state_is_not_annihilated(self):
        # h|HV> = i|HH> - i|VV> at unit frequency, so the residual is sqrt(2).
        h = global_hamiltonian(ClockSpec(1.0))
        assert wd_residual(h, ket("HV")) == pytest.approx(np.sqrt(2), abs=1e-12)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            wd_residual(global_hamiltonian(ClockSpec(1.0)), ket("H"))

    @given(
        st.floats(-3.0, 3.0),
        st.floats(-3.0, 3.0),
        st.floats(0.0, 2.0 * np.pi),
        frequencies,
    )
    def test_kernel_combinations_annihilated(self, a, b, phase, omega):
        psi = a * SINGLET + b * np.exp(1j * phase) * EVEN_PAIR
        norm = np.linalg.norm(psi)
        if norm < 1e-6:
            return
        psi = psi / norm
        h = global_hamiltonian(ClockSpec(omega))
        assert wd_residual(h, psi) <= omega * 1e-11


class TestProductState:
    def test_initial_condition(self):
        np.testing.assert_allclose(product_state_phase(0.0), ket("HV"), atol=1e-15)

    def test_quarter_period(self):
        np.testing.assert_allclose(
            product_state_phase(np.pi / 2), -ket("VH"), atol=1e-12
        )

    def test_amplitude_pattern_at_generic_phase(self):
        theta = 0.61
        s, c = np.sin(theta), np.cos(theta)
        expected = np.array([s * c, c * c, -s * s, -s * c], dtype=complex)
        np.testing.assert_allclose(product_state_phase(theta), expected, atol=1e-15)

    def test_vectorized_over_phase(self):
        thetas = np.linspace(0.0, 2.0 * np.pi, 17)
        batch = product_state_phase(thetas)
        assert batch.shape == (17, 4)
        for i, theta in enumerate(thetas):
            np.testing.assert_allclose(batch[i], product_state_phase(theta), atol=0)

    @given(times, frequencies)
    def test_unit_norm(self, t, omega):
        psi = product_state_at(t, ClockSpec(omega))
        assert abs(np.linalg.norm(psi) - 1.0) <= 1e-12

    @given(times)
    def test_periodicity(self, t):
        spec = ClockSpec(1.0)
        a = product_state_at(t, spec)
        b = product_state_at(t + spec.period, spec)
        np.testing.assert_allclose(a, b, atol=1e-10)

    def test_matches_two_photon_propagation_of_hv(self):
        spec = ClockSpec(1.4)
        h = global_hamiltonian(spec)
        rng = np.random.default_rng(11)
        for t in rng.uniform(0.0, 3.0 * spec.period, size=25):
            via_propagator = propagator(h, t, method="series") @ ket("HV")
            np.testing.assert_allclose(
                product_state_at(t, spec), via_propagator, atol=1e-12
            )
