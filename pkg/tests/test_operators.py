import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.linalg import eigh, matrix_power

import angvel as av
from angvel import OSCILLATOR, ROTOR
from angvel.linalg import adjoint, is_hermitian, is_unitary, max_abs_entry


def _space(kind=ROTOR, order=2, theta0=0.0):
    return av.make_space(kind, order, theta0)


class TestPhaseStates:
    def test_l1_first_state_is_flat(self):
        psi = av.phase_state(_space(ROTOR, 1), 0)
        np.testing.assert_allclose(psi, np.full(3, 1 / np.sqrt(3)), atol=1e-15)

    def test_unit_norm(self):
        psi = av.phase_state(_space(ROTOR, 5), 1)
        assert abs(np.vdot(psi, psi) - 1.0) <= 1e-12

    def test_orthogonality_matches_geometric_sum(self):
        # <theta_0|theta_1> = (1/D) sum_m e^{i m 2pi/D}, summed directly
        space = _space(ROTOR, 5)
        overlap = complex(np.vdot(av.phase_state(space, 0), av.phase_state(space, 1)))
        oracle = sum(cmath.exp(1j * m * 2 * math.pi / 11) for m in range(-5, 6)) / 11
        assert abs(overlap) <= 1e-14
        assert abs(overlap - oracle) <= 1e-15

    def test_index_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            av.phase_state(_space(ROTOR, 1), 3)

    def test_matrix_columns_match_states_bitwise(self):
        space = _space(OSCILLATOR, 6, theta0=0.4)
        basis = av.phase_state_matrix(space)
        for n in range(space.dim):
            np.testing.assert_array_equal(basis[:, n], av.phase_state(space, n))

    @pytest.mark.parametrize("kind,order", [(ROTOR, 50), (OSCILLATOR, 40)])
    def test_gram_matrix_is_identity(self, kind, order):
        basis = av.phase_state_matrix(_space(kind, order))
        gram = adjoint(basis) @ basis
        assert max_abs_entry(gram - np.eye(basis.shape[0])) <= 1e-11

    def test_resolution_of_identity(self):
        basis = av.phase_state_matrix(_space(ROTOR, 30))
        assert max_abs_entry(basis @ adjoint(basis) - np.eye(61)) <= 1e-11


class TestShiftOperator:
    def test_l1_cyclic_permutation(self):
        e = av.shift_operator(_space(ROTOR, 1))
        np.testing.assert_array_equal(e, np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex))
        np.testing.assert_array_equal(matrix_power(e, 3), np.eye(3))

    def test_top_state_wraps_to_bottom(self):
        space = _space(ROTOR, 3)
        e = av.shift_operator(space)
        column = e[:, space.index_of(3)]
        expected = np.zeros(7, dtype=complex)
        expected[space.index_of(-3)] = 1.0
        np.testing.assert_array_equal(column, expected)

    def test_unitary_at_l_100(self):
        assert is_unitary(av.shift_operator(_space(ROTOR, 100)), 1e-12)

    @pytest.mark.parametrize("kind,order", [(ROTOR, 0), (ROTOR, 2), (ROTOR, 15), (OSCILLATOR, 1), (OSCILLATOR, 3), (OSCILLATOR, 9)])
    def test_cyclic_period_small_dims(self, kind, order):
        space = _space(kind, order)
        e = av.shift_operator(space)
        # permutation-matrix powers are exact in floating point
        np.testing.assert_array_equal(matrix_power(e, space.dim), np.eye(space.dim))

    @pytest.mark.parametrize("dim", [101, 1001, 4001])
    def test_cyclic_period_large_dims(self, dim):
        # compose the permutation dim times on indices; exact, no arithmetic error
        space = _space(ROTOR, (dim - 1) // 2)
        e = av.shift_operator(space)
        perm = np.argmax(e.real, axis=0)
        composed = np.arange(dim)
        for _ in range(dim):
            composed = perm[composed]
        np.testing.assert_array_equal(composed, np.arange(dim))

    def test_adjoint_inverts_shift_at_dim_5(self):
        e = av.shift_operator(_space(ROTOR, 2))
        np.testing.assert_array_equal(adjoint(e) @ e, np.eye(5))

    def test_unitarity_at_top_of_dimension_range(self):
        assert is_unitary(av.shift_operator(_space(ROTOR, 2000)), 1e-12)

    def test_gram_identity_at_dim_1001(self):
        basis = av.phase_state_matrix(_space(ROTOR, 500))
        assert max_abs_entry(adjoint(basis) @ basis - np.eye(1001)) <= 1e-11


class TestDualOperator:
    def test_l1_diagonal(self):
        space = _space(ROTOR, 1)
        expected = np.diag([space.q**-1, 1.0, space.q])
        assert max_abs_entry(av.q_lz_operator(space) - expected) <= 1e-15

    def test_steps_phase_state(self):
        space = _space(ROTOR, 7)
        dual = av.q_lz_operator(space)
        stepped = dual @ av.phase_state(space, 0)
        assert np.linalg.norm(stepped - av.phase_state(space, 1)) <= 1e-13

    def test_wraps_last_phase_state(self):
        space = _space(ROTOR, 7)
        dual = av.q_lz_operator(space)
        wrapped = dual @ av.phase_state(space, 2 * 7)
        assert np.linalg.norm(wrapped - av.phase_state(space, 0)) <= 1e-13

    def test_is_cyclic_permutation_in_phase_basis(self):
        # similarity transform into the phase basis must reproduce E's pattern
        space = _space(ROTOR, 6)
        basis = av.phase_state_matrix(space)
        in_phase_basis = adjoint(basis) @ av.q_lz_operator(space) @ basis
        assert max_abs_entry(in_phase_basis - av.shift_operator(space)) <= 1e-11


class TestPhiOperator:
    def test_trace_is_sum_of_grid_angles(self):
        phi = av.phi_operator(_space(ROTOR, 1))
        assert np.trace(phi) == pytest.approx(2 * np.pi, abs=1e-12)

    def test_hermitian(self):
        phi = av.phi_operator(_space(ROTOR, 10))
        assert max_abs_entry(phi - adjoint(phi)) <= 1e-13

    def test_eigenvalues_are_the_grid(self):
        space = _space(ROTOR, 2)
        phi = av.phi_operator(space)
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(phi)), space.thetas, atol=1e-12)

    def test_diagonal_in_phase_basis(self):
        space = _space(ROTOR, 2)
        basis = av.phase_state_matrix(space)
        transformed = adjoint(basis) @ av.phi_operator(space) @ basis
        assert max_abs_entry(transformed - np.diag(space.thetas)) <= 1e-13

    def test_spectral_exponential_reproduces_shift(self):
        # exp(i*Phi) assembled from the eigendecomposition must act like E
        space = _space(ROTOR, 10)
        evals, evecs = eigh(av.phi_operator(space))
        unitary = evecs @ np.diag(np.exp(1j * evals)) @ adjoint(evecs)
        assert max_abs_entry(unitary - av.shift_operator(space)) <= 1e-10


class TestAngularVelocityOperator:
    def test_identity_hamiltonian_gives_zero(self):
        space = _space(ROTOR, 3)
        r_op = av.angular_velocity_operator(np.eye(space.dim), av.shift_operator(space))
        np.testing.assert_array_equal(r_op, np.zeros((space.dim, space.dim)))

    def test_rotor_diagonal_at_l2(self):
        space = _space(ROTOR, 2)
        h = av.rotor_hamiltonian(space, av.SystemSpec(av.FREE_ROTOR))
        r_op = av.angular_velocity_operator(h, av.shift_operator(space))
        np.testing.assert_allclose(np.diagonal(r_op).real, [-1.5, -0.5, 0.5, 1.5, 0.0], atol=1e-14)

    def test_oscillator_diagonal_at_s6(self):
        space = _space(OSCILLATOR, 6)
        h = av.oscillator_hamiltonian(space, av.SystemSpec(av.OSCILLATOR_SYSTEM))
        r_op = av.angular_velocity_operator(h, av.shift_operator(space))
        np.testing.assert_allclose(np.diagonal(r_op).real[:-1], np.ones(6), atol=1e-14)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            av.angular_velocity_operator(np.eye(3), np.eye(4))

    def test_nonpositive_hbar_rejected(self):
        with pytest.raises(ValueError):
            av.angular_velocity_operator(np.eye(3), np.eye(3), hbar=0.0)

    @pytest.mark.parametrize("kind,order", [(ROTOR, 7), (OSCILLATOR, 6)])
    def test_bit_identical_under_full_turn_of_theta0(self, kind, order):
        # R never references the angle operator, so shifting the grid by a
        # full turn must not change a single bit
        kinds = {ROTOR: av.FREE_ROTOR, OSCILLATOR: av.OSCILLATOR_SYSTEM}
        spec = av.SystemSpec(kinds[kind])
        results = []
        for theta0 in (0.0, 2 * math.pi):
            space = av.make_space(kind, order, theta0)
            results.append(
                av.angular_velocity_operator(av.hamiltonian(space, spec), av.shift_operator(space))
            )
        assert np.array_equal(results[0], results[1])

    def test_phase_states_unchanged_under_full_turn(self):
        # same states mathematically, but only to rounding (arguments differ)
        for n in (0, 3, 9):
            a = av.phase_state(av.make_space(ROTOR, 5, 0.0), n)
            b = av.phase_state(av.make_space(ROTOR, 5, 2 * math.pi), n)
            np.testing.assert_allclose(a, b, atol=1e-10)


class TestNaivePhaseRate:
    def test_self_commutator_is_zero(self):
        phi = av.phi_operator(_space(ROTOR, 4))
        np.testing.assert_array_equal(av.naive_phase_rate(phi, phi), np.zeros(phi.shape))

    def test_vanishing_diagonal_on_energy_eigenstates(self):
        space = _space(ROTOR, 5)
        h = av.rotor_hamiltonian(space, av.SystemSpec(av.FREE_ROTOR))
        rate = av.naive_phase_rate(av.phi_operator(space), h)
        assert max_abs_entry(np.diagonal(rate)) <= 1e-13
        assert is_hermitian(rate, 1e-13)

    def test_contrast_with_angular_velocity(self):
        space = _space(ROTOR, 5)
        h = av.rotor_hamiltonian(space, av.SystemSpec(av.FREE_ROTOR))
        r_op = av.angular_velocity_operator(h, av.shift_operator(space))
        i = space.index_of(1)
        assert r_op[i, i].real == pytest.approx(1.5, abs=1e-14)  # 3*hbar/(2*M*R^2)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            av.naive_phase_rate(np.eye(3), np.eye(4))


class TestDualityCheck:
    def test_l1_tight(self):
        report = av.duality_check(_space(ROTOR, 1))
        assert report.max_deviation <= 1e-14

    def test_l0_exactly_zero(self):
        report = av.duality_check(_space(ROTOR, 0))
        assert report.as_dict() == {
            "eigen_shift_interior": 0.0,
            "eigen_shift_wrap": 0.0,
            "phase_shift_interior": 0.0,
            "phase_shift_wrap": 0.0,
            "q_commutator_norm": 0.0,
        }

    def test_oscillator_s10(self):
        report = av.duality_check(_space(OSCILLATOR, 10))
        assert report.max_deviation <= 1e-13

    @given(kind=st.sampled_from([ROTOR, OSCILLATOR]), order=st.integers(0, 30))
    @settings(max_examples=40, deadline=None)
    def test_all_deviations_small_everywhere(self, kind, order):
        report = av.duality_check(_space(kind, order))
        assert report.max_deviation <= 1e-12
