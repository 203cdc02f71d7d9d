import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from diraccat.fock import ladder_matrix
from diraccat.hamiltonian import (
    ALL_BRANCHES,
    BETA,
    DiracState,
    EnergyBranch,
    ModelParams,
    basis_state,
    block_matrix,
    build_hamiltonian,
    conserved_excitation,
    dark_states,
    excitation_operator,
    hamiltonian_matrix,
    landau_eigenstate,
    landau_energy,
    landau_kinetic_energy,
    subspace_basis,
    subspace_indices,
)

from conftest import random_state


def closed_form_spectrum(xi, N):
    e = np.sqrt(1 + 4 * xi * (np.arange(N) + 1))
    # each level twice (JC and AJC blocks); +-1 from the dark pair and the truncation edge
    return np.sort(np.concatenate([e, e, -e, -e, [1, 1, -1, -1]]))


def test_free_limit_is_beta():
    H = hamiltonian_matrix(0.0, 6)
    np.testing.assert_array_equal(H, np.kron(BETA, np.eye(7)))


@pytest.mark.parametrize("xi", [1e-4, 0.25, 3.0])
def test_hermitian_exactly(xi):
    H = build_hamiltonian(ModelParams(xi, 12))
    assert np.max(np.abs(H - H.conj().T)) == 0.0


def test_spectrum_matches_dense_eigensolver():
    xi, N = 0.25, 32
    dense = np.linalg.eigvalsh(build_hamiltonian(ModelParams(xi, N)))
    np.testing.assert_allclose(dense, closed_form_spectrum(xi, N), atol=1e-10)
    # xi = 0.25 makes E_n = sqrt(1 + (n + 1))
    np.testing.assert_allclose(landau_energy(ModelParams(xi, N), np.arange(N)), np.sqrt(2.0 + np.arange(N)))


def test_spectrum_symmetric():
    ev = np.linalg.eigvalsh(build_hamiltonian(ModelParams(0.7, 20)))
    np.testing.assert_allclose(np.sort(ev), np.sort(-ev), atol=1e-12)


def test_dark_states_are_eigenvectors(params):
    H = build_hamiltonian(params)
    (up, e_up), (down, e_down) = dark_states(params)
    assert (e_up, e_down) == (1.0, -1.0)
    assert up.component(2)[0] == 1 and down.component(4)[0] == 1
    for state, e in ((up, e_up), (down, e_down)):
        assert np.linalg.norm(H @ state.flat - e * state.flat) < 1e-14


def test_subspace_basis_order():
    p = ModelParams(0.25, 4)
    assert subspace_basis(p, 0) == ((1, 0), (4, 1), (2, 1), (3, 0))
    assert subspace_basis(p, 3) == ((1, 3), (4, 4), (2, 4), (3, 3))
    with pytest.raises(ValueError):
        subspace_basis(p, 4)
    with pytest.raises(ValueError):
        block_matrix(p, -1)


def test_subspace_members_share_excitation_number():
    p = ModelParams(0.25, 8)
    n_inv = excitation_operator(p.cutoff)
    for n_r in range(p.cutoff):
        for j, n in subspace_basis(p, n_r):
            v = basis_state(j, n, p.cutoff).flat
            np.testing.assert_array_equal(n_inv @ v, (n_r + 1) * v)


def test_subspaces_are_orthogonal():
    p = ModelParams(0.25, 8)
    seen = set()
    for n_r in range(p.cutoff):
        idx = set(subspace_indices(p, n_r).tolist())
        assert len(idx) == 4 and not idx & seen
        seen |= idx


def test_block_closed_form_values():
    p = ModelParams(0.25, 4)
    B = block_matrix(p, 0)
    assert abs(B[0, 1]) == pytest.approx(1.0) and abs(B[2, 3]) == pytest.approx(1.0)
    np.testing.assert_allclose(np.linalg.eigvalsh(B), [-math.sqrt(2)] * 2 + [math.sqrt(2)] * 2, atol=1e-14)
    zero = np.ones((4, 4), dtype=bool)
    zero[:2, :2] = zero[2:, 2:] = False
    assert np.all(B[zero] == 0)


@pytest.mark.parametrize("xi", [0.01, 0.25, 2.0])
def test_block_is_restriction_of_full_hamiltonian(xi):
    p = ModelParams(xi, 10)
    H = build_hamiltonian(p)
    for n_r in range(p.cutoff):
        idx = subspace_indices(p, n_r)
        np.testing.assert_allclose(block_matrix(p, n_r), H[np.ix_(idx, idx)], atol=1e-15)
        # the full matrix has nothing leaving the subspace
        rest = np.setdiff1d(np.arange(p.dim), idx)
        assert np.all(H[np.ix_(rest, idx)] == 0)


def test_block_reproduces_jc_coupling_phase():
    # g14 = -i 2 sqrt(xi) multiplies sigma_14^+ a_r, i.e. the <1,n|H|4,n+1> entry
    p = ModelParams(0.36, 5)
    B = block_matrix(p, 2)
    assert B[0, 1] == pytest.approx(-2j * math.sqrt(0.36) * math.sqrt(3))


def test_landau_energy_values():
    assert landau_energy(ModelParams(0.25, 4), 0) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert landau_energy(ModelParams(0.25, 4), 0, -1) == pytest.approx(-math.sqrt(2), abs=1e-15)
    assert landau_energy(ModelParams(1e-14, 4), 3) == pytest.approx(1.0, abs=1e-12)


def test_landau_energy_small_xi_series():
    xi = 1e-6
    excess = landau_energy(ModelParams(xi, 4), 0) - 1.0
    # sqrt(1 + 4 xi) - 1 = 2 xi - 2 xi^2 + 4 xi^3 - ...
    assert excess == pytest.approx(2 * xi - 2 * xi**2, abs=1e-15)
    assert abs(excess - 2 * xi) < 2.1e-12


@given(st.floats(min_value=1e-7, max_value=1e-3), st.integers(min_value=0, max_value=10))
def test_nonrelativistic_landau_limit(xi, n):
    # below xi ~ 1e-7 rounding in E - 1 exceeds the O(xi) bound; see the stable form below
    e = landau_energy(ModelParams(xi, 12), n)
    ratio = (e - 1.0) / (2 * xi * (n + 1))
    assert abs(ratio - 1.0) < 8 * xi * (n + 1)


@given(st.floats(min_value=1e-300, max_value=1e-3), st.integers(min_value=0, max_value=10))
def test_kinetic_energy_limit_without_cancellation(xi, n):
    p = ModelParams(xi, 12)
    ratio = landau_kinetic_energy(p, n) / (p.omega_c * (n + 1))
    assert abs(ratio - 1.0) < 8 * xi * (n + 1) + 1e-15


@given(st.floats(min_value=1e-6, max_value=100), st.integers(min_value=0, max_value=1000))
def test_landau_matches_cyclotron_form(xi, n):
    # sqrt(1 + 4 xi (n+1)) == sqrt(1 + 2 omega_c (n+1)) with omega_c = 2 xi
    p = ModelParams(xi, 2)
    assert landau_energy(p, n) == pytest.approx(math.sqrt(1 + 2 * p.omega_c * (n + 1)), rel=1e-15)


def test_eigenstate_residuals():
    p = ModelParams(0.25, 8)
    H = build_hamiltonian(p)
    for n_r in range(6):
        for b in ALL_BRANCHES:
            v = landau_eigenstate(p, n_r, b).flat
            e = landau_energy(p, n_r, b.sign)
            assert np.linalg.norm(H @ v - e * v) < 1e-10
            assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-14)


def test_eigenstates_orthonormal_per_level():
    p = ModelParams(1.3, 8)
    for n_r in range(p.cutoff):
        V = np.array([landau_eigenstate(p, n_r, b).flat for b in ALL_BRANCHES])
        np.testing.assert_allclose(V.conj() @ V.T, np.eye(4), atol=1e-14)


def test_eigenstate_decoupling_limit():
    s = landau_eigenstate(ModelParams(1e-14, 6), 2, EnergyBranch(1, 1))
    expected = basis_state(1, 2, 6)
    np.testing.assert_allclose(s.amplitudes, expected.amplitudes, atol=1e-6)


def test_eigenstate_guard():
    with pytest.raises(ValueError):
        landau_eigenstate(ModelParams(0.25, 3), 3, EnergyBranch(1, 1))
    with pytest.raises(ValueError):
        EnergyBranch(0, 1)


def test_params_validation():
    p = ModelParams(0.25, 10)
    assert (p.omega, p.omega_c, p.coupling, p.width) == (0.25, 0.5, 1.0, 2.0)
    assert p.g == 1j
    for bad in (dict(xi=0.0, cutoff=4), dict(xi=-1.0, cutoff=4), dict(xi=1.0, cutoff=0)):
        with pytest.raises(ValueError):
            ModelParams(**bad)


def test_excitation_commutes_with_hamiltonian():
    p = ModelParams(0.8, 15)
    H = build_hamiltonian(p)
    n_inv = excitation_operator(p.cutoff)
    assert np.max(np.abs(H @ n_inv - n_inv @ H)) < 1e-14
    # same operator assembled from ladder matrices
    a = ladder_matrix(p.cutoff, "lower")
    proj13 = np.kron(np.diag([1.0, 0, 1.0, 0]), np.eye(p.cutoff + 1))
    np.testing.assert_allclose(n_inv, np.kron(np.eye(4), a.conj().T @ a) + proj13, atol=1e-13)


def test_conserved_excitation_values(rng):
    assert conserved_excitation(basis_state(1, 0, 4)) == 1.0
    assert conserved_excitation(basis_state(4, 1, 4)) == 1.0
    s = random_state(rng, 6)
    n_inv = excitation_operator(6)
    assert conserved_excitation(s) == pytest.approx(np.vdot(s.flat, n_inv @ s.flat).real, abs=1e-12)


def test_state_is_immutable():
    s = basis_state(1, 0, 3)
    with pytest.raises(ValueError):
        s.amplitudes[0, 0] = 2.0
    with pytest.raises(ValueError):
        DiracState(np.zeros((3, 4)))
