"""Boost along the field axis from the zero-momentum frame to the lab frame.

The spinor transformation is S = cosh(eta/2) (1 + tanh(eta/2) alpha_z)
= exp(eta alpha_z / 2).  It is not unitary; boosted states are renormalized
and the raw squared norm (cosh eta) is available separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hamiltonian import DiracState, EnergyBranch, ModelParams, build_hamiltonian, landau_eigenstate, landau_energy

ALPHA_Z = np.array(
    [
        [0, 0, 1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, -1, 0, 0],
    ],
    dtype=float,
)


@dataclass(frozen=True)
class BoostParams:
    rapidity: float
    cosh_half: float
    tanh_half: float

    @classmethod
    def from_rapidity(cls, eta: float) -> BoostParams:
        return cls(eta, math.cosh(eta / 2), math.tanh(eta / 2))

    @property
    def sinh_half(self) -> float:
        return self.cosh_half * self.tanh_half


def boosted_energy(params: ModelParams, n_r, sign: int = 1):
    """sign * sqrt(1 + pz^2 + 4 xi (n_r + 1))."""
    n_r = np.asarray(n_r)
    e = np.sqrt(1.0 + params.pz**2 + 4.0 * params.xi * (n_r + 1.0))
    return sign * (float(e) if e.ndim == 0 else e)


def rapidity(params: ModelParams, n_r: int, sign: int = 1) -> BoostParams:
    """Rapidity taking the level (n_r, sign) from zero momentum to ``params.pz``.

    With signed energies E (lab) and E' (zero-momentum frame):
    cosh(eta/2) = sqrt((E + E') / 2E') and tanh(eta/2) = pz / (E + E').
    For sign = -1 the rapidity flips, since tanh(eta) = pz / E.
    """
    e_rest = landau_energy(params, n_r, sign)
    e_lab = boosted_energy(params, n_r, sign)
    cosh_half = math.sqrt((e_lab + e_rest) / (2.0 * e_rest))
    tanh_half = params.pz / (e_lab + e_rest)
    return BoostParams(2.0 * math.atanh(tanh_half), cosh_half, tanh_half)


def boost_matrix(b: BoostParams) -> np.ndarray:
    return b.cosh_half * (np.eye(4) + b.tanh_half * ALPHA_Z)


def apply_spinor_matrix(matrix: np.ndarray, state: DiracState) -> DiracState:
    """Act with a 4x4 matrix on the spinor index, leaving Fock content alone."""
    return DiracState(matrix @ state.amplitudes)


def boosted_eigenstate(params: ModelParams, n_r: int, branch: EnergyBranch, normalize: bool = True) -> DiracState:
    """Lab-frame eigenstate of ``rest_frame_hamiltonian`` with energy sign * E_{n_r}.

    With ``normalize=False`` the squared norm is cosh(eta).
    """
    b = rapidity(params, n_r, branch.sign)
    state = apply_spinor_matrix(boost_matrix(b), landau_eigenstate(params, n_r, branch))
    return state.normalized() if normalize else state


def rest_frame_hamiltonian(params: ModelParams) -> np.ndarray:
    """Zero-momentum Hamiltonian plus the longitudinal term pz * alpha_z."""
    H = build_hamiltonian(params)
    return H + params.pz * np.kron(ALPHA_Z, np.eye(params.cutoff + 1))
