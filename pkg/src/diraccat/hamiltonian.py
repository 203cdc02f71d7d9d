"""Dirac Hamiltonian of a charged spin-1/2 particle in a uniform magnetic field.

Axial gauge, frame with zero longitudinal momentum, natural units
hbar = m = c = 1.  Only right-handed orbital quanta enter; left-handed
occupation is fixed to zero (every level is degenerate in it).

The Hamiltonian splits into a Jaynes-Cummings coupling between spinor
components {1, 4} and an anti-Jaynes-Cummings coupling between {2, 3}.
Its invariant subspaces are

    H_n = span{|1,n>, |4,n+1>, |2,n+1>, |3,n>}

plus the two dark states |2,0> (energy +1) and |4,0> (energy -1).

State layout: a ``DiracState`` holds a (4, cutoff + 1) complex array.  Row j
is spinor component j + 1 in the standard representation; the flat
full-space index is ``j * (cutoff + 1) + n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import OperatorMatrix, ladder_matrix

# spinor component labels, 1-based as in |j, n>
SPIN_UP_POSITIVE = 1  # chi_{1 up}
SPIN_DOWN_POSITIVE = 2  # chi_{1 down}
SPIN_UP_NEGATIVE = 3  # chi_{2 up}
SPIN_DOWN_NEGATIVE = 4  # chi_{2 down}

BETA = np.diag([1.0, 1.0, -1.0, -1.0])


@dataclass(frozen=True)
class ModelParams:
    """Physical configuration in natural units.

    xi is hbar*omega / m c^2 with omega half the cyclotron frequency; pz is the
    longitudinal momentum in units of mc; cutoff is the highest right-handed
    occupation kept.
    """

    xi: float
    cutoff: int
    pz: float = 0.0

    def __post_init__(self):
        if not (self.xi > 0 and math.isfinite(self.xi)):
            raise ValueError(f"xi must be a positive finite number, got {self.xi!r}")
        if int(self.cutoff) != self.cutoff or self.cutoff < 1:
            raise ValueError(f"cutoff must be an integer >= 1, got {self.cutoff!r}")
        if not math.isfinite(self.pz):
            raise ValueError(f"pz must be finite, got {self.pz!r}")

    # rest energy, the detuning of both JC and AJC terms
    delta = 1.0

    @property
    def omega(self) -> float:
        return self.xi

    @property
    def omega_c(self) -> float:
        return 2.0 * self.xi

    @property
    def coupling(self) -> float:
        """|g| = 2 sqrt(xi)."""
        return 2.0 * math.sqrt(self.xi)

    @property
    def g(self) -> complex:
        return 2j * math.sqrt(self.xi)

    @property
    def width(self) -> float:
        """Oscillator ground-state width in units of hbar/mc."""
        return 1.0 / math.sqrt(self.xi)

    @property
    def dim(self) -> int:
        return 4 * (self.cutoff + 1)


@dataclass(frozen=True)
class EnergyBranch:
    sign: int  # +1 particle, -1 antiparticle
    branch: int  # 1: components {1, 4}; 2: components {2, 3}

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.branch not in (1, 2):
            raise ValueError(f"branch must be 1 or 2, got {self.branch!r}")


ALL_BRANCHES = tuple(EnergyBranch(s, b) for b in (1, 2) for s in (1, -1))


@dataclass(frozen=True, eq=False)
class DiracState:
    """Four-component spinor with a truncated Fock vector per component."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[0] != 4 or amps.shape[1] < 2:
            raise ValueError(f"amplitudes must have shape (4, cutoff + 1), got {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_flat(cls, vector: np.ndarray) -> DiracState:
        vector = np.asarray(vector)
        return cls(vector.reshape(4, vector.size // 4))

    @classmethod
    def product(cls, spinor, orbital) -> DiracState:
        """spinor (4 amplitudes) times an orbital Fock vector."""
        return cls(np.outer(np.asarray(spinor, dtype=complex), np.asarray(orbital, dtype=complex)))

    @property
    def cutoff(self) -> int:
        return self.amplitudes.shape[1] - 1

    @property
    def flat(self) -> np.ndarray:
        return self.amplitudes.reshape(-1)

    def component(self, j: int) -> np.ndarray:
        """Fock vector of spinor component ``j`` (1..4)."""
        return self.amplitudes[j - 1]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> DiracState:
        return DiracState(self.amplitudes / self.norm())

    def __add__(self, other: DiracState) -> DiracState:
        return DiracState(self.amplitudes + other.amplitudes)

    def __rmul__(self, scalar) -> DiracState:
        return DiracState(complex(scalar) * self.amplitudes)


def basis_state(component: int, n: int, cutoff: int) -> DiracState:
    """|component, n> with component numbered 1..4."""
    if component not in (1, 2, 3, 4):
        raise ValueError(f"component must be 1..4, got {component!r}")
    if not 0 <= n <= cutoff:
        raise ValueError(f"occupation {n} outside 0..{cutoff}")
    amps = np.zeros((4, cutoff + 1), dtype=complex)
    amps[component - 1, n] = 1.0
    return DiracState(amps)


def flat_index(component: int, n: int, cutoff: int) -> int:
    return (component - 1) * (cutoff + 1) + n


def hamiltonian_matrix(xi: float, cutoff: int) -> OperatorMatrix:
    """Full-space Hamiltonian for raw (xi, cutoff); xi = 0 gives the free case.

    Use ``build_hamiltonian`` in normal code; this entry point exists so the
    decoupled limit can be built without a ``ModelParams``.
    """
    a = ladder_matrix(cutoff, "lower")
    ad = ladder_matrix(cutoff, "raise")
    c = 2.0 * math.sqrt(xi)
    dim = cutoff + 1
    H = np.kron(BETA, np.eye(dim)).astype(complex)
    blocks = {(0, 3): -1j * c * a, (1, 2): 1j * c * ad, (2, 1): -1j * c * a, (3, 0): 1j * c * ad}
    for (r, col), blk in blocks.items():
        H[r * dim : (r + 1) * dim, col * dim : (col + 1) * dim] = blk
    return H


def build_hamiltonian(params: ModelParams) -> OperatorMatrix:
    """Dense 4(N+1) x 4(N+1) Hamiltonian in the zero-longitudinal-momentum frame."""
    return hamiltonian_matrix(params.xi, params.cutoff)


def excitation_operator(cutoff: int) -> OperatorMatrix:
    """N_inv = a_r^dag a_r + projector onto components 1 and 3; commutes with H."""
    dim = cutoff + 1
    n = np.arange(dim, dtype=float)
    diag = np.concatenate([n + 1, n, n + 1, n])
    return np.diag(diag).astype(complex)


def dark_states(params: ModelParams) -> tuple[tuple[DiracState, float], tuple[DiracState, float]]:
    """The two states that exchange no chiral quanta: (|2,0>, +1) and (|4,0>, -1)."""
    N = params.cutoff
    return (basis_state(2, 0, N), 1.0), (basis_state(4, 0, N), -1.0)


def _check_block(params: ModelParams, n_r: int) -> None:
    if int(n_r) != n_r or n_r < 0:
        raise ValueError(f"n_r must be a non-negative integer, got {n_r!r}")
    if n_r + 1 > params.cutoff:
        raise ValueError(
            f"invariant subspace n_r={n_r} needs cutoff >= {n_r + 1}, got {params.cutoff}"
        )


def subspace_basis(params: ModelParams, n_r: int) -> tuple[tuple[int, int], ...]:
    """Ordered (component, occupation) labels spanning the invariant subspace n_r."""
    _check_block(params, n_r)
    return ((1, n_r), (4, n_r + 1), (2, n_r + 1), (3, n_r))


def subspace_indices(params: ModelParams, n_r: int) -> np.ndarray:
    return np.array([flat_index(j, n, params.cutoff) for j, n in subspace_basis(params, n_r)])


def block_matrix(params: ModelParams, n_r: int) -> np.ndarray:
    """4x4 restriction of the Hamiltonian to ``subspace_basis(params, n_r)``."""
    _check_block(params, n_r)
    d = params.delta
    g = params.g * math.sqrt(n_r + 1)
    return np.array(
        [
            [d, -g, 0, 0],
            [-g.conjugate(), -d, 0, 0],
            [0, 0, d, g],
            [0, 0, g.conjugate(), -d],
        ],
        dtype=complex,
    )


def landau_energy(params: ModelParams, n_r, sign: int = 1):
    """Relativistic Landau level sign * sqrt(1 + 4 xi (n_r + 1)); vectorizes over n_r."""
    n_r = np.asarray(n_r)
    e = np.sqrt(1.0 + 4.0 * params.xi * (n_r + 1.0))
    return sign * (float(e) if e.ndim == 0 else e)


def landau_kinetic_energy(params: ModelParams, n_r):
    """E_{n_r} - 1 without cancellation; tends to omega_c (n_r + 1) as xi -> 0."""
    n_r = np.asarray(n_r, dtype=float)
    out = 4.0 * params.xi * (n_r + 1.0) / (np.sqrt(1.0 + 4.0 * params.xi * (n_r + 1.0)) + 1.0)
    return float(out) if out.ndim == 0 else out


def mixing_amplitudes(energy, excess=None):
    """(alpha_plus, alpha_minus) = sqrt((E +- 1) / 2E) for E >= 1.

    ``excess`` is E**2 - 1 when known exactly; it avoids cancellation in
    E - 1 close to the non-relativistic limit.
    """
    energy = np.asarray(energy, dtype=float)
    if excess is None:
        excess = energy**2 - 1.0
    e_minus_one = np.asarray(excess) / (energy + 1.0)
    a_plus = np.sqrt((energy + 1.0) / (2.0 * energy))
    a_minus = np.sqrt(e_minus_one / (2.0 * energy))
    return a_plus, a_minus


def landau_amplitudes(params: ModelParams, n_r):
    n_r = np.asarray(n_r, dtype=float)
    return mixing_amplitudes(landau_energy(params, n_r), 4.0 * params.xi * (n_r + 1.0))


def landau_eigenstate(params: ModelParams, n_r: int, branch: EnergyBranch) -> DiracState:
    """Eigenstate with energy ``branch.sign * E_{n_r}``.

    branch 1:  a_s |n>   chi_{1 up}   + s i a_-s |n+1> chi_{2 down}
    branch 2:  a_s |n+1> chi_{1 down} - s i a_-s |n>   chi_{2 up}

    with a_+ = sqrt((E+1)/2E), a_- = sqrt((E-1)/2E) and s the sign.
    """
    _check_block(params, n_r)
    a_plus, a_minus = (float(x) for x in landau_amplitudes(params, n_r))
    s = branch.sign
    a_same, a_other = (a_plus, a_minus) if s > 0 else (a_minus, a_plus)
    amps = np.zeros((4, params.cutoff + 1), dtype=complex)
    if branch.branch == 1:
        amps[0, n_r] = a_same
        amps[3, n_r + 1] = s * 1j * a_other
    else:
        amps[1, n_r + 1] = a_same
        amps[2, n_r] = -s * 1j * a_other
    return DiracState(amps)


def conserved_excitation(state: DiracState) -> float:
    """Expectation of N_inv = a_r^dag a_r + P_{1,3}."""
    probs = np.abs(state.amplitudes) ** 2
    n = np.arange(state.cutoff + 1)
    return float(probs.sum(axis=0) @ n + probs[0].sum() + probs[2].sum())


def expectation(state: DiracState, operator: OperatorMatrix) -> complex:
    v = state.flat
    return complex(np.vdot(v, operator @ v))

