"""Exact time evolution in the zero-momentum frame, plus closed-form solutions.

The Hamiltonian is block diagonal: for each n = 0..N-1 a 2x2 Jaynes-Cummings
block on (|1,n>, |4,n+1>) and a 2x2 anti-Jaynes-Cummings block on
(|2,n+1>, |3,n>).  The remaining basis states |2,0>, |4,0> (dark) and
|1,N>, |3,N> (truncation edge) are eigenstates with energies +1, -1, +1, -1.
Evolution multiplies each block's eigencomponents by exp(-i E t), so it is
exact for every t.  Times are in units of hbar / m c^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hamiltonian import DiracState, ModelParams, landau_amplitudes, landau_energy

# singleton eigenstates: (row, occupation index, energy); -1 means n = cutoff
_SINGLETONS = ((1, 0, 1.0), (3, 0, -1.0), (0, -1, 1.0), (2, -1, -1.0))


@dataclass(frozen=True, eq=False)
class EvolutionPlan:
    """Cached block eigendecomposition for one ``ModelParams``.

    ``energies[n]`` is (+E_n, -E_n); ``jc_vectors[n]`` and ``ajc_vectors[n]``
    hold the matching eigenvectors as columns.
    """

    params: ModelParams
    energies: np.ndarray = field(init=False)
    jc_vectors: np.ndarray = field(init=False)
    ajc_vectors: np.ndarray = field(init=False)

    def __post_init__(self):
        N = self.params.cutoff
        n = np.arange(N)
        e = landau_energy(self.params, n)
        ap, am = landau_amplitudes(self.params, n)
        energies = np.stack([e, -e], axis=1)
        jc = np.empty((N, 2, 2), dtype=complex)
        jc[:, 0, 0], jc[:, 1, 0] = ap, 1j * am
        jc[:, 0, 1], jc[:, 1, 1] = am, -1j * ap
        ajc = np.empty((N, 2, 2), dtype=complex)
        ajc[:, 0, 0], ajc[:, 1, 0] = ap, -1j * am
        ajc[:, 0, 1], ajc[:, 1, 1] = am, 1j * ap
        for arr in (energies, jc, ajc):
            arr.setflags(write=False)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "jc_vectors", jc)
        object.__setattr__(self, "ajc_vectors", ajc)

    def block_hamiltonians(self) -> tuple[np.ndarray, np.ndarray]:
        """Reassembled 2x2 JC and AJC blocks, V diag(E) V^dag."""
        out = []
        for V in (self.jc_vectors, self.ajc_vectors):
            out.append(np.einsum("nik,nk,njk->nij", V, self.energies, V.conj()))
        return tuple(out)

    def propagate(self, amplitudes: np.ndarray, times) -> np.ndarray:
        """U(t) applied to a (4, N+1) amplitude array for each t; shape (T, 4, N+1)."""
        times = np.atleast_1d(np.asarray(times, dtype=float))
        amps = np.asarray(amplitudes, dtype=complex)
        N = self.params.cutoff
        if amps.shape != (4, N + 1):
            raise ValueError(f"state shape {amps.shape} does not match plan cutoff {N}")
        # phases[t, n, k] = exp(-i E_{n,k} t)
        phases = np.exp(-1j * times[:, None, None] * self.energies[None])
        out = np.empty((times.size, 4, N + 1), dtype=complex)
        pairs = (
            (self.jc_vectors, (0, slice(0, N)), (3, slice(1, N + 1))),
            (self.ajc_vectors, (1, slice(1, N + 1)), (2, slice(0, N))),
        )
        for V, first, second in pairs:
            local = np.stack([amps[first], amps[second]], axis=1)
            coeffs = np.einsum("nik,ni->nk", V.conj(), local)
            evolved = np.einsum("nik,tnk->tni", V, phases * coeffs[None])
            out[(slice(None),) + first] = evolved[:, :, 0]
            out[(slice(None),) + second] = evolved[:, :, 1]
        for row, n, energy in _SINGLETONS:
            out[:, row, n] = amps[row, n] * np.exp(-1j * energy * times)
        return out


def evolve(state: DiracState, plan: EvolutionPlan, t: float) -> DiracState:
    """Exact U(t)|state> in the zero-momentum frame."""
    return DiracState(plan.propagate(state.amplitudes, t)[0])


def evolve_many(state: DiracState, plan: EvolutionPlan, times) -> list[DiracState]:
    return [DiracState(a) for a in plan.propagate(state.amplitudes, times)]


def apply_hamiltonian(params: ModelParams, state: DiracState) -> DiracState:
    """H|state> using the ladder structure directly; O(N) instead of a dense product."""
    c = params.coupling
    p1, p2, p3, p4 = state.amplitudes
    sqrt_n = np.sqrt(np.arange(state.cutoff + 1, dtype=float))

    def lower(v):
        out = np.zeros_like(v)
        out[:-1] = sqrt_n[1:] * v[1:]
        return out

    def raise_(v):
        out = np.zeros_like(v)
        out[1:] = sqrt_n[1:] * v[:-1]
        return out

    return DiracState(
        np.array(
            [
                p1 - 1j * c * lower(p4),
                p2 + 1j * c * raise_(p3),
                -p3 - 1j * c * lower(p2),
                -p4 + 1j * c * raise_(p1),
            ]
        )
    )


def energy(params: ModelParams, state: DiracState) -> float:
    return float(np.vdot(state.flat, apply_hamiltonian(params, state).flat).real)


def vacuum_rabi_frequency(params: ModelParams) -> float:
    return math.sqrt(1.0 + 4.0 * params.xi)


def vacuum_rabi_state(params: ModelParams, t: float) -> DiracState:
    """Closed-form evolution of |0> chi_{1 up}: a two-level oscillation with |1> chi_{2 down}."""
    if params.cutoff < 2:
        raise ValueError("vacuum Rabi state needs cutoff >= 2")
    w0 = vacuum_rabi_frequency(params)
    amps = np.zeros((4, params.cutoff + 1), dtype=complex)
    amps[0, 0] = math.cos(w0 * t) - 1j * math.sin(w0 * t) / w0
    amps[3, 1] = math.sqrt(4.0 * params.xi) / w0 * math.sin(w0 * t)
    return DiracState(amps)


def semiclassical_energy(params: ModelParams, n_bar: float) -> float:
    """E = sqrt(1 + 4 xi n_bar), the level of Delta sigma_z + |g||z| sigma_x."""
    return math.sqrt(1.0 + 4.0 * params.xi * n_bar)


def semiclassical_state(params: ModelParams, n_bar: float, t: float) -> np.ndarray:
    """Spinor (4 amplitudes) evolved from chi_{1 up} in the macroscopic regime.

    The orbital mode is treated as a classical field; only the spin-flip
    probability is insensitive to the phase convention of that field.
    """
    e = semiclassical_energy(params, n_bar)
    spinor = np.zeros(4, dtype=complex)
    spinor[0] = math.cos(e * t) - 1j * math.sin(e * t) / e
    spinor[3] = 1j * math.sqrt(4.0 * params.xi * n_bar) / e * math.sin(e * t)
    return spinor


def spin_populations(state: DiracState) -> np.ndarray:
    """Squared norm of each spinor component."""
    return np.sum(np.abs(state.amplitudes) ** 2, axis=1)
