"""Reduced states, purity, fidelity, position expectations and Husimi Q grids."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .fock import coherent_projection
from .hamiltonian import DiracState

NORMALIZATION_TOL = 0.01


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    entries: np.ndarray
    subsystem: str  # "spinor" or "orbital"

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def reduced_density(state: DiracState, subsystem: str) -> DensityMatrix:
    """Partial trace of |state><state| over the complementary subsystem."""
    A = state.amplitudes
    if subsystem == "spinor":
        rho = A @ A.conj().T
    elif subsystem == "orbital":
        rho = A.T @ A.conj()
    else:
        raise ValueError(f"subsystem must be 'spinor' or 'orbital', got {subsystem!r}")
    return DensityMatrix(rho, subsystem)


def purity(rho: DensityMatrix) -> float:
    # tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(rho.entries) ** 2))


def fidelity(a: DiracState, b: DiracState) -> float:
    """|<a|b>| for pure states."""
    if a.amplitudes.shape != b.amplitudes.shape:
        raise ValueError(f"dimension mismatch: {a.amplitudes.shape} vs {b.amplitudes.shape}")
    return float(abs(np.vdot(a.flat, b.flat)))


def lowering_expectation(state: DiracState) -> complex:
    """<a_r> summed over all spinor components."""
    A = state.amplitudes
    sqrt_n = np.sqrt(np.arange(1, state.cutoff + 1, dtype=float))
    return complex(np.sum(A[:, :-1].conj() * sqrt_n * A[:, 1:]))


def position_expectation(state: DiracState) -> tuple[float, float]:
    """(<X>, <Y>) in units of the oscillator width.

    X = (a_r + a_r^dag + a_l + a_l^dag)/2 and Y = i(a_r - a_r^dag - a_l + a_l^dag)/2;
    left-handed terms vanish with no left-handed quanta, leaving
    <X> = Re<a_r> and <Y> = -Im<a_r>.
    """
    a = lowering_expectation(state)
    return a.real, -a.imag


@dataclass(frozen=True, eq=False)
class PhaseSpaceGrid:
    """Q sampled at beta = x + i y; ``values[i, j]`` is at (x[j], y[i])."""

    x_range: tuple[float, float]
    y_range: tuple[float, float]
    resolution: tuple[int, int]  # (nx, ny)
    values: np.ndarray

    @property
    def x(self) -> np.ndarray:
        return np.linspace(*self.x_range, self.resolution[0])

    @property
    def y(self) -> np.ndarray:
        return np.linspace(*self.y_range, self.resolution[1])

    @property
    def cell_area(self) -> float:
        nx, ny = self.resolution
        dx = (self.x_range[1] - self.x_range[0]) / (nx - 1)
        dy = (self.y_range[1] - self.y_range[0]) / (ny - 1)
        return dx * dy

    def integral(self) -> float:
        return float(self.values.sum() * self.cell_area)

    def half_plane_weights(self, angle: float) -> tuple[float, float]:
        """Integrated Q on the sides of the line through 0 normal to direction ``angle``.

        First entry is the side containing exp(i angle).
        """
        X, Y = np.meshgrid(self.x, self.y)
        proj = X * np.cos(angle) + Y * np.sin(angle)
        front = float(self.values[proj > 0].sum() * self.cell_area)
        back = float(self.values[proj < 0].sum() * self.cell_area)
        return front, back


def default_extent(z_abs: float) -> tuple[float, float]:
    return (-(z_abs + 4.0), z_abs + 4.0)


def husimi_q(
    rho: DensityMatrix,
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    resolution: tuple[int, int] = (201, 201),
) -> PhaseSpaceGrid:
    """Q(beta) = <beta|rho|beta> / pi for an orbital density matrix.

    Warns (and still returns the grid) when the Riemann sum of Q is off from 1
    by more than 1 %, which means the grid misses part of the state.
    """
    if rho.subsystem != "orbital":
        raise ValueError("husimi_q needs an orbital density matrix")
    nx, ny = resolution
    xs = np.linspace(*x_range, nx)
    ys = np.linspace(*y_range, ny)
    cutoff = rho.dim - 1
    values = np.empty((ny, nx))
    for i, y in enumerate(ys):
        B = coherent_projection(xs + 1j * y, cutoff)
        values[i] = np.einsum("km,km->k", B.conj(), B @ rho.entries.T).real / np.pi
    grid = PhaseSpaceGrid(tuple(map(float, x_range)), tuple(map(float, y_range)), (nx, ny), values)
    total = grid.integral()
    if abs(total - 1.0) > NORMALIZATION_TOL:
        warnings.warn(f"Husimi grid integrates to {total:.4f}; it does not cover the state", stacklevel=2)
    return grid


def coherence_magnitude(state: DiracState, plus: np.ndarray, minus: np.ndarray) -> float:
    """|<plus| rho_orbital |minus>|, the off-diagonal cat coherence."""
    rho = reduced_density(state, "orbital").entries
    return float(abs(np.vdot(plus, rho @ minus)))


def save_grid(grid: PhaseSpaceGrid, path) -> None:
    """Three header lines (x_range, y_range, resolution), then one row of Q per y value."""
    lines = [
        f"# x_range {grid.x_range[0]:.8e} {grid.x_range[1]:.8e}",
        f"# y_range {grid.y_range[0]:.8e} {grid.y_range[1]:.8e}",
        f"# resolution {grid.resolution[0]} {grid.resolution[1]}",
    ]
    lines.extend(" ".join(f"{v:.8e}" for v in row) for row in grid.values)
    Path(path).write_text("\n".join(lines) + "\n")


def load_grid(path) -> PhaseSpaceGrid:
    text = Path(path).read_text().splitlines()
    header = {}
    for line in text[:3]:
        key, *vals = line.lstrip("#").split()
        header[key] = vals
    values = np.array([[float(v) for v in line.split()] for line in text[3:]])
    nx, ny = (int(v) for v in header["resolution"])
    if values.shape != (ny, nx):
        raise ValueError(f"grid body has shape {values.shape}, header says {(ny, nx)}")
    return PhaseSpaceGrid(
        tuple(float(v) for v in header["x_range"]),
        tuple(float(v) for v in header["y_range"]),
        (nx, ny),
        values,
    )
