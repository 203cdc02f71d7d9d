"""Truncated single-mode Fock space: ladder operators, coherent states, overlaps.

Vectors are plain 1-D complex numpy arrays of length ``cutoff + 1`` indexed by
the occupation number n = 0..cutoff.
"""

from __future__ import annotations

import math

import numpy as np

FockVector = np.ndarray
OperatorMatrix = np.ndarray

# mean + 6 standard deviations of the Poisson occupation distribution
GUARD_SIGMAS = 6.0


class TruncationError(ValueError):
    """Raised when a Fock cutoff is too small for the requested state."""

    def __init__(self, message: str, required_cutoff: int | None = None):
        super().__init__(message)
        self.required_cutoff = required_cutoff


def required_cutoff(z_abs: float) -> int:
    """Smallest cutoff satisfying the coherent-state tail guard for |z| = z_abs."""
    return int(math.ceil(z_abs**2 + GUARD_SIGMAS * z_abs))


def _check_cutoff(cutoff: int) -> None:
    if int(cutoff) != cutoff or cutoff < 1:
        raise ValueError(f"cutoff must be an integer >= 1, got {cutoff!r}")


def ladder_matrix(cutoff: int, kind: str = "lower") -> OperatorMatrix:
    """Annihilation (``"lower"``) or creation (``"raise"``) matrix on n = 0..cutoff.

    Hard truncation: the raising matrix has no entry out of |cutoff>.
    """
    _check_cutoff(cutoff)
    lower = np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=1).astype(complex)
    if kind == "lower":
        return lower
    if kind == "raise":
        return lower.conj().T
    raise ValueError(f"kind must be 'lower' or 'raise', got {kind!r}")


def number_matrix(cutoff: int) -> OperatorMatrix:
    _check_cutoff(cutoff)
    return np.diag(np.arange(cutoff + 1, dtype=float)).astype(complex)


def basis_vector(n: int, cutoff: int) -> FockVector:
    _check_cutoff(cutoff)
    if not 0 <= n <= cutoff:
        raise ValueError(f"occupation {n} outside 0..{cutoff}")
    v = np.zeros(cutoff + 1, dtype=complex)
    v[n] = 1.0
    return v


def coherent_projection(z, cutoff: int) -> np.ndarray:
    """Unnormalized projection of |z> onto n = 0..cutoff.

    ``z`` may be an array; the Fock index is the last axis of the result.
    No guard and no renormalization, so <z|rho|z> is exact for any rho
    supported on the truncated space.
    """
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape + (cutoff + 1,), dtype=complex)
    out[..., 0] = np.exp(-0.5 * np.abs(z) ** 2)
    # recurrence c_n = c_{n-1} z / sqrt(n); factorials overflow past n ~ 170
    for n in range(1, cutoff + 1):
        out[..., n] = out[..., n - 1] * z / math.sqrt(n)
    return out


def coherent_vector(z: complex, cutoff: int) -> FockVector:
    """Coherent state |z> truncated at ``cutoff`` and renormalized to unit norm.

    Raises
    ------
    TruncationError
        If ``|z|**2 + 6|z| > cutoff``; the discarded Poisson tail would no
        longer be negligible.
    """
    _check_cutoff(cutoff)
    z = complex(z)
    need = required_cutoff(abs(z))
    if need > cutoff:
        raise TruncationError(
            f"coherent state |z|={abs(z):.6g} needs cutoff >= {need}, got {cutoff}",
            required_cutoff=need,
        )
    v = coherent_projection(z, cutoff)
    return v / np.linalg.norm(v)


def inner_product(a: FockVector, b: FockVector) -> complex:
    """<a|b>, antilinear in the first argument."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def norm(a: FockVector) -> float:
    return math.sqrt(max(inner_product(a, a).real, 0.0))
