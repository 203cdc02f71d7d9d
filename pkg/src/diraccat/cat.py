"""Mesoscopic regime: asymptotic factorized evolution and Dirac cat states.

Initial states are |z> chi_{1 up} (or the semiclassical eigenspinors times
|z>) with n_bar = |z|^2 orbital quanta.  In the asymptotic approximation each
semiclassical branch stays a product spinor x coherent state; the coherent
amplitude rotates as z exp(-+ i Omega_rot t) with Omega_rot = 2 xi / E and
E = sqrt(1 + 4 xi n_bar).  At t_d = pi E / 4 xi the two branches are antipodal
in phase space; their spinors coincide only in the ultra-relativistic regime
xi n_bar >> 1, which is when the orbital state is a cat.

Phase convention: for z = |z| exp(i phi) the semiclassical eigenspinors over
(chi_{1 up}, chi_{2 down}) are

    |+E> = (a_+,  i a_- exp(-i phi)),    |-E> = (a_-, -i a_+ exp(-i phi)).

The default start phase is phi = pi/2 (z = i|z|), for which the
semiclassical Hamiltonian is sigma_z + |g||z| sigma_x.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .fock import FockVector, coherent_vector
from .hamiltonian import DiracState, ModelParams, mixing_amplitudes

DEFAULT_PHASE = math.pi / 2

# n_bar bands for labelling runs
MICROSCOPIC_MAX = 10.0
MESOSCOPIC_MAX = 100.0

# 4 xi n_bar below this: spinors no longer coincide at t_d
ULTRA_RELATIVISTIC_MIN = 10.0


def start_amplitude(z_abs: float, phase: float = DEFAULT_PHASE) -> complex:
    return z_abs * cmath.exp(1j * phase)


def regime_label(n_bar: float) -> str:
    if n_bar < MICROSCOPIC_MAX:
        return "microscopic"
    if n_bar <= MESOSCOPIC_MAX:
        return "mesoscopic"
    return "macroscopic"


def _energy(params: ModelParams, n_bar: float) -> float:
    return math.sqrt(1.0 + 4.0 * params.xi * n_bar)


def _alphas(params: ModelParams, n_bar: float) -> tuple[float, float]:
    e = _energy(params, n_bar)
    a_plus, a_minus = mixing_amplitudes(e, 4.0 * params.xi * n_bar)
    return float(a_plus), float(a_minus)


def rotation_frequency(params: ModelParams, n_bar: float) -> float:
    """Omega_rot = |g|^2 / 2E = 2 xi / E."""
    return 2.0 * params.xi / _energy(params, n_bar)


def semiclassical_hamiltonian(params: ModelParams, z: complex) -> np.ndarray:
    """Jaynes-Cummings block with a_r replaced by the c-number z."""
    c = params.coupling
    return np.array([[1.0, -1j * c * z], [1j * c * np.conj(z), -1.0]], dtype=complex)


def semiclassical_eigenspinors(params: ModelParams, n_bar: float, phase: float = DEFAULT_PHASE):
    """((spinor_plus, +E), (spinor_minus, -E)) over (chi_{1 up}, chi_{2 down})."""
    e = _energy(params, n_bar)
    a_plus, a_minus = _alphas(params, n_bar)
    rot = cmath.exp(-1j * phase)
    plus = np.array([a_plus, 1j * a_minus * rot])
    minus = np.array([a_minus, -1j * a_plus * rot])
    return (plus, e), (minus, -e)


@dataclass(frozen=True, eq=False)
class AsymptoticState:
    spinor: np.ndarray  # over (chi_{1 up}, chi_{2 down})
    orbital: FockVector
    global_phase: complex

    def to_dirac(self) -> DiracState:
        spinor4 = np.array([self.spinor[0], 0.0, 0.0, self.spinor[1]], dtype=complex)
        return DiracState.product(self.global_phase * spinor4, self.orbital)


def branch_spinor(params: ModelParams, z: complex, sign: int, t: float) -> np.ndarray:
    """Spinor factor of branch ``sign`` at time t (starts as the eigenspinor)."""
    n_bar = abs(z) ** 2
    a_plus, a_minus = _alphas(params, n_bar)
    rot = cmath.exp(-1j * cmath.phase(z)) if z != 0 else 1.0
    spin_phase = cmath.exp(-1j * sign * rotation_frequency(params, n_bar) * t)
    if sign > 0:
        return np.array([a_plus * spin_phase, 1j * a_minus * rot])
    return np.array([a_minus * spin_phase, -1j * a_plus * rot])


def asymptotic_state(
    params: ModelParams, z: complex, sign: int, t: float, orbital: str = "rotated"
) -> AsymptoticState:
    """Factorized approximation to exp(-iHt) |sign E_z> |z>.

    ``orbital="rotated"`` (default) linearizes Theta = sqrt(1 + |g|^2 a^dag a)
    about n_bar: the orbital factor is the coherent state z exp(-+ i Omega_rot t)
    times a global phase.  ``orbital="theta"`` keeps exp(-+ i Theta t)|z> as an
    operator; it drops the curvature error that the linearization accumulates
    by t_d.

    Raises ``TruncationError`` if the cutoff cannot hold |z>.
    """
    if t < 0:
        raise ValueError("asymptotic approximation is stated for t >= 0")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    n_bar = abs(z) ** 2
    e = _energy(params, n_bar)
    omega = rotation_frequency(params, n_bar)
    spinor = branch_spinor(params, z, sign, t)
    if orbital == "rotated":
        vec = coherent_vector(z * cmath.exp(-1j * sign * omega * t), params.cutoff)
        return AsymptoticState(spinor, vec, cmath.exp(-1j * sign * t * (e - omega * n_bar)))
    if orbital == "theta":
        theta = np.sqrt(1.0 + 4.0 * params.xi * np.arange(params.cutoff + 1))
        vec = np.exp(-1j * sign * theta * t) * coherent_vector(z, params.cutoff)
        return AsymptoticState(spinor, vec, 1.0 + 0j)
    raise ValueError(f"orbital must be 'rotated' or 'theta', got {orbital!r}")


def asymptotic_composite(params: ModelParams, z: complex, t: float, orbital: str = "rotated") -> DiracState:
    """a_+ Psi_+(t) + a_- Psi_-(t), the asymptotic evolution of |z> chi_{1 up}."""
    a_plus, a_minus = _alphas(params, abs(z) ** 2)
    plus = asymptotic_state(params, z, 1, t, orbital).to_dirac()
    minus = asymptotic_state(params, z, -1, t, orbital).to_dirac()
    return a_plus * plus + a_minus * minus


def initial_branch_state(params: ModelParams, z: complex, sign: int) -> DiracState:
    """|sign E_z> |z> as a full DiracState."""
    return asymptotic_state(params, z, sign, 0.0).to_dirac()


@dataclass(frozen=True)
class CatSchedule:
    t_R: float
    t_d: float
    omega_rot: float
    delta: float


def cat_schedule(params: ModelParams, n_bar: float) -> CatSchedule:
    """Revival time t_R = pi E / 2 xi, cat time t_d = t_R / 2, and the spinor phase delta."""
    e = _energy(params, n_bar)
    t_r = math.pi * e / (2.0 * params.xi)
    t_d = t_r / 2.0
    z = start_amplitude(math.sqrt(n_bar))
    overlap = np.vdot(branch_spinor(params, z, -1, t_d), branch_spinor(params, z, 1, t_d))
    return CatSchedule(t_r, t_d, rotation_frequency(params, n_bar), float(np.angle(overlap)))


def trajectory(params: ModelParams, z: complex, sign: int, t):
    """Asymptotic centre (x, y) of branch ``sign`` in units of the oscillator width.

    Uses x = Re <a_r>, y = -Im <a_r> with <a_r> = z exp(-+ i Omega_rot t), so the
    + branch turns counterclockwise and the - branch clockwise.  Starting from
    z = -i|z| this is |z| (-+ sin Omega_rot t, cos Omega_rot t).
    """
    omega = rotation_frequency(params, abs(z) ** 2)
    w = z * np.exp(-1j * sign * omega * np.asarray(t, dtype=float))
    return np.real(w), -np.imag(w)


def spinor_overlap_at_cat_time(params: ModelParams, n_bar: float) -> float:
    """|<Phi_sp^+(t_d)|Phi_sp^-(t_d)>| = sqrt(4 xi n_bar / (1 + 4 xi n_bar))."""
    x = 4.0 * params.xi * n_bar
    return math.sqrt(x / (1.0 + x))


def spinor_overlap_nonrelativistic(params: ModelParams, n_bar: float) -> float:
    """Leading small-xi form 2 sqrt(xi n_bar) of ``spinor_overlap_at_cat_time``."""
    return 2.0 * math.sqrt(params.xi * n_bar)


def spinor_overlap_numeric(params: ModelParams, z: complex) -> float:
    """Overlap of the two branch spinors built explicitly at t_d."""
    t_d = cat_schedule(params, abs(z) ** 2).t_d
    return float(abs(np.vdot(branch_spinor(params, z, 1, t_d), branch_spinor(params, z, -1, t_d))))


@dataclass(frozen=True, eq=False)
class DiracCat:
    spinor: np.ndarray  # common spinor, the + branch spinor at t_d
    orbital_cat: FockVector
    components: tuple[FockVector, FockVector]  # Phi_orb^+(t_d), Phi_orb^-(t_d)
    weights: tuple[complex, complex]
    t_d: float
    delta: float


def dirac_cat(params: ModelParams, z: complex) -> DiracCat:
    """Orbital cat a_+ |Phi_orb^+(t_d)> + exp(-i delta) a_- |Phi_orb^-(t_d)>, normalized.

    delta = arg <Phi_sp^-|Phi_sp^+> at t_d, so Phi_sp^+ = exp(i delta) Phi_sp^-
    when the spinors coincide.  Warns outside the ultra-relativistic regime,
    where the spinors stay distinguishable and the cat coherence is lost.
    """
    n_bar = abs(z) ** 2
    if 4.0 * params.xi * n_bar < ULTRA_RELATIVISTIC_MIN:
        warnings.warn(
            f"4 xi n_bar = {4 * params.xi * n_bar:.3g} < {ULTRA_RELATIVISTIC_MIN}: "
            "outside the ultra-relativistic regime, the cat coherence vanishes",
            stacklevel=2,
        )
    sched = cat_schedule(params, n_bar)
    plus = asymptotic_state(params, z, 1, sched.t_d)
    minus = asymptotic_state(params, z, -1, sched.t_d)
    comp_plus = plus.global_phase * plus.orbital
    comp_minus = minus.global_phase * minus.orbital
    a_plus, a_minus = _alphas(params, n_bar)
    weights = (complex(a_plus), a_minus * cmath.exp(-1j * sched.delta))
    cat = weights[0] * comp_plus + weights[1] * comp_minus
    cat = cat / np.linalg.norm(cat)
    return DiracCat(plus.spinor, cat, (comp_plus, comp_minus), weights, sched.t_d, sched.delta)
