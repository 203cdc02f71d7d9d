"""Dirac particle in a magnetic field as coupled Jaynes-Cummings models.

Exact relativistic Landau spectra and eigenstates, exact block-wise time
evolution in a truncated Fock x spinor space, and the mesoscopic Dirac cat
states that appear only in the relativistic regime.
"""

from .cat import (
    AsymptoticState,
    CatSchedule,
    DiracCat,
    asymptotic_composite,
    asymptotic_state,
    cat_schedule,
    dirac_cat,
    semiclassical_eigenspinors,
    spinor_overlap_at_cat_time,
    trajectory,
)
from .diagnostics import (
    DensityMatrix,
    PhaseSpaceGrid,
    coherence_magnitude,
    fidelity,
    husimi_q,
    position_expectation,
    purity,
    reduced_density,
)
from .evolution import (
    EvolutionPlan,
    evolve,
    semiclassical_state,
    spin_populations,
    vacuum_rabi_state,
)
from .fock import TruncationError, coherent_vector, inner_product, ladder_matrix
from .hamiltonian import (
    DiracState,
    EnergyBranch,
    ModelParams,
    block_matrix,
    build_hamiltonian,
    conserved_excitation,
    dark_states,
    landau_eigenstate,
    landau_energy,
    subspace_basis,
)
from .lorentz import BoostParams, boost_matrix, boosted_eigenstate, boosted_energy, rapidity

__version__ = "0.1.0"
