"""Executable formalisms for identical quantum particles.

Labeled tensor-product states with (anti)symmetrization, label-free
occupation-number states, exact quantum-statistics counting, detection of
emergent individual particles, and the two-electron beam-splitter
experiment.
"""

from .counting import (
    CountingProblem,
    StatisticsKind,
    SymbolString,
    count_microstates,
    entropy,
    enumerate_distributions,
    enumerate_symbols,
    planck_count,
)
from .emergence import (
    EmergenceReport,
    Verdict,
    detect_emergent_particles,
    genidentity_track,
    natural_orbitals,
    slater_rank_two_fermions,
)
from .errors import CapExceeded
from .exchange import (
    ExchangeSector,
    is_in_sector,
    sector_basis,
    sector_project,
    symmetrized_product,
)
from .fock import (
    FockVector,
    OccupationState,
    fock_to_labeled,
    format_symbol,
    labeled_to_fock,
    occupation_to_labeled,
    parse_symbol,
    replace_indistinguishable,
)
from .interferometer import (
    BeamSplitterScenario,
    DensityGrid,
    ExperimentResult,
    GaussianPacket,
    build_initial_state,
    evolve_through_splitter,
    joint_spatial_density,
    measure_ports_and_spins,
    packet_overlap,
)
from .states import (
    LabeledState,
    OneParticleBasis,
    Permutation,
    apply_one_particle_unitary,
    apply_permutation,
    inner_product,
    reduce_one_particle,
    tensor_product,
)

__version__ = "0.1.0"
