"""Deciding whether a sector state describes individual particles.

A state of N identical particles either decomposes into N singly occupied
orthogonal one-particle states (individual particles), puts two or more
excitations into one mode (a single undifferentiated object), or admits no
such decomposition at all.  The candidate one-particle states are the
eigenvectors of the one-particle reduced density matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import exchange
from .exchange import ExchangeSector
from .states import (
    TAU_ORTH,
    TAU_PSD,
    LabeledState,
    _check_unitary,
    inner_product,
    reduce_one_particle,
)

#: |N*lambda_i - round(N*lambda_i)| must stay below this for a decomposition
DELTA_OCC = 0.05
TAU_FID = 1e-8
SLATER_SV_THRESHOLD = 1e-9


class Verdict(enum.Enum):
    PARTICLE_DECOMPOSITION = "PARTICLE_DECOMPOSITION"
    CONDENSED_OBJECT = "CONDENSED_OBJECT"
    NO_PARTICLE_DECOMPOSITION = "NO_PARTICLE_DECOMPOSITION"


@dataclass(frozen=True)
class EmergenceReport:
    verdict: Verdict
    defining_states: list[tuple[np.ndarray, int]] = field(default_factory=list)
    fidelity: float = 0.0
    natural_spectrum: list[float] = field(default_factory=list)


def natural_orbitals(rdm: np.ndarray) -> list[tuple[float, np.ndarray]]:
    """Eigenpairs of a one-particle reduced density matrix, eigenvalue-descending.

    Eigenvector phases are fixed (first significant component real positive);
    degenerate eigenvalues are ordered by the flat index of that component.
    """
    rdm = np.asarray(rdm, dtype=complex)
    herm_dev = np.max(np.abs(rdm - rdm.conj().T))
    if herm_dev > TAU_PSD:
        raise ValueError(f"matrix is not Hermitian (max deviation {herm_dev:.3g})")
    evals, evecs = np.linalg.eigh(rdm)
    pairs = []
    for lam, vec in zip(evals[::-1], evecs.T[::-1]):
        vec = exchange._fix_phase(vec.copy())
        lead = int(np.flatnonzero(np.abs(vec) > 1e-9)[0])
        pairs.append((float(lam), vec, lead))
    pairs.sort(key=lambda p: (-round(p[0] / 1e-9), p[2]))
    return [(lam, vec) for lam, vec, _ in pairs]


def detect_emergent_particles(
    state: LabeledState, sector: ExchangeSector
) -> EmergenceReport:
    """Classify a sector state and extract its defining one-particle states."""
    if not exchange.is_in_sector(state, sector):
        raise ValueError(f"state is not in the {sector.value} sector")
    n = state.n_slots
    orbitals = natural_orbitals(reduce_one_particle(state))
    spectrum = [lam for lam, _ in orbitals]

    occupations = []
    for lam, _ in orbitals:
        n_i = int(round(n * lam))
        if abs(n * lam - n_i) > DELTA_OCC:
            return EmergenceReport(
                Verdict.NO_PARTICLE_DECOMPOSITION, [], 0.0, spectrum
            )
        occupations.append(n_i)
    if sum(occupations) != n:
        return EmergenceReport(Verdict.NO_PARTICLE_DECOMPOSITION, [], 0.0, spectrum)

    factors = [
        vec for (lam, vec), n_i in zip(orbitals, occupations) for _ in range(n_i)
    ]
    candidate = exchange.symmetrized_product(factors, sector, state.basis)
    fidelity = abs(inner_product(state, candidate)) ** 2
    defining = [
        (vec, n_i) for (lam, vec), n_i in zip(orbitals, occupations) if n_i > 0
    ]
    if fidelity < 1.0 - TAU_FID:
        return EmergenceReport(
            Verdict.NO_PARTICLE_DECOMPOSITION, [], fidelity, spectrum
        )
    if all(n_i <= 1 for n_i in occupations):
        return EmergenceReport(
            Verdict.PARTICLE_DECOMPOSITION, defining, fidelity, spectrum
        )
    return EmergenceReport(Verdict.CONDENSED_OBJECT, defining, fidelity, spectrum)


def slater_rank_two_fermions(state: LabeledState) -> int:
    """Number of antisymmetrized product terms needed for a two-fermion state.

    Rank 1 means the state is a single Slater determinant, i.e. two
    individual, perfectly distinguishable particles.
    """
    if state.n_slots != 2:
        raise ValueError("Slater rank is defined here for two-slot states only")
    if not exchange.is_in_sector(state, ExchangeSector.ANTISYMMETRIC):
        raise ValueError("state is not antisymmetric")
    d = state.basis.dim
    w = state.amplitudes.reshape(d, d)
    sv = np.linalg.svd(w, compute_uv=False)
    # singular values of an antisymmetric matrix come in equal pairs
    return int(np.count_nonzero(sv > SLATER_SV_THRESHOLD)) // 2


def genidentity_track(
    initial_states: list[np.ndarray], u: np.ndarray
) -> list[np.ndarray]:
    """Transport pairwise orthogonal one-particle states through a unitary.

    Orthogonality is preserved, so each state keeps tracing out its own
    distinguishable path.
    """
    vecs = [np.asarray(v, dtype=complex) for v in initial_states]
    if not vecs:
        return []
    d = vecs[0].shape[0]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if abs(np.vdot(vecs[i], vecs[j])) > TAU_ORTH:
                raise ValueError(f"states {i} and {j} are not orthogonal")
    u = _check_unitary(u, d)
    return [u @ v for v in vecs]
