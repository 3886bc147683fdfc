"""Symmetrization and antisymmetrization over particle slots.

Projectors onto the symmetric/antisymmetric sectors, normalized
(anti)symmetrized products, and explicit orthonormal sector bases indexed
by occupation vectors.  Permutation sums are evaluated directly; the slot
counts here never exceed single digits.
"""

from __future__ import annotations

import enum
import itertools
import math

import numpy as np

from . import counting
from .states import (
    TAU_NORM,
    TAU_ORTH,
    LabeledState,
    OneParticleBasis,
    tensor_product,
)

TAU_SECTOR = 1e-9

#: below this pre-normalization norm an antisymmetrized product counts as
#: a Pauli violation rather than a usable state
MIN_PRODUCT_NORM = 1e-6


class ExchangeSector(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _project_raw(arr: np.ndarray, sector: ExchangeSector) -> np.ndarray:
    """(1/N!) sum_p (+-1)^p P_p applied to a slot-indexed tensor."""
    n = arr.ndim
    out = np.zeros_like(arr)
    for perm in itertools.permutations(range(n)):
        term = arr.transpose(perm)
        if sector is ExchangeSector.ANTISYMMETRIC and _parity(perm) < 0:
            out -= term
        else:
            out += term
    return out / math.factorial(n)


def sector_project(state: LabeledState, sector: ExchangeSector) -> LabeledState | None:
    """Project onto the sector and renormalize; None when the projection vanishes."""
    raw = _project_raw(state.tensor(), sector)
    norm = np.linalg.norm(raw)
    if norm <= TAU_NORM:
        return None
    return LabeledState(state.n_slots, state.basis, raw.reshape(-1) / norm)


def symmetrized_product(
    factors: list[np.ndarray], sector: ExchangeSector, basis: OneParticleBasis
) -> LabeledState:
    """Normalized (anti)symmetrized product of one-particle vectors.

    Antisymmetric factors must be (numerically) linearly independent; a
    vanishing or ill-conditioned projection raises.
    """
    product = tensor_product(factors, basis)
    raw = _project_raw(product.tensor(), sector)
    norm = np.linalg.norm(raw)
    if norm < MIN_PRODUCT_NORM:
        raise ValueError(
            "antisymmetrized product vanishes: factors are not linearly independent "
            "(Pauli exclusion)"
        )
    return LabeledState(product.n_slots, basis, raw.reshape(-1) / norm)


def _fix_phase(amps: np.ndarray) -> np.ndarray:
    """Make the first significant amplitude (flat-index order) real and positive."""
    idx = np.flatnonzero(np.abs(amps) > 1e-12)
    if idx.size == 0:
        return amps
    lead = amps[idx[0]]
    return amps * (abs(lead) / lead)


def sector_basis(d: int, n: int, sector: ExchangeSector) -> list[LabeledState]:
    """Orthonormal sector basis, one vector per occupation vector.

    Ordered by the occupation enumeration of the counting module; empty when
    the sector holds no states (e.g. more fermions than modes).
    """
    kind = (
        counting.StatisticsKind.BOSE_EINSTEIN
        if sector is ExchangeSector.SYMMETRIC
        else counting.StatisticsKind.FERMI_DIRAC
    )
    basis = OneParticleBasis.default(d)
    eye = np.eye(d, dtype=complex)
    out = []
    for occ in counting.enumerate_distributions(kind, n, d):
        factors = [eye[i] for i, n_i in enumerate(occ) for _ in range(n_i)]
        vec = symmetrized_product(factors, sector, basis)
        out.append(LabeledState(n, basis, _fix_phase(vec.amplitudes)))
    return out


def is_in_sector(state: LabeledState, sector: ExchangeSector) -> bool:
    """True iff the state is (numerically) a fixed point of the sector projector."""
    projected = sector_project(state, sector)
    if projected is None:
        return False
    return np.linalg.norm(projected.amplitudes - state.amplitudes) <= TAU_SECTOR
