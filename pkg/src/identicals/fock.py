"""The label-free formalism: occupation-number states and their symbols.

Occupation vectors play the role of quasi-cardinals; the symbol grammar is
`f_{` (token)* `}` with token = `e<positive integer>` (the Unicode epsilon
form is accepted on input).  The maps to and from labeled sector states are
isometries onto the symmetric/antisymmetric sector bases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import counting, exchange
from .exchange import ExchangeSector
from .states import LabeledState, OneParticleBasis, inner_product

_SYMBOL_RE = re.compile(r"^f_\{((?:e[0-9]+)*)\}$")
_TOKEN_RE = re.compile(r"e([0-9]+)")
_SUBSCRIPT_DIGITS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


@dataclass(frozen=True)
class OccupationState:
    """Per-mode occupation numbers in a fixed exchange sector."""

    occupations: tuple[int, ...]
    sector: ExchangeSector

    def __post_init__(self):
        if any(n < 0 for n in self.occupations):
            raise ValueError("occupations must be non-negative")
        if self.sector is ExchangeSector.ANTISYMMETRIC and any(
            n > 1 for n in self.occupations
        ):
            raise ValueError("antisymmetric occupations cannot exceed 1")

    @property
    def total(self) -> int:
        return sum(self.occupations)

    @property
    def n_modes(self) -> int:
        return len(self.occupations)


@dataclass(frozen=True)
class FockVector:
    """Superposition of occupation states with a common sector and total number."""

    terms: dict[tuple[int, ...], complex]
    sector: ExchangeSector
    total_number: int

    def __post_init__(self):
        for occ, _ in self.terms.items():
            if sum(occ) != self.total_number:
                raise ValueError(f"occupation {occ} breaks the total number {self.total_number}")
            OccupationState(occ, self.sector)  # validates sector constraint
        norm = np.sqrt(sum(abs(c) ** 2 for c in self.terms.values()))
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"Fock vector norm {norm} deviates from 1")


def parse_symbol(
    text: str, d: int, sector: ExchangeSector = ExchangeSector.SYMMETRIC
) -> OccupationState:
    """Parse a quasi-function symbol like f_{e1e1e2} into an occupation state."""
    normalized = text.replace("ε", "e").translate(_SUBSCRIPT_DIGITS)
    m = _SYMBOL_RE.match(normalized)
    if m is None:
        raise ValueError(f"malformed symbol: {text!r}")
    occ = [0] * d
    for tok in _TOKEN_RE.findall(m.group(1)):
        i = int(tok)
        if not 1 <= i <= d:
            raise ValueError(f"mode index {i} out of range 1..{d}")
        occ[i - 1] += 1
    return OccupationState(tuple(occ), sector)


def format_symbol(occ: OccupationState) -> str:
    """Canonical symbol text: modes ascending, each repeated by its occupation."""
    body = "".join(f"e{i + 1}" * n for i, n in enumerate(occ.occupations))
    return f"f_{{{body}}}"


def occupation_to_labeled(occ: OccupationState, basis: OneParticleBasis) -> LabeledState:
    """The sector basis vector with the given occupations."""
    if occ.n_modes != basis.dim:
        raise ValueError(f"occupation has {occ.n_modes} modes, basis has {basis.dim}")
    if occ.total == 0:
        raise ValueError("cannot build a labeled state for the vacuum")
    eye = np.eye(basis.dim, dtype=complex)
    factors = [eye[i] for i, n_i in enumerate(occ.occupations) for _ in range(n_i)]
    vec = exchange.symmetrized_product(factors, occ.sector, basis)
    return LabeledState(occ.total, basis, exchange._fix_phase(vec.amplitudes))


def labeled_to_fock(state: LabeledState, sector: ExchangeSector) -> FockVector:
    """Expand a sector state over the occupation-number basis."""
    if not exchange.is_in_sector(state, sector):
        raise ValueError(f"state is not in the {sector.value} sector")
    d = state.basis.dim
    n = state.n_slots
    kind = (
        counting.StatisticsKind.BOSE_EINSTEIN
        if sector is ExchangeSector.SYMMETRIC
        else counting.StatisticsKind.FERMI_DIRAC
    )
    occs = counting.enumerate_distributions(kind, n, d)
    basis_vectors = exchange.sector_basis(d, n, sector)
    terms: dict[tuple[int, ...], complex] = {}
    for occ, bv in zip(occs, basis_vectors):
        # reuse the flat amplitudes even though bv carries default mode names
        c = complex(np.vdot(bv.amplitudes, state.amplitudes))
        if abs(c) > 1e-12:
            terms[occ] = c
    return FockVector(terms, sector, n)


def fock_to_labeled(fv: FockVector, basis: OneParticleBasis) -> LabeledState:
    """Inverse of labeled_to_fock."""
    amps = np.zeros(basis.dim ** fv.total_number, dtype=complex)
    for occ, c in fv.terms.items():
        bv = occupation_to_labeled(OccupationState(occ, fv.sector), basis)
        amps += c * bv.amplitudes
    return LabeledState(fv.total_number, basis, amps)


def replace_indistinguishable(occ: OccupationState, mode: int) -> OccupationState:
    """Remove one unit from a mode (1-based), then put one of the same kind back.

    The result is identical to the input: replacing an excitation by an
    indistinguishable one changes nothing at the occupation level.
    """
    if not 1 <= mode <= occ.n_modes:
        raise ValueError(f"mode {mode} out of range 1..{occ.n_modes}")
    if occ.occupations[mode - 1] < 1:
        raise ValueError(f"mode {mode} is empty; nothing to remove")
    lowered = list(occ.occupations)
    lowered[mode - 1] -= 1
    raised = list(lowered)
    raised[mode - 1] += 1
    return OccupationState(tuple(raised), occ.sector)
