"""Hamiltonian dynamics of the skew part: representations, flows, conservation."""

from .hamiltonian import (
    HEISENBERG_FACTOR,
    canonical_coordinates,
    density_commutator_residual,
    frame_generators,
    hamiltonian,
    hamiltonian_canonical,
    hamiltonian_heisenberg,
    hamiltonian_rep,
    hermitian_generator,
    schrodinger_flow,
    schrodinger_hamiltonian,
)
from .flow import flow, sample_times
from .conservation import commutator_norm, commutes, conservation_report, harmonic_check

__all__ = [
    "HEISENBERG_FACTOR",
    "canonical_coordinates",
    "density_commutator_residual",
    "frame_generators",
    "hamiltonian",
    "hamiltonian_canonical",
    "hamiltonian_heisenberg",
    "hamiltonian_rep",
    "hermitian_generator",
    "schrodinger_flow",
    "schrodinger_hamiltonian",
    "flow",
    "sample_times",
    "commutator_norm",
    "commutes",
    "conservation_report",
    "harmonic_check",
]
