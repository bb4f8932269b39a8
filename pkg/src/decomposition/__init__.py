"""Gradient/Hamiltonian decomposition of Markov generators."""

from .frame import frame_transform, from_u, to_u
from .split import flux_matrix, forward_split, reversal_matrix, time_reversal, u_frame
from .gradient import potential, potential_gradient

__all__ = [
    "frame_transform",
    "from_u",
    "to_u",
    "flux_matrix",
    "forward_split",
    "reversal_matrix",
    "time_reversal",
    "u_frame",
    "potential",
    "potential_gradient",
]
