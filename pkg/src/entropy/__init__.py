"""Entropy production and the trace identity of the flux skew matrix."""

from .production import (
    edge_fluxes,
    entropy_production,
    flux_sum_of_squares,
    near_equilibrium_ep,
    trace_identity,
)

__all__ = [
    "edge_fluxes",
    "entropy_production",
    "flux_sum_of_squares",
    "near_equilibrium_ep",
    "trace_identity",
]
