"""Decomposition of Markov generators into gradient and Hamiltonian parts."""

__version__ = "0.1.0"
