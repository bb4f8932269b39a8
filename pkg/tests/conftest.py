"""Shared chains for the test suite."""

import json
import math

import numpy as np
import pytest

from src.decomposition.split import u_frame
from src.markov.generator import random_chain, validate_generator
from src.markov.stationary import stationary_distribution
from src.models.decomposition import Decomposition, FrameTransform
from src.models.generator import StationaryDistribution

# uniform ring with forward rate 2 and backward rate 1, column convention
THREE_CYCLE = [[-3.0, 1.0, 2.0], [2.0, -3.0, 1.0], [1.0, 2.0, -3.0]]
TWO_STATE = [[-2.0, 1.0], [2.0, -1.0]]
ROTATION = np.array([[0.0, 1.0], [-1.0, 0.0]])

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def three_cycle():
    return validate_generator(THREE_CYCLE)


@pytest.fixture
def two_state():
    return validate_generator(TWO_STATE)


@pytest.fixture
def reversible_chain():
    return random_chain(5, 7, kind="reversible")


@pytest.fixture
def general_chain():
    return random_chain(5, 11, kind="general")


@pytest.fixture
def cycle_decomposition(three_cycle):
    return u_frame(three_cycle, stationary_distribution(three_cycle))


@pytest.fixture
def general_decomposition(general_chain):
    return u_frame(general_chain, stationary_distribution(general_chain))


@pytest.fixture
def rotation_decomposition():
    """A bare 2x2 decomposition with S = 0 and A the unit rotation generator."""
    pi = StationaryDistribution(pi=np.array([0.5, 0.5]), residual=0.0)
    sqrt_pi = np.sqrt(pi.pi)
    frame = FrameTransform(pi=pi, sqrt_pi=sqrt_pi, inv_sqrt_pi=1.0 / sqrt_pi)
    zeros = np.zeros((2, 2))
    return Decomposition(
        S=zeros, A=ROTATION, flux_A=2.0 * ROTATION, QS=zeros, QA=ROTATION, frame=frame
    )


def write_generator(path, q, convention="column", labels=None):
    """Write a generator JSON file and return its path as a string."""
    data = {"n": len(q), "q": np.asarray(q, dtype=float).tolist(), "convention": convention}
    if labels is not None:
        data["labels"] = labels
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)
