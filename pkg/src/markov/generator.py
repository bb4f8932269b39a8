"""Generator validation and seeded test-chain construction."""

import logging
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from ..config import config
from ..errors import (
    BadSizeError,
    ColumnSumNonzeroError,
    InputFormatError,
    NegativeRateError,
    NonFiniteRateError,
    NotSquareError,
)
from ..models.generator import GeneratorMatrix

logger = logging.getLogger(__name__)


class Convention(str, Enum):
    """Orientation of raw rate matrices."""

    COLUMN = "column"  # q_ij is the rate j -> i, columns sum to zero
    ROW = "row"  # q_ij is the rate i -> j, rows sum to zero


class ChainKind(str, Enum):
    """Families produced by :func:`random_chain`."""

    REVERSIBLE = "reversible"
    CYCLE = "cycle"
    GENERAL = "general"


def count_components(rates: np.ndarray, zero_threshold: Optional[float] = None) -> int:
    """Number of strongly connected components of the rate graph.

    Rates at or below ``zero_threshold * max_rate`` count as absent.
    """
    threshold = config.rate_zero_threshold if zero_threshold is None else zero_threshold
    n = rates.shape[0]
    if n <= 1:
        return n
    max_rate = float(np.max(np.abs(rates)))
    pattern = rates > threshold * max_rate
    np.fill_diagonal(pattern, False)
    n_components, _ = connected_components(pattern, directed=True, connection="strong")
    return int(n_components)


def validate_generator(
    raw,
    convention: str = "column",
    labels: Optional[Sequence[str]] = None,
) -> GeneratorMatrix:
    """Validate a raw rate matrix and return a column-convention GeneratorMatrix.

    Reducibility is recorded on the result, not raised; decomposition callers
    use :meth:`GeneratorMatrix.require_irreducible`.
    """
    rates = np.array(raw, dtype=float)
    if rates.ndim != 2 or rates.shape[0] != rates.shape[1]:
        raise NotSquareError(rates.shape)
    if Convention(convention) is Convention.ROW:
        rates = rates.T.copy()
    n = rates.shape[0]
    if not np.all(np.isfinite(rates)):
        i, j = (int(v) for v in np.argwhere(~np.isfinite(rates))[0])
        raise NonFiniteRateError(i, j)

    off_diagonal = rates.copy()
    np.fill_diagonal(off_diagonal, 0.0)
    negative = np.argwhere(off_diagonal < 0)
    if negative.size:
        i, j = (int(v) for v in negative[0])
        raise NegativeRateError(i, j, float(rates[i, j]))

    max_rate = float(np.max(np.abs(rates))) if n else 0.0
    column_sums = rates.sum(axis=0)
    tolerance = config.column_sum_tol * max_rate
    bad = np.argwhere(np.abs(column_sums) > tolerance)
    if bad.size:
        j = int(bad[0][0])
        raise ColumnSumNonzeroError(j, float(column_sums[j]))

    n_components = count_components(rates)
    if labels is None:
        labels = [f"s{i + 1}" for i in range(n)]
    elif len(labels) != n:
        raise InputFormatError(f"{len(labels)} labels given for {n} states")

    if n_components > 1:
        logger.debug("Generator has %d strongly connected components", n_components)
    return GeneratorMatrix(
        rates=rates,
        labels=tuple(labels),
        irreducible=n_components == 1,
        n_components=n_components,
    )


def _with_diagonal(off_diagonal: np.ndarray) -> np.ndarray:
    """Fill the diagonal so that every column sums to zero."""
    Q = off_diagonal.copy()
    np.fill_diagonal(Q, 0.0)
    np.fill_diagonal(Q, -Q.sum(axis=0))
    return Q


def random_chain(
    n: int,
    seed: int,
    kind: str = "general",
    rate_scale: float = 1.0,
    a: float = 2.0,
    b: float = 1.0,
) -> GeneratorMatrix:
    """Build a seeded test generator.

    ``reversible`` samples weights w and symmetric conductances c and sets
    q_ij = c_ij / w_j, so pi is proportional to w and detailed balance holds.
    ``cycle`` is the nearest-neighbour ring with forward rate ``a`` (i -> i+1)
    and backward rate ``b``. ``general`` samples every off-diagonal rate
    from a positive uniform distribution.
    """
    if n < 2:
        raise BadSizeError(n)
    kind = ChainKind(kind)
    rng = np.random.default_rng(seed)

    if kind is ChainKind.REVERSIBLE:
        weights = rng.uniform(0.5, 2.0, size=n)
        upper = np.triu(rng.uniform(0.1, 1.0, size=(n, n)), k=1)
        conductance = (upper + upper.T) * rate_scale
        off_diagonal = conductance / weights[None, :]
    elif kind is ChainKind.CYCLE:
        off_diagonal = np.zeros((n, n))
        for i in range(n):
            off_diagonal[(i + 1) % n, i] += a * rate_scale
            off_diagonal[(i - 1) % n, i] += b * rate_scale
    else:
        off_diagonal = rng.uniform(0.1, 1.0, size=(n, n)) * rate_scale

    return validate_generator(_with_diagonal(off_diagonal))


def perturbed_chain(n: int, seed: int, epsilon: float) -> GeneratorMatrix:
    """Near-equilibrium family Q(eps) = Q0 + eps * C.

    Q0 is the seeded reversible chain; C is the unit forward ring, so the
    stationary fluxes are O(eps) and Q(0) satisfies detailed balance.
    """
    base = random_chain(n, seed, kind="reversible").rates
    ring = np.zeros((n, n))
    for i in range(n):
        ring[(i + 1) % n, i] = 1.0
    return validate_generator(_with_diagonal(base + epsilon * ring))
