"""Exception hierarchy for skewmarkov.

Every error records the module it originates from so that the CLI can
report provenance alongside the message.
"""

from typing import Optional


class SkewMarkovError(ValueError):
    """Base class for all library errors."""

    module = "skewmarkov"

    def to_dict(self) -> dict:
        """Serializable description used in CLI error reports."""
        return {"type": type(self).__name__, "module": self.module, "message": str(self)}


# markov-core


class MarkovCoreError(SkewMarkovError):
    module = "markov-core"


class NotSquareError(MarkovCoreError):
    def __init__(self, shape: tuple):
        self.shape = tuple(shape)
        super().__init__(f"Generator must be a square matrix, got shape {self.shape}")


class NegativeRateError(MarkovCoreError):
    def __init__(self, i: int, j: int, value: float):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"Negative off-diagonal rate q[{i}][{j}] = {value!r}")


class NonFiniteRateError(MarkovCoreError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"Rate q[{i}][{j}] is not finite")


class ColumnSumNonzeroError(MarkovCoreError):
    def __init__(self, j: int, value: float):
        self.j, self.value = j, value
        super().__init__(f"Column {j} sums to {value!r}, expected 0")


class ReducibleError(MarkovCoreError):
    def __init__(self, n_components: int):
        self.n_components = n_components
        super().__init__(
            f"Generator is reducible ({n_components} strongly connected components); "
            "decomposition requires an irreducible chain"
        )


class SingularBeyondToleranceError(MarkovCoreError):
    def __init__(self, message: str):
        super().__init__(message)


class NegativeTimeError(MarkovCoreError):
    def __init__(self, t: float):
        self.t = t
        super().__init__(f"Time must be nonnegative, got {t!r}")


class StepTooLargeError(MarkovCoreError):
    def __init__(self, h: float, norm: float, detail: Optional[str] = None):
        self.h, self.norm = h, norm
        super().__init__(
            f"RK4 step h={h!r} is unstable: {detail}"
            if detail
            else f"Integration blew up with step h={h!r} (state norm {norm!r})"
        )


class BadSizeError(MarkovCoreError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Chain size must be >= 2, got {n}")


class InvalidProbabilityError(MarkovCoreError):
    def __init__(self, message: str):
        super().__init__(message)


# decomposition


class DecompositionError(SkewMarkovError):
    module = "decomposition"


class ToleranceViolationError(DecompositionError):
    def __init__(self, residual: float, tolerance: float):
        self.residual, self.tolerance = residual, tolerance
        super().__init__(
            f"Stationary residual {residual!r} exceeds {tolerance!r}; pi cannot be trusted"
        )


class SmallProbabilityError(DecompositionError):
    def __init__(self, index: int, value: float):
        self.index, self.value = index, value
        super().__init__(
            f"pi[{index}] = {value!r} is below the u-frame guard; Pi^(-1/2) would amplify noise"
        )


class NotSymmetricError(DecompositionError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"Matrix is not symmetric (residual {residual!r})")


# skew-spectral


class SpectralError(SkewMarkovError):
    module = "skew-spectral"


class NotSkewError(SpectralError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"Matrix is not skew-symmetric (residual {residual!r})")


class SpectrumDriftTooLargeError(SpectralError):
    def __init__(self, drift: float, tolerance: float):
        self.drift, self.tolerance = drift, tolerance
        super().__init__(
            f"Eigenvalue real parts drift {drift!r} exceeds {tolerance!r}"
        )


class DegenerateRecombinationFailureError(SpectralError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"Canonical basis is not orthogonal after re-orthogonalization ({residual!r})")


class CanonicalizationFailureError(SpectralError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"SVD pairing residual {residual!r} after rotation")


class DegeneratePairError(SpectralError):
    def __init__(self, pair: int, lam: float):
        self.pair, self.lam = pair, lam
        super().__init__(
            f"Pair {pair} (lambda={lam!r}) is degenerate; the EVD/SVD relation is not unique"
        )


# hamiltonian-dynamics


class DynamicsError(SkewMarkovError):
    module = "hamiltonian-dynamics"


class DimensionMismatchError(DynamicsError):
    def __init__(self, expected: int, got: int, what: str = "vector"):
        self.expected, self.got = expected, got
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, got {got}")


class NotSkewFlowError(DynamicsError):
    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"Conservation report requires a skew flow, trajectory used {generator!r}")


class FlowStepTooLargeError(DynamicsError):
    def __init__(self, h: float, norm: float):
        self.h, self.norm = h, norm
        super().__init__(f"Flow blew up with step h={h!r} (state norm {norm!r})")


# entropy


class EntropyError(SkewMarkovError):
    module = "entropy"


class InfiniteEntropyProductionError(EntropyError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(
            f"Only one direction of edge ({i}, {j}) has a positive rate; entropy production is infinite"
        )


class IdentityViolationError(EntropyError):
    def __init__(self, trace_gram: float, sum_a2: float, sum_lambda2: float):
        self.trace_gram, self.sum_a2, self.sum_lambda2 = trace_gram, sum_a2, sum_lambda2
        super().__init__(
            "Trace identity violated: "
            f"Tr(A^T A)={trace_gram!r}, sum a_ij^2={sum_a2!r}, 2 sum lambda^2={sum_lambda2!r}"
        )


# cli / formats


class InputFormatError(SkewMarkovError):
    module = "cli"

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path, self.line = path, line
        where = ""
        if path:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")
