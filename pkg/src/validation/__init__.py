"""Invariant checks and the randomized verification suite."""

from .invariant_checker import InvariantChecker, InvariantIssue
from .verification_suite import (
    Fault,
    Measurement,
    SuiteResult,
    SuiteStats,
    VerificationSuite,
)

__all__ = [
    "InvariantChecker",
    "InvariantIssue",
    "VerificationSuite",
    "SuiteStats",
    "SuiteResult",
    "Measurement",
    "Fault",
]
