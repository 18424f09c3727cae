"""Shared exception types."""
from __future__ import annotations

from typing import Any


class CapacityError(RuntimeError):
    """An input exceeds a configured work or memory cap."""


class PrecisionError(RuntimeError):
    """A floating-point evaluation failed its residual check."""


class LemmaCounterexample(Exception):
    """A verified identity failed on a concrete input.

    Raised instead of returning silently wrong data: the whole point of the
    verification paths is that mismatches surface loudly.  The offending
    inputs and both values ride along so callers can tabulate them.
    """

    def __init__(self, check: str, inputs: dict[str, Any], expected: Any, actual: Any):
        self.check = check
        self.inputs = inputs
        self.expected = expected
        self.actual = actual
        detail = ", ".join(f"{k}={v}" for k, v in inputs.items())
        super().__init__(f"{check} failed at {detail}: expected {expected}, got {actual}")
