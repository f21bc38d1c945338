"""Exception hierarchy and the CLI exit codes attached to each failure kind."""

from __future__ import annotations

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_NOT_QUASI_GEOMETRIC = 5
EXIT_NOT_PSEUDO_GEOMETRIC = 6
EXIT_INTERNAL = 7


class HFKWordError(Exception):
    """Base class for every failure raised by the library.

    ``stage`` names the pipeline step that failed (``parse``, ``bigon``,
    ``basepoint``, ``grading``, ``normalize``, ``reduce``, ...) and is
    filled in by the pipeline driver when it is not set at the raise site.
    """

    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, *, stage: str | None = None, witness=None):
        super().__init__(message)
        self.message = message
        self.stage = stage
        self.witness = witness

    def __str__(self) -> str:
        if self.stage:
            return f"[{self.stage}] {self.message}"
        return self.message


class RelatorParseError(HFKWordError, ValueError):
    exit_code = EXIT_PARSE


class ValidationError(HFKWordError, ValueError):
    exit_code = EXIT_VALIDATION


class TrivialRelatorError(ValidationError):
    """Cyclic reduction (or a substitution) cancelled the whole word."""


class NotQuasiGeometricError(HFKWordError):
    """A word-level condition needed to run the bigon calculus fails.

    ``rule`` is one of ``"signed-count"``, ``"opposite-run"``,
    ``"square-run"`` or ``"orientation"``.
    """

    exit_code = EXIT_NOT_QUASI_GEOMETRIC

    def __init__(self, message: str, *, rule: str, stage: str | None = None, witness=None):
        super().__init__(message, stage=stage, witness=witness)
        self.rule = rule


class NotPseudoGeometricError(HFKWordError):
    exit_code = EXIT_NOT_PSEUDO_GEOMETRIC


class NormalizationError(NotPseudoGeometricError):
    """No shift, or more than one shift, makes the Alexander grading symmetric mod 2."""

    def __init__(self, message: str, *, candidates=(), stage: str | None = "normalize", witness=None):
        super().__init__(message, stage=stage, witness=witness)
        self.candidates = tuple(candidates)


class ReductionStallError(NotPseudoGeometricError):
    """Relator reduction reached a fixpoint with too many surviving X-letters."""

    def __init__(self, message: str, *, survivors=(), word: str = "", stage: str | None = "reduce"):
        super().__init__(message, stage=stage, witness=tuple(survivors))
        self.survivors = tuple(survivors)
        self.word = word


class DisconnectedGradingError(NotPseudoGeometricError):
    """The primitive-bigon graph has a different number of components than expected."""


class InconsistentGradingError(HFKWordError):
    """A cycle of primitive bigons has non-zero total grading shift."""

    exit_code = EXIT_INTERNAL


class InternalError(HFKWordError):
    exit_code = EXIT_INTERNAL
