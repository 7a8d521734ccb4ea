# src/skeintail/errors.py
from __future__ import annotations

from typing import Any, Optional


class SkeinTailError(Exception):
    """Base class for every error raised by skeintail."""


# ---------- diagrams ----------
class DiagramError(SkeinTailError, ValueError):
    pass


class MalformedLine(DiagramError):
    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


class EdgeLabelCountNotTwo(DiagramError):
    def __init__(self, label: int, count: int):
        self.label = label
        self.count = count
        super().__init__(f"edge label {label} occurs {count} time(s); every label must occur exactly twice")


class DisconnectedCycleInconsistency(DiagramError):
    def __init__(self, crossing: int, detail: str):
        self.crossing = crossing
        super().__init__(f"crossing {crossing}: {detail}")


class InvalidWidth(DiagramError):
    def __init__(self, n: Any):
        self.n = n
        super().__init__(f"cable width must be a positive integer, got {n!r}")


# ---------- states ----------
class StateError(SkeinTailError, ValueError):
    pass


class IncompleteState(StateError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"state does not resolve crossing(s) {list(self.missing)}")


class TooManyCrossings(StateError):
    def __init__(self, crossings: int, limit: int):
        self.crossings = crossings
        self.limit = limit
        super().__init__(f"{crossings} crossings exceed the brute-force limit of {limit}")


# ---------- algebra ----------
class AlgebraError(SkeinTailError, ValueError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    def __init__(self, index: int, low: int, high: Optional[int] = None):
        self.index = index
        bound = f"[{low}, {high}]" if high is not None else f"[{low}, ...)"
        super().__init__(f"index {index} outside {bound}")


class WidthMismatch(AlgebraError):
    def __init__(self, left: int, right: int):
        super().__init__(f"cannot stack a tangle with {left} top points on one with {right} bottom points")


class UnknownTangleLetter(AlgebraError):
    def __init__(self, letter: Any):
        self.letter = letter
        super().__init__(f"unknown tangle letter {letter!r}")


class NegativeIndex(AlgebraError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"index must be non-negative, got {n}")


class ZeroPolynomial(AlgebraError):
    def __init__(self, what: str = "polynomial"):
        super().__init__(f"{what} is zero; its minimum degree is undefined")


class InexactDivision(AlgebraError):
    pass


# ---------- evaluation ----------
class EvaluationError(SkeinTailError, RuntimeError):
    pass


class MorseizationFailed(EvaluationError):
    pass


class WidthOverflow(EvaluationError):
    def __init__(self, width: int, cap: int):
        self.width = width
        self.cap = cap
        super().__init__(f"sweep needs width {width}, above the cap of {cap}")


class NotLaurentAfterClearing(EvaluationError):
    def __init__(self, denominator: Optional[str] = None):
        self.denominator = denominator
        super().__init__(f"evaluation left a non-unit denominator {denominator}")


class EvaluationLimit(EvaluationError):
    pass


# ---------- verdicts ----------
class VerdictError(SkeinTailError, ValueError):
    pass


class DiagramIsAdequate(VerdictError):
    def __init__(self, check: str):
        super().__init__(f"{check} applies to diagrams that are not A-adequate")


class NotStabilized(VerdictError):
    def __init__(self, n_max: int, window: int):
        self.n_max = n_max
        self.window = window
        super().__init__(f"tail coefficients did not stabilize up to n={n_max} in a window of {window}")
