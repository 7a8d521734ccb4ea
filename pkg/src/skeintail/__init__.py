"""skeintail: colored Jones polynomials of cabled link diagrams and their tails."""

from .errors import SkeinTailError
from .config import Limits, DEFAULT_LIMITS

__all__ = ["SkeinTailError", "Limits", "DEFAULT_LIMITS"]
