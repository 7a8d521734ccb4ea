# src/skeintail/colored_jones.py
"""
Unreduced colored Jones polynomials J(q; n) by cabled skein evaluation.

    J(q; n) = ((-1)^n q^{(n²+2n)/2})^{ω(D)} · <D^n with projectors>

so J(unknot; n) = (-1)^n [n].
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .cable import CabledDiagram, cable
from .config import DEFAULT_LIMITS, Limits
from .diagram import Diagram, writhe
from .errors import EvaluationLimit, InexactDivision, NotLaurentAfterClearing, TooManyCrossings, ZeroPolynomial
from .jones_wenzl import projector_options
from .laurent import LaurentPoly, RationalFn
from .states import KauffmanState, pairing_state_sum
from .transfer import evaluate_cable, evaluate_morse, morseize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColoredJonesResult:
    polynomial: LaurentPoly
    n: int
    writhe: int
    writhe_factor_applied: bool
    peak_width: int = 0

    @property
    def d_n(self) -> Fraction:
        return min_degree(self)

    @property
    def integral(self) -> bool:
        """Only integer powers of q occur."""
        return self.polynomial.has_integral_q_powers()

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "polynomial": self.polynomial.to_pairs(),
            "q_form": self.polynomial.format_q(),
            "d_n": _fmt(self.d_n) if self.polynomial else None,
            "writhe": self.writhe,
            "writhe_factor_applied": self.writhe_factor_applied,
            "peak_width": self.peak_width,
            "integral_q_powers": self.integral,
        }


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def writhe_factor(n: int, w: int) -> LaurentPoly:
    """((-1)^n q^{(n²+2n)/2})^w, exact for either sign of w."""
    sign = -1 if (n * w) % 2 else 1
    return LaurentPoly.monomial((n * n + 2 * n) * w, sign)


def min_degree(r: ColoredJonesResult) -> Fraction:
    if r.polynomial.is_zero():
        raise ZeroPolynomial("colored Jones polynomial")
    return r.polynomial.min_q_degree()


def _check_width(n: int, limits: Limits) -> None:
    if n > limits.jw_max:
        raise EvaluationLimit(f"n={n} exceeds jw_max={limits.jw_max}")


def unnormalized_bracket(d: Diagram, n: int, limits: Limits = DEFAULT_LIMITS) -> Tuple[LaurentPoly, int]:
    """<D^n with projectors> and the peak sweep width used."""
    _check_width(n, limits)
    started = time.perf_counter()
    value, word = evaluate_cable(cable(d, n), limits)
    log.debug("%s n=%d: %d slices, peak width %d, %.3fs", d.label(), n,
              len(word.slices), word.peak_width, time.perf_counter() - started)
    return value, word.peak_width


def colored_jones(d: Diagram, n: int, *, raw: bool = False,
                  limits: Limits = DEFAULT_LIMITS) -> ColoredJonesResult:
    value, peak = unnormalized_bracket(d, n, limits)
    w = writhe(d)
    if not raw:
        value = value * writhe_factor(n, w)
    return ColoredJonesResult(value, n, w, not raw, peak)


# ---------- brute-force oracle ----------
def brute_force_bracket(cd: CabledDiagram, limits: Limits = DEFAULT_LIMITS) -> LaurentPoly:
    """
    Expand every projector in its matching basis and enumerate all Kauffman states
    of the cabled crossings. Exponential; meant as an oracle for small cables.
    """
    crossing_ids = cd.crossing_nodes
    if len(crossing_ids) > limits.brute_limit:
        raise TooManyCrossings(len(crossing_ids), limits.brute_limit)
    ids: Dict[Any, int] = {}
    crossings = [[ids.setdefault(label, len(ids)) for label in cd.nodes[k].legs] for k in crossing_ids]
    projectors = []
    for k in cd.projector_nodes:
        node = cd.nodes[k]
        legs = [ids.setdefault(label, len(ids)) for label in node.legs]
        den, terms = projector_options(node.width)
        projectors.append((legs, den, terms))

    total = RationalFn.of(0)
    for choice in _product([range(len(terms)) for _, _, terms in projectors]):
        weight = LaurentPoly.constant(1)
        den = LaurentPoly.constant(1)
        fixed = []
        for (legs, pden, terms), pick in zip(projectors, choice):
            num, pairs = terms[pick]
            weight = weight * num
            den = den * pden
            fixed.extend((legs[i], legs[j]) for i, j in pairs)
        inner = pairing_state_sum(len(ids), crossings, fixed)
        total = total + RationalFn(weight * inner, den)
    try:
        return total.as_laurent()
    except InexactDivision:
        raise NotLaurentAfterClearing(total.den.format_q()) from None


def _product(ranges: List[range]) -> Iterator[Tuple[int, ...]]:
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (head,) + rest


def brute_force_colored_jones(d: Diagram, n: int, limits: Limits = DEFAULT_LIMITS) -> LaurentPoly:
    _check_width(n, limits)
    return brute_force_bracket(cable(d, n), limits) * writhe_factor(n, writhe(d))


# ---------- state decomposition ----------
@dataclass(frozen=True)
class StateTerm:
    state: KauffmanState
    value: RationalFn           # q^{sgn(σ)} <S_σ>

    @property
    def vanishes(self) -> bool:
        return self.value.is_zero()


@dataclass(frozen=True)
class StateDecomposition:
    """The terms of a state sum over cabled crossings, next to the sweep value they must add up to."""
    diagram: str
    n: int
    loop_crossing: Optional[int]
    terms: Tuple[StateTerm, ...]
    bracket: LaurentPoly

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[StateTerm]:
        return iter(self.terms)

    @property
    def total(self) -> RationalFn:
        return RationalFn.sum(t.value for t in self.terms)

    @property
    def vanishing(self) -> int:
        return sum(1 for t in self.terms if t.vanishes)

    @property
    def surviving(self) -> int:
        return len(self.terms) - self.vanishing

    @property
    def consistent(self) -> bool:
        return self.total == RationalFn.of(self.bracket)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram,
            "n": self.n,
            "loop_crossing": self.loop_crossing,
            "states": len(self.terms),
            "vanishing": self.vanishing,
            "surviving": self.surviving,
            "bracket": self.bracket.format_q(),
            "consistent": self.consistent,
        }


def state_decomposition(d: Diagram, n: int, loop_crossing: Optional[int] = None,
                        limits: Limits = DEFAULT_LIMITS) -> StateDecomposition:
    """
    Resolve every cabled crossing outside the grid of `loop_crossing` (all of them
    when it is None) and evaluate the remaining skein per state. A state whose
    skein turns back into a projector contributes exactly zero.
    """
    _check_width(n, limits)
    cd = cable(d, n, loop_crossing=loop_crossing)
    outside = [k for k in cd.crossing_nodes if k not in cd.loop_set]
    if len(outside) > limits.brute_limit:
        raise TooManyCrossings(len(outside), limits.brute_limit)
    word = morseize(cd)
    terms: List[StateTerm] = []
    for bits in range(1 << len(outside)):
        state = KauffmanState.from_bits(outside, bits)
        value = evaluate_morse(word, limits, fixed=state.as_dict())
        terms.append(StateTerm(state, value))
    bracket, _ = unnormalized_bracket(d, n, limits)
    out = StateDecomposition(d.label(), n, loop_crossing, tuple(terms), bracket)
    log.debug("%s n=%d: %d states, %d vanish", d.label(), n, len(out), out.vanishing)
    return out
