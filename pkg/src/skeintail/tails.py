# src/skeintail/tails.py
"""
Low-degree structure of colored Jones polynomials.

For an A-adequate diagram D with c crossings, all-A circle count |s_A| and
writhe ω, the lowest degree of J(q; n) is

    h_n(D) = -n²c/2 - n|s_A| + ω(n²+2n)/2,

and the coefficients of q^{d(n)}, q^{d(n)+2}, ... stabilize as n grows (the tail).
When D is not A-adequate the lowest degree sits at least 2(n-1) above h_n(D),
and the normalized bracket vanishes below n/2 - c/2 - (3/2)c^ℓ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .colored_jones import colored_jones, unnormalized_bracket
from .config import DEFAULT_LIMITS, Limits
from .diagram import Diagram, mirror, writhe
from .errors import DiagramIsAdequate, EvaluationLimit, NotStabilized
from .laurent import LaurentPoly
from .states import is_A_adequate, is_B_adequate, loop_crossing_count, state_circle_count

log = logging.getLogger(__name__)


def _fmt(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def h_n(d: Diagram, n: int) -> Fraction:
    c = d.crossing_count
    s_a = state_circle_count(d)
    w = writhe(d)
    return Fraction(-n * n * c, 2) - n * s_a + Fraction(w * (n * n + 2 * n), 2)


def normalized_bracket(d: Diagram, n: int, limits: Limits = DEFAULT_LIMITS) -> LaurentPoly:
    """q^{n²c/2 + n|s_A|} <D^n with projectors>; its lowest degree is d(n) - h_n(D)."""
    raw, _ = unnormalized_bracket(d, n, limits)
    return raw.shift(n * n * d.crossing_count + 2 * n * state_circle_count(d))


def low_coefficients(poly: LaurentPoly, count: int) -> List[int]:
    """Coefficients of q^{m}, q^{m+2}, ..., q^{m+2(count-1)} with m the lowest degree."""
    low = poly.min_exp
    return [poly.coefficient(low + 4 * k) for k in range(count)]


def high_coefficients(poly: LaurentPoly, count: int) -> List[int]:
    """Coefficients of q^{M}, q^{M-2}, ... with M the highest degree."""
    high = poly.max_exp
    return [poly.coefficient(high - 4 * k) for k in range(count)]


# ---------- stabilization ----------
@dataclass
class TailRow:
    n: int
    d_n: Fraction
    h_n: Fraction
    sign: int                           # sign of the lowest coefficient, divided out
    low_coefficients: List[int] = field(default_factory=list)

    @property
    def gap(self) -> Fraction:
        return self.d_n - self.h_n

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d_n": _fmt(self.d_n),
            "h_n": _fmt(self.h_n),
            "gap": _fmt(self.gap),
            "sign": self.sign,
            "low_coefficients": list(self.low_coefficients),
        }


@dataclass
class TailReport:
    diagram: str
    side: str                           # "tail", or "head" when read from the top of J
    n_max: int
    window: int
    rows: List[TailRow] = field(default_factory=list)
    betas: Dict[int, Tuple[int, int]] = field(default_factory=dict)     # i -> (β_i, first n)
    stabilization_ok: bool = False
    sharp_ok: Optional[bool] = None
    gap_ok: Optional[bool] = None
    window_ok: Optional[bool] = None

    @property
    def h_values(self) -> Dict[int, Fraction]:
        return {row.n: row.h_n for row in self.rows}

    @property
    def gap_values(self) -> Dict[int, Fraction]:
        return {row.n: row.gap for row in self.rows}

    def as_dict(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram,
            "side": self.side,
            "n_max": self.n_max,
            "window": self.window,
            "per_n": [row.as_dict() for row in self.rows],
            "betas": {str(i): {"value": v, "since_n": since} for i, (v, since) in sorted(self.betas.items())},
            "h_values": {str(n): _fmt(h) for n, h in self.h_values.items()},
            "gap_values": {str(n): _fmt(g) for n, g in self.gap_values.items()},
            "verdicts": {
                "stabilization_ok": self.stabilization_ok,
                "sharp_ok": self.sharp_ok,
                "gap_ok": self.gap_ok,
                "window_ok": self.window_ok,
            },
        }


def stabilization_check(d: Diagram, n_max: int, window: Optional[int] = None,
                        limits: Limits = DEFAULT_LIMITS) -> TailReport:
    """
    Compare the low coefficients of J(q; n) for n = 2..n_max.

    β_i is the coefficient of q^{d(n)+2(i-2)}, required to agree for every n ≥ i.
    The window is capped at n_max - 1. When D is B-adequate but not A-adequate the
    head is read from the top of J(D) instead, with h_n and sharpness taken on the mirror.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > limits.jw_max:
        raise EvaluationLimit(f"n_max={n_max} exceeds jw_max={limits.jw_max}")
    window = limits.window if window is None else window
    window = max(1, min(window, n_max - 1))

    side = "tail"
    work = d
    if not is_A_adequate(d):
        if is_B_adequate(d):
            log.warning("%s is not A-adequate; reading the head, measured against its mirror", d.label())
            side, work = "head", mirror(d)
        else:
            log.warning("%s is neither A- nor B-adequate; stabilization is not guaranteed", d.label())

    report = TailReport(diagram=d.label(), side=side, n_max=n_max, window=window)
    for n in range(2, n_max + 1):
        poly = colored_jones(d, n, limits=limits).polynomial
        if side == "head":
            # J(mirror D)(q) = J(D)(q^{-1}): the mirror's lowest degree is minus the top of J(D)
            sign = 1 if poly.coefficient(poly.max_exp) > 0 else -1
            d_n = -poly.max_q_degree()
            coeffs = high_coefficients(poly * sign, window)
        else:
            sign = 1 if poly.coefficient(poly.min_exp) > 0 else -1
            d_n = poly.min_q_degree()
            coeffs = low_coefficients(poly * sign, window)
        report.rows.append(TailRow(n, d_n, h_n(work, n), sign, coeffs))

    ok = True
    for i in range(2, window + 2):
        values = [row.low_coefficients[i - 2] for row in report.rows if row.n >= i]
        if values and all(v == values[0] for v in values):
            report.betas[i] = (values[0], i)
        else:
            ok = False
    report.stabilization_ok = ok
    if is_A_adequate(work):
        report.sharp_ok = all(row.d_n == row.h_n for row in report.rows)
    log.debug("stabilization %s for %s up to n=%d", "ok" if ok else "failed", d.label(), n_max)
    return report


def truncation_from_report(report: TailReport) -> LaurentPoly:
    """Σ β_i q^{2(i-2)} over the stabilized i."""
    if not report.stabilization_ok:
        raise NotStabilized(report.n_max, report.window)
    return LaurentPoly({4 * (i - 2): value for i, (value, _) in report.betas.items()})


def tail_truncation(d: Diagram, n_max: int, window: Optional[int] = None,
                    limits: Limits = DEFAULT_LIMITS) -> LaurentPoly:
    return truncation_from_report(stabilization_check(d, n_max, window, limits))


# ---------- bounds for non-adequate diagrams ----------
@dataclass(frozen=True)
class GapVerdict:
    n: int
    d_n: Fraction
    h_n: Fraction
    required: int

    @property
    def gap(self) -> Fraction:
        return self.d_n - self.h_n

    @property
    def passed(self) -> bool:
        return self.gap >= self.required

    def as_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "d_n": _fmt(self.d_n), "h_n": _fmt(self.h_n), "gap": _fmt(self.gap),
                "required": self.required, "passed": self.passed}


@dataclass(frozen=True)
class WindowVerdict:
    n: int
    threshold: Fraction
    lowest_degree: Optional[Fraction]           # None when the normalized bracket is zero
    offending: Tuple[Tuple[str, int], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.offending

    def as_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "threshold": _fmt(self.threshold), "lowest_degree": _fmt(self.lowest_degree),
                "offending": [list(t) for t in self.offending], "passed": self.passed}


def _require_non_adequate(d: Diagram, check: str, n: int) -> None:
    if is_A_adequate(d):
        raise DiagramIsAdequate(check)
    if n < 2:
        raise ValueError(f"{check} needs n >= 2, got {n}")


def gap_check(d: Diagram, n: int, limits: Limits = DEFAULT_LIMITS) -> GapVerdict:
    _require_non_adequate(d, "gap_check", n)
    result = colored_jones(d, n, limits=limits)
    return GapVerdict(n, result.d_n, h_n(d, n), 2 * (n - 1))


def window_check(d: Diagram, n: int, limits: Limits = DEFAULT_LIMITS) -> WindowVerdict:
    """Coefficients strictly below the threshold must vanish; the boundary term is free."""
    _require_non_adequate(d, "window_check", n)
    c = d.crossing_count
    threshold = Fraction(n, 2) - Fraction(c, 2) - Fraction(3 * loop_crossing_count(d), 2)
    poly = normalized_bracket(d, n, limits)
    if poly.is_zero():
        return WindowVerdict(n, threshold, None)
    offending = tuple((_fmt(Fraction(e, 2)), coef) for e, coef in poly.items() if Fraction(e, 2) < threshold)
    return WindowVerdict(n, threshold, poly.min_q_degree(), offending)  # type: ignore[arg-type]


# ---------- combined report ----------
@dataclass
class BoundsReport:
    diagram: str
    a_adequate: bool
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["passed"] for row in self.rows)

    def as_dict(self) -> Dict[str, Any]:
        return {"diagram": self.diagram, "A_adequate": self.a_adequate,
                "rows": self.rows, "passed": self.passed}


def bounds_report(d: Diagram, ns: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> BoundsReport:
    """Sharpness d(n) = h_n(D) on A-adequate diagrams; gap and window verdicts otherwise."""
    adequate = is_A_adequate(d)
    report = BoundsReport(d.label(), adequate)
    for n in ns:
        if adequate:
            result = colored_jones(d, n, limits=limits)
            poly = result.polynomial
            hn = h_n(d, n)
            lowest = poly.coefficient(poly.min_exp)
            sharp = result.d_n == hn and abs(lowest) == 1
            report.rows.append({"n": n, "d_n": _fmt(result.d_n), "h_n": _fmt(hn),
                                "lowest_coefficient": lowest, "sharp": sharp, "passed": sharp})
        else:
            gap = gap_check(d, n, limits)
            win = window_check(d, n, limits)
            row = {"n": n, "gap": gap.as_dict(), "window": win.as_dict(), "passed": gap.passed and win.passed}
            row.update({"d_n": _fmt(gap.d_n), "h_n": _fmt(gap.h_n)})
            report.rows.append(row)
    return report
