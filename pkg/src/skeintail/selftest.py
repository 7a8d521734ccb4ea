# src/skeintail/selftest.py
"""The acceptance suite, runnable from the CLI. Reports are exact and contain no timings."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from . import corpus
from .colored_jones import brute_force_colored_jones, colored_jones, state_decomposition, writhe_factor
from .config import DEFAULT_LIMITS, Limits
from .diagram import writhe
from .errors import SkeinTailError
from .jones_wenzl import projector_trace, verify_jw
from .laurent import LaurentPoly, delta
from .states import bracket_oracle
from .tails import bounds_report, gap_check, h_n, stabilization_check, window_check

log = logging.getLogger(__name__)


@dataclass
class Check:
    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SelftestReport:
    quick: bool
    limits: Limits = DEFAULT_LIMITS
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> Dict[str, Any]:
        return {"quick": self.quick, "limits": self.limits.as_dict(), "passed": self.passed,
                "checks": [c.as_dict() for c in self.checks]}


# ---------- individual checks ----------
def _skein_axioms(limits: Limits, quick: bool) -> Check:
    detail: Dict[str, Any] = {"unknot": bracket_oracle(corpus.load("unknot-0"), limits) == delta()}
    for move in ("R2", "R3"):
        for a, b in corpus.related_pairs(move):
            detail[f"{a}~{b}"] = bracket_oracle(corpus.load(a), limits) == bracket_oracle(corpus.load(b), limits)
    return Check("skein-axioms", all(detail.values()), detail)


def _jones_wenzl(limits: Limits, quick: bool) -> Check:
    top = 4 if quick else 5
    detail = {str(n): verify_jw(n, limits).passed for n in range(1, top + 1)}
    return Check("jones-wenzl", all(detail.values()), detail)


def _normalization(limits: Limits, quick: bool) -> Check:
    top = 2 if quick else 4
    detail = {}
    for name in corpus.by_link("unknot"):
        d = corpus.load(name)
        detail[name] = all(colored_jones(d, n, limits=limits).polynomial == projector_trace(n)
                           for n in range(1, top + 1))
    return Check("unknot-normalization", all(detail.values()), detail)


def _oracle(limits: Limits, quick: bool) -> Check:
    detail = {}
    for name in corpus.names():
        d = corpus.load(name)
        expected = bracket_oracle(d, limits) * writhe_factor(1, writhe(d))
        ok = colored_jones(d, 1, limits=limits).polynomial == expected
        if d.crossing_count <= (2 if quick else 3):
            ok = ok and colored_jones(d, 2, limits=limits).polynomial == brute_force_colored_jones(d, 2, limits)
        detail[name] = ok
    return Check("oracle-equivalence", all(detail.values()), detail)


def _calibration(limits: Limits, quick: bool) -> Check:
    detail = {}
    for name in ("unknot-kink-pos", "unknot-kink-neg"):
        d = corpus.load(name)
        factor = bracket_oracle(d, limits).divexact(delta())
        detail[name] = {"factor": factor.format_q(),
                        "cancelled": factor * writhe_factor(1, writhe(d)) == LaurentPoly.constant(1)}
    ok = all(v["cancelled"] for v in detail.values()) and \
        detail["unknot-kink-pos"]["factor"] == LaurentPoly.monomial(-3, -1).format_q()
    return Check("kink-calibration", ok, detail)


def _stabilization(limits: Limits, quick: bool) -> Check:
    report = stabilization_check(corpus.load("trefoil-std"), 3 if quick else 4, 2, limits)
    detail = {"betas": {str(i): v for i, (v, _) in sorted(report.betas.items())},
              "d_n": {str(r.n): str(r.d_n) for r in report.rows}}
    return Check("trefoil-stabilization", report.stabilization_ok, detail)


def _gap(limits: Limits, quick: bool) -> Check:
    detail: Dict[str, Any] = {}
    kink = corpus.load("unknot-kink-neg")
    for n in range(2, (3 if quick else 5) + 1):
        v = gap_check(kink, n, limits)
        detail[f"unknot-kink-neg/{n}"] = v.passed and v.d_n == -n and v.h_n == -n * n - 2 * n
    clasp = corpus.load("unlink-clasp")
    for n in range(2, (2 if quick else 3) + 1):
        detail[f"unlink-clasp/{n}"] = gap_check(clasp, n, limits).passed
    return Check("gap", all(detail.values()), detail)


def _window(limits: Limits, quick: bool) -> Check:
    detail = {}
    for name in ("unknot-kink-neg", "unlink-clasp"):
        d = corpus.load(name)
        for n in range(2, (2 if quick else 3) + 1):
            detail[f"{name}/{n}"] = window_check(d, n, limits).passed
    return Check("vanishing-window", all(detail.values()), detail)


def _sharpness(limits: Limits, quick: bool) -> Check:
    detail = {}
    for name in corpus.select(A_adequate=True, B_adequate=True, components=1):
        d = corpus.load(name)
        ns = [2] if quick else [2, 3]
        detail[name] = bounds_report(d, ns, limits).passed and all(
            colored_jones(d, n, limits=limits).d_n == h_n(d, n) for n in ns)
    return Check("adequate-sharpness", all(detail.values()), detail)


def _decomposition(limits: Limits, quick: bool) -> Check:
    detail = {}
    for name in ("unknot-kink-neg", "unlink-clasp"):
        split = state_decomposition(corpus.load(name), 2, limits=limits)
        detail[name] = {"states": len(split), "vanishing": split.vanishing, "consistent": split.consistent}
    ok = all(v["consistent"] and v["vanishing"] > 0 for v in detail.values())
    return Check("state-decomposition", ok, detail)


CHECKS: List[Callable[[Limits, bool], Check]] = [
    _skein_axioms, _jones_wenzl, _normalization, _oracle, _calibration,
    _stabilization, _gap, _window, _sharpness, _decomposition,
]


def run_selftest(limits: Limits = DEFAULT_LIMITS, quick: bool = False) -> SelftestReport:
    report = SelftestReport(quick=quick, limits=limits)
    for fn in CHECKS:
        name = fn.__name__.lstrip("_").replace("_", "-")
        try:
            check = fn(limits, quick)
        except SkeinTailError as exc:
            check = Check(name, False, {"error": f"{type(exc).__name__}: {exc}"})
        log.debug("selftest %s: %s", check.name, "pass" if check.passed else "FAIL")
        report.checks.append(check)
    return report
