# src/skeintail/jones_wenzl.py
"""Jones-Wenzl projectors over a common denominator, memoized per n, with checks against Wenzl's recursion."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import sympy as sp

from .config import DEFAULT_LIMITS, Limits
from .errors import EvaluationLimit, IndexOutOfRange, NegativeIndex
from .laurent import ONE, ZERO, LaurentPoly, RationalFn, V, delta
from .temperley_lieb import (
    Matching,
    TLElement,
    close,
    compose,
    embed_matching,
    generator_matching,
    identity_matching,
    matchings,
    partial_cap,
    tl_generator,
    tl_identity,
    tl_multiply,
)

log = logging.getLogger(__name__)


def quantum_integer(n: int) -> LaurentPoly:
    """[n] = (q^{n+1} - q^{-n-1}) / (q - q^{-1}) = q^{-n} + q^{-n+2} + ... + q^n."""
    if n < 0:
        raise NegativeIndex(n)
    return LaurentPoly({-2 * n + 4 * j: 1 for j in range(n + 1)})


def projector_trace(n: int) -> LaurentPoly:
    """Δ_n = close(jw(n)) = (-1)^n [n]; Δ_0 = 1."""
    value = quantum_integer(n)
    return -value if n % 2 else value


def _wenzl_step(previous: TLElement, n: int) -> TLElement:
    q = previous.tensor_id()
    ratio = RationalFn(projector_trace(n - 2), projector_trace(n - 1))
    middle = tl_multiply(tl_multiply(q, tl_generator(n, n - 1)), q)
    return q - middle.scale(ratio)


def _descending_word(n: int, i: int) -> Matching:
    """e_{n-1} e_{n-2} ... e_i as a single matching."""
    word = generator_matching(n, n - 1)
    for k in range(n - 2, i - 1, -1):
        word, _ = compose(word, generator_matching(n, k))
    return word


@lru_cache(maxsize=None)
def _projector_fraction(n: int) -> Tuple[LaurentPoly, Dict[Matching, LaurentPoly]]:
    """
    jw(n) = N / D with Laurent numerators, from the one-sided recursion

        jw(n) = (jw(n-1)⊗1) · (1 + Σ_i [i-1]/[n-1] · e_{n-1} ... e_i)

    so each step multiplies by single matchings only and D is the product of quantum integers.
    """
    if n == 1:
        return ONE, {identity_matching(1): ONE}
    den, nums = _projector_fraction(n - 1)
    lifted = {embed_matching(m): c for m, c in nums.items()}
    top = quantum_integer(n - 1)
    acc: Dict[Matching, LaurentPoly] = {m: c * top for m, c in lifted.items()}
    d = delta()
    for i in range(1, n):
        word, weight = _descending_word(n, i), quantum_integer(i - 1)
        for m, c in lifted.items():
            res, loops = compose(m, word)
            term = c * weight
            if loops:
                term = term * d ** loops
            acc[res] = acc.get(res, ZERO) + term
    return den * top, {m: c for m, c in acc.items() if c}


@lru_cache(maxsize=None)
def _jw(n: int) -> TLElement:
    den, nums = _projector_fraction(n)
    out = TLElement(n, n, {m: RationalFn(c, den) for m, c in nums.items()})
    log.debug("built jw(%d): %d basis terms", n, len(out))
    return out


def _check_size(n: int, limits: Limits) -> None:
    if n < 1:
        raise IndexOutOfRange(n, 1)
    if n > limits.jw_max:
        raise EvaluationLimit(f"jw({n}) exceeds jw_max={limits.jw_max}")


def jw(n: int, limits: Limits = DEFAULT_LIMITS) -> TLElement:
    """The n-th Jones-Wenzl projector in the planar-matching basis of TL_n."""
    _check_size(n, limits)
    return _jw(n)


def build_projector(n: int) -> TLElement:
    """jw(n) from scratch by Wenzl's two-sided recursion, bypassing the memo."""
    if n < 1:
        raise IndexOutOfRange(n, 1)
    out = tl_identity(1)
    for k in range(2, n + 1):
        out = _wenzl_step(out, k)
    return out


@lru_cache(maxsize=None)
def projector_options(n: int) -> Tuple[LaurentPoly, Tuple[Tuple[LaurentPoly, Tuple[Tuple[int, int], ...]], ...]]:
    """
    jw(n) over a common denominator: (D, ((numerator, pairs), ...)).

    `pairs` are the matching's pairs in TL boundary order, ready for the sweep.
    Callers enforce the projector ceiling.
    """
    terms = _jw(n).items()
    den, nums = RationalFn.common_denominator([c for _, c in terms])
    return den, tuple((num, m.pairs()) for (m, _), num in zip(terms, nums))


def cap_kills_projector(n: int, position: int) -> bool:
    """True iff joining top positions `position`, `position+1` of jw(n) gives zero."""
    if n < 2 or not 1 <= position <= n - 1:
        raise IndexOutOfRange(position, 1, max(n - 1, 1))
    return partial_cap(jw(n), position, "top").is_zero()


# ---------- verification ----------
@dataclass
class JWReport:
    n: int
    annihilated_left: Dict[int, bool] = field(default_factory=dict)
    annihilated_right: Dict[int, bool] = field(default_factory=dict)
    idempotent: bool = False
    identity_coefficient_one: bool = False
    trace_ok: bool = False
    caps_vanish: Dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (all(self.annihilated_left.values()) and all(self.annihilated_right.values())
                and self.idempotent and self.identity_coefficient_one and self.trace_ok
                and all(self.caps_vanish.values()))

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "passed": self.passed,
            "annihilated_left": {str(k): v for k, v in self.annihilated_left.items()},
            "annihilated_right": {str(k): v for k, v in self.annihilated_right.items()},
            "idempotent": self.idempotent,
            "identity_coefficient_one": self.identity_coefficient_one,
            "trace_ok": self.trace_ok,
            "caps_vanish": {str(k): v for k, v in self.caps_vanish.items()},
        }


def _squares_to_itself(n: int) -> bool:
    """p·p == p, compared on numerators over D² so no term needs reducing."""
    den, nums = _projector_fraction(n)
    d = delta()
    acc: Dict[Matching, LaurentPoly] = {}
    for ma, ca in nums.items():
        for mb, cb in nums.items():
            m, loops = compose(ma, mb)
            term = ca * cb
            if loops:
                term = term * d ** loops
            acc[m] = acc.get(m, ZERO) + term
    return {m: c for m, c in acc.items() if c} == {m: c * den for m, c in nums.items()}


def verify_jw(n: int, limits: Limits = DEFAULT_LIMITS) -> JWReport:
    p = jw(n, limits)
    report = JWReport(n=n)
    for i in range(1, n):
        e = tl_generator(n, i)
        report.annihilated_left[i] = tl_multiply(e, p).is_zero()
        report.annihilated_right[i] = tl_multiply(p, e).is_zero()
        report.caps_vanish[i] = partial_cap(p, i, "top").is_zero()
    report.idempotent = _squares_to_itself(n)
    report.identity_coefficient_one = p.identity_coefficient() == RationalFn.of(1)
    report.trace_ok = close(p) == RationalFn.of(projector_trace(n))
    return report


# ---------- uniqueness ----------
def solve_projector(n: int) -> Optional[TLElement]:
    """
    Solve e_i·x = x·e_i = 0 for x = 1 + Σ u_m·m over the non-identity basis.

    Returns the unique solution, or None when the system is singular or inconsistent.
    """
    ident = identity_matching(n)
    if n == 1:
        return tl_identity(1)
    basis = matchings(n)
    others = [m for m in basis if m != ident]
    unknowns = sp.symbols(f"u0:{len(others)}")
    coeff: Dict[Tuple[int, str, Any], sp.Expr] = {}

    def add(key, value):
        coeff[key] = coeff.get(key, sp.Integer(0)) + value

    terms: List[Tuple[Any, Any]] = [(ident, sp.Integer(1))] + list(zip(others, unknowns))
    dpow: Dict[int, sp.Expr] = {}
    for i in range(1, n):
        g = generator_matching(n, i)
        for m, u in terms:
            for side, (res, loops) in (("L", compose(g, m)), ("R", compose(m, g))):
                if loops not in dpow:
                    dpow[loops] = (-V**2 - V**-2) ** loops
                add((i, side, res), u * dpow[loops])
    equations = [sp.expand(e) for e in coeff.values()]
    solutions = sp.linsolve(equations, list(unknowns))
    if solutions == sp.S.EmptySet:
        return None
    values = next(iter(solutions))
    if any(val.free_symbols & set(unknowns) for val in values):
        return None
    out = {ident: RationalFn.of(1)}
    for m, val in zip(others, values):
        out[m] = RationalFn.from_sympy(val)
    return TLElement(n, n, out)
