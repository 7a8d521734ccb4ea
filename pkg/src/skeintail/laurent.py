# src/skeintail/laurent.py
"""
Integer Laurent polynomials in v = q^{1/2} and the rational functions over them.

A LaurentPoly stores a sparse map from v-exponent to integer coefficient, so a
power q^{k/2} is the key k. Exact division, GCDs and LCMs are delegated to a
sympy polynomial ring over ZZ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from .errors import InexactDivision, ZeroPolynomial

_RING, _V = ring("v", ZZ)
V = sp.Symbol("v")

Terms = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Terms] = None):
        clean: Dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if c:
                    e = int(e)
                    clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def q_power(cls, k: Union[int, Fraction], coefficient: int = 1) -> "LaurentPoly":
        """coefficient * q^k for integer or half-integer k."""
        e = Fraction(k) * 2
        if e.denominator != 1:
            raise ValueError(f"q-exponent {k} is not a half-integer")
        return cls({int(e): coefficient})

    # ---------- inspection ----------
    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial()
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial()
        return max(self._terms)

    def min_q_degree(self) -> Fraction:
        return Fraction(self.min_exp, 2)

    def max_q_degree(self) -> Fraction:
        return Fraction(self.max_exp, 2)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def has_integral_q_powers(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    # ---------- arithmetic ----------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise InexactDivision(f"{self} is not invertible in Z[q^(1/2), q^(-1/2)]")
            (e, c), = self._terms.items()
            return LaurentPoly({-e * -k: c ** -k})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def invert(self) -> "LaurentPoly":
        """Substitute v -> v^{-1} (equivalently q -> q^{-1})."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        ma, a = _to_ring(self)
        mb, b = _to_ring(other)
        try:
            quotient = a.exquo(b)
        except ExactQuotientFailed as exc:
            raise InexactDivision(f"{other} does not divide {self}") from exc
        return _from_ring(quotient).shift(ma - mb)

    # ---------- conversion ----------
    def to_pairs(self) -> List[List[int]]:
        """[[v-exponent, coefficient], ...] in ascending exponent order."""
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]]) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in pairs)

    def to_sympy(self) -> sp.Expr:
        return sp.Add(*[sp.Integer(c) * V ** e for e, c in self.items()])

    @classmethod
    def from_sympy(cls, expr: sp.Expr) -> "LaurentPoly":
        return RationalFn.from_sympy(expr).as_laurent()

    def format_q(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for e, c in self.items():
            mono = _q_monomial(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format_q()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"


def _q_monomial(e: int) -> str:
    if e == 0:
        return "1"
    if e == 2:
        return "q"
    if e % 2 == 0:
        return f"q^{e // 2}"
    return f"q^({e}/2)"


def _to_ring(p: LaurentPoly):
    """Split p as v^m * P(v) with P a polynomial and P(0) != 0."""
    m = p.min_exp
    return m, _RING.from_dict({(e - m,): c for e, c in p.items()})


def _from_ring(element) -> LaurentPoly:
    return LaurentPoly._wrap({int(monom[0]): int(c) for monom, c in element.terms() if c})


ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def delta() -> LaurentPoly:
    """Value of a trivial circle: -q - q^{-1}."""
    return LaurentPoly({-2: -1, 2: -1})


# ---------- rational functions ----------
Scalar = Union["RationalFn", LaurentPoly, int]


class RationalFn:
    """
    A quotient num/den of Laurent polynomials in lowest terms.

    Canonical form: gcd(num, den) = 1 with den a polynomial whose constant term is
    non-zero and whose leading coefficient is positive. Two equal rational functions
    therefore have identical (num, den).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, int], den: Union[LaurentPoly, int, None] = None):
        num = _coerce(num)
        den = ONE if den is None else _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def of(cls, value: Scalar) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        return cls._raw(_coerce(value), ONE)

    # ---------- inspection ----------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise InexactDivision(f"{self} is not a Laurent polynomial")
        return self.num

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn.of(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # ---------- arithmetic ----------
    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(-self.num, self.den)

    def __add__(self, other: Scalar) -> "RationalFn":
        o = _as_fn(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "RationalFn":
        o = _as_fn(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "RationalFn":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "RationalFn":
        o = _as_fn(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFn._raw(ZERO, ONE)
        if self.den == ONE and o.den == ONE:
            return RationalFn._raw(self.num * o.num, ONE)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFn":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other: Scalar) -> "RationalFn":
        o = _as_fn(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: Scalar) -> "RationalFn":
        return RationalFn.of(other) * self.reciprocal()

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return self.reciprocal() ** (-k)
        return RationalFn(self.num ** k, self.den ** k)

    def invert(self) -> "RationalFn":
        """Substitute q -> q^{-1}."""
        return RationalFn(self.num.invert(), self.den.invert())

    # ---------- helpers ----------
    @staticmethod
    def sum(values: Iterable["RationalFn"]) -> "RationalFn":
        """Sum many terms, grouping by denominator before cross-multiplying."""
        by_den: Dict[LaurentPoly, LaurentPoly] = {}
        for value in values:
            by_den[value.den] = by_den.get(value.den, ZERO) + value.num
        total = RationalFn._raw(ZERO, ONE)
        for den, num in by_den.items():
            if num:
                total = total + RationalFn(num, den)
        return total

    @staticmethod
    def common_denominator(values: Sequence["RationalFn"]) -> Tuple[LaurentPoly, List[LaurentPoly]]:
        """Return (D, [n_1, ...]) with values[i] == n_i / D and D the LCM of denominators."""
        lcm = _RING.one
        for value in values:
            _, d = _to_ring(value.den)
            lcm = lcm.lcm(d)
        den = _from_ring(lcm)
        return den, [value.num * den.divexact(value.den) for value in values]

    def to_sympy(self) -> sp.Expr:
        return self.num.to_sympy() / self.den.to_sympy()

    @classmethod
    def from_sympy(cls, expr: sp.Expr) -> "RationalFn":
        num, den = sp.fraction(sp.cancel(sp.together(sp.sympify(expr))))
        return cls(_poly_from_sympy(num), _poly_from_sympy(den))

    def format_q(self) -> str:
        if self.den == ONE:
            return self.num.format_q()
        return f"({self.num.format_q()}) / ({self.den.format_q()})"

    def __str__(self) -> str:
        return self.format_q()

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"


def _coerce(value: Union[LaurentPoly, int]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial")


def _as_fn(value: object) -> Optional[RationalFn]:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, (LaurentPoly, int)):
        return RationalFn.of(value)
    return None


def _poly_from_sympy(expr: sp.Expr) -> LaurentPoly:
    poly = sp.Poly(expr, V)
    return LaurentPoly((int(m[0]), int(c)) for m, c in poly.terms())


def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        (e, c), = den.items()
        if c == 1:
            return num.shift(-e), ONE
        if c == -1:
            return (-num).shift(-e), ONE
    mn, a = _to_ring(num)
    md, b = _to_ring(den)
    _, a, b = a.cofactors(b)
    if b.LC < 0:
        a, b = -a, -b
    return _from_ring(a).shift(mn - md), _from_ring(b)
