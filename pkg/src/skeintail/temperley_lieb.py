# src/skeintail/temperley_lieb.py
"""
Planar matchings and the Temperley-Lieb algebra TL_n over Q(q^{1/2}).

Boundary points of a tangle with `bottom` points below and `top` points above are
numbered counterclockwise: 0..bottom-1 left to right along the bottom, then
bottom..bottom+top-1 right to left along the top. Top position k (counted from the
left) therefore has index bottom+top-1-k. Products stack the left factor below the
right one, so a word reads bottom to top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from .errors import AlgebraError, IndexOutOfRange, UnknownTangleLetter, WidthMismatch
from .laurent import LaurentPoly, RationalFn, Scalar, delta


@dataclass(frozen=True)
class Matching:
    bottom: int
    top: int
    partner: Tuple[int, ...]

    @property
    def size(self) -> int:
        return self.bottom + self.top

    def top_index(self, position: int) -> int:
        return self.bottom + self.top - 1 - position

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.partner) if i < j)

    def is_planar(self) -> bool:
        stack: List[int] = []
        for i, j in enumerate(self.partner):
            if j == i or self.partner[j] != i:
                return False
            if j > i:
                stack.append(i)
            elif not stack or stack.pop() != j:
                return False
        return not stack

    def is_identity(self) -> bool:
        return self.bottom == self.top and all(
            j == self.size - 1 - i for i, j in enumerate(self.partner))

    def __str__(self) -> str:
        return " ".join(f"{i + 1}-{j + 1}" for i, j in self.pairs())


# ---------- basic tangles ----------
def identity_matching(n: int) -> Matching:
    return Matching(n, n, tuple(2 * n - 1 - k for k in range(2 * n)))


def generator_matching(n: int, i: int) -> Matching:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(i, 1, n - 1)
    partner = list(identity_matching(n).partner)
    b0, b1 = i - 1, i
    t0, t1 = 2 * n - i, 2 * n - 1 - i
    partner[b0], partner[b1] = b1, b0
    partner[t0], partner[t1] = t1, t0
    return Matching(n, n, tuple(partner))


def cap_matching(m: int, i: int) -> Matching:
    """m points below, m-2 above; bottom positions i and i+1 (1-based) are joined."""
    if not 1 <= i <= m - 1:
        raise IndexOutOfRange(i, 1, m - 1)
    top = m - 2
    partner = [0] * (m + top)
    partner[i - 1], partner[i] = i, i - 1
    for p in range(m):
        if p in (i - 1, i):
            continue
        q = p if p < i - 1 else p - 2
        t = m + top - 1 - q
        partner[p], partner[t] = t, p
    return Matching(m, top, tuple(partner))


def cup_matching(m: int, i: int) -> Matching:
    """m-2 points below, m above; top positions i and i+1 (1-based) are joined."""
    if not 1 <= i <= m - 1:
        raise IndexOutOfRange(i, 1, m - 1)
    bottom = m - 2
    size = bottom + m
    partner = [0] * size
    t0, t1 = size - i, size - 1 - i
    partner[t0], partner[t1] = t1, t0
    for p in range(bottom):
        q = p if p < i - 1 else p + 2
        t = size - 1 - q
        partner[p], partner[t] = t, p
    return Matching(bottom, m, tuple(partner))


def matchings(n: int) -> List[Matching]:
    """All planar matchings of 2n points (the basis of TL_n), Catalan(n) of them."""
    out: List[Matching] = []
    for partner in _planar(list(range(2 * n))):
        arr = [0] * (2 * n)
        for i, j in partner:
            arr[i], arr[j] = j, i
        out.append(Matching(n, n, tuple(arr)))
    out.sort(key=lambda m: m.partner)
    return out


def _planar(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for a in _planar(inside):
            for b in _planar(outside):
                yield [(first, points[k])] + a + b


# ---------- composition ----------
def compose(lower: Matching, upper: Matching) -> Tuple[Matching, int]:
    """Stack `upper` on `lower`; return the reduced matching and the closed loops."""
    if lower.top != upper.bottom:
        raise WidthMismatch(lower.top, upper.bottom)
    lb, m, ut = lower.bottom, lower.top, upper.top
    size = lb + ut
    seen = [False] * m          # middle positions already traversed

    def from_lower(idx: int) -> int:
        while True:
            j = lower.partner[idx]
            if j < lb:
                return j
            pos = lb + m - 1 - j
            seen[pos] = True
            k = upper.partner[pos]
            if k >= m:
                return k - m + lb
            seen[k] = True
            idx = lb + m - 1 - k

    def from_upper(idx: int) -> int:
        while True:
            j = upper.partner[idx]
            if j >= m:
                return j - m + lb
            seen[j] = True
            k = lower.partner[lb + m - 1 - j]
            if k < lb:
                return k
            pos = lb + m - 1 - k
            seen[pos] = True
            idx = pos

    partner = [-1] * size
    for r in range(size):
        if partner[r] >= 0:
            continue
        end = from_lower(r) if r < lb else from_upper(r - lb + m)
        partner[r], partner[end] = end, r

    loops = 0
    for p in range(m):
        if seen[p]:
            continue
        pos = p
        while True:
            seen[pos] = True
            j = upper.partner[pos]
            seen[j] = True
            k = lower.partner[lb + m - 1 - j]
            pos = lb + m - 1 - k
            if pos == p:
                break
        loops += 1
    return Matching(lb, ut, tuple(partner)), loops


def closure_loops(m: Matching) -> int:
    """Loops formed by joining top position k to bottom position k."""
    if m.bottom != m.top:
        raise WidthMismatch(m.top, m.bottom)
    size = m.size
    seen = [False] * size
    loops = 0
    for start in range(size):
        if seen[start]:
            continue
        j = start
        while True:
            seen[j] = True
            k = m.partner[j]
            seen[k] = True
            j = size - 1 - k
            if j == start:
                break
        loops += 1
    return loops


# ---------- the algebra ----------
class TLElement:
    """A formal combination of planar matchings with RationalFn coefficients."""

    __slots__ = ("bottom", "top", "_terms")

    def __init__(self, bottom: int, top: int, terms: Union[Mapping[Matching, Scalar], None] = None):
        self.bottom = bottom
        self.top = top
        clean: Dict[Matching, RationalFn] = {}
        for m, c in (terms or {}).items():
            if (m.bottom, m.top) != (bottom, top):
                raise WidthMismatch(m.bottom, bottom)
            c = RationalFn.of(c)
            if c:
                clean[m] = c
        self._terms = clean

    @property
    def n(self) -> int:
        if self.bottom != self.top:
            raise WidthMismatch(self.top, self.bottom)
        return self.bottom

    def items(self) -> List[Tuple[Matching, RationalFn]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].partner)

    def coefficient(self, m: Matching) -> RationalFn:
        return self._terms.get(m, RationalFn.of(0))

    def identity_coefficient(self) -> RationalFn:
        return self.coefficient(identity_matching(self.n))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.bottom, self.top) == (other.bottom, other.top) and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "TLElement") -> "TLElement":
        _same_shape(self, other)
        acc: Dict[Matching, List[RationalFn]] = {m: [c] for m, c in self._terms.items()}
        for m, c in other._terms.items():
            acc.setdefault(m, []).append(c)
        return TLElement(self.bottom, self.top, {m: RationalFn.sum(cs) for m, cs in acc.items()})

    def __neg__(self) -> "TLElement":
        return TLElement(self.bottom, self.top, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "TLElement":
        c = RationalFn.of(c)
        return TLElement(self.bottom, self.top, {m: c * x for m, x in self._terms.items()})

    def __rmul__(self, c: Scalar) -> "TLElement":
        return self.scale(c)

    def __mul__(self, other: Union["TLElement", Scalar]) -> "TLElement":
        if isinstance(other, TLElement):
            return tl_multiply(self, other)
        return self.scale(other)

    def tensor_id(self) -> "TLElement":
        """x ⊗ 1: add one vertical strand on the right."""
        return TLElement(self.bottom + 1, self.top + 1,
                         {embed_matching(m): c for m, c in self._terms.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*[{m}]" for m, c in self.items()) or "0"
        return f"TLElement({self.bottom}->{self.top}: {body})"


def _same_shape(x: TLElement, y: TLElement) -> None:
    if (x.bottom, x.top) != (y.bottom, y.top):
        raise WidthMismatch(x.top, y.top)


def embed_matching(m: Matching) -> Matching:
    """m ⊗ 1: one extra vertical strand on the right."""
    b, t = m.bottom, m.top
    size = b + t + 2

    def moved(i: int) -> int:
        return i if i < b else i + 2

    partner = [0] * size
    for i, j in enumerate(m.partner):
        partner[moved(i)] = moved(j)
    partner[b], partner[b + 1] = b + 1, b
    return Matching(b + 1, t + 1, tuple(partner))


def _delta_power(k: int, cache: Dict[int, LaurentPoly]) -> LaurentPoly:
    if k not in cache:
        cache[k] = delta() ** k
    return cache[k]


def tl_identity(n: int) -> TLElement:
    return TLElement(n, n, {identity_matching(n): 1})


def tl_generator(n: int, i: int) -> TLElement:
    return TLElement(n, n, {generator_matching(n, i): 1})


def tl_basis(m: Matching) -> TLElement:
    return TLElement(m.bottom, m.top, {m: 1})


def tl_multiply(x: TLElement, y: TLElement) -> TLElement:
    """x·y with x below y; every closed loop contributes a factor δ."""
    if x.top != y.bottom:
        raise WidthMismatch(x.top, y.bottom)
    powers: Dict[int, LaurentPoly] = {}
    acc: Dict[Matching, List[RationalFn]] = {}
    for mx, cx in x._terms.items():
        for my, cy in y._terms.items():
            m, loops = compose(mx, my)
            c = cx * cy
            if loops:
                c = c * _delta_power(loops, powers)
            acc.setdefault(m, []).append(c)
    return TLElement(x.bottom, y.top, {m: RationalFn.sum(cs) for m, cs in acc.items()})


def close(x: TLElement) -> RationalFn:
    """Markov trace: join top position k to bottom position k for every k."""
    powers: Dict[int, LaurentPoly] = {}
    return RationalFn.sum(c * _delta_power(closure_loops(m), powers) for m, c in x.items())


def partial_cap(x: TLElement, position: int, side: str = "top") -> TLElement:
    """Join boundary positions `position` and `position+1` (1-based) on one side of x."""
    if side == "top":
        return tl_multiply(x, tl_basis(cap_matching(x.top, position)))
    if side == "bottom":
        return tl_multiply(tl_basis(cup_matching(x.bottom, position)), x)
    raise AlgebraError(f"side must be 'top' or 'bottom', got {side!r}")


# ---------- crossings ----------
Letter = Union[int, str, Tuple]


def crossing_element(n: int, i: int, sign: int) -> TLElement:
    """A crossing of strands i, i+1: positive gives q^{-1/2}·1 + q^{1/2}·e_i."""
    a = LaurentPoly.monomial(-1 if sign > 0 else 1)
    b = LaurentPoly.monomial(1 if sign > 0 else -1)
    return TLElement(n, n, {identity_matching(n): a, generator_matching(n, i): b})


def expand_crossing_tangle(word: Iterable[Letter], n: int) -> TLElement:
    """
    Expand a tangle word, read bottom to top, into the basis of TL_n.

    Letters: a non-zero int ±i is a positive/negative crossing of strands i, i+1;
    "e<i>" or ("e", i) is the generator e_i; "1" or ("1",) is the identity.
    """
    out = tl_identity(n)
    for letter in word:
        out = tl_multiply(out, _letter_element(letter, n))
    return out


def _letter_element(letter: Letter, n: int) -> TLElement:
    if isinstance(letter, int):
        if letter == 0:
            raise IndexOutOfRange(0, 1, n - 1)
        i = abs(letter)
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(i, 1, n - 1)
        return crossing_element(n, i, 1 if letter > 0 else -1)
    if isinstance(letter, str):
        s = letter.strip()
        if s == "1":
            return tl_identity(n)
        if s.startswith("e") and s[1:].isdigit():
            return tl_generator(n, int(s[1:]))
        raise UnknownTangleLetter(letter)
    if isinstance(letter, tuple) and letter:
        kind, args = letter[0], letter[1:]
        if kind == "1" and not args:
            return tl_identity(n)
        try:
            values = [int(a) for a in args]
        except (TypeError, ValueError):
            raise UnknownTangleLetter(letter) from None
        if kind == "e" and len(values) == 1:
            return tl_generator(n, values[0])
        if kind == "X" and len(values) == 2:
            i, sign = values
            if not 1 <= i <= n - 1:
                raise IndexOutOfRange(i, 1, n - 1)
            return crossing_element(n, i, sign)
    raise UnknownTangleLetter(letter)


def word_element(indices: Sequence[int], n: int) -> TLElement:
    """Product e_{i1} e_{i2} ... of generators."""
    return expand_crossing_tangle([("e", i) for i in indices], n)
