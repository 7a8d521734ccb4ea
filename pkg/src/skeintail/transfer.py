# src/skeintail/transfer.py
"""
Transfer evaluation of a cabled, projector-decorated diagram.

`morseize` orders the nodes of a CabledDiagram into a MorseWord: each slice
attaches one node to the running boundary, closing the labels already open and
opening the rest (the cups and caps of the sweep). `evaluate_morse` then carries a
state vector, a map from planar matchings of the open labels to Laurent
coefficients, through the slices. Projectors act through jw(n) over a common
denominator that is divided out exactly at the end.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple, Union

from .cable import CabledDiagram, CrossingNode, ProjectorNode
from .config import DEFAULT_LIMITS, Limits
from .errors import EvaluationLimit, InexactDivision, MorseizationFailed, NotLaurentAfterClearing, WidthOverflow
from .jones_wenzl import projector_options
from .laurent import LaurentPoly, RationalFn, delta
from .states import A_PAIRING, B_PAIRING, Resolution

log = logging.getLogger(__name__)

Label = Hashable
State = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class CrossingSlice:
    node: int
    legs: Tuple[Label, ...]
    closes: Tuple[Label, ...]
    opens: Tuple[Label, ...]
    width: int                  # boundary width after the slice


@dataclass(frozen=True)
class ProjectorSlice:
    node: int
    legs: Tuple[Label, ...]
    closes: Tuple[Label, ...]
    opens: Tuple[Label, ...]
    width: int
    size: int                   # projector strand count


Slice = Union[CrossingSlice, ProjectorSlice]


@dataclass(frozen=True)
class MorseWord:
    slices: Tuple[Slice, ...]

    @property
    def widths(self) -> Tuple[int, ...]:
        return (0,) + tuple(s.width for s in self.slices)

    @property
    def peak_width(self) -> int:
        return max(self.widths)

    @property
    def crossing_slices(self) -> int:
        return sum(1 for s in self.slices if isinstance(s, CrossingSlice))

    @property
    def projector_slices(self) -> int:
        return sum(1 for s in self.slices if isinstance(s, ProjectorSlice))

    def is_valid(self) -> bool:
        """Widths chain and the boundary is empty at both ends."""
        open_labels: set = set()
        for s in self.slices:
            if not set(s.closes) <= open_labels:
                return False
            open_labels -= set(s.closes)
            open_labels |= set(s.opens)
            if len(open_labels) != s.width:
                return False
        return not open_labels


def morseize(cd: CabledDiagram) -> MorseWord:
    """Greedy sweep: attach the node that leaves the narrowest boundary, lowest index first."""
    counts = Counter(label for node in cd.nodes for label in node.legs)
    bad = [label for label, c in counts.items() if c != 2]
    if bad:
        raise MorseizationFailed(f"labels not shared by exactly two legs: {bad[:5]}")

    open_labels: set = set()
    remaining = list(range(len(cd.nodes)))
    slices: List[Slice] = []
    while remaining:
        best = None
        for k in remaining:
            legs = cd.nodes[k].legs
            closing = sum(1 for label in legs if label in open_labels)
            local = Counter(legs)
            opening = sum(1 for label in legs if label not in open_labels and local[label] == 1)
            key = (len(open_labels) - closing + opening, k)
            if best is None or key < best[0]:
                best = (key, k)
        _, k = best  # type: ignore[misc]
        remaining.remove(k)
        node = cd.nodes[k]
        local = Counter(node.legs)
        closes = tuple(label for label in node.legs if label in open_labels)
        opens = tuple(label for label in node.legs if label not in open_labels and local[label] == 1)
        open_labels.difference_update(closes)
        open_labels.update(opens)
        if isinstance(node, CrossingNode):
            slices.append(CrossingSlice(k, node.legs, closes, opens, len(open_labels)))
        else:
            slices.append(ProjectorSlice(k, node.legs, closes, opens, len(open_labels), node.width))

    word = MorseWord(tuple(slices))
    if open_labels or not word.is_valid():
        raise MorseizationFailed("sweep did not return to an empty boundary")
    log.debug("morseized %d nodes, peak width %d", len(slices), word.peak_width)
    return word


# ---------- state vector ----------
def _attach(state: State, legs: Sequence[int], pairing: Sequence[Tuple[int, int]]) -> Tuple[State, int]:
    """
    Glue a node with the given leg labels and internal pairing onto a boundary matching.

    Returns the new boundary matching and the number of closed loops.
    Boundary points are the (non-negative) labels; leg k is the point -k-1.
    """
    conn: Dict[int, int] = {}
    for a, b in state:
        conn[a] = b
        conn[b] = a
    for i, j in pairing:
        conn[-i - 1] = -j - 1
        conn[-j - 1] = -i - 1

    glue: Dict[int, int] = {}
    pending: Dict[int, int] = {}
    for k, label in enumerate(legs):
        p = -k - 1
        if label in conn:
            glue[p] = label
            glue[label] = p
        elif label in pending:
            q = pending.pop(label)
            glue[p] = q
            glue[q] = p
        else:
            pending[label] = p

    terminal: Dict[int, int] = {}
    for a, b in state:
        for x in (a, b):
            if x not in glue:
                terminal[x] = x
    for label, p in pending.items():
        terminal[p] = label

    seen = set()
    pairs: List[Tuple[int, int]] = []
    for start, label in terminal.items():
        if start in seen:
            continue
        seen.add(start)
        p = conn[start]
        while p not in terminal:
            seen.add(p)
            g = glue[p]
            seen.add(g)
            p = conn[g]
        seen.add(p)
        other = terminal[p]
        pairs.append((label, other) if label < other else (other, label))

    loops = 0
    for p in glue:
        if p in seen:
            continue
        q = p
        while True:
            seen.add(q)
            g = glue[q]
            seen.add(g)
            q = conn[g]
            if q == p:
                break
        loops += 1
    pairs.sort()
    return tuple(pairs), loops


_CROSSING_OPTIONS = ((-1, A_PAIRING), (1, B_PAIRING))


def evaluate_morse(word: MorseWord, limits: Limits = DEFAULT_LIMITS,
                   fixed: Optional[Mapping[int, Resolution]] = None) -> RationalFn:
    """
    Sweep the word and return the closed evaluation.

    `fixed` pins the smoothing of some crossing nodes (by node index); the others
    are expanded by the skein relation.
    """
    if word.peak_width > limits.width_cap:
        raise WidthOverflow(word.peak_width, limits.width_cap)

    ids: Dict[Label, int] = {}
    powers: List[LaurentPoly] = [LaurentPoly.constant(1)]
    d = delta()

    def delta_power(k: int) -> LaurentPoly:
        while len(powers) <= k:
            powers.append(powers[-1] * d)
        return powers[k]

    state: Dict[State, LaurentPoly] = {(): LaurentPoly.constant(1)}
    denominator = LaurentPoly.constant(1)
    for s in word.slices:
        legs = [ids.setdefault(label, len(ids)) for label in s.legs]
        if isinstance(s, CrossingSlice):
            if fixed is not None and s.node in fixed:
                res = Resolution(fixed[s.node])
                options = [(LaurentPoly.monomial(res.weight), res.pairing)]
            else:
                options = [(LaurentPoly.monomial(w), p) for w, p in _CROSSING_OPTIONS]
        else:
            if s.size > limits.jw_max:
                raise EvaluationLimit(f"projector of width {s.size} exceeds jw_max={limits.jw_max}")
            den, terms = projector_options(s.size)
            denominator = denominator * den
            options = list(terms)

        acc: Dict[State, Dict[int, int]] = {}
        for matching, coef in state.items():
            for weight, pairing in options:
                new, loops = _attach(matching, legs, pairing)
                term = coef * weight
                if loops:
                    term = term * delta_power(loops)
                bucket = acc.setdefault(new, {})
                for e, c in term.items():
                    bucket[e] = bucket.get(e, 0) + c
        state = {}
        for matching, bucket in acc.items():
            poly = LaurentPoly(bucket)
            if poly:
                state[matching] = poly

    closed = state.get((), LaurentPoly())
    if set(state) - {()}:
        raise MorseizationFailed("boundary not empty after the last slice")
    return RationalFn(closed, denominator)


def evaluate_cable(cd: CabledDiagram, limits: Limits = DEFAULT_LIMITS,
                   fixed: Optional[Mapping[int, Resolution]] = None) -> Tuple[LaurentPoly, MorseWord]:
    """Morseize and evaluate; the result must clear to a Laurent polynomial."""
    word = morseize(cd)
    value = evaluate_morse(word, limits, fixed)
    try:
        return value.as_laurent(), word
    except InexactDivision:
        raise NotLaurentAfterClearing(value.den.format_q()) from None
