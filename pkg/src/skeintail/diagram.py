# src/skeintail/diagram.py
"""
Oriented link diagrams in planar-diagram (PD) form.

A crossing X[a, b, c, d] lists its four edge labels counterclockwise starting
from the incoming under-strand, so the under-strand runs a -> c. The crossing is
positive when the over-strand runs d -> b and negative when it runs b -> d.
Free circles (crossingless components) are written "O".

Diagrams are normalized on construction: every component is oriented, edges are
renumbered 1..2c consecutively along each component starting from its smallest
original label, and components are ordered by that label. Crossing order is kept.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import (
    DiagramError,
    DisconnectedCycleInconsistency,
    EdgeLabelCountNotTwo,
    MalformedLine,
)

Slot = Tuple[int, int]          # (crossing index, position 0..3)
Code = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Crossing:
    edges: Code
    sign: int

    def is_outgoing(self, position: int) -> bool:
        """Does the edge at `position` leave this crossing?"""
        if position == 2:
            return True
        if position == 1:
            return self.sign > 0
        if position == 3:
            return self.sign < 0
        return False


@dataclass(frozen=True)
class Diagram:
    crossings: Tuple[Crossing, ...]
    free_circles: int = 0
    components: Tuple[Tuple[int, ...], ...] = ()     # edge labels in orientation order
    name: Optional[str] = field(default=None, compare=False)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_circles

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def codes(self) -> List[Code]:
        return [x.edges for x in self.crossings]

    def label(self) -> str:
        return self.name or "diagram"


# ---------- lookups ----------
def edge_slots(d: Diagram) -> Dict[int, List[Slot]]:
    slots: Dict[int, List[Slot]] = {}
    for x, crossing in enumerate(d.crossings):
        for p, e in enumerate(crossing.edges):
            slots.setdefault(e, []).append((x, p))
    return slots


def writhe(d: Diagram) -> int:
    return sum(x.sign for x in d.crossings)


# ---------- construction ----------
def build_diagram(codes: Iterable[Sequence[int]], free_circles: int = 0,
                  name: Optional[str] = None) -> Diagram:
    """Validate, orient and normalize a list of PD crossings."""
    table: List[Code] = []
    for code in codes:
        if len(code) != 4:
            raise DiagramError(f"crossing {list(code)} does not have four edge labels")
        table.append(tuple(int(e) for e in code))  # type: ignore[arg-type]
    if free_circles < 0:
        raise DiagramError("free circle count must be non-negative")

    counts = Counter(e for code in table for e in code)
    for label, count in sorted(counts.items()):
        if label <= 0:
            raise DiagramError(f"edge label {label} is not a positive integer")
        if count != 2:
            raise EdgeLabelCountNotTwo(label, count)

    slots: Dict[int, List[Slot]] = {}
    for x, code in enumerate(table):
        for p, e in enumerate(code):
            slots.setdefault(e, []).append((x, p))

    signs = [0] * len(table)
    visited: Set[Slot] = set()
    components: List[List[int]] = []

    for x in range(len(table)):
        if (x, 2) not in visited:
            components.append(_walk(table, slots, (x, 2), signs, visited))

    # components that only pass over other strands
    for x in range(len(table)):
        for p in (1, 3):
            if (x, p) in visited:
                continue
            components.append(_walk(table, slots, _over_only_start(table, slots, (x, p)), signs, visited))

    return _canonical(table, signs, components, free_circles, name)


def _other_slot(slots: Dict[int, List[Slot]], e: int, here: Slot) -> Slot:
    first, second = slots[e]
    return second if first == here else first


def _walk(table: List[Code], slots: Dict[int, List[Slot]], start: Slot,
          signs: List[int], visited: Set[Slot]) -> List[int]:
    """Follow a component from the exit slot `start`; record over-strand directions."""
    edges: List[int] = []
    here = start
    while True:
        visited.add(here)
        e = table[here[0]][here[1]]
        edges.append(e)
        nx, np = _other_slot(slots, e, here)
        visited.add((nx, np))
        if np == 2:
            raise DisconnectedCycleInconsistency(nx, f"edge {e} enters the under-strand at its outgoing end")
        if np == 1:
            signs[nx] = -1
        elif np == 3:
            signs[nx] = 1
        nxt = (nx, (np + 2) % 4)
        if nxt == start:
            return edges
        if nxt in visited:
            raise DisconnectedCycleInconsistency(nx, "strand reaches a passage from both directions")
        here = nxt


def _trace(table: List[Code], slots: Dict[int, List[Slot]], start: Slot) -> List[int]:
    edges: List[int] = []
    here = start
    while True:
        e = table[here[0]][here[1]]
        edges.append(e)
        nx, np = _other_slot(slots, e, here)
        here = (nx, (np + 2) % 4)
        if here == start:
            return edges


def _over_only_start(table: List[Code], slots: Dict[int, List[Slot]], seed: Slot) -> Slot:
    """
    Pick the exit slot that orients a component with no under passages.

    The smallest label e0 must be followed by the smaller of its two neighbours;
    when that does not decide (two edges or fewer), e0 runs into its first
    occurrence in crossing order.
    """
    e0 = min(_trace(table, slots, seed))
    first, second = sorted(slots[e0])
    forward = _trace(table, slots, second)          # e0 leaves `second`, arrives at `first`
    if len(forward) > 2 and forward[1] > forward[-1]:
        return first
    return second


def _canonical(table: Sequence[Code], signs: Sequence[int], components: Sequence[Sequence[int]],
               free_circles: int, name: Optional[str]) -> Diagram:
    ordered = sorted((list(c) for c in components), key=min)
    mapping: Dict[int, int] = {}
    rotated: List[Tuple[int, ...]] = []
    for comp in ordered:
        k = comp.index(min(comp))
        comp = comp[k:] + comp[:k]
        for e in comp:
            mapping[e] = len(mapping) + 1
        rotated.append(tuple(mapping[e] for e in comp))
    crossings = tuple(
        Crossing(tuple(mapping[e] for e in code), sign)  # type: ignore[arg-type]
        for code, sign in zip(table, signs)
    )
    return Diagram(crossings=crossings, free_circles=free_circles,
                   components=tuple(rotated), name=name)


# ---------- text and JSON forms ----------
def parse_pd(text: str, name: Optional[str] = None) -> Diagram:
    """
    Parse PD text: one "X a b c d" or "O" per line or per "/"-separated segment.
    Text after '#' is a comment. A JSON object is read as the JSON mirror.
    """
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedLine(exc.lineno, text.splitlines()[exc.lineno - 1] if text else "", "invalid JSON") from exc
        return from_json(obj, name=name)

    codes: List[Code] = []
    circles = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for segment in line.split("/"):
            tokens = segment.replace(",", " ").replace("[", " ").replace("]", " ").split()
            if not tokens:
                continue
            head = tokens[0].upper()
            if head == "O":
                if len(tokens) != 1:
                    raise MalformedLine(lineno, raw, "a free circle takes no labels")
                circles += 1
            elif head == "X":
                if len(tokens) != 5:
                    raise MalformedLine(lineno, raw, "expected four edge labels")
                try:
                    labels = tuple(int(t) for t in tokens[1:])
                except ValueError:
                    raise MalformedLine(lineno, raw, "edge labels must be integers") from None
                if any(e <= 0 for e in labels):
                    raise MalformedLine(lineno, raw, "edge labels must be positive")
                codes.append(labels)  # type: ignore[arg-type]
            else:
                raise MalformedLine(lineno, raw, "expected 'X a b c d' or 'O'")
    if not codes and not circles:
        raise MalformedLine(0, text, "empty diagram")
    return build_diagram(codes, circles, name=name)


def serialize_pd(d: Diagram) -> str:
    lines = [f"X {a} {b} {c} {e}" for a, b, c, e in d.codes()]
    lines += ["O"] * d.free_circles
    return "\n".join(lines) + "\n"


def to_json(d: Diagram) -> Dict[str, Any]:
    return {
        "crossings": [list(code) for code in d.codes()],
        "free_circles": d.free_circles,
        "signs": list(d.signs),
        "components": [list(c) for c in d.components],
    }


def from_json(obj: Dict[str, Any], name: Optional[str] = None) -> Diagram:
    """Inverse of `to_json`; `signs` and `components` are recomputed, not trusted."""
    if not isinstance(obj, dict) or "crossings" not in obj:
        raise DiagramError("JSON diagram needs a 'crossings' list")
    return build_diagram(obj["crossings"], int(obj.get("free_circles", 0)), name=name or obj.get("name"))


# ---------- moves ----------
def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing, keeping the orientation."""
    flipped = []
    for x in d.crossings:
        a, b, c, e = x.edges
        edges = (e, a, b, c) if x.sign > 0 else (b, c, e, a)
        flipped.append(Crossing(edges, -x.sign))
    name = f"mirror({d.name})" if d.name else None
    return replace(d, crossings=tuple(flipped), name=name)


def add_kink(d: Diagram, edge: Optional[int] = None, sign: int = 1) -> Diagram:
    """
    Insert a Reidemeister-I kink of the given sign on `edge`, or on a free circle
    when `edge` is None. The kink's loop never encloses another strand.
    """
    if sign not in (1, -1):
        raise DiagramError(f"kink sign must be +1 or -1, got {sign}")
    table = [list(x.edges) for x in d.crossings]
    signs = [x.sign for x in d.crossings]
    components = [list(c) for c in d.components]
    free = d.free_circles
    top = d.edge_count
    loop, out = top + 1, top + 2

    if edge is None:
        if free == 0:
            raise DiagramError("diagram has no free circle to kink")
        free -= 1
        table.append([out, out, loop, loop] if sign > 0 else [out, loop, loop, out])
        components.append([loop, out])
    else:
        slots = edge_slots(d)
        if edge not in slots:
            raise DiagramError(f"edge {edge} is not in the diagram")
        arrival = next(s for s in slots[edge] if not d.crossings[s[0]].is_outgoing(s[1]))
        table[arrival[0]][arrival[1]] = out
        table.append([edge, out, loop, loop] if sign > 0 else [edge, loop, loop, out])
        for comp in components:
            if edge in comp:
                k = comp.index(edge)
                comp[k + 1:k + 1] = [loop, out]
                break
    signs.append(sign)
    return _canonical([tuple(c) for c in table], signs, components, free, d.name)  # type: ignore[misc]
