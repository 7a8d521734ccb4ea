# src/skeintail/cable.py
"""
Blackboard n-cables of a diagram, decorated with one Jones-Wenzl projector per
component.

Each base crossing becomes an n×n grid. Lanes of a strand are counted from its
left (relative to its orientation), so lane 0 of the under-strand is the west
column and lane 0 of the over-strand is the top row at a positive crossing and the
bottom row at a negative one. Every grid cell is an ordinary crossing whose legs
are listed (south, east, north, west), i.e. counterclockwise from the incoming
under-strand, with the same A/B smoothing rule as a base crossing.

Labels joining nodes are hashable tuples; each label occurs on exactly two legs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Hashable, List, Optional, Tuple, Union

from .diagram import Diagram
from .errors import InvalidWidth

Label = Hashable


@dataclass(frozen=True)
class CrossingNode:
    legs: Tuple[Label, Label, Label, Label]
    base: int                   # base crossing index
    cell: Tuple[int, int]       # (column, row) in the grid


@dataclass(frozen=True)
class ProjectorNode:
    legs: Tuple[Label, ...]     # TL boundary order: bottom lanes left to right, then top right to left
    component: int              # base component; free circles follow the crossing components
    width: int


Node = Union[CrossingNode, ProjectorNode]


@dataclass(frozen=True)
class CabledDiagram:
    base: Diagram
    cable_width: int
    nodes: Tuple[Node, ...]
    loop_set: FrozenSet[int] = frozenset()
    loop_crossing: Optional[int] = None

    @property
    def crossing_nodes(self) -> List[int]:
        return [k for k, node in enumerate(self.nodes) if isinstance(node, CrossingNode)]

    @property
    def projector_nodes(self) -> List[int]:
        return [k for k, node in enumerate(self.nodes) if isinstance(node, ProjectorNode)]

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_nodes)


def cable(d: Diagram, n: int, loop_crossing: Optional[int] = None) -> CabledDiagram:
    """The n-cable of d with projectors, optionally marking the cells of one base crossing."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidWidth(n)
    if loop_crossing is not None and not 0 <= loop_crossing < d.crossing_count:
        raise ValueError(f"crossing {loop_crossing} is not in the diagram")

    # the projector sits on the first (smallest) edge of each component
    projector_edge = {comp[0] for comp in d.components}

    def external(x: int, position: int, lane: int) -> Label:
        e = d.crossings[x].edges[position]
        if e in projector_edge:
            side = "pin" if d.crossings[x].is_outgoing(position) else "pout"
            return (side, e, lane)
        return ("e", e, lane)

    nodes: List[Node] = []
    loop_set = set()
    for x, crossing in enumerate(d.crossings):
        positive = crossing.sign > 0

        def over_lane(row: int) -> int:
            return n - 1 - row if positive else row

        for row in range(n):
            for col in range(n):
                south = external(x, 0, col) if row == 0 else ("v", x, col, row)
                north = external(x, 2, col) if row == n - 1 else ("v", x, col, row + 1)
                west = external(x, 3, over_lane(row)) if col == 0 else ("h", x, row, col)
                east = external(x, 1, over_lane(row)) if col == n - 1 else ("h", x, row, col + 1)
                if x == loop_crossing:
                    loop_set.add(len(nodes))
                nodes.append(CrossingNode((south, east, north, west), x, (col, row)))

    for k, comp in enumerate(d.components):
        e = comp[0]
        legs = tuple(("pin", e, lane) for lane in range(n)) + \
            tuple(("pout", e, n - 1 - j) for j in range(n))
        nodes.append(ProjectorNode(legs, k, n))

    for c in range(d.free_circles):
        lanes = tuple(("f", c, lane) for lane in range(n))
        nodes.append(ProjectorNode(lanes + lanes[::-1], len(d.components) + c, n))

    return CabledDiagram(d, n, tuple(nodes), frozenset(loop_set), loop_crossing)
