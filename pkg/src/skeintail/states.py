# src/skeintail/states.py
"""
Kauffman states: resolutions of crossings, state circles and state graphs.

The A-smoothing of X[a, b, c, d] joins a-b and c-d, the B-smoothing joins a-d and
b-c. A state weighs q^{sgn} with sgn = (#B - #A)/2, i.e. q^{-1/2} per A-smoothing
and q^{1/2} per B-smoothing; a circle is worth δ = -q - q^{-1}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple

from .config import DEFAULT_LIMITS, Limits
from .diagram import Diagram, edge_slots
from .errors import IncompleteState, TooManyCrossings
from .laurent import LaurentPoly, delta

Pairing = Tuple[Tuple[int, int], Tuple[int, int]]


class Resolution(str, Enum):
    A = "A"
    B = "B"

    @property
    def pairing(self) -> Pairing:
        return A_PAIRING if self is Resolution.A else B_PAIRING

    @property
    def weight(self) -> int:
        """v-exponent of the smoothing weight."""
        return -1 if self is Resolution.A else 1


A_PAIRING: Pairing = ((0, 1), (2, 3))
B_PAIRING: Pairing = ((0, 3), (1, 2))


@dataclass(frozen=True)
class KauffmanState:
    """A choice of smoothing for some set of crossings, keyed by crossing index."""
    choice: Tuple[Tuple[int, Resolution], ...]

    @classmethod
    def of(cls, choice: Mapping[int, Resolution]) -> "KauffmanState":
        return cls(tuple(sorted((int(k), Resolution(v)) for k, v in choice.items())))

    @classmethod
    def uniform(cls, indices: Iterable[int], res: Resolution) -> "KauffmanState":
        return cls.of({i: res for i in indices})

    @classmethod
    def from_bits(cls, indices: Sequence[int], bits: int) -> "KauffmanState":
        """Bit k set means crossing indices[k] takes the B-smoothing."""
        return cls.of({i: Resolution.B if bits >> k & 1 else Resolution.A
                       for k, i in enumerate(indices)})

    def as_dict(self) -> Dict[int, Resolution]:
        return dict(self.choice)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.choice)

    @property
    def sgn_A(self) -> Fraction:
        return Fraction(sum(1 for _, r in self.choice if r is Resolution.A), 2)

    @property
    def sgn_B(self) -> Fraction:
        return Fraction(sum(1 for _, r in self.choice if r is Resolution.B), 2)

    @property
    def sgn(self) -> Fraction:
        return self.sgn_B - self.sgn_A

    def weight(self) -> LaurentPoly:
        """q^{sgn}."""
        return LaurentPoly.monomial(int(self.sgn * 2))


@dataclass(frozen=True)
class StateGraph:
    """Vertices are state circles; one edge per crossing joins the circles its segment touches."""
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    crossings: Tuple[int, ...] = field(default=())

    @property
    def loops(self) -> Tuple[int, ...]:
        return tuple(x for x, (u, w) in zip(self.crossings, self.edges) if u == w)

    def has_loop(self) -> bool:
        return any(u == w for u, w in self.edges)

    def export(self) -> Dict[str, Any]:
        return {
            "vertices": list(range(self.vertex_count)),
            "edges": [{"crossing": x, "src": u, "dst": w} for x, (u, w) in zip(self.crossings, self.edges)],
            "loops": list(self.loops),
        }


# ---------- union-find ----------
class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def resolve(d: Diagram, state: KauffmanState) -> Tuple[int, StateGraph]:
    """Smooth every crossing of d per `state`; return (circle count, state graph)."""
    choice = state.as_dict()
    missing = [x for x in range(d.crossing_count) if x not in choice]
    if missing:
        raise IncompleteState(missing)
    uf = _UnionFind(d.edge_count + 1)
    for x, crossing in enumerate(d.crossings):
        for i, j in choice[x].pairing:
            uf.union(crossing.edges[i], crossing.edges[j])
    roots: Dict[int, int] = {}
    for e in range(1, d.edge_count + 1):
        roots.setdefault(uf.find(e), len(roots))
    edges = []
    for x, crossing in enumerate(d.crossings):
        (i, _), (k, _) = choice[x].pairing
        edges.append((roots[uf.find(crossing.edges[i])], roots[uf.find(crossing.edges[k])]))
    count = len(roots) + d.free_circles
    return count, StateGraph(count, tuple(edges), tuple(range(d.crossing_count)))


def trace_circles(d: Diagram, state: KauffmanState) -> int:
    """Count state circles by walking the smoothed diagram slot to slot."""
    choice = state.as_dict()
    missing = [x for x in range(d.crossing_count) if x not in choice]
    if missing:
        raise IncompleteState(missing)
    slots = edge_slots(d)
    inside: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for x in range(d.crossing_count):
        for i, j in choice[x].pairing:
            inside[(x, i)] = (x, j)
            inside[(x, j)] = (x, i)
    seen = set()
    circles = 0
    for start in inside:
        if start in seen:
            continue
        here = start
        while True:
            seen.add(here)
            there = inside[here]
            seen.add(there)
            e = d.crossings[there[0]].edges[there[1]]
            a, b = slots[e]
            here = b if a == there else a
            if here == start:
                break
        circles += 1
    return circles + d.free_circles


def all_A_state(d: Diagram) -> KauffmanState:
    return KauffmanState.uniform(range(d.crossing_count), Resolution.A)


def all_B_state(d: Diagram) -> KauffmanState:
    return KauffmanState.uniform(range(d.crossing_count), Resolution.B)


def all_A_graph(d: Diagram) -> StateGraph:
    return resolve(d, all_A_state(d))[1]


def all_B_graph(d: Diagram) -> StateGraph:
    return resolve(d, all_B_state(d))[1]


def state_circle_count(d: Diagram, res: Resolution = Resolution.A) -> int:
    """|s_A(D)| or |s_B(D)|."""
    return resolve(d, KauffmanState.uniform(range(d.crossing_count), res))[0]


def is_A_adequate(d: Diagram) -> bool:
    return not all_A_graph(d).has_loop()


def is_B_adequate(d: Diagram) -> bool:
    return not all_B_graph(d).has_loop()


def loop_crossings(d: Diagram) -> Tuple[int, ...]:
    """Crossings whose all-A segment has both ends on one state circle."""
    return all_A_graph(d).loops


def loop_crossing_count(d: Diagram) -> int:
    """c(D)^ℓ."""
    return len(loop_crossings(d))


# ---------- brute-force state sums ----------
def pairing_state_sum(label_count: int, crossings: Sequence[Sequence[int]],
                      fixed_pairs: Iterable[Tuple[int, int]] = (),
                      extra_circles: int = 0) -> LaurentPoly:
    """
    Σ over all A/B choices at `crossings` of v^{#B-#A} δ^{circles}.

    Labels are 0..label_count-1; every label must lie on exactly two attachment
    points among the crossings and `fixed_pairs`.
    """
    base = _UnionFind(label_count)
    for a, b in fixed_pairs:
        base.union(a, b)
    base_parent = base.parent
    count = len(crossings)
    tally: Counter = Counter()
    for bits in range(1 << count):
        uf = _UnionFind(0)
        uf.parent = list(base_parent)
        b_count = 0
        for k, code in enumerate(crossings):
            if bits >> k & 1:
                b_count += 1
                uf.union(code[0], code[3])
                uf.union(code[1], code[2])
            else:
                uf.union(code[0], code[1])
                uf.union(code[2], code[3])
        circles = len({uf.find(x) for x in range(label_count)})
        tally[(2 * b_count - count, circles + extra_circles)] += 1
    total = LaurentPoly()
    d = delta()
    powers: Dict[int, LaurentPoly] = {}
    for (exp, circles), n in sorted(tally.items()):
        if circles not in powers:
            powers[circles] = d ** circles
        total = total + powers[circles].shift(exp) * n
    return total


def bracket_oracle(d: Diagram, limits: Limits = DEFAULT_LIMITS) -> LaurentPoly:
    """Un-normalized Kauffman bracket by enumerating all 2^c states."""
    if d.crossing_count > limits.brute_limit:
        raise TooManyCrossings(d.crossing_count, limits.brute_limit)
    codes = [[e - 1 for e in code] for code in d.codes()]
    return pairing_state_sum(d.edge_count, codes, extra_circles=d.free_circles)


def state_sum_summary(d: Diagram) -> Dict[str, Any]:
    """Adequacy data in the shape the CLI prints."""
    a_graph, b_graph = all_A_graph(d), all_B_graph(d)
    return {
        "crossings": d.crossing_count,
        "components": d.component_count,
        "s_A": a_graph.vertex_count,
        "s_B": b_graph.vertex_count,
        "A_adequate": not a_graph.has_loop(),
        "B_adequate": not b_graph.has_loop(),
        "loop_crossings": list(a_graph.loops),
        "c_loop": len(a_graph.loops),
        "graphs": {"A": a_graph.export(), "B": b_graph.export()},
    }
