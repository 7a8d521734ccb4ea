# tests/test_states.py
from fractions import Fraction

import pytest

from skeintail import corpus
from skeintail.config import Limits
from skeintail.diagram import mirror
from skeintail.errors import IncompleteState, TooManyCrossings
from skeintail.laurent import LaurentPoly, delta
from skeintail.states import (
    KauffmanState,
    Resolution,
    all_A_graph,
    all_B_state,
    bracket_oracle,
    is_A_adequate,
    is_B_adequate,
    loop_crossings,
    resolve,
    state_circle_count,
    state_sum_summary,
    trace_circles,
)


@pytest.mark.parametrize("name", corpus.names())
def test_adequacy_matches_manifest(name, load, manifest_entry):
    d = load(name)
    entry = manifest_entry(name)
    summary = state_sum_summary(d)
    assert summary["s_A"] == entry["s_A"]
    assert summary["s_B"] == entry["s_B"]
    assert summary["A_adequate"] == entry["A_adequate"] == is_A_adequate(d)
    assert summary["B_adequate"] == entry["B_adequate"] == is_B_adequate(d)
    assert summary["c_loop"] == entry["c_loop"]


@pytest.mark.parametrize("name", ["trefoil-std", "figure8-std", "unlink-clasp", "unknot-kink-neg2"])
def test_union_find_agrees_with_face_tracing(name, load):
    d = load(name)
    indices = range(d.crossing_count)
    for bits in range(1 << d.crossing_count):
        state = KauffmanState.from_bits(indices, bits)
        assert resolve(d, state)[0] == trace_circles(d, state)


def test_state_weights():
    state = KauffmanState.from_bits([0, 1, 2], 0b101)
    assert state.as_dict() == {0: Resolution.B, 1: Resolution.A, 2: Resolution.B}
    assert state.sgn_B == 1
    assert state.sgn_A == Fraction(1, 2)
    assert state.sgn == Fraction(1, 2)
    assert state.weight() == LaurentPoly.monomial(1)


def test_resolution_pairings():
    assert Resolution.A.pairing == ((0, 1), (2, 3))
    assert Resolution.B.pairing == ((0, 3), (1, 2))
    assert Resolution("B") is Resolution.B


def test_incomplete_state(load):
    d = load("trefoil-std")
    with pytest.raises(IncompleteState) as excinfo:
        resolve(d, KauffmanState.of({0: Resolution.A}))
    assert excinfo.value.missing == (1, 2)


def test_all_B_count(load):
    d = load("figure8-std")
    assert resolve(d, all_B_state(d))[0] == state_circle_count(d, Resolution.B) == 3


def test_loop_crossings(load):
    assert loop_crossings(load("unknot-kink-neg")) == (0,)
    assert loop_crossings(load("unlink-clasp")) == (0, 1)
    assert loop_crossings(load("trefoil-std")) == ()


def test_state_graph_export(load):
    graph = all_A_graph(load("unknot-kink-neg"))
    exported = graph.export()
    assert exported["vertices"] == [0]
    assert exported["edges"] == [{"crossing": 0, "src": 0, "dst": 0}]
    assert exported["loops"] == [0]


def test_bracket_of_unknots(load):
    d = delta()
    assert bracket_oracle(load("unknot-0")) == d
    assert bracket_oracle(load("unlink-0x2")) == d * d
    assert bracket_oracle(load("unknot-kink-pos")) == d * LaurentPoly.monomial(-3, -1)
    assert bracket_oracle(load("unknot-kink-neg")) == d * LaurentPoly.monomial(3, -1)


@pytest.mark.parametrize("move", ["R2", "R3"])
def test_bracket_is_a_regular_isotopy_invariant(move, load):
    pairs = corpus.related_pairs(move)
    assert pairs
    for a, b in pairs:
        assert bracket_oracle(load(a)) == bracket_oracle(load(b))


def test_clasp_bracket_is_the_unlink(load):
    assert bracket_oracle(load("unlink-clasp")) == delta() * delta()


def test_brute_limit(load):
    with pytest.raises(TooManyCrossings):
        bracket_oracle(load("trefoil-std"), Limits(brute_limit=2))


@pytest.mark.parametrize("name", corpus.names())
def test_mirror_swaps_the_two_adequacies(name, load):
    d = load(name)
    m = mirror(d)
    assert is_A_adequate(d) == is_B_adequate(m)
    assert is_B_adequate(d) == is_A_adequate(m)
    assert state_circle_count(d) == state_circle_count(m, Resolution.B)


def _connected(d):
    return d.free_circles + (1 if d.crossing_count else 0) == 1


@pytest.mark.parametrize("name", corpus.names())
def test_state_circles_bounded_by_crossings(name, load):
    d = load(name)
    if not _connected(d):
        pytest.skip("split diagram")
    assert state_circle_count(d) + state_circle_count(d, Resolution.B) <= d.crossing_count + 2


def test_summary_carries_both_graphs(load):
    summary = state_sum_summary(load("unlink-clasp"))
    assert summary["graphs"]["A"]["loops"] == [0, 1]
    assert summary["graphs"]["B"]["loops"] == [0, 1]
    assert len(summary["graphs"]["A"]["vertices"]) == summary["s_A"]
