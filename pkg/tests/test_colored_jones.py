# tests/test_colored_jones.py
import pytest

from skeintail import corpus
from skeintail.cable import CrossingNode, ProjectorNode, cable
from skeintail.colored_jones import (
    brute_force_colored_jones,
    colored_jones,
    state_decomposition,
    unnormalized_bracket,
    writhe_factor,
)
from skeintail.config import Limits
from skeintail.diagram import add_kink, writhe
from skeintail.errors import EvaluationLimit, InvalidWidth, WidthOverflow
from skeintail.jones_wenzl import projector_trace
from skeintail.laurent import LaurentPoly, RationalFn
from skeintail.states import bracket_oracle
from skeintail.tails import h_n
from skeintail.transfer import morseize


def test_writhe_factor():
    assert writhe_factor(1, 1) == LaurentPoly.monomial(3, -1)
    assert writhe_factor(2, -1) == LaurentPoly.monomial(-8)
    assert writhe_factor(3, 0) == 1


def test_cable_shape(load):
    cd = cable(load("trefoil-std"), 2)
    assert cd.crossing_count == 12
    assert len(cd.projector_nodes) == 1
    assert all(isinstance(cd.nodes[k], CrossingNode) for k in cd.crossing_nodes)
    projector = cd.nodes[cd.projector_nodes[0]]
    assert isinstance(projector, ProjectorNode)
    assert len(projector.legs) == 4


def test_cable_of_free_circles(load):
    cd = cable(load("unlink-0x2"), 3)
    assert cd.crossing_count == 0
    assert len(cd.projector_nodes) == 2


def test_invalid_width(load):
    with pytest.raises(InvalidWidth):
        cable(load("trefoil-std"), 0)
    with pytest.raises(InvalidWidth):
        colored_jones(load("trefoil-std"), 0)


def test_sweep_is_valid(load):
    word = morseize(cable(load("figure8-std"), 2))
    assert word.is_valid()
    assert word.widths[0] == 0 and word.widths[-1] == 0
    assert word.crossing_slices == 16
    assert word.projector_slices == 1


@pytest.mark.parametrize("name", corpus.by_link("unknot"))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_unknot_normalization(name, n, load):
    assert colored_jones(load(name), n).polynomial == projector_trace(n)


@pytest.mark.parametrize("name", corpus.by_link("unlink2"))
def test_unlink_is_multiplicative(name, load):
    for n in (1, 2):
        assert colored_jones(load(name), n).polynomial == projector_trace(n) ** 2


@pytest.mark.parametrize("name", corpus.names())
def test_first_color_is_the_bracket(name, load):
    d = load(name)
    assert colored_jones(d, 1).polynomial == bracket_oracle(d) * writhe_factor(1, writhe(d))


@pytest.mark.parametrize("name", ["unknot-kink-pos", "unknot-kink-neg", "unlink-clasp", "trefoil-std"])
def test_transfer_agrees_with_brute_force(name, load):
    d = load(name)
    assert colored_jones(d, 2).polynomial == brute_force_colored_jones(d, 2)


@pytest.mark.parametrize("move", ["R2", "R3"])
def test_invariant_under_moves(move, load):
    for a, b in corpus.related_pairs(move):
        assert colored_jones(load(a), 2).polynomial == colored_jones(load(b), 2).polynomial


def test_raw_skips_the_writhe_factor(load):
    d = load("trefoil-std")
    raw = colored_jones(d, 2, raw=True)
    assert not raw.writhe_factor_applied
    assert raw.polynomial * writhe_factor(2, writhe(d)) == colored_jones(d, 2).polynomial


@pytest.mark.parametrize("n", [1, 2, 3])
def test_adequate_lowest_degree(n, load):
    d = load("trefoil-std")
    result = colored_jones(d, n)
    assert result.d_n == h_n(d, n) == -3 * n * n - 6 * n
    assert abs(result.polynomial.coefficient(result.polynomial.min_exp)) == 1
    assert result.integral


def test_result_as_dict(load):
    body = colored_jones(load("unknot-0"), 2).as_dict()
    assert body["q_form"] == "q^-2 + 1 + q^2"
    assert body["d_n"] == "-2"
    assert body["writhe"] == 0
    assert body["peak_width"] == 0


def test_limits(load):
    d = load("trefoil-std")
    with pytest.raises(EvaluationLimit):
        colored_jones(d, 9)
    with pytest.raises(WidthOverflow):
        colored_jones(d, 2, limits=Limits(width_cap=2))


def test_state_decomposition_sums_to_the_bracket(load):
    d = load("unlink-clasp")
    terms = state_decomposition(d, 2, loop_crossing=0)
    assert len(terms) == 16
    raw, _ = unnormalized_bracket(d, 2)
    assert RationalFn.sum(t.value for t in terms) == RationalFn.of(raw)


@pytest.mark.slow
def test_trefoil_peak_width_stays_under_the_cap(load, limits):
    result = colored_jones(load("trefoil-std"), 4)
    assert result.peak_width <= limits.width_cap
    assert result.d_n == -72


@pytest.mark.parametrize("name,count", [("unknot-kink-neg", 16), ("unlink-clasp", 256)])
def test_state_decomposition_counts_vanishing_states(name, count, load):
    split = state_decomposition(load(name), 2)
    assert len(split) == count
    assert split.consistent
    assert split.total == RationalFn.of(unnormalized_bracket(load(name), 2)[0])
    assert split.vanishing > 0
    assert split.vanishing + split.surviving == count
    body = split.as_dict()
    assert body["states"] == count
    assert body["vanishing"] == split.vanishing
    assert body["loop_crossing"] is None


def test_state_decomposition_respects_the_ceiling(load):
    with pytest.raises(EvaluationLimit):
        state_decomposition(load("unknot-kink-neg"), 3, limits=Limits(jw_max=2))


@pytest.mark.slow
@pytest.mark.parametrize("move", ["R2", "R3"])
def test_invariant_under_moves_at_three_colors(move, load):
    for a, b in corpus.related_pairs(move):
        assert colored_jones(load(a), 3).polynomial == colored_jones(load(b), 3).polynomial


@pytest.mark.parametrize("n", [1, 2, pytest.param(3, marks=pytest.mark.slow)])
@pytest.mark.parametrize("sign", [1, -1])
def test_kink_only_changes_the_framing(n, sign, load):
    d = load("trefoil-std")
    k = add_kink(d, edge=1, sign=sign)
    raw, _ = unnormalized_bracket(d, n)
    kinked, _ = unnormalized_bracket(k, n)
    assert kinked == raw * writhe_factor(n, -sign)
    assert colored_jones(k, n).polynomial == colored_jones(d, n).polynomial


@pytest.mark.parametrize("n", [2, 3])
def test_figure_eight_lowest_degree_is_sharp(n, load):
    d = load("figure8-std")
    result = colored_jones(d, n)
    assert result.d_n == h_n(d, n) == -2 * n * n - 3 * n
    assert abs(result.polynomial.coefficient(result.polynomial.min_exp)) == 1
