# tests/test_tails.py
import logging
from fractions import Fraction

import pytest

from skeintail.colored_jones import colored_jones
from skeintail.diagram import mirror
from skeintail.errors import DiagramIsAdequate, NotStabilized
from skeintail.laurent import LaurentPoly
from skeintail.tails import (
    TailReport,
    bounds_report,
    gap_check,
    h_n,
    high_coefficients,
    low_coefficients,
    normalized_bracket,
    stabilization_check,
    tail_truncation,
    truncation_from_report,
    window_check,
)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("unknot-kink-neg", lambda n: -n * n - 2 * n),
        ("unlink-clasp", lambda n: -n * n - n),
        ("trefoil-std", lambda n: -3 * n * n - 6 * n),
        ("figure8-std", lambda n: -2 * n * n - 3 * n),
        ("trefoil-r2", lambda n: -4 * n * n - 7 * n),
    ],
)
def test_h_n(name, expected, load):
    d = load(name)
    for n in range(1, 5):
        assert h_n(d, n) == expected(n)


def test_coefficient_windows():
    p = LaurentPoly({-4: 1, 0: -1, 2: 5, 8: 3})
    assert low_coefficients(p, 3) == [1, -1, 0]
    assert high_coefficients(p, 3) == [3, 0, -1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gap_on_a_negative_kink(n, load):
    verdict = gap_check(load("unknot-kink-neg"), n)
    assert verdict.d_n == -n
    assert verdict.h_n == -n * n - 2 * n
    assert verdict.required == 2 * (n - 1)
    assert verdict.passed


def test_gap_is_tight_on_the_clasp(load):
    verdict = gap_check(load("unlink-clasp"), 2)
    assert verdict.d_n == -4
    assert verdict.gap == 2 == verdict.required
    assert verdict.passed


def test_gap_on_a_reidemeister_two_trefoil(load):
    verdict = gap_check(load("trefoil-r2"), 2)
    assert verdict.gap == 6
    assert verdict.passed


def test_gap_rejects_adequate_diagrams(load):
    with pytest.raises(DiagramIsAdequate):
        gap_check(load("trefoil-std"), 2)
    with pytest.raises(ValueError):
        gap_check(load("unknot-kink-neg"), 1)


@pytest.mark.parametrize("n", [2, 3])
def test_window_on_a_negative_kink(n, load):
    verdict = window_check(load("unknot-kink-neg"), n)
    assert verdict.threshold == Fraction(n, 2) - 2
    assert verdict.lowest_degree == n * n + n
    assert verdict.passed


@pytest.mark.parametrize("n", [2, 3])
def test_window_on_the_clasp(n, load):
    verdict = window_check(load("unlink-clasp"), n)
    assert verdict.threshold == Fraction(n, 2) - 4
    assert verdict.passed


def test_normalized_bracket_starts_at_the_gap(load):
    d = load("unknot-kink-neg")
    assert normalized_bracket(d, 2).min_q_degree() == 6


def test_trefoil_tail_stabilizes(load):
    report = stabilization_check(load("trefoil-std"), 3, 2)
    assert report.side == "tail"
    assert report.window == 2
    assert report.stabilization_ok
    assert report.sharp_ok
    assert report.betas[2] == (1, 2)
    assert report.h_values == {2: -24, 3: -45}
    assert all(g == 0 for g in report.gap_values.values())


def test_window_is_capped(load):
    report = stabilization_check(load("trefoil-std"), 3, 10)
    assert report.window == 2


def test_head_is_read_from_the_top_of_j(load, caplog):
    with caplog.at_level(logging.WARNING, logger="skeintail.tails"):
        report = stabilization_check(load("unknot-kink-neg"), 3, 2)
    assert report.side == "head"
    assert report.stabilization_ok
    assert [row.d_n for row in report.rows] == [-2, -3]
    assert report.sharp_ok
    assert "mirror" in caplog.text


def test_truncation(load):
    t = tail_truncation(load("trefoil-std"), 3, 2)
    assert t.coefficient(0) == 1


def test_truncation_needs_stabilization():
    report = TailReport(diagram="x", side="tail", n_max=3, window=2, stabilization_ok=False)
    with pytest.raises(NotStabilized):
        truncation_from_report(report)


def test_report_serializes(load):
    body = stabilization_check(load("trefoil-std"), 3, 2).as_dict()
    assert body["h_values"] == {"2": "-24", "3": "-45"}
    assert body["verdicts"]["stabilization_ok"] is True
    assert [row["n"] for row in body["per_n"]] == [2, 3]


def test_bounds_on_adequate_and_non_adequate(load):
    adequate = bounds_report(load("trefoil-std"), [2])
    assert adequate.a_adequate and adequate.passed
    clasp = bounds_report(load("unlink-clasp"), [2, 3])
    assert not clasp.a_adequate and clasp.passed
    assert clasp.as_dict()["rows"][0]["gap"]["required"] == 2


@pytest.mark.parametrize("name", ["unknot-kink-neg", "trefoil-std", "figure8-std", "unlink-clasp"])
@pytest.mark.parametrize("n", [2, 3])
def test_head_of_a_diagram_is_the_tail_of_its_mirror(name, n, load):
    d = load(name)
    poly = colored_jones(d, n).polynomial
    flipped = colored_jones(mirror(d), n).polynomial
    assert flipped == poly.invert()
    assert high_coefficients(poly, 3) == low_coefficients(flipped, 3)
