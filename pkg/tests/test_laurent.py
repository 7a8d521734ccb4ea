# tests/test_laurent.py
import random
from fractions import Fraction

import pytest

from skeintail.errors import InexactDivision, ZeroPolynomial
from skeintail.laurent import LaurentPoly, RationalFn, delta


def test_delta_formats_in_q():
    assert delta().format_q() == "-q^-1 - q"


def test_format_q_shapes():
    assert LaurentPoly({-2: 1, 0: 1, 2: 1}).format_q() == "q^-1 + 1 + q"
    assert LaurentPoly.monomial(3, -1).format_q() == "-q^(3/2)"
    assert LaurentPoly.monomial(2, 2).format_q() == "2*q"
    assert LaurentPoly().format_q() == "0"


def test_degrees_are_in_q():
    p = LaurentPoly({-3: 2, 4: 1})
    assert p.min_q_degree() == Fraction(-3, 2)
    assert p.max_q_degree() == 2
    assert not p.has_integral_q_powers()


def test_zero_has_no_degree():
    with pytest.raises(ZeroPolynomial):
        LaurentPoly().min_exp


def test_q_power_accepts_half_integers():
    assert LaurentPoly.q_power(Fraction(3, 2), -1) == LaurentPoly.monomial(3, -1)
    with pytest.raises(ValueError):
        LaurentPoly.q_power(Fraction(1, 3))


def test_arithmetic_with_ints():
    d = delta()
    assert d + 0 == d
    assert d - d == 0
    assert 2 * d == d + d
    assert (d * d).coefficient(0) == 2


def test_negative_powers_only_for_units():
    assert LaurentPoly.monomial(3, -1) ** -1 == LaurentPoly.monomial(-3, -1)
    with pytest.raises(InexactDivision):
        delta() ** -1


def test_divexact():
    d = delta()
    assert (d * d * LaurentPoly.monomial(5)).divexact(d) == d.shift(5)
    with pytest.raises(InexactDivision):
        LaurentPoly.constant(1).divexact(d)


def test_invert_fixes_delta():
    assert delta().invert() == delta()
    assert LaurentPoly.monomial(3).invert() == LaurentPoly.monomial(-3)


def test_pairs_round_trip():
    p = LaurentPoly({-4: 1, 0: -3})
    assert p.to_pairs() == [[-4, 1], [0, -3]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_rational_functions_reduce():
    d = delta()
    r = RationalFn(d * d, d)
    assert r.is_laurent()
    assert r == RationalFn.of(d)
    assert RationalFn(1, d) * d == RationalFn.of(1)


def test_monomial_denominators_fold_into_the_numerator():
    r = RationalFn(delta(), LaurentPoly.monomial(2, -1))
    assert r.is_laurent()
    assert r.as_laurent() == -delta().shift(-2)


def test_rational_arithmetic():
    d = delta()
    half = RationalFn(1, d)
    assert half + half == RationalFn(2, d)
    assert half - half == 0
    assert half / half == RationalFn.of(1)
    assert half.reciprocal() == RationalFn.of(d)
    assert half ** 2 == RationalFn(1, d * d)
    assert half.invert() == half


def test_non_laurent_value_refuses_to_clear():
    with pytest.raises(InexactDivision):
        RationalFn(1, delta()).as_laurent()


def test_sum_groups_denominators():
    d = delta()
    values = [RationalFn(1, d), RationalFn(2, d), RationalFn.of(d)]
    assert RationalFn.sum(values) == RationalFn(3, d) + d


def test_common_denominator():
    d = delta()
    values = [RationalFn.of(1), RationalFn(1, d), RationalFn(1, d * d)]
    den, nums = RationalFn.common_denominator(values)
    for value, num in zip(values, nums):
        assert RationalFn(num, den) == value


def test_sympy_bridge():
    r = RationalFn(1, delta())
    assert RationalFn.from_sympy(r.to_sympy()) == r
    assert LaurentPoly.from_sympy(delta().to_sympy()) == delta()


# ---------- ring and field laws on random operands ----------
def _random_poly(rng, terms=3, spread=4):
    return LaurentPoly({rng.randint(-spread, spread): rng.randint(-3, 3) for _ in range(terms)})


def _random_nonzero_poly(rng):
    p = _random_poly(rng)
    return p if p else LaurentPoly({rng.randint(-4, 4): 1})


def _random_fn(rng):
    return RationalFn(_random_poly(rng), _random_nonzero_poly(rng))


@pytest.mark.parametrize("seed", range(8))
def test_laurent_ring_laws(seed):
    rng = random.Random(seed)
    a, b, c = (_random_poly(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()
    assert a * 1 == a
    assert (a * b).invert() == a.invert() * b.invert()


@pytest.mark.parametrize("seed", range(8))
def test_rational_field_laws(seed):
    rng = random.Random(1000 + seed)
    a, b, c = (_random_fn(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalFn.of(0)
    if b:
        assert (a / b) * b == a
        assert b * b.reciprocal() == RationalFn.of(1)
    assert RationalFn.sum([a, b, c]) == a + b + c
