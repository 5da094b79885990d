# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import random

import pytest
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import (
    AlgebraicNumber,
    Interval,
    factor_rational,
    format_upoly,
    isolate_real_roots,
    minpoly_in_interval,
    sturm_count,
    upoly,
)


@pytest.mark.parametrize(
    "coefficients, interval, expected",
    [
        ([1, 0, 0, 0, 1], Interval.real_line(), 0),
        ([1, 0, -1, 0], Interval.real_line(), 3),
        ([1, 0, -2], Interval(0, 2), 1),
        ([1, 0, -1, 0], Interval(-1, 1), 1),
        ([1, 0, -1, 0], Interval.closed(-1, 1), 3),
        ([1, 0, -1, 0], Interval.positive(), 1),
        ([1, 0, -1, 0], Interval.nonpositive(), 2),
        ([1, -2, 1], Interval.real_line(), 1),
    ],
)
def test_sturm_count(coefficients, interval, expected):
    assert sturm_count(upoly(coefficients), interval) == expected


def test_sturm_count_rejects_zero():
    with pytest.raises(ValueError):
        sturm_count(upoly([0]), Interval.real_line())


def test_isolate_real_roots_one_root_each():
    p = upoly([1, 0, -5, 0, 4])
    intervals = isolate_real_roots(p)
    assert len(intervals) == 4
    for interval in intervals:
        assert sturm_count(p, interval) == 1
    for interval, root in zip(intervals, (-2, -1, 1, 2)):
        assert interval.contains(root)


def test_isolate_real_roots_separates_a_rational_root_from_a_touching_neighbour():
    # -5z^6+45z^4+81z^2-729 has roots -3 and 3 next to irrational ones
    p = upoly([-5, 0, 45, 0, 81, 0, -729])
    intervals = isolate_real_roots(p)
    assert len(intervals) == 4
    for interval in intervals:
        assert sturm_count(p, interval) == 1
    for left, right in zip(intervals, intervals[1:]):
        assert left.upper < right.lower
    assert any(interval.contains(3) for interval in intervals)
    assert any(interval.contains(-3) for interval in intervals)


def test_isolate_real_roots_of_a_constant():
    assert isolate_real_roots(upoly([7])) == []


def _random_upoly(rng, degree):
    coefficients = [rng.randint(-9, 9) for _i in range(degree + 1)]
    if coefficients[0] == 0:
        coefficients[0] = 1
    roots = [rng.randint(-4, 4) for _i in range(rng.randint(0, 2))]
    p = upoly(coefficients)
    for root in roots:
        p = p * upoly([1, -root])
    return p


@pytest.mark.parametrize("seed", range(5))
def test_isolation_agrees_with_the_sturm_count(seed):
    rng = random.Random(seed)
    for _i in range(20):
        p = _random_upoly(rng, rng.randint(1, 6))
        intervals = isolate_real_roots(p)
        assert len(intervals) == sturm_count(p, Interval.real_line())
        for interval in intervals:
            assert sturm_count(p, interval) == 1
        for left, right in zip(intervals, intervals[1:]):
            assert left.upper < right.lower


@pytest.mark.parametrize("seed", range(5))
def test_factor_rational_rebuilds_the_polynomial(seed):
    rng = random.Random(seed)
    for _i in range(20):
        p = _random_upoly(rng, rng.randint(1, 5))
        product = upoly([p.LC()])
        for factor, mult in factor_rational(p):
            assert factor.LC() == 1
            assert factor.is_irreducible
            product = product * factor**mult
        assert product == p


def test_factor_rational_of_z12_minus_4096():
    factors = factor_rational(upoly([1] + [0] * 11 + [-4096]))
    assert len(factors) == 6
    assert (upoly([1, -2]), 1) in factors
    assert (upoly([1, 2]), 1) in factors


def test_factor_rational_splits_the_x9_parameter_polynomial():
    factors = factor_rational(upoly([25, 0, -8136, 0, 11664]))
    assert factors == [
        (upoly([1, -18]), 1),
        (upoly([1, QQ(-6, 5)]), 1),
        (upoly([1, QQ(6, 5)]), 1),
        (upoly([1, 18]), 1),
    ]


def test_minpoly_in_interval_picks_the_factor():
    number = minpoly_in_interval(upoly([25, 0, -8136, 0, 11664]), Interval(0, 2, True, False))
    assert number.minpoly == upoly([1, QQ(-6, 5)])
    assert number.minpoly_str() == "z - 6/5"
    assert number.interval == Interval(0, 2, True, False)
    assert number.rational_value() == QQ(6, 5)


def test_minpoly_in_interval_requires_exactly_one_root():
    with pytest.raises(ValueError):
        minpoly_in_interval(upoly([1, 0, -1]), Interval.real_line())
    with pytest.raises(ValueError):
        minpoly_in_interval(upoly([1, 0, 1]), Interval.real_line())


def test_rational_algebraic_number():
    number = AlgebraicNumber.rational(QQ(-1, 3))
    assert number.is_rational()
    assert number.rational_value() == QQ(-1, 3)
    assert number.sign() == -1
    assert number.minpoly_str() == "z + 1/3"


def test_sign_and_compare_of_irrational_number():
    root_two = minpoly_in_interval(upoly([1, 0, -2]), Interval.positive())
    assert root_two.sign() == 1
    assert root_two.compare(QQ(7, 5)) == 1
    assert root_two.compare(QQ(3, 2)) == -1
    assert root_two.sign_of(upoly([1, 0, -2])) == 0
    assert root_two.sign_of(upoly([1, -1])) == 1


def test_refine_keeps_the_root():
    root_two = minpoly_in_interval(upoly([1, 0, -2]), Interval.positive())
    refined = root_two.refine().refine()
    assert sturm_count(refined.minpoly, refined.interval) == 1
    assert refined.interval.contains(QQ(141, 100))


def test_interval_rendering():
    assert str(Interval.nonpositive()) == "(-inf, 0]"
    assert str(Interval(2, 6, False, True)) == "(2, 6]"
    assert Interval.positive().to_dict() == dict(lower="0", upper="+inf", lower_closed=False, upper_closed=False)
    assert Interval.negative().negate() == Interval.positive()


def test_interval_bounds_are_checked():
    with pytest.raises(ValueError):
        Interval(1, 0)


def test_format_upoly():
    assert format_upoly(upoly([1, 0, QQ(-9, 2)])) == "z^2 - 9/2"
    assert format_upoly(upoly([1, 0])) == "z"
