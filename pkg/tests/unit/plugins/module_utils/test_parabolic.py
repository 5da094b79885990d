# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.classifier import classify
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import QQ_RING
from ansible_collections.singularities.realforms.plugins.module_utils.parabolic import j10_minpoly, x9_minpoly, x9_real_solvable
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import AlgebraicNumber, Interval, upoly

x, y = QQ_RING.gens


def summary(records):
    return [(record.subtype.label, record.parameter.minpoly_str(), str(record.parameter.interval)) for record in records]


def test_j10_minpoly():
    assert j10_minpoly(QQ(1), QQ(1), 1) == upoly([31, 0, -279, 0, 810, 0, -729])
    assert j10_minpoly(QQ(1), QQ(1), -1) == upoly([-31, 0, -279, 0, -810, 0, -729])


def test_x9_minpoly_of_the_fermat_quartic():
    p = x9_minpoly(QQ(1), QQ(0), QQ(0), QQ(1), 1)
    assert p == upoly([-256, 0, 18432, 0, -331776, 0, 0])


@pytest.mark.parametrize(
    "f4, signs, parameter, expected",
    [
        (x**4 + y**4, (1, 1), AlgebraicNumber.rational(0), True),
        (x**4 + y**4, (1, 1), AlgebraicNumber.rational(6), True),
        (x**4 + x**2 * y**2 * 3 + y**4, (1, 1), AlgebraicNumber.rational(3), True),
        (x**4 + x**2 * y**2 * 3 + y**4, (1, 1), AlgebraicNumber.rational(QQ(6, 5)), True),
        (x**4 + x**2 * y**2 * 3 + y**4, (1, 1), AlgebraicNumber.rational(18), False),
        (x**4 - y**4, (1, -1), AlgebraicNumber.rational(0), True),
        (x**4 - y**4, (1, 1), AlgebraicNumber.rational(0), False),
    ],
)
def test_x9_real_solvable(f4, signs, parameter, expected):
    assert x9_real_solvable(f4, signs, parameter) is expected


def test_classify_x9_fermat():
    assert summary(classify(x**4 + y**4)) == [
        ("X9++", "z", "[0, 2)"),
        ("X9++", "z - 6", "(2, 6]"),
    ]


def test_classify_x9_with_two_rational_parameters():
    assert summary(classify(x**4 + x**2 * y**2 * 3 + y**4)) == [
        ("X9++", "z - 6/5", "[0, 2)"),
        ("X9++", "z - 3", "(2, 6]"),
    ]


def test_classify_x9_indefinite():
    assert summary(classify(x**4 - y**4)) == [
        ("X9+-", "z", "(-inf, 0]"),
        ("X9-+", "z", "(-inf, 0]"),
    ]


def test_classify_j10_single_record():
    assert summary(classify(x**3 + x * y**4)) == [("J10+", "z", "[0, 0]")]


def test_classify_j10_three_records_at_zero():
    assert summary(classify(x**3 - x * y**4)) == [
        ("J10+", "z^2 - 9/2", "(-inf, 0)"),
        ("J10+", "z^2 - 9/2", "(0, +inf)"),
        ("J10-", "z", "[0, 0]"),
    ]


def test_classify_j10_normal_form_with_a_equal_one():
    assert summary(classify(x**3 + x**2 * y**2 + x * y**4)) == [("J10+", "z - 1", "(0, +inf)")]


def test_classify_j10_parameter_sign_is_opposite_to_e():
    records = classify(x**3 + x * y**4 + y**6)
    assert len(records) == 1
    assert records[0].subtype.label == "J10+"
    assert records[0].parameter.interval == Interval.negative()
    assert j10_minpoly(QQ(1), QQ(1), 1).rem(records[0].parameter.minpoly).is_zero


def test_classify_j10_three_real_roots():
    records = classify(x**3 + x**2 * y**2 * 3 + x * y**4)
    assert [record.subtype.label for record in records] == ["J10+", "J10+", "J10-"]
    assert records[0].parameter.sign() == -1
    assert records[1].parameter.minpoly_str() == "z - 3"
    assert records[2].parameter.interval == Interval.positive()
