# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.determinator import SingularityType, parse_type_label
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ReductionError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import QQ_RING, Automorphism
from ansible_collections.singularities.realforms.plugins.module_utils.newton import type_data
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import (
    NormalFormRecord,
    PipelineState,
    render_normal_form,
    scaling_minpoly,
    scaling_records,
    sorted_records,
)
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import AlgebraicNumber, Interval, upoly

x, y = QQ_RING.gens


@pytest.mark.parametrize(
    "label, expected",
    [
        ("E12", "x^3+y^7+a*x*y^5"),
        ("E14-", "x^3-y^8+a*x*y^6"),
        ("W13-", "-x^4+x*y^4+a*y^6"),
        ("X9+-", "x^4+a*x^2*y^2-y^4"),
        ("J10+", "x^3+a*x^2*y^2+x*y^4"),
        ("X12+-", "x^4-x^2*y^2+a*y^7"),
        ("J11-", "x^3-x^2*y^2+a*y^7"),
        ("Y5,6-+", "-x^2*y^2+x^5+a*y^6"),
        ("Ytilde5-", "-(x^2+y^2)^2+a*x^5"),
    ],
)
def test_render_normal_form(label, expected):
    assert render_normal_form(parse_type_label(label)) == expected


@pytest.mark.parametrize(
    "nonmoduli, moduli, flips, expected",
    [
        ([((3, 0), 1), ((0, 8), 1)], ((1, 6), 2), (1, 1), ([1] + [0] * 11 + [-4096], 1)),
        ([((3, 0), 1), ((0, 8), 1)], ((1, 6), 0), (1, 1), ([1, 0], 0)),
        ([((4, 0), 1), ((2, 2), 1)], ((0, 7), 1), (1, -1), ([1, 0, 0, 0, -1], -1)),
        ([((3, 0), 1), ((2, 2), 1)], ((0, 7), 1), (1, 1), ([1, 0, 0, 0, 0, 0, -1], 1)),
        ([((2, 2), 1), ((5, 0), 1)], ((0, 5), 1), (1, 1), ([1, 0, -1], 1)),
        ([((2, 2), 1), ((5, 0), 1)], ((0, 6), 2), (1, 1), ([1, 0, 0, 0, 0, -32], 1)),
        ([((2, 2), 1), ((5, 0), 1)], ((0, 6), -2), (1, 1), ([1, 0, 0, 0, 0, 32], -1)),
    ],
)
def test_scaling_minpoly(nonmoduli, moduli, flips, expected):
    coefficients, parameter_sign = expected
    assert scaling_minpoly(nonmoduli, moduli, flips) == (upoly(coefficients), parameter_sign)


def test_scaling_minpoly_needs_independent_monomials():
    with pytest.raises(ValueError):
        scaling_minpoly([((1, 1), 1), ((2, 2), 1)], ((0, 5), 1))


def test_scaling_records_e14():
    records = scaling_records(SingularityType("E14"), [((3, 0), 1, False), ((0, 8), 1, True)], ((1, 6), 2), closed_at_zero=True)
    assert records == [NormalFormRecord(SingularityType("E14", signs=(1,)), AlgebraicNumber(upoly([1, -2]), Interval.positive()))]


def test_scaling_records_negative_parameter_closes_at_zero():
    records = scaling_records(SingularityType("E14"), [((3, 0), 1, False), ((0, 8), 1, True)], ((1, 6), QQ(-1, 3)), closed_at_zero=True)
    assert len(records) == 1
    assert records[0].parameter.minpoly_str() == "z + 1/3"
    assert records[0].parameter.interval == Interval.nonpositive()


def test_scaling_records_free_sign_follows_the_coefficient():
    records = scaling_records(SingularityType("E14"), [((3, 0), 1, False), ((0, 8), -1, True)], ((1, 6), 2), closed_at_zero=True)
    assert [record.subtype.label for record in records] == ["E14-"]


def test_scaling_records_y55_gives_four_records():
    records = scaling_records(SingularityType("Yrs", r=5, s=5), [((2, 2), 1, True), ((5, 0), 1, True)], ((0, 5), 1))
    assert [(record.subtype.label, record.parameter.minpoly_str()) for record in records] == [
        ("Y5,5++", "z + 1"),
        ("Y5,5++", "z - 1"),
        ("Y5,5+-", "z + 1"),
        ("Y5,5+-", "z - 1"),
    ]


def test_scaling_records_without_admissible_flip():
    with pytest.raises(ReductionError):
        scaling_records(SingularityType("E12"), [((2, 2), -1, False), ((0, 7), 1, False)], ((1, 5), 1))


def test_record_to_dict():
    record = NormalFormRecord(SingularityType("J10", signs=(1,)), AlgebraicNumber.rational(0))
    assert record.to_dict() == dict(
        type="J10+",
        normal_form="x^3+a*x^2*y^2+x*y^4",
        minpoly="z",
        interval=dict(lower="0", upper="0", lower_closed=True, upper_closed=True),
    )


def test_sorted_records_orders_and_deduplicates():
    plus = NormalFormRecord(SingularityType("J10", signs=(1,)), AlgebraicNumber(upoly([1, 0, QQ(-9, 2)]), Interval.positive()))
    minus = NormalFormRecord(SingularityType("J10", signs=(-1,)), AlgebraicNumber.rational(0))
    negative = NormalFormRecord(SingularityType("J10", signs=(1,)), AlgebraicNumber(upoly([1, 0, QQ(-9, 2)]), Interval.negative()))
    assert sorted_records([minus, plus, negative, plus]) == [negative, plus, minus]


def test_pipeline_state_tracks_the_transformation():
    messages = []
    f = x**3 + y**8 + x**2 * y**3
    state = PipelineState(f, SingularityType("E14"), type_data("E14"), 14, lambda level, message: messages.append(message), verify=True)
    phi = Automorphism(x - y**3 * QQ(1, 3), y)
    state.substitute(phi, "test")
    assert state.current == x**3 + y**8 - x * y**6 * QQ(1, 3) + y**9 * QQ(2, 27)
    assert state.transformation == phi
    assert state.determinacy_degree == 15
    assert messages and messages[0].startswith("test - apply")


def test_pipeline_state_truncates_at_the_determinacy_degree():
    state = PipelineState(x**3 + y**8 + x**16, SingularityType("E14"), type_data("E14"), 14)
    assert state.current == x**3 + y**8
    state.replace(x**3 + y**8 + x * y**6, "test")
    assert not state.exact
