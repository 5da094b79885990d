# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import pytest
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.classifier import (
    classify,
    eliminate_term,
    normalize_low_jet_exceptional,
    run_classification,
)
from ansible_collections.singularities.realforms.plugins.module_utils.determinator import SingularityType
from ansible_collections.singularities.realforms.plugins.module_utils.errors import (
    DegenerateInput,
    NotCorank2,
    NotIsolated,
    OutOfScope,
)
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import QQ_RING, coefficient
from ansible_collections.singularities.realforms.plugins.module_utils.newton import type_data
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import PipelineState

x, y = QQ_RING.gens


def summary(records):
    return [(record.subtype.label, record.parameter.minpoly_str(), str(record.parameter.interval)) for record in records]


@pytest.mark.parametrize(
    "f, expected",
    [
        (x**3 + y**8 + x * y**6 * 2, [("E14+", "z - 2", "(0, +inf)")]),
        (x**3 + y**8 + x**2 * y**3, [("E14+", "z + 1/3", "(-inf, 0]")]),
        (x**3 - y**8, [("E14-", "z", "(-inf, 0]")]),
        (x**3 + y**7 + x * y**5, [("E12", "z - 1", "(0, +inf)")]),
        (x**3 + x * y**5 + y**8, [("E13", "z - 1", "(0, +inf)")]),
        (x**3 * y + y**5 + x * y**4, [("Z11", "z - 1", "(0, +inf)")]),
        (x**4 + y**5 + x**2 * y**3, [("W12+", "z - 1", "(0, +inf)")]),
    ],
)
def test_classify_exceptional(f, expected):
    assert summary(classify(f)) == expected


def test_classify_e14_after_a_linear_change():
    # x^3 + y^8 + 2*x*y^6 composed with x -> x + y, y -> y
    f = (x + y) ** 3 + y**8 + (x + y) * y**6 * 2
    assert summary(classify(f)) == [("E14+", "z - 2", "(0, +inf)")]


def test_classify_ignores_the_constant_term():
    assert summary(classify(x**3 + y**8 + x * y**6 * 2 + 5)) == [("E14+", "z - 2", "(0, +inf)")]


def test_classify_with_verification():
    assert summary(classify(x**3 + y**8 + x**2 * y**3, verify=True)) == [("E14+", "z + 1/3", "(-inf, 0]")]


def test_classify_fills_diagnostics():
    diagnostics = {}
    classify(x**3 + y**8 + x * y**6 * 2, diagnostics=diagnostics)
    assert diagnostics == dict(corank=2, milnor_number=14, complex_type="E14", determinacy_degree=15)


def test_classify_logs_through_queue_message():
    messages = []
    classify(x**3 + y**8 + x * y**6 * 2, queue_message=lambda level, message: messages.append((level, message)))
    assert ("info", "classify() - complex type E14, Milnor number 14") in messages


def test_run_classification():
    result = run_classification(x**4 + y**4)
    assert len(result.records) == 2
    assert result.diagnostics["complex_type"] == "X9"


@pytest.mark.parametrize(
    "f, error, status",
    [
        (x**2 * y**2, NotIsolated, "not-isolated"),
        (x**3 + x**2 * y**2 * 2 + x * y**4, DegenerateInput, "degenerate"),
        (x**2 + y**2, NotCorank2, "out-of-scope"),
        (x**3 + y**4, OutOfScope, "out-of-scope"),
    ],
)
def test_classify_rejects(f, error, status):
    with pytest.raises(error) as raised:
        classify(f)
    assert raised.value.status == status


def test_classify_keeps_diagnostics_on_error():
    diagnostics = {}
    with pytest.raises(NotIsolated):
        classify(x**2 * y**2, diagnostics=diagnostics)
    assert diagnostics["milnor_number"] == "infinite"
    assert diagnostics["corank"] == 2


def test_normalize_low_jet_exceptional_z_family():
    f = x**3 * y + y**5 + x * y**4
    state = PipelineState(f, SingularityType("Z11"), type_data("Z11"), 11)
    normalize_low_jet_exceptional(state)
    assert state.leading_constant == 1
    assert coefficient(state.current, 3, 1) == 1


def test_eliminate_term_below_the_polygon():
    f = x**3 + y**8 + x**2 * y**3
    state = PipelineState(f, SingularityType("E14"), type_data("E14"), 14)
    eliminate_term(state, x**2 * y**3)
    assert coefficient(state.current, 2, 3) == 0
    assert coefficient(state.current, 1, 6) == QQ(-1, 3)
