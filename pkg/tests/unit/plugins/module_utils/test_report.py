# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import json

import pytest

from ansible_collections.singularities.realforms.plugins.module_utils.classifier import classify
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ParseError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import QQ_RING
from ansible_collections.singularities.realforms.plugins.module_utils.report import OutputReport, build_report

x, y = QQ_RING.gens

E14_RECORD = dict(
    type="E14+",
    normal_form="x^3+y^8+a*x*y^6",
    minpoly="z - 2",
    interval=dict(lower="0", upper="+inf", lower_closed=False, upper_closed=False),
)


def test_build_report_classified():
    report = build_report("x^3 + y^8 + 2*x*y^6", classify, x**3 + y**8 + x * y**6 * 2)
    assert report.status == "classified"
    assert report.exit_code == 0
    assert report.to_dict() == dict(input="x^3 + y^8 + 2*x*y^6", status="classified", records=[E14_RECORD])
    assert report.to_dict(include_diagnostics=True)["diagnostics"]["milnor_number"] == 14


def test_build_report_wraps_classification_errors():
    report = build_report("x^2*y^2", classify, x**2 * y**2)
    assert report.status == "not-isolated"
    assert report.exit_code == 2
    assert report.records == []
    assert report.msg
    assert report.diagnostics["milnor_number"] == "infinite"


def test_out_of_scope_report_names_the_family():
    report = build_report("x^2 + y^2", classify, x**2 + y**2)
    assert report.status == "out-of-scope"
    assert report.details["family"] == "A1"


def test_report_from_parse_error():
    report = OutputReport.from_error("x^3 + z^2", ParseError("Unknown variable z at position 6", position=6, variable="z"))
    assert report.exit_code == 1
    assert report.to_dict()["details"] == dict(position=6, variable="z")


def test_report_json_and_text():
    report = build_report("x^3 + y^8 + 2*x*y^6", classify, x**3 + y**8 + x * y**6 * 2)
    assert json.loads(report.render("json"))["records"] == [E14_RECORD]
    text = report.render("text", include_diagnostics=True).splitlines()
    assert text[0] == "input: x^3 + y^8 + 2*x*y^6"
    assert text[1] == "status: classified"
    assert text[2] == "E14+: x^3+y^8+a*x*y^6, a = root of z - 2 in (0, +inf)"
    assert "milnor_number: 14" in text


def test_status_and_records_must_agree():
    with pytest.raises(ValueError):
        OutputReport("x^3", status="classified", records=[])
