# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import io
import json

import pytest

from ansible_collections.singularities.realforms.plugins.module_utils.cli import run, shield_polynomial


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_classify_json():
    code, out, _err = invoke("x^3 + y^8 + x^2*y^3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "classified"
    assert [(r["type"], r["minpoly"], r["interval"]["upper"], r["interval"]["upper_closed"]) for r in report["records"]] == [
        ("E14+", "z + 1/3", "0", True)
    ]
    assert "diagnostics" not in report


def test_classify_text_with_diagnostics():
    code, out, _err = invoke("x^3 + y^8 + 2*x*y^6", "--diagnostics")
    assert code == 0
    assert "E14+: x^3+y^8+a*x*y^6, a = root of z - 2 in (0, +inf)" in out
    assert "complex_type: E14" in out


def test_classify_verbose_logs_to_stderr():
    code, _out, err = invoke("x^3 + y^8 + 2*x*y^6", "--verbose")
    assert code == 0
    assert "[info] classify() - complex type E14" in err


@pytest.mark.parametrize(
    "polynomial, status, code",
    [
        ("x^2*y^2", "not-isolated", 2),
        ("x^3 + 2*x^2*y^2 + x*y^4", "degenerate", 2),
        ("x^2 + y^2", "out-of-scope", 2),
        ("x^3 + z^2", "parse-error", 1),
    ],
)
def test_classify_exit_codes(polynomial, status, code):
    exit_code, out, _err = invoke(polynomial, "--format", "json")
    assert exit_code == code
    assert json.loads(out)["status"] == status


@pytest.mark.parametrize("argv", [("-(x^3)+y^8", "--format", "json"), ("--format", "json", "-x^3 + y^8"), ("--format", "json", "--", "-x^3+y^8")])
def test_classify_polynomial_with_a_leading_minus(argv):
    code, out, _err = invoke(*argv)
    assert code == 0
    records = json.loads(out)["records"]
    assert [(r["type"], r["minpoly"]) for r in records] == [("E14+", "z")]


def test_shield_polynomial_keeps_options_and_negative_numbers():
    assert shield_polynomial(["-x^4", "--milnor-degree-cap", "-5"]) == ["--milnor-degree-cap", "-5", "--", "-x^4"]
    assert shield_polynomial(["x^4", "--verbose"]) == ["x^4", "--verbose"]
    assert shield_polynomial(["-h"]) == ["-h"]


def test_parse_error_reports_position_and_variable():
    _code, out, _err = invoke("x^3 + z^2", "--format", "json")
    assert json.loads(out)["details"] == dict(position=6, variable="z")


@pytest.mark.parametrize("argv", [(), ("x^3", "--format", "xml"), ("perturb", "--param", "1")])
def test_usage_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 1
    assert out == ""
    assert err


def test_perturb_json():
    code, out, _err = invoke("perturb", "--type", "E14+", "--param", "2", "--seed", "7", "--format", "json")
    assert code == 0
    result = json.loads(out)
    assert result["source"] == dict(type="E14+", normal_form="x^3+y^8+a*x*y^6", param="2")
    assert result["seed"] == 7
    assert result["degree"] == 16
    assert len(result["matrix"]) == 4


def test_perturb_text_then_classify():
    code, out, err = invoke("perturb", "--type", "E14+", "--param", "2", "--seed", "7")
    assert code == 0
    assert err.startswith("source: E14+ with a = 2, seed 7")
    code, out, _err = invoke("--format", "json", "--", out.strip())
    assert code == 0
    assert [r["minpoly"] for r in json.loads(out)["records"]] == ["z - 2"]


def test_perturb_rejects_degenerate_parameter():
    code, _out, err = invoke("perturb", "--type", "X9++", "--param", "2")
    assert code == 1
    assert "a^2 != 4" in err
