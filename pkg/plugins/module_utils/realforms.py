# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import traceback

from ansible.module_utils.basic import env_fallback, missing_required_lib
from ansible_collections.singularities.realforms.plugins.module_utils.constants import (
    DEFAULT_MILNOR_DEGREE_CAP,
    OUTPUT_FORMATS,
    OUTPUT_LEVELS,
    STATUS_CLASSIFIED,
)
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ParseError, RealFormsError
from ansible_collections.singularities.realforms.plugins.module_utils.report import OutputReport, build_report

try:
    from ansible_collections.singularities.realforms.plugins.module_utils.classifier import classify
    from ansible_collections.singularities.realforms.plugins.module_utils.parser import parse_polynomial
    from ansible_collections.singularities.realforms.plugins.module_utils.perturb import perturb

    HAS_SYMPY = True
    SYMPY_IMPORT_ERROR = None
except ImportError:
    HAS_SYMPY = False
    SYMPY_IMPORT_ERROR = traceback.format_exc()


def realforms_argument_spec():
    return dict(
        output_level=dict(type="str", default="normal", choices=OUTPUT_LEVELS, fallback=(env_fallback, ["RF_OUTPUT_LEVEL"])),
        milnor_degree_cap=dict(type="int", default=DEFAULT_MILNOR_DEGREE_CAP, fallback=(env_fallback, ["RF_MILNOR_DEGREE_CAP"])),
    )


def classify_argument_spec():
    return dict(
        polynomial=dict(type="str", required=True),
        output_format=dict(type="str", default="json", choices=OUTPUT_FORMATS),
    )


def perturb_argument_spec():
    return dict(
        type=dict(type="str", required=True, aliases=["subtype"]),
        param=dict(type="str", required=True),
        seed=dict(type="int", default=0),
        degree=dict(type="int"),
    )


class RealFormsModule(object):
    def __init__(self, module):
        self.module = module
        self.params = module.params
        self.result = dict(changed=False)

        # info output
        self.diagnostics = None
        self.stdout = None

        # debug output
        self.classifier_logs = list()

        if not HAS_SYMPY:
            self.module.fail_json(msg=missing_required_lib("sympy"), exception=SYMPY_IMPORT_ERROR)

        if self.module._debug:
            self.module.warn("Enable debug output because ANSIBLE_DEBUG was set.")
            self.params["output_level"] = "debug"

    def queue_message(self, level, message):
        self.classifier_logs.append(dict(level=level, message=message))

    def classify(self, text):
        """OutputReport for the polynomial text; never raises for classification outcomes."""
        try:
            parsed = parse_polynomial(text)
        except ParseError as error:
            return OutputReport.from_error(text, error)
        return build_report(
            parsed.source_text,
            classify,
            parsed.polynomial,
            queue_message=self.queue_message,
            milnor_degree_cap=self.params.get("milnor_degree_cap") or DEFAULT_MILNOR_DEGREE_CAP,
        )

    def perturbation(self):
        """PerturbResult for the type, param, seed and degree parameters; fails the module on bad input."""
        try:
            return perturb(self.params.get("type"), self.params.get("param"), seed=self.params.get("seed") or 0, degree=self.params.get("degree"))
        except RealFormsError as error:
            details = error.to_dict()
            return self.fail_json(msg=details.pop("msg"), **details)
        except ValueError as error:
            return self.fail_json(msg=str(error))

    def _add_output_level_details(self):
        if self.params.get("output_level") in ("debug", "info") and self.diagnostics is not None:
            self.result["diagnostics"] = self.diagnostics
        if self.params.get("output_level") == "debug":
            self.result["classifier_logs"] = self.classifier_logs
        if self.stdout:
            self.result["stdout"] = self.stdout

    def exit_report(self, report):
        """exit_json for a classified germ, fail_json with the structured report otherwise."""
        self.diagnostics = report.diagnostics
        if self.params.get("output_format") == "text":
            self.stdout = report.to_text(self.params.get("output_level") in ("debug", "info"))
        payload = report.to_dict()
        payload.pop("msg", None)
        if report.status == STATUS_CLASSIFIED:
            return self.exit_json(**payload)
        return self.fail_json(msg=report.msg or "Classification ended with status {0}".format(report.status), rc=report.exit_code, **payload)

    def exit_json(self, **kwargs):
        """Custom written method to exit from module."""
        self._add_output_level_details()
        self.result.update(**kwargs)
        self.module.exit_json(**self.result)

    def fail_json(self, msg, **kwargs):
        """Custom written method to return info on failure."""
        self._add_output_level_details()
        self.result.update(**kwargs)
        self.module.fail_json(msg=msg, **self.result)
