# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import json

from ansible_collections.singularities.realforms.plugins.module_utils.constants import EXIT_CODES, STATUS_CLASSIFIED
from ansible_collections.singularities.realforms.plugins.module_utils.errors import RealFormsError


class OutputReport(object):
    """Outcome of one classification: input echo, status, records and optional diagnostics."""

    def __init__(self, input_text, status=STATUS_CLASSIFIED, records=None, diagnostics=None, msg=None, details=None):
        self.input = input_text
        self.status = status
        self.records = list(records or [])
        self.diagnostics = diagnostics
        self.msg = msg
        self.details = details or {}
        if (status == STATUS_CLASSIFIED) != bool(self.records):
            raise ValueError("Report status {0} does not match {1} records".format(status, len(self.records)))

    @classmethod
    def from_error(cls, input_text, error, diagnostics=None):
        details = dict((k, v) for k, v in error.details.items() if v is not None)
        return cls(input_text, status=error.status, diagnostics=diagnostics, msg=error.msg, details=details)

    @property
    def exit_code(self):
        return EXIT_CODES.get(self.status, 1)

    def to_dict(self, include_diagnostics=False):
        result = dict(input=self.input, status=self.status, records=[record.to_dict() for record in self.records])
        if self.msg:
            result["msg"] = self.msg
        if self.details:
            result["details"] = self.details
        if include_diagnostics and self.diagnostics is not None:
            result["diagnostics"] = self.diagnostics
        return result

    def to_json(self, include_diagnostics=False):
        return json.dumps(self.to_dict(include_diagnostics), indent=2, sort_keys=False)

    def to_text(self, include_diagnostics=False):
        lines = ["input: {0}".format(self.input), "status: {0}".format(self.status)]
        if self.msg:
            lines.append("message: {0}".format(self.msg))
        for record in self.records:
            lines.append(
                "{0}: {1}, a = root of {2} in {3}".format(record.subtype.label, record.normal_form, record.parameter.minpoly_str(), record.parameter.interval)
            )
        if include_diagnostics and self.diagnostics:
            for key in ("milnor_number", "corank", "complex_type", "determinacy_degree"):
                if key in self.diagnostics:
                    lines.append("{0}: {1}".format(key, self.diagnostics[key]))
        return "\n".join(lines)

    def render(self, output_format="text", include_diagnostics=False):
        if output_format == "json":
            return self.to_json(include_diagnostics)
        return self.to_text(include_diagnostics)


def build_report(input_text, run, *args, **kwargs):
    """Call run(*args, diagnostics=..., **kwargs) and wrap its records or its RealFormsError in an OutputReport."""
    diagnostics = {}
    try:
        records = run(*args, diagnostics=diagnostics, **kwargs)
    except RealFormsError as error:
        return OutputReport.from_error(input_text, error, diagnostics)
    return OutputReport(input_text, records=records, diagnostics=diagnostics)
