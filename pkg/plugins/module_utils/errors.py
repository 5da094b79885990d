# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type


class RealFormsError(Exception):
    """Base error carrying the report status it maps to."""

    status = "internal-error"

    def __init__(self, msg, **details):
        super(RealFormsError, self).__init__(msg)
        self.msg = msg
        self.details = details

    def to_dict(self):
        result = dict(status=self.status, msg=self.msg)
        result.update(self.details)
        return result


class ParseError(RealFormsError):
    status = "parse-error"

    def __init__(self, msg, position=None, **details):
        super(ParseError, self).__init__(msg, position=position, **details)
        self.position = position


class OutOfScope(RealFormsError):
    status = "out-of-scope"


class NotCorank2(OutOfScope):
    pass


class NotIsolated(RealFormsError):
    status = "not-isolated"


class DegenerateInput(RealFormsError):
    status = "degenerate"


class ReductionError(RealFormsError):
    status = "internal-error"


def discard_message(level, message):
    """Default queue_message sink used when the caller collects no log."""
    return None
