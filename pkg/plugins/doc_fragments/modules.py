# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type


class ModuleDocFragment(object):
    # Standard files documentation fragment
    DOCUMENTATION = r"""
options:
  output_level:
    description:
    - Influence the output of this realforms module.
    - C(normal) means the standard output, incl. C(status) and C(records)
    - C(info) adds informational output, incl. the C(diagnostics) dict with the Milnor number, corank, complex type and determinacy degree
    - C(debug) adds debugging output, incl. the C(classifier_logs) list of pipeline messages
    - If the value is not specified in the task, the value of environment variable C(RF_OUTPUT_LEVEL) will be used instead.
    type: str
    choices: [ debug, info, normal ]
    default: normal
  milnor_degree_cap:
    description:
    - Highest power of the maximal ideal tried while computing the Milnor number.
    - Germs whose Milnor number is not found below this cap are reported as not isolated.
    - If the value is not specified in the task, the value of environment variable C(RF_MILNOR_DEGREE_CAP) will be used instead.
    type: int
    default: 64
requirements:
- sympy
notes:
- All arithmetic is exact over the rationals; moduli parameters are returned as a minimal polynomial in C(z) plus an isolating interval.
"""
