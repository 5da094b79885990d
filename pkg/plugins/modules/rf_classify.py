#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: rf_classify
version_added: "0.1.0"
short_description: Classify a real plane curve singularity of corank 2 and modality at most 1
description:
- Determine the real right equivalence class of the germ at the origin of a polynomial in C(x) and C(y) over the rationals.
- The class is returned as every normal form equation of Arnold's list it contains, each with its subtype
  and its moduli parameter given exactly as a minimal polynomial and an isolating interval.
author:
- realforms contributors
options:
  polynomial:
    description:
    - The germ, written with rational numbers, the variables C(x) and C(y) and the operators C(+), C(-), C(*), C(/), C(^).
    - Implicit multiplication is not accepted, write C(2*x*y^6) rather than C(2xy^6).
    type: str
    required: true
  output_format:
    description:
    - Use C(json) for the structured result only.
    - Use C(text) to also return the human readable report in C(stdout).
    type: str
    choices: [ json, text ]
    default: json
extends_documentation_fragment:
- singularities.realforms.modules
- singularities.realforms.check_mode
"""

EXAMPLES = r"""
- name: Classify an E14 germ
  singularities.realforms.rf_classify:
    polynomial: x^3 + y^8 + 2*x*y^6
  delegate_to: localhost
  register: e14

- name: Classify an X9 germ with diagnostics
  singularities.realforms.rf_classify:
    polynomial: x^4 + 3*x^2*y^2 + y^4
    output_level: info
  delegate_to: localhost
  register: x9
"""

RETURN = r"""
status:
  description: The outcome, one of C(classified), C(out-of-scope), C(degenerate), C(not-isolated), C(parse-error) or C(internal-error).
  returned: always
  type: str
  sample: classified
records:
  description: The normal form equations of the equivalence class.
  returned: always
  type: list
  elements: dict
  sample: [{"type": "E14+", "normal_form": "x^3+y^8+a*x*y^6", "minpoly": "z - 2",
            "interval": {"lower": "0", "upper": "+inf", "lower_closed": false, "upper_closed": false}}]
input:
  description: The polynomial text that was classified.
  returned: always
  type: str
diagnostics:
  description: Milnor number, corank, complex type and determinacy degree.
  returned: when output_level is info or debug
  type: dict
classifier_logs:
  description: Messages of the classification pipeline.
  returned: when output_level is debug
  type: list
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.singularities.realforms.plugins.module_utils.realforms import (
    RealFormsModule,
    classify_argument_spec,
    realforms_argument_spec,
)


def main():
    argument_spec = realforms_argument_spec()
    argument_spec.update(classify_argument_spec())

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    rc = RealFormsModule(module)
    report = rc.classify(module.params.get("polynomial"))
    rc.exit_report(report)


if __name__ == "__main__":
    main()
