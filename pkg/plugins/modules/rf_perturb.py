#!/usr/bin/python
# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors
# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

ANSIBLE_METADATA = {"metadata_version": "1.1", "status": ["preview"], "supported_by": "community"}

DOCUMENTATION = r"""
---
module: rf_perturb
version_added: "0.1.0"
short_description: Generate a germ right equivalent to a given normal form equation
description:
- Build the normal form equation of a real subtype with a rational moduli parameter, compose it with a random
  unimodular integer matrix and add random terms above the determinacy bound.
- The result is fully determined by C(seed) and can be fed back into M(singularities.realforms.rf_classify).
author:
- realforms contributors
options:
  type:
    description:
    - The subtype label, for example C(E14+), C(X9++), C(J11-), C(Y5,6+-) or C(Ytilde6+).
    type: str
    required: true
    aliases: [ subtype ]
  param:
    description:
    - The rational value of the moduli parameter C(a), written as C(n) or C(n/m).
    type: str
    required: true
  seed:
    description:
    - Seed of the splitmix64 generator driving the matrix and the perturbation.
    type: int
    default: 0
  degree:
    description:
    - Standard degree of the added perturbation, which must exceed the Milnor number plus one.
    - Defaults to the Milnor number plus two.
    type: int
extends_documentation_fragment:
- singularities.realforms.modules
- singularities.realforms.check_mode
"""

EXAMPLES = r"""
- name: Perturb the E14+ normal form with a = 2
  singularities.realforms.rf_perturb:
    type: E14+
    param: "2"
    seed: 7
  delegate_to: localhost
  register: perturbed

- name: Classify it back
  singularities.realforms.rf_classify:
    polynomial: "{{ perturbed.polynomial }}"
  delegate_to: localhost
"""

RETURN = r"""
polynomial:
  description: The perturbed germ.
  returned: success
  type: str
source:
  description: The subtype, normal form and parameter the germ was built from.
  returned: success
  type: dict
matrix:
  description: The entries a, b, c, d of the linear map x -> a*x + b*y, y -> c*x + d*y.
  returned: success
  type: list
  elements: int
"""

from ansible.module_utils.basic import AnsibleModule
from ansible_collections.singularities.realforms.plugins.module_utils.realforms import (
    RealFormsModule,
    perturb_argument_spec,
    realforms_argument_spec,
)


def main():
    argument_spec = realforms_argument_spec()
    argument_spec.update(perturb_argument_spec())

    module = AnsibleModule(argument_spec=argument_spec, supports_check_mode=True)

    rc = RealFormsModule(module)
    result = rc.perturbation()
    rc.exit_json(polynomial=result.polynomial, source=result.source, matrix=result.matrix, seed=result.seed, degree=result.degree)


if __name__ == "__main__":
    main()
