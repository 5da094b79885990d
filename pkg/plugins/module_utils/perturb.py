# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from ansible_collections.singularities.realforms.plugins.module_utils.determinator import parse_type_label
from ansible_collections.singularities.realforms.plugins.module_utils.errors import DegenerateInput
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    apply_substitution,
    format_rational,
    monomial_term,
    to_rational,
)
from ansible_collections.singularities.realforms.plugins.module_utils.newton import type_data
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import render_normal_form
from ansible_collections.singularities.realforms.plugins.module_utils.parser import parse_polynomial, render_polynomial

MASK64 = (1 << 64) - 1

PerturbResult = namedtuple("PerturbResult", ["polynomial", "source", "matrix", "seed", "degree"])


class SplitMix64(object):
    """splitmix64 generator; the same seed always yields the same stream."""

    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lower, upper):
        """Integer in [lower, upper]."""
        return lower + self.next() % (upper - lower + 1)


def unimodular_matrix(rng, bound=3):
    """(a, b, c, d) with entries in [-bound, bound] and a*d - b*c = +-1."""
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _i in range(4))
        if abs(a * d - b * c) == 1:
            return a, b, c, d


def _check_restrictions(subtype, value):
    label = subtype.label
    if subtype.family in ("X9k", "J10k", "Yrs", "Ytilde") and value == 0:
        raise DegenerateInput("{0} requires a != 0".format(label), restriction="a != 0", family=subtype.family)
    if label in ("X9++", "X9--", "J10+") and value * value == 4:
        raise DegenerateInput("{0} requires a^2 != 4".format(label), restriction="a^2 != 4", family=subtype.family)


def normal_form_polynomial(label, param):
    """(SingularityType, polynomial) of the normal form equation of label with a = param."""
    subtype = parse_type_label(label)
    value = to_rational(param)
    _check_restrictions(subtype, value)
    text = render_normal_form(subtype).replace("a*", "({0})*".format(format_rational(value)))
    return subtype, parse_polynomial(text).polynomial


def source_milnor(subtype):
    return type_data(subtype.family, k=subtype.k, r=subtype.r, s=subtype.s).milnor


def perturbation(rng, poly_ring, degree, bound=3):
    """Random terms of standard degree degree and degree + 1 with coefficients in [-bound, bound]."""
    result = poly_ring.zero
    for total in (degree, degree + 1):
        for i in range(total + 1):
            if rng.randint(0, 1):
                result += monomial_term(poly_ring, i, total - i, poly_ring.domain.convert(rng.randint(-bound, bound)))
    return result


def perturb(label, param, seed=0, degree=None):
    """Germ right equivalent to the normal form equation label(a = param).

    The normal form is composed with a unimodular integer matrix and a perturbation of standard
    degree above the determinacy bound is added; everything is derived from seed.
    """
    subtype, source = normal_form_polynomial(label, param)
    mu = source_milnor(subtype)
    if degree is None:
        degree = mu + 2
    elif degree <= mu + 1:
        raise ValueError("perturb() - degree {0} does not exceed the determinacy bound {1}".format(degree, mu + 1))
    rng = SplitMix64(seed)
    matrix = unimodular_matrix(rng)
    moved = apply_substitution(source, Automorphism.linear(*(matrix + (source.ring,))))
    result = moved + perturbation(rng, source.ring, degree)
    record = dict(type=subtype.label, normal_form=render_normal_form(subtype), param=format_rational(to_rational(param)))
    return PerturbResult(render_polynomial(result), record, list(matrix), int(seed), degree)
