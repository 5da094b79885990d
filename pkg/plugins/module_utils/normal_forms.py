# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import ilcm
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.constants import FAMILY_ORDER, NORMAL_FORMS
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ReductionError, discard_message
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    apply_substitution,
    compose_automorphisms,
    jet,
    sign,
)
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import Interval, minpoly_in_interval, upoly


def template_indices(subtype):
    indices = dict(r=subtype.r, s=subtype.s)
    if subtype.family == "X9k":
        indices["n"] = 4 + subtype.k
    elif subtype.family == "J10k":
        indices["n"] = 6 + subtype.k
    return indices


def render_normal_form(subtype):
    """Normal form text of a signed subtype, the moduli written as the literal a."""
    parts = []
    indices = template_indices(subtype)
    for slot, text in NORMAL_FORMS[subtype.family]:
        monomial = text.format(**indices)
        if slot == "a":
            parts.append("+a*{0}".format(monomial))
        elif slot is None:
            parts.append("+{0}".format(monomial))
        else:
            parts.append("{0}{1}".format("+" if subtype.signs[slot] > 0 else "-", monomial))
    return "".join(parts).lstrip("+")


class NormalFormRecord(namedtuple("NormalFormRecord", ["subtype", "parameter"])):
    """One normal form equation in the equivalence class: signed subtype plus the moduli parameter."""

    __slots__ = ()

    @property
    def normal_form(self):
        return render_normal_form(self.subtype)

    def to_dict(self):
        result = dict(type=self.subtype.label, normal_form=self.normal_form)
        result.update(self.parameter.to_dict())
        return result

    def sort_key(self):
        subtype = self.subtype
        return (
            FAMILY_ORDER.index(subtype.family),
            (subtype.k or 0, subtype.r or 0, subtype.s or 0),
            tuple(-s for s in subtype.signs),
            self.parameter.interval.sort_key(),
            self.parameter.minpoly_str(),
        )

    def __str__(self):
        return "{0}: {1}, a = {2}".format(self.subtype.label, self.normal_form, self.parameter)


def sorted_records(records):
    """Deduplicated records in report order."""
    unique = []
    for record in records:
        if record not in unique:
            unique.append(record)
    return sorted(unique, key=lambda record: record.sort_key())


class PipelineState(object):
    """Germ being normalized, with the rational input kept for real sign tests.

    current ~ original through transformation over the coefficient field of current; every
    substitution keeps terms up to standard degree milnor + 1 only.
    """

    def __init__(self, original, singularity_type, data, milnor, queue_message=None, verify=False):
        self.original = original
        self.current = jet(original, milnor + 1)
        self.type = singularity_type
        self.data = data
        self.milnor = milnor
        self.field = None
        self.leading_constant = None
        self.transformation = Automorphism.identity(original.ring)
        self.queue_message = queue_message or discard_message
        self.verify = verify
        self.exact = True

    @property
    def determinacy_degree(self):
        return self.milnor + 1

    def log(self, level, message):
        self.queue_message(level, message)

    def substitute(self, phi, reason=None):
        """Replace current by current(phi) and record phi in the composed transformation."""
        self.current = jet(apply_substitution(self.current, phi), self.determinacy_degree)
        self.transformation = compose_automorphisms(phi, self.transformation).truncate(self.determinacy_degree)
        if reason:
            self.log("info", "{0} - apply {1}".format(reason, phi))
        if self.verify and self.exact:
            self.check()
        return self

    def replace(self, poly, reason):
        """Replace current by a polynomial that is not obtained by substitution (truncation above the polygon)."""
        self.current = poly
        self.exact = False
        self.log("info", "{0} - now {1}".format(reason, poly))
        return self

    def check(self):
        expected = jet(apply_substitution(self.original, self.transformation), self.determinacy_degree)
        if expected != self.current:
            raise ReductionError("PipelineState.check() - transformation does not reproduce the current germ", current=str(self.current))

    def enter_field(self, field):
        """Continue over the quadratic extension field, lifting current and the transformation."""
        poly_ring, _x, _y = field.ring()
        self.field = field
        self.current = poly_ring.from_dict(dict(self.current), self.current.ring.domain)
        self.transformation = self.transformation.lift(poly_ring)
        self.log("info", "enter_field() - working over {0}".format(field))
        return self


def scaling_minpoly(nonmoduli, moduli, flips=(1, 1)):
    """(p, sign of a) for the parameter reached by x -> l1*x, y -> l2*y with sign(l1), sign(l2) = flips.

    nonmoduli lists the two (monomial, coefficient) pairs that become +-1, moduli the (monomial, coefficient)
    pair whose scaled coefficient is a. p is z^N - A with N minimal and A rational; p = z when a = 0.
    """
    (m1, c1), (m2, c2) = nonmoduli
    (i, j), t = moduli
    det = m1[0] * m2[1] - m1[1] * m2[0]
    if det == 0:
        raise ValueError("scaling_minpoly() - dependent exponents {0} and {1}".format(m1, m2))
    q1 = QQ(i * m2[1] - j * m2[0], det)
    q2 = QQ(j * m1[0] - i * m1[1], det)
    t = QQ.convert(t)
    if t == 0:
        return upoly([1, 0]), 0
    parameter_sign = sign(t) * flips[0] ** i * flips[1] ** j
    n = int(ilcm(int(q1.denominator), int(q2.denominator)))
    e1, e2 = -n * q1, -n * q2
    value = abs(t) ** n * abs(QQ.convert(c1)) ** int(e1.numerator) * abs(QQ.convert(c2)) ** int(e2.numerator)
    if n % 2:
        value = parameter_sign * value
    return upoly([1] + [0] * (n - 1) + [-value]), parameter_sign


def record_in_interval(base_type, signs, p, interval):
    """NormalFormRecord whose parameter is the root of p designated by interval."""
    try:
        parameter = minpoly_in_interval(p, interval)
    except ValueError as error:
        raise ReductionError("record_in_interval() - {0}".format(error), type=base_type.base_label(), interval=str(interval))
    return NormalFormRecord(base_type.with_signs(signs), parameter)


def sign_interval(parameter_sign, closed_at_zero):
    if parameter_sign > 0:
        return Interval.positive()
    if closed_at_zero:
        return Interval.nonpositive()
    return Interval.negative()


def scaling_records(base_type, support, moduli, closed_at_zero=False):
    """All records reachable from sum(support) + t*moduli by real sign flips of x and y.

    support is a list of (monomial, coefficient, free) where free monomials carry the subtype signs
    in order and the others must end up with coefficient +1.
    """
    if len(support) != 2:
        raise ValueError("scaling_records() - expected two non-moduli monomials, got {0}".format(support))
    records = []
    for flips in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        signs = []
        admissible = True
        for (i, j), c, free in support:
            effective = sign(c) * flips[0] ** i * flips[1] ** j
            if free:
                signs.append(effective)
            elif effective < 0:
                admissible = False
        if not admissible:
            continue
        p, parameter_sign = scaling_minpoly([(m, c) for m, c, _free in support], moduli, flips)
        records.append(record_in_interval(base_type, signs, p, sign_interval(parameter_sign, closed_at_zero)))
    if not records:
        raise ReductionError("scaling_records() - no sign flip reaches the normal form of {0}".format(base_type.base_label()))
    return sorted_records(records)
