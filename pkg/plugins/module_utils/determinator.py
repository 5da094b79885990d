# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import re
from collections import namedtuple

from sympy import oo

from ansible_collections.singularities.realforms.plugins.module_utils.constants import (
    DEFAULT_MILNOR_DEGREE_CAP,
    E_BY_MILNOR,
    EXCEPTIONAL_FAMILIES,
    SIGN_ARITY,
    W_BY_MILNOR,
    Z_BY_MILNOR,
)
from ansible_collections.singularities.realforms.plugins.module_utils.errors import (
    DegenerateInput,
    NotCorank2,
    NotIsolated,
    OutOfScope,
    ReductionError,
    discard_message,
)
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    apply_substitution,
    coefficient,
    homogeneous_part,
    select_terms,
)
from ansible_collections.singularities.realforms.plugins.module_utils.local_algebra import corank, milnor_number
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import Interval, sturm_count, upoly

TYPE_LABEL_RE = re.compile(r"^(?P<head>E12|E13|E14|Z11|Z12|Z13|W12|W13|X(?P<x>\d+)|J(?P<j>\d+)|Y(?P<r>\d+),(?P<s>\d+)|Ytilde(?P<t>\d+))(?P<signs>[+-]*)$")


class SingularityType(namedtuple("SingularityType", ["family", "k", "r", "s", "signs"])):
    """Main family with its indices plus the subtype sign vector (empty until the normal form is read off)."""

    __slots__ = ()

    def __new__(cls, family, k=None, r=None, s=None, signs=()):
        return super(SingularityType, cls).__new__(cls, family, k, r, s, tuple(signs))

    @property
    def milnor(self):
        if self.family in ("X9k",):
            return 9 + self.k
        if self.family == "J10k":
            return 10 + self.k
        if self.family == "Yrs" and self.r is not None:
            return self.r + self.s + 1
        if self.family == "Ytilde":
            return 2 * self.r + 1
        return None

    def base_label(self):
        if self.family == "X9k":
            return "X{0}".format(9 + self.k)
        if self.family == "J10k":
            return "J{0}".format(10 + self.k)
        if self.family == "Yrs":
            if self.r is None:
                return "Y"
            return "Y{0},{1}".format(self.r, self.s)
        if self.family == "Ytilde":
            return "Ytilde{0}".format(self.r)
        return self.family

    @property
    def label(self):
        return self.base_label() + "".join("+" if sign > 0 else "-" for sign in self.signs)

    def with_signs(self, signs):
        signs = tuple(signs)
        if len(signs) != SIGN_ARITY[self.family]:
            raise ValueError("{0} expects {1} subtype signs, got {2}".format(self.family, SIGN_ARITY[self.family], signs))
        return self._replace(signs=signs)

    def __str__(self):
        return self.label


def parse_type_label(label):
    """SingularityType from a label such as "E14+", "X12++", "J11-", "Y5,6+-" or "Ytilde6+"."""
    match = TYPE_LABEL_RE.match(label.strip())
    if not match:
        raise ValueError("Unknown singularity type label {0}".format(label))
    head = match.group("head")
    signs = tuple(1 if char == "+" else -1 for char in match.group("signs"))
    if head in EXCEPTIONAL_FAMILIES:
        result = SingularityType(head)
    elif match.group("x"):
        index = int(match.group("x"))
        result = SingularityType("X9") if index == 9 else SingularityType("X9k", k=index - 9)
    elif match.group("j"):
        index = int(match.group("j"))
        result = SingularityType("J10") if index == 10 else SingularityType("J10k", k=index - 10)
    elif match.group("t"):
        result = SingularityType("Ytilde", r=int(match.group("t")))
    else:
        result = SingularityType("Yrs", r=int(match.group("r")), s=int(match.group("s")))
    if (result.k is not None and result.k < 1) or any(index is not None and index < 5 for index in (result.r, result.s)):
        raise ValueError("Singularity type {0} violates its index range".format(label))
    return result.with_signs(signs)


def dehomogenize(h, degree):
    """h(t, 1) as a univariate Poly in t for a binary form h of the given degree."""
    return upoly([coefficient(h, i, degree - i) for i in range(degree, -1, -1)])


def binary_form_pattern(h, degree):
    """Multiplicities of the linear factors of the binary form h over C, largest first; [] for h = 0."""
    if not h:
        return []
    p = dehomogenize(h, degree)
    pattern = []
    _coeff, factors = p.sqf_list()
    for factor, multiplicity in factors:
        pattern.extend([multiplicity] * factor.degree())
    if degree > p.degree():
        pattern.append(degree - p.degree())
    return sorted(pattern, reverse=True)


def real_root_count(h, degree):
    """Real roots of the binary form h in P^1, counted with multiplicity."""
    p = dehomogenize(h, degree)
    _coeff, factors = p.sqf_list()
    count = sum(multiplicity * sturm_count(factor, Interval.real_line()) for factor, multiplicity in factors if factor.degree() > 0)
    return count + degree - p.degree()


def send_to_axes(first, second=None):
    """Linear automorphism phi with first(phi) = x and, when given, second(phi) = y.

    first and second are linear forms over the coefficient field of the ring they live in.
    """
    a, b = coefficient(first, 1, 0), coefficient(first, 0, 1)
    if second is None:
        K = first.ring.domain
        c, d = (K.zero, K.one) if a != K.zero else (K.one, K.zero)
    else:
        c, d = coefficient(second, 1, 0), coefficient(second, 0, 1)
    return Automorphism.linear(a, b, c, d, first.ring).inverse()


def cube_root_form(h):
    """The linear form l with h = c*l^3 for a binary cubic h that is a cube."""
    p = dehomogenize(h, 3)
    x, y = h.ring.gens
    if p.degree() <= 0:
        return y
    # the root of a cube's dehomogenization is minus its subleading coefficient over three
    lc, sub = p.rep.to_list()[:2]
    return x + y * (sub / (3 * lc))


def j_branch_cubic(f, queue_message=discard_message):
    """Normalize jet(f,3) = c*l^3 to c*x^3 and return (g, simple, cubic) for the J and E analysis.

    simple names E6, E7 or E8 when the germ is simple, cubic is the weighted part
    c*s^3 + b*s^2 + d*s + e read from x^3, x^2y^2, xy^4, y^6.
    """
    g = apply_substitution(f, send_to_axes(cube_root_form(homogeneous_part(f, 3))))
    queue_message("info", "j_branch_cubic() - cubic jet moved to x^3: {0}".format(homogeneous_part(g, 3)))
    for monomial, family in (((0, 4), "E6"), ((1, 3), "E7"), ((0, 5), "E8")):
        if coefficient(g, *monomial) != g.ring.domain.zero:
            return g, family, None
    cubic = upoly([coefficient(g, 3, 0), coefficient(g, 2, 2), coefficient(g, 1, 4), coefficient(g, 0, 6)])
    return g, None, cubic


def _cubic_pattern(cubic):
    _coeff, factors = cubic.sqf_list()
    return sorted([m for factor, m in factors for _root in range(factor.degree())], reverse=True)


def detect_main_type(f, queue_message=discard_message, milnor_degree_cap=DEFAULT_MILNOR_DEGREE_CAP, milnor=None):
    """Complex main type of f, resolved from the factorization pattern of its low jets and the Milnor number.

    Raises NotCorank2, OutOfScope or NotIsolated for germs this classifier does not handle, and
    DegenerateInput for the non-isolated J10 germs violating a^2 != 4.
    """
    if coefficient(f, 1, 0) != f.ring.domain.zero or coefficient(f, 0, 1) != f.ring.domain.zero:
        raise OutOfScope("The germ has a nonzero linear part, the origin is not a singular point", family="smooth")
    rank_defect = corank(f)
    mu = milnor if milnor is not None else milnor_number(f, milnor_degree_cap)
    queue_message("info", "detect_main_type() - corank {0}, Milnor number {1}".format(rank_defect, mu))
    if rank_defect < 2:
        family = "A{0}".format(mu) if mu != oo else "A_infinity"
        if mu == oo:
            raise NotIsolated("The singularity is not isolated", corank=rank_defect)
        raise NotCorank2("Corank {0} germ of type {1} is simple".format(rank_defect, family), family=family, corank=rank_defect)

    jet3 = homogeneous_part(f, 3)
    if jet3:
        pattern = binary_form_pattern(jet3, 3)
        queue_message("info", "detect_main_type() - cubic jet pattern {0}".format(pattern))
        if pattern == [1, 1, 1]:
            raise OutOfScope("Germ of type D4 is simple", family="D4")
        if pattern == [2, 1]:
            if mu == oo:
                raise NotIsolated("The singularity is not isolated")
            raise OutOfScope("Germ of type D{0} is simple".format(mu), family="D{0}".format(mu))
        _g, simple, cubic = j_branch_cubic(f, queue_message)
        if simple:
            raise OutOfScope("Germ of type {0} is simple".format(simple), family=simple)
        cubic_pattern = _cubic_pattern(cubic)
        queue_message("info", "detect_main_type() - weighted cubic {0} pattern {1}".format(cubic.as_expr(), cubic_pattern))
        if mu == oo:
            if cubic_pattern == [2, 1]:
                raise DegenerateInput("J10 germ with a^2 = 4 is not isolated", restriction="a^2 != 4", family="J10")
            raise NotIsolated("The singularity is not isolated")
        if cubic_pattern == [1, 1, 1]:
            if mu != 10:
                raise ReductionError("detect_main_type() - J10 pattern with Milnor number {0}".format(mu))
            return SingularityType("J10")
        if cubic_pattern == [2, 1]:
            return SingularityType("J10k", k=mu - 10)
        if mu in E_BY_MILNOR:
            return SingularityType(E_BY_MILNOR[mu])
        raise OutOfScope("Germ with cubic jet x^3 and Milnor number {0} has modality >= 2".format(mu), family="modality>=2")

    if mu == oo:
        raise NotIsolated("The singularity is not isolated")
    jet4 = homogeneous_part(f, 4)
    pattern = binary_form_pattern(jet4, 4)
    queue_message("info", "detect_main_type() - quartic jet pattern {0}".format(pattern))
    if pattern == [1, 1, 1, 1]:
        return SingularityType("X9")
    if pattern == [2, 1, 1]:
        return SingularityType("X9k", k=mu - 9)
    if pattern == [2, 2]:
        return SingularityType("Yrs")
    if pattern == [3, 1] and mu in Z_BY_MILNOR:
        return SingularityType(Z_BY_MILNOR[mu])
    if pattern == [4] and mu in W_BY_MILNOR:
        return SingularityType(W_BY_MILNOR[mu])
    raise OutOfScope("Germ with quartic jet pattern {0} and Milnor number {1} has modality >= 2".format(pattern, mu), family="modality>=2")


def split_real_Y(f):
    """"Yrs" when jet(f,4) has four real roots, "Ytilde" when it has none."""
    count = real_root_count(homogeneous_part(f, 4), 4)
    if count == 4:
        return "Yrs"
    if count == 0:
        return "Ytilde"
    raise ReductionError("split_real_Y() - quartic jet with {0} real roots is not of type Y".format(count), real_roots=count)


def strip_constant(f, queue_message=discard_message):
    constant = coefficient(f, 0, 0)
    if constant != f.ring.domain.zero:
        queue_message("info", "strip_constant() - dropping constant term {0}".format(constant))
        return select_terms(f, lambda m: m != (0, 0))
    return f
