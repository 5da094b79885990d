# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import igcd, ilcm
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.constants import EXCEPTIONAL_TYPES, RESTRICTIONS
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import select_terms

BELOW = "below"
ON = "on"
ABOVE = "above"


class Weight(object):
    """Piecewise weight: the weighted degree of a monomial is the minimum over the faces."""

    def __init__(self, *faces):
        if not faces or len(faces) > 2:
            raise ValueError("Weight expects one or two faces, got {0}".format(faces))
        for wx, wy in faces:
            if wx <= 0 or wy <= 0:
                raise ValueError("Face weights must be positive, got {0}".format((wx, wy)))
        # increasing slope -wx/wy
        self.faces = tuple(sorted(faces, key=lambda face: QQ(-face[0], face[1])))

    def degree(self, monomial):
        return min(wx * monomial[0] + wy * monomial[1] for wx, wy in self.faces)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.faces == other.faces

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return "Weight{0}".format(self.faces)


def weighted_degree(w, monomial):
    return w.degree(monomial)


def weighted_jet(f, w, j):
    """Sum of the terms of f with w-degree <= j."""
    return select_terms(f, lambda m: w.degree(m) <= j)


def weighted_part(f, w, j):
    return select_terms(f, lambda m: w.degree(m) == j)


def filtration_member(f, w, d):
    """True when every term of f has w-degree >= d, i.e. f lies in E_d^w."""
    return all(w.degree(m) >= d for m in f.itermonoms())


def piecewise_weight(first, second):
    """Combine two (face, degree) pairs into one Weight that is constant on the polygon.

    Each face is made primitive and then scaled so that both faces give the polygon the same degree,
    the least common multiple of the primitive degrees.
    """
    faces = []
    for (wx, wy), degree in (first, second):
        g = igcd(wx, wy, degree)
        faces.append(((wx // g, wy // g), degree // g))
    common = ilcm(faces[0][1], faces[1][1])
    scaled = [(wx * (common // degree), wy * (common // degree)) for (wx, wy), degree in faces]
    return Weight(*scaled), common


TypeData = namedtuple(
    "TypeData",
    [
        "family",
        "weight",
        "degree",
        "support",
        "moduli",
        "moduli_degree",
        "low_jet_degree",
        "restrictions",
        "index_ranges",
        "milnor",
    ],
)


def _check_index(name, value, minimum):
    if value is None or int(value) != value or value < minimum:
        raise ValueError("type_data() - index {0} must be an integer >= {1}, got {2}".format(name, minimum, value))


def type_data(family, k=None, r=None, s=None):
    """Static TypeData of a main family, indices k (X9k, J10k), r and s (Yrs) or r (Ytilde)."""
    restrictions = list(RESTRICTIONS.get(family, []))
    if family in EXCEPTIONAL_TYPES:
        entry = EXCEPTIONAL_TYPES[family]
        return TypeData(
            family=family,
            weight=Weight(entry["weight"]),
            degree=entry["degree"],
            support=[monomial for monomial, _sign in entry["support"]],
            moduli=entry["moduli"],
            moduli_degree=entry["moduli_degree"],
            low_jet_degree=entry["low_jet"],
            restrictions=restrictions,
            index_ranges={},
            milnor=entry["milnor"],
        )
    if family == "X9":
        return TypeData(family, Weight((1, 1)), 4, [(4, 0), (0, 4)], (2, 2), 4, 4, restrictions, {}, 9)
    if family == "J10":
        return TypeData(family, Weight((6, 3)), 18, [(3, 0), (1, 4)], (2, 2), 18, 3, restrictions, {}, 10)
    if family == "X9k":
        _check_index("k", k, 1)
        n = 4 + k
        weight, degree = piecewise_weight(((1, 1), 4), ((n - 2, 2), 2 * n))
        return TypeData(family, weight, degree, [(4, 0), (2, 2)], (0, n), degree, 4, restrictions, dict(k="k > 0"), 9 + k)
    if family == "J10k":
        _check_index("k", k, 1)
        n = 6 + k
        weight, degree = piecewise_weight(((2, 1), 6), ((n - 2, 2), 2 * n))
        return TypeData(family, weight, degree, [(3, 0), (2, 2)], (0, n), degree, 3, restrictions, dict(k="k > 0"), 10 + k)
    if family == "Ytilde":
        # definite quartic jet; the moduli monomial sits above the (1,1) polygon
        _check_index("r", r, 5)
        return TypeData(family, Weight((1, 1)), 4, [(4, 0), (2, 2), (0, 4)], (r, 0), r, 4, restrictions, dict(r="r > 4"), 2 * r + 1)
    if family == "Yrs":
        _check_index("r", r, 5)
        _check_index("s", s, 5)
        weight, degree = piecewise_weight(((2, r - 2), 2 * r), ((s - 2, 2), 2 * s))
        return TypeData(family, weight, degree, [(2, 2), (r, 0)], (0, s), degree, 4, restrictions, dict(r="r > 4", s="s > 4"), r + s + 1)
    raise ValueError("type_data() - unsupported family {0}".format(family))


def polygon_position(data, monomial):
    degree = data.weight.degree(monomial)
    if degree < data.degree:
        return BELOW
    if degree == data.degree:
        return ON
    return ABOVE
