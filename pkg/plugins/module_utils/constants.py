# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

# support entries are (monomial, sign) where sign None means the sign is part of the subtype
EXCEPTIONAL_TYPES = {
    "E12": dict(weight=(7, 3), degree=21, support=[((3, 0), 1), ((0, 7), 1)], moduli=(1, 5), moduli_degree=22, milnor=12, low_jet=3),
    "E13": dict(weight=(5, 2), degree=15, support=[((3, 0), 1), ((1, 5), 1)], moduli=(0, 8), moduli_degree=16, milnor=13, low_jet=3),
    "E14": dict(weight=(8, 3), degree=24, support=[((3, 0), 1), ((0, 8), None)], moduli=(1, 6), moduli_degree=26, milnor=14, low_jet=3),
    "Z11": dict(weight=(4, 3), degree=15, support=[((3, 1), 1), ((0, 5), 1)], moduli=(1, 4), moduli_degree=16, milnor=11, low_jet=4),
    "Z12": dict(weight=(3, 2), degree=11, support=[((3, 1), 1), ((1, 4), 1)], moduli=(2, 3), moduli_degree=12, milnor=12, low_jet=4),
    "Z13": dict(weight=(5, 3), degree=18, support=[((3, 1), 1), ((0, 6), None)], moduli=(1, 5), moduli_degree=20, milnor=13, low_jet=4),
    "W12": dict(weight=(5, 4), degree=20, support=[((4, 0), None), ((0, 5), 1)], moduli=(2, 3), moduli_degree=22, milnor=12, low_jet=4),
    "W13": dict(weight=(4, 3), degree=16, support=[((4, 0), None), ((1, 4), 1)], moduli=(0, 6), moduli_degree=18, milnor=13, low_jet=4),
}

# complex family chosen by the multiplicity pattern of the tangent cone and the Milnor number
E_BY_MILNOR = {12: "E12", 13: "E13", 14: "E14"}
Z_BY_MILNOR = {11: "Z11", 12: "Z12", 13: "Z13"}
W_BY_MILNOR = {12: "W12", 13: "W13"}

FAMILY_ORDER = ["E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13", "X9", "J10", "X9k", "J10k", "Yrs", "Ytilde"]

EXCEPTIONAL_FAMILIES = ["E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13"]

# number of sign slots in the subtype label
SIGN_ARITY = {
    "E12": 0,
    "E13": 0,
    "E14": 1,
    "Z11": 0,
    "Z12": 0,
    "Z13": 1,
    "W12": 1,
    "W13": 1,
    "X9": 2,
    "J10": 1,
    "X9k": 2,
    "J10k": 1,
    "Yrs": 2,
    "Ytilde": 1,
}

# normal form templates: list of (sign slot or None, monomial text); the moduli term is written with "a"
NORMAL_FORMS = {
    "E12": [(None, "x^3"), (None, "y^7"), ("a", "x*y^5")],
    "E13": [(None, "x^3"), (None, "x*y^5"), ("a", "y^8")],
    "E14": [(None, "x^3"), (0, "y^8"), ("a", "x*y^6")],
    "Z11": [(None, "x^3*y"), (None, "y^5"), ("a", "x*y^4")],
    "Z12": [(None, "x^3*y"), (None, "x*y^4"), ("a", "x^2*y^3")],
    "Z13": [(None, "x^3*y"), (0, "y^6"), ("a", "x*y^5")],
    "W12": [(0, "x^4"), (None, "y^5"), ("a", "x^2*y^3")],
    "W13": [(0, "x^4"), (None, "x*y^4"), ("a", "y^6")],
    "X9": [(0, "x^4"), ("a", "x^2*y^2"), (1, "y^4")],
    "J10": [(None, "x^3"), ("a", "x^2*y^2"), (0, "x*y^4")],
    "X9k": [(0, "x^4"), (1, "x^2*y^2"), ("a", "y^{n}")],
    "J10k": [(None, "x^3"), (0, "x^2*y^2"), ("a", "y^{n}")],
    "Yrs": [(0, "x^2*y^2"), (1, "x^{r}"), ("a", "y^{s}")],
    "Ytilde": [(0, "(x^2+y^2)^2"), ("a", "x^{r}")],
}

RESTRICTIONS = {
    "X9": ["a^2 != 4 for X9++ and X9--"],
    "J10": ["a^2 != 4 for J10+"],
    "X9k": ["a != 0", "k > 0"],
    "J10k": ["a != 0", "k > 0"],
    "Yrs": ["a != 0", "r,s > 4"],
    "Ytilde": ["a != 0", "r > 4"],
}

# X9 record pairs keyed by the real root count of the dehomogenized quartic and the sign of its leading
# coefficient. Intervals are (lower, upper, lower_closed, upper_closed), None being infinite. "test" is the
# subtype and interval whose real realizability selects "accepted" over "rejected".
X9_CASES = {
    "no_roots_positive": dict(
        sigma=1,
        subtypes=((1, 1), (1, 1)),
        test=((1, 1), (0, 2, True, False)),
        accepted=((0, 2, True, False), (2, 6, False, True)),
        rejected=((-2, 0, False, False), (6, None, False, False)),
    ),
    "no_roots_negative": dict(
        sigma=1,
        subtypes=((-1, -1), (-1, -1)),
        test=((-1, -1), (-2, 0, False, True)),
        accepted=((-6, -2, True, False), (-2, 0, False, True)),
        rejected=((None, -6, False, False), (0, 2, False, False)),
    ),
    "two_roots": dict(
        sigma=-1,
        subtypes=((1, -1), (-1, 1)),
        test=((1, -1), (None, 0, False, True)),
        accepted=((None, 0, False, True), (None, 0, False, True)),
        rejected=((0, None, False, False), (0, None, False, False)),
    ),
    "four_roots": dict(
        sigma=1,
        subtypes=((1, 1), (-1, -1)),
        test=((1, 1), (None, -6, False, True)),
        accepted=((None, -6, False, True), (2, 6, False, True)),
        rejected=((-6, -2, False, False), (6, None, False, False)),
    ),
}

STATUS_CLASSIFIED = "classified"
STATUS_OUT_OF_SCOPE = "out-of-scope"
STATUS_DEGENERATE = "degenerate"
STATUS_NOT_ISOLATED = "not-isolated"

EXIT_CODES = {
    STATUS_CLASSIFIED: 0,
    STATUS_OUT_OF_SCOPE: 2,
    STATUS_DEGENERATE: 2,
    STATUS_NOT_ISOLATED: 2,
    "parse-error": 1,
    "internal-error": 1,
}

OUTPUT_FORMATS = ["text", "json"]
OUTPUT_LEVELS = ["debug", "info", "normal"]

DEFAULT_MILNOR_DEGREE_CAP = 64
