# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import oo

from ansible_collections.singularities.realforms.plugins.module_utils.constants import (
    DEFAULT_MILNOR_DEGREE_CAP,
    EXCEPTIONAL_FAMILIES,
    EXCEPTIONAL_TYPES,
)
from ansible_collections.singularities.realforms.plugins.module_utils.determinator import detect_main_type, send_to_axes, strip_constant
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ReductionError, discard_message
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    coefficient,
    homogeneous_part,
    jet,
    order,
)
from ansible_collections.singularities.realforms.plugins.module_utils.hyperbolic import classify_X9k_J10k, classify_Y, kill_double_root_J10k
from ansible_collections.singularities.realforms.plugins.module_utils.local_algebra import (
    corank,
    jacobian_term_division,
    milnor_number,
    reduce_mod_jacobian_graded,
)
from ansible_collections.singularities.realforms.plugins.module_utils.newton import BELOW, polygon_position, type_data, weighted_jet
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import PipelineState, scaling_records
from ansible_collections.singularities.realforms.plugins.module_utils.parabolic import classify_J10, classify_X9

ClassificationResult = namedtuple("ClassificationResult", ["records", "diagnostics"])


def _low_jet_factors(state, degree):
    c, factors = homogeneous_part(state.current, degree).factor_list()
    factors = sorted([(g, m) for g, m in factors if order(g) > 0], key=lambda item: -item[1])
    return c, factors


def normalize_low_jet_exceptional(state):
    """Bring the lowest jet to c*x^3, c*x^3*y or c*x^4 by a linear map over Q.

    Used for the exceptional families and for the J10 branch, whose cubic jet is a cube.
    """
    degree = state.data.low_jet_degree
    _c, factors = _low_jet_factors(state, degree)
    pattern = [(order(g), m) for g, m in factors]
    if pattern == [(1, 3)]:
        phi = send_to_axes(factors[0][0])
    elif pattern == [(1, 3), (1, 1)]:
        phi = send_to_axes(factors[0][0], factors[1][0])
    elif pattern == [(1, 4)]:
        phi = send_to_axes(factors[0][0])
    else:
        raise ReductionError(
            "normalize_low_jet_exceptional() - jet of degree {0} factors as {1}, not as expected for {2}".format(
                degree, pattern, state.type.base_label()
            ),
            family=state.type.family,
        )
    state.substitute(phi, "normalize_low_jet_exceptional()")
    terms = list(homogeneous_part(state.current, degree).iterterms())
    if len(terms) != 1:
        raise ReductionError("normalize_low_jet_exceptional() - jet of degree {0} is not a single term after the map".format(degree))
    state.leading_constant = terms[0][1]
    return state


def normalize_low_jet_X9k(state):
    """Bring jet(f,4) = c*f1^2*f2 to b0*x^4 + b2*x^2*y^2: f1 goes to x, then x^3*y is sheared away."""
    _c, factors = _low_jet_factors(state, 4)
    doubled = [g for g, m in factors if m == 2 and order(g) == 1]
    if len(doubled) != 1 or sum(order(g) * m for g, m in factors) != 4:
        raise ReductionError("normalize_low_jet_X9k() - quartic jet is not c*f1^2*f2", factors=[str(g) for g, _m in factors])
    state.substitute(send_to_axes(doubled[0]), "normalize_low_jet_X9k()")
    x, y = state.current.ring.gens
    a1, a2 = coefficient(state.current, 3, 1), coefficient(state.current, 2, 2)
    if a2 == 0:
        raise ReductionError("normalize_low_jet_X9k() - x^2 divides the quartic cofactor", current=str(state.current))
    if a1 != 0:
        state.substitute(Automorphism(x, y - x * (a1 / (2 * a2))), "normalize_low_jet_X9k()")
    f4 = homogeneous_part(state.current, 4)
    if any(m not in ((4, 0), (2, 2)) for m in f4.itermonoms()):
        raise ReductionError("normalize_low_jet_X9k() - quartic jet {0} keeps odd terms".format(f4))
    state.leading_constant = coefficient(f4, 4, 0)
    return state


def eliminate_term(state, t, f0=None, weight=None):
    """Remove the term t from the current germ with x -> x - t/m_x or y -> y - t/m_y.

    m_x and m_y are the lowest terms of the partials of f0 (default: the lowest jet of the type),
    lowest with respect to weight when given.
    """
    if f0 is None:
        f0 = jet(state.current, state.data.low_jet_degree)
    division = jacobian_term_division(f0, t, weight)
    if division is None:
        raise ReductionError("eliminate_term() - {0} is not divisible by a lowest term of the partials of {1}".format(t, f0))
    axis, cofactor = division
    x, y = state.current.ring.gens
    if axis == "x":
        phi = Automorphism(x - cofactor, y)
    else:
        phi = Automorphism(x, y - cofactor)
    return state.substitute(phi, "eliminate_term()")


def _below_polygon_term(state):
    below = [(m[0] + m[1], m) for m in state.current.itermonoms() if polygon_position(state.data, m) == BELOW]
    if not below:
        return None
    _degree, monomial = min(below)
    return state.current.ring.from_dict({monomial: coefficient(state.current, *monomial)})


def classify_exceptional(state):
    """One record of E12 ... W13: clear the terms below the polygon, reduce above it onto the moduli monomial, scale."""
    data = state.data
    for _step in range(4 * state.determinacy_degree ** 2):
        t = _below_polygon_term(state)
        if t is None:
            break
        eliminate_term(state, t)
    else:
        raise ReductionError("classify_exceptional() - terms below the Newton polygon keep reappearing", current=str(state.current))

    w = data.weight
    x, y = state.current.ring.gens
    for j in range(data.degree + 1, data.moduli_degree + 1):
        reduction = reduce_mod_jacobian_graded(state.current, weighted_jet(state.current, w, data.degree), w, j, [data.moduli])
        if reduction.v1 or reduction.v2:
            state.substitute(Automorphism(x - reduction.v1, y - reduction.v2), "classify_exceptional()")
    state.replace(weighted_jet(state.current, w, data.moduli_degree), "classify_exceptional()")
    allowed = list(data.support) + [data.moduli]
    extra = [m for m in state.current.itermonoms() if m not in allowed]
    if extra:
        raise ReductionError("classify_exceptional() - terms {0} left outside the normal form support".format(sorted(extra)))

    entry = EXCEPTIONAL_TYPES[state.type.family]
    support = [(monomial, coefficient(state.current, *monomial), slot is None) for monomial, slot in entry["support"]]
    moduli = (data.moduli, coefficient(state.current, *data.moduli))
    return scaling_records(state.type, support, moduli, closed_at_zero=True)


def _type_data_for(singularity_type):
    if singularity_type.family == "Yrs":
        return None
    return type_data(singularity_type.family, k=singularity_type.k)


def classify(f, queue_message=discard_message, milnor_degree_cap=DEFAULT_MILNOR_DEGREE_CAP, verify=False, diagnostics=None):
    """All normal form records of the real right equivalence class of the germ f.

    f is a polynomial over Q. diagnostics, when given, is filled with the Milnor number, the corank,
    the complex type and the determinacy degree as they become known, also when an error is raised.
    """
    if diagnostics is None:
        diagnostics = {}
    f = strip_constant(f, queue_message)
    if coefficient(f, 1, 0) == 0 and coefficient(f, 0, 1) == 0:
        diagnostics["corank"] = corank(f)
    mu = milnor_number(f, milnor_degree_cap)
    diagnostics["milnor_number"] = "infinite" if mu == oo else int(mu)
    singularity_type = detect_main_type(f, queue_message, milnor_degree_cap, milnor=mu)
    diagnostics["complex_type"] = singularity_type.base_label()
    diagnostics["determinacy_degree"] = int(mu) + 1
    queue_message("info", "classify() - complex type {0}, Milnor number {1}".format(singularity_type.base_label(), mu))

    state = PipelineState(f, singularity_type, _type_data_for(singularity_type), int(mu), queue_message, verify)
    family = singularity_type.family
    if family in EXCEPTIONAL_FAMILIES:
        normalize_low_jet_exceptional(state)
        records = classify_exceptional(state)
    elif family == "X9":
        records = classify_X9(state)
    elif family == "J10":
        normalize_low_jet_exceptional(state)
        records = classify_J10(state)
    elif family == "X9k":
        normalize_low_jet_X9k(state)
        records = classify_X9k_J10k(state)
    elif family == "J10k":
        normalize_low_jet_exceptional(state)
        kill_double_root_J10k(state)
        records = classify_X9k_J10k(state)
    else:
        records = classify_Y(state)
    diagnostics["complex_type"] = state.type.base_label()
    for record in records:
        queue_message("info", "classify() - {0}".format(record))
    return records


def run_classification(f, queue_message=discard_message, milnor_degree_cap=DEFAULT_MILNOR_DEGREE_CAP, verify=False):
    diagnostics = {}
    records = classify(f, queue_message, milnor_degree_cap, verify, diagnostics)
    return ClassificationResult(records, diagnostics)
