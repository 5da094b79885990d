# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import Matrix, oo
from sympy.polys.domains import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import ring

from ansible_collections.singularities.realforms.plugins.module_utils.constants import DEFAULT_MILNOR_DEGREE_CAP
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ReductionError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import coefficient, monomial_divides, term_divide
from ansible_collections.singularities.realforms.plugins.module_utils.newton import weighted_part

ORDERINGS = dict(lex=lex, grevlex=grevlex)

GradedReduction = namedtuple("GradedReduction", ["v1", "v2", "coefficients"])


def _check_singular_point(f):
    if coefficient(f, 0, 0) != f.ring.domain.zero:
        raise ValueError("Expected a germ vanishing at the origin, got constant term {0}".format(coefficient(f, 0, 0)))
    if coefficient(f, 1, 0) != f.ring.domain.zero or coefficient(f, 0, 1) != f.ring.domain.zero:
        raise ValueError("Expected a germ without linear part, got {0}".format(f))


def corank(f):
    """2 minus the rank of the Hessian of f at the origin."""
    _check_singular_point(f)
    to_sympy = f.ring.domain.to_sympy
    a, b, c = (to_sympy(coefficient(f, *m)) for m in ((2, 0), (1, 1), (0, 2)))
    return 2 - Matrix([[2 * a, b], [b, 2 * c]]).rank()


def groebner_basis(polys, order="lex"):
    """Reduced Groebner basis of polys (PolyElements of one ring) for the named monomial ordering."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    source = polys[0].ring
    target = ring(source.symbols, source.domain, ORDERINGS[order])[0]
    return groebner([target.from_dict(dict(p)) for p in polys], target)


def _quotient_dimension(generators, n):
    """dim Q[x,y]/(generators + m^n), counted as the standard monomials of a degree-reverse-lex basis."""
    power = [generators[0].ring.from_dict({(i, n - i): QQ.one}) for i in range(n + 1)]
    leading = [g.LM for g in groebner_basis(list(generators) + power, order="grevlex")]
    return sum(
        1
        for total in range(n)
        for i in range(total + 1)
        if not any(monomial_divides(lm, (i, total - i)) for lm in leading)
    )


def milnor_number(f, degree_cap=DEFAULT_MILNOR_DEGREE_CAP):
    """Local Milnor number of f at the origin, sympy.oo for a non-isolated singularity.

    dim Q[x,y]/(J + m^n) is non-decreasing in n and equals mu as soon as two consecutive values agree.
    """
    if coefficient(f, 0, 0) != f.ring.domain.zero:
        raise ValueError("milnor_number() - germ must vanish at the origin")
    x, y = f.ring.gens
    fx, fy = f.diff(x), f.diff(y)
    if coefficient(fx, 0, 0) != f.ring.domain.zero or coefficient(fy, 0, 0) != f.ring.domain.zero:
        return 0
    if not fx or not fy:
        return oo
    common = fx.gcd(fy)
    if any(i + j > 0 for i, j in common.itermonoms()) and coefficient(common, 0, 0) == f.ring.domain.zero:
        return oo
    previous = None
    for n in range(1, degree_cap + 1):
        current = _quotient_dimension([fx, fy], n)
        if current == previous:
            return current
        previous = current
    return oo


def _lowest_term(p, weight=None):
    def key(term):
        monomial = term[0]
        degree = monomial[0] + monomial[1] if weight is None else weight.degree(monomial)
        return (degree, monomial)

    return min(p.iterterms(), key=key)


def jacobian_term_division(f0, t, weight=None):
    """("x", t/m_x) or ("y", t/m_y) for the lowest terms m_x, m_y of the partials of f0, or None.

    The lowest term is taken with respect to weight, or the standard degree without one.
    """
    x, y = f0.ring.gens
    (monomial, _coeff), = t.iterterms()
    for axis, gen in (("x", x), ("y", y)):
        derivative = f0.diff(gen)
        if not derivative:
            continue
        lowest_monomial, lowest_coeff = _lowest_term(derivative, weight)
        # a constant cofactor would not fix the origin
        if monomial_divides(lowest_monomial, monomial) and lowest_monomial != monomial:
            return axis, term_divide(t, f0.ring.from_dict({lowest_monomial: lowest_coeff}))
    return None


def _cofactor_monomials(derivative, weight, j):
    """Monomials m with every term of m*derivative of w-degree >= j and at least one of w-degree j."""
    if not derivative:
        return []
    result = []
    for i in range(j + 1):
        for k in range(j + 1):
            degrees = [weight.degree((i + a, k + b)) for a, b in derivative.itermonoms()]
            if min(degrees) == j:
                result.append((i, k))
    return result


def _solve(columns, target, K):
    """Solve sum(u_c * column_c) = target over K; columns and target are dicts monomial -> coefficient."""
    rows = sorted(set(target).union(*[set(c) for c in columns]))
    if not rows:
        return [K.zero] * len(columns)
    augmented = [[c.get(m, K.zero) for c in columns] + [target.get(m, K.zero)] for m in rows]
    reduced, pivots = DomainMatrix(augmented, (len(rows), len(columns) + 1), K).rref()
    if len(columns) in pivots:
        return None
    entries = reduced.to_list()
    solution = [K.zero] * len(columns)
    for row, pivot in enumerate(pivots):
        solution[pivot] = entries[row][-1]
    return solution


def reduce_mod_jacobian_graded(f, f0, w, j, system):
    """Write the w-degree j piece of f as v1*f0_x + v2*f0_y + sum(c_i * e_i) over the coefficient field of f.

    Solutions with v2 = 0 are preferred. Raises ReductionError when the piece is not representable.
    """
    R = f.ring
    K = R.domain
    x, y = R.gens
    f0 = R.from_dict(dict(f0), f0.ring.domain) if f0.ring != R else f0
    piece = dict(weighted_part(f, w, j).iterterms())
    f0x, f0y = f0.diff(x), f0.diff(y)
    x_monomials = _cofactor_monomials(f0x, w, j)
    y_monomials = _cofactor_monomials(f0y, w, j)
    system_monomials = [m for m in system if w.degree(m) == j]

    def product_column(monomial, derivative):
        return dict(weighted_part(derivative * R.from_dict({monomial: K.one}), w, j).iterterms())

    x_columns = [product_column(m, f0x) for m in x_monomials]
    y_columns = [product_column(m, f0y) for m in y_monomials]
    system_columns = [{m: K.one} for m in system_monomials]

    solution = _solve(x_columns + system_columns, piece, K)
    if solution is not None:
        solution = solution + [K.zero] * len(y_columns)
    else:
        solution = _solve(x_columns + system_columns + y_columns, piece, K)
    if solution is None:
        raise ReductionError(
            "reduce_mod_jacobian_graded() - degree {0} piece is not in the Jacobian ideal plus {1}".format(j, system_monomials),
            degree=j,
        )
    nx, ns = len(x_monomials), len(system_monomials)
    v1 = R.from_dict(dict(zip(x_monomials, solution[:nx])))
    coefficients = list(zip(system_monomials, solution[nx:nx + ns]))
    v2 = R.from_dict(dict(zip(y_monomials, solution[nx + ns:])))
    return GradedReduction(v1, v2, coefficients)
