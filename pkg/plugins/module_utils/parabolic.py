# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from ansible_collections.singularities.realforms.plugins.module_utils.constants import X9_CASES
from ansible_collections.singularities.realforms.plugins.module_utils.determinator import SingularityType, dehomogenize
from ansible_collections.singularities.realforms.plugins.module_utils.errors import DegenerateInput, ReductionError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    apply_substitution,
    coefficient,
    homogeneous_part,
    sign,
)
from ansible_collections.singularities.realforms.plugins.module_utils.local_algebra import groebner_basis
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import record_in_interval, sorted_records
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import (
    AlgebraicNumber,
    Interval,
    evaluate,
    factor_rational,
    isolate_real_roots,
    sturm_count,
    upoly,
)

PHI = Symbol("phi")

# (x, y) -> (a*x + b*y, c*x + d*y), tried in order until x^4 has a nonzero coefficient
QUARTIC_CHARTS = [(0, 1, 1, 0), (1, 0, 1, 1), (1, 0, 2, 1), (1, 0, 3, 1)]


def j10_minpoly(d, e, sigma):
    """Polynomial whose roots are the candidate parameters of x^3 + d*x*y^4 + e*y^6 for J10 subtype sigma."""
    d3, e2 = d ** 3, e ** 2
    return upoly(
        [
            sigma * (4 * d3 + 27 * e2),
            0,
            -36 * d3 - 243 * e2,
            0,
            sigma * (81 * d3 + 729 * e2),
            0,
            -729 * e2,
        ]
    )


def x9_minpoly(b, c, d, e, sigma):
    """Polynomial whose roots are the candidate parameters of b*x^4 + c*x^2*y^2 + d*x*y^3 + e*y^4.

    sigma is +1 for the subtypes ++ and --, -1 for +- and -+.
    """
    z6 = -256 * b**3 * e**3 + 128 * b**2 * c**2 * e**2 - 144 * b**2 * c * d**2 * e + 27 * b**2 * d**4 - 16 * b * c**4 * e + 4 * b * c**3 * d**2
    z4 = 18432 * b**3 * e**3 + 11520 * b**2 * c**2 * e**2 - 5184 * b**2 * c * d**2 * e + 972 * b**2 * d**4 + 144 * b * c**3 * d**2 + 16 * c**6
    z2 = -331776 * b**3 * e**3 - 62208 * b**2 * c * d**2 * e + 11664 * b**2 * d**4 - 11520 * b * c**4 * e + 1728 * b * c**3 * d**2 - 128 * c**6
    z0 = 331776 * b**2 * c**2 * e**2 - 248832 * b**2 * c * d**2 * e + 46656 * b**2 * d**4 - 18432 * b * c**4 * e + 6912 * b * c**3 * d**2 + 256 * c**6
    p = upoly([z6, 0, sigma * z4, 0, z2, 0, sigma * z0])
    if p.is_zero:
        raise ReductionError("x9_minpoly() - vanishing parameter polynomial", coefficients=[str(v) for v in (b, c, d, e)])
    return p


def normalize_quartic(state):
    """Bring jet(f,4) of an X9 germ to b*x^4 + c*x^2*y^2 + d*x*y^3 + e*y^4 with b != 0."""
    x, y = state.current.ring.gens
    if coefficient(state.current, 4, 0) == 0:
        for chart in QUARTIC_CHARTS:
            phi = Automorphism.linear(*(chart + (state.current.ring,)))
            if coefficient(apply_substitution(homogeneous_part(state.current, 4), phi), 4, 0) != 0:
                state.substitute(phi, "normalize_quartic()")
                break
        else:
            raise ReductionError("normalize_quartic() - quartic jet vanishes on five directions", current=str(state.current))
    b, a1 = coefficient(state.current, 4, 0), coefficient(state.current, 3, 1)
    if a1 != 0:
        state.substitute(Automorphism(x - y * (a1 / (4 * b)), y), "normalize_quartic()")
    return homogeneous_part(state.current, 4)


def _quartic_case(f4):
    b, c, d, e = (coefficient(f4, *m) for m in ((4, 0), (2, 2), (1, 3), (0, 4)))
    count = sturm_count(upoly([b, 0, c, d, e]), Interval.real_line())
    if count == 0:
        return "no_roots_positive" if b > 0 else "no_roots_negative"
    if count == 2:
        return "two_roots"
    if count == 4:
        return "four_roots"
    raise ReductionError("_quartic_case() - quartic with {0} real roots has a repeated factor".format(count))


class DiagonalPair(namedtuple("DiagonalPair", ["sign_of", "A", "B", "C"])):
    """Real coordinate axes u, v in which f4 = A*u^4 + B*u^2*v^2 + C*v^4, up to positive factors.

    A, B and C are univariate polynomials in phi evaluated by sign_of; B and C carry the
    positive factors D^2 and D^4, which do not change the comparisons below.
    """

    __slots__ = ()

    @property
    def signs(self):
        return (self.sign_of(self.A), self.sign_of(self.C))

    def compare(self, value):
        """sign(a - value) for the parameter a = B / sqrt(|A*C|) of these axes."""
        value = QQ.convert(value)
        sign_b = self.sign_of(self.B)
        if value == 0:
            return sign_b
        sign_value = sign(value)
        if sign_b != sign_value:
            return -sign_value
        sign_a, sign_c = self.signs
        gap = self.B * self.B - self.A * self.C * upoly([value * value * sign_a * sign_c], self.A.gen)
        return sign_value * self.sign_of(gap)

    def parameter_in(self, interval):
        if interval.lower is not None:
            side = self.compare(interval.lower)
            if side < 0 or (side == 0 and not interval.lower_closed):
                return False
        if interval.upper is not None:
            side = self.compare(interval.upper)
            if side > 0 or (side == 0 and not interval.upper_closed):
                return False
        return True


def _phi_poly(coefficients):
    """Univariate Poly in phi from a dict exponent -> coefficient."""
    if not coefficients:
        return upoly([0], PHI)
    top = max(coefficients)
    return upoly([coefficients.get(k, QQ.zero) for k in range(top, -1, -1)], PHI)


def _rational_sign_of(h):
    return sign(evaluate(h, QQ.zero))


def _axes_at_infinity(f4):
    """Pairs with one axis along y = 0; only possible when u^3*v cancels for phi2 = -a1/(4b)."""
    F = dehomogenize(f4, 4)
    b, a1 = coefficient(f4, 4, 0), coefficient(f4, 3, 1)
    if b == 0:
        return []
    phi2 = -a1 / (4 * b)
    if evaluate(F.diff(), phi2) != 0:
        return []
    A = upoly([b], PHI)
    B = upoly([evaluate(F.diff().diff(), phi2) / 2], PHI)
    C = upoly([evaluate(F, phi2)], PHI)
    return [DiagonalPair(_rational_sign_of, A, B, C), DiagonalPair(_rational_sign_of, C, B, A)]


def _finite_axes(f4):
    """Pairs (phi1, 1), (phi2, 1) found by lex elimination of the u^3*v and u*v^3 conditions."""
    ideal_ring, w, p2, p1 = ring("w,p2,p1", QQ)
    terms = list(f4.iterterms())

    def quartic_at(t):
        return sum((t**i * c for (i, _j), c in terms), ideal_ring.zero)

    F1, F2 = quartic_at(p1), quartic_at(p2)
    equations = [
        (p2 - p1) * F1.diff(p1) + 4 * F1,
        (p1 - p2) * F2.diff(p2) + 4 * F2,
        w * (p1 - p2) - 1,
    ]
    basis = groebner_basis(equations, order="lex")
    eliminated = [g for g in basis if all(m[0] == 0 and m[1] == 0 for m in g.itermonoms())]
    if not eliminated:
        raise ReductionError("_finite_axes() - elimination ideal in phi1 is zero", basis=[str(g) for g in basis])
    univariate = _phi_poly(dict((m[2], c) for m, c in eliminated[0].iterterms()))
    if univariate.degree() <= 0:
        return []

    # images of the quartic under x -> phi*u + N*v, y -> u + D*v with phi2 = N/D
    coordinate_ring, u, v, phi = ring("u,v,phi", QQ)
    F = sum((phi**i * c for (i, _j), c in terms), coordinate_ring.zero)
    D = F.diff(phi)
    N = phi * D - 4 * F
    X, Y = phi * u + N * v, u + D * v
    g = sum((X**i * Y**j * c for (i, j), c in terms), coordinate_ring.zero)

    def part(i, j):
        return _phi_poly(dict((m[2], c) for m, c in g.iterterms() if m[:2] == (i, j)))

    A, B, C = part(4, 0), part(2, 2), part(0, 4)
    derivative = _phi_poly(dict((m[2], c) for m, c in D.iterterms()))
    pairs = []
    for factor, _mult in factor_rational(univariate):
        reduced = [h.rem(factor) for h in (A, B, C)]
        for interval in isolate_real_roots(factor):
            root = AlgebraicNumber(factor, interval)
            if root.sign_of(derivative) == 0:
                continue
            pairs.append(DiagonalPair(root.sign_of, *reduced))
    return pairs


def diagonal_pairs(f4):
    """All real coordinate pairs in which the binary quartic f4 has no u^3*v and u*v^3 terms."""
    return _axes_at_infinity(f4) + _finite_axes(f4)


def x9_real_solvable(f4, signs, parameter):
    """True iff a real linear map takes f4 to signs[0]*x^4 + a*x^2*y^2 + signs[1]*y^4 with a = parameter.

    parameter is an AlgebraicNumber whose interval isolates one root of the parameter
    polynomial of the subtype.
    """
    signs = tuple(signs)
    return any(pair.signs == signs and pair.parameter_in(parameter.interval) for pair in diagonal_pairs(f4))


def classify_X9(state):
    """Exactly two records; which interval pair applies is decided by real solvability of the test subtype."""
    f4 = normalize_quartic(state)
    b, c, d, e = (coefficient(f4, *m) for m in ((4, 0), (2, 2), (1, 3), (0, 4)))
    key = _quartic_case(f4)
    case = X9_CASES[key]
    p = x9_minpoly(b, c, d, e, case["sigma"])
    test_signs, test_interval = case["test"]
    test_interval = Interval(*test_interval)
    candidates = sturm_count(p, test_interval)
    accepted = False
    if candidates == 1:
        test_record = record_in_interval(SingularityType("X9"), test_signs, p, test_interval)
        accepted = x9_real_solvable(f4, test_signs, test_record.parameter)
    state.log("info", "classify_X9() - case {0}, {1} realizes the test interval {2}: {3}".format(key, test_signs, test_interval, accepted))
    intervals = case["accepted"] if accepted else case["rejected"]
    records = [
        record_in_interval(SingularityType("X9"), subtype, p, Interval(*interval))
        for subtype, interval in zip(case["subtypes"], intervals)
    ]
    return sorted_records(records)


def _j10_record(signs, p, interval):
    return record_in_interval(SingularityType("J10"), signs, p, interval)


def classify_J10(state):
    """One or three records from the invariants of x^3 + d*x*y^4 + e*y^6."""
    x, y = state.current.ring.gens
    if coefficient(state.current, 3, 0) < 0:
        state.substitute(Automorphism(-x, y), "classify_J10()")
    c = coefficient(state.current, 3, 0)
    b = coefficient(state.current, 2, 2)
    if b != 0:
        state.substitute(Automorphism(x - y**2 * (b / (3 * c)), y), "classify_J10()")
    d = coefficient(state.current, 1, 4) / c
    e = coefficient(state.current, 0, 6) / c
    state.log("info", "classify_J10() - reduced to x^3 + ({0})*x*y^4 + ({1})*y^6".format(d, e))
    if 4 * d**3 + 27 * e**2 == 0:
        raise DegenerateInput("J10 germ with a^2 = 4 is not isolated", restriction="a^2 != 4", family="J10")

    plus, minus = j10_minpoly(d, e, 1), j10_minpoly(d, e, -1)
    k = upoly([1, 0, d, e])
    # the real roots of k multiply to -e, so a and e have opposite signs
    if sturm_count(k, Interval.real_line()) == 1:
        if e > 0:
            return [_j10_record((1,), plus, Interval.negative())]
        if e < 0:
            return [_j10_record((1,), plus, Interval.positive())]
        return [_j10_record((1,), upoly([1, 0]), Interval.point(0))]

    if e == 0:
        half_square = upoly([1, 0, QQ(-9, 2)])
        return sorted_records(
            [
                _j10_record((1,), half_square, Interval.negative()),
                _j10_record((-1,), upoly([1, 0]), Interval.point(0)),
                _j10_record((1,), half_square, Interval.positive()),
            ]
        )
    roots = isolate_real_roots(plus)
    if len(roots) != 4:
        raise ReductionError("classify_J10() - expected four real parameter candidates, got {0}".format(len(roots)))
    if e > 0:
        records = [_j10_record((-1,), minus, Interval.positive()), _j10_record((1,), plus, roots[1]), _j10_record((1,), plus, roots[3])]
    else:
        records = [_j10_record((-1,), minus, Interval.negative()), _j10_record((1,), plus, roots[0]), _j10_record((1,), plus, roots[2])]
    return sorted_records(records)
