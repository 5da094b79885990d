# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from ansible_collections.singularities.realforms.plugins.module_utils.determinator import SingularityType, send_to_axes, split_real_Y
from ansible_collections.singularities.realforms.plugins.module_utils.errors import DegenerateInput, ReductionError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import (
    Automorphism,
    QuadExt,
    coefficient,
    homogeneous_part,
    jet,
    monomial_term,
    order,
    sign,
)
from ansible_collections.singularities.realforms.plugins.module_utils.newton import type_data, weighted_jet
from ansible_collections.singularities.realforms.plugins.module_utils.normal_forms import record_in_interval, scaling_records, sorted_records
from ansible_collections.singularities.realforms.plugins.module_utils.real_roots import Interval, sturm_count, upoly


def kill_double_root_J10k(state):
    """Move the double root of the weighted cubic c*s^3 + b*s^2 + d*s + e to s = 0 by x -> x + q*y^2."""
    x, y = state.current.ring.gens
    cubic = upoly([coefficient(state.current, *m) for m in ((3, 0), (2, 2), (1, 4), (0, 6))]).monic()
    common = cubic.gcd(cubic.diff())
    if common.degree() != 1:
        raise ReductionError(
            "kill_double_root_J10k() - weighted cubic {0} has no simple double root".format(cubic.as_expr()),
            family="J10k",
        )
    lc, constant = common.monic().rep.to_list()
    q = -constant / lc
    state.log("info", "kill_double_root_J10k() - double root {0} of {1}".format(q, cubic.as_expr()))
    if q != 0:
        state.substitute(Automorphism(x + y**2 * q, y), "kill_double_root_J10k()")
    return state


def _moduli_exponent(state):
    if state.type.family == "X9k":
        return state.milnor - 5, 4
    return state.milnor - 4, 5


def _kill_xy_terms(state, n, first):
    """Remove x*y^i on or below the segment from x^2*y^2 to y^n by x -> x - t/(2c)*y^(i-2)."""
    x, y = state.current.ring.gens
    for i in range(first, (n + 2) // 2 + 1):
        t = coefficient(state.current, 1, i)
        if t == 0:
            continue
        c = coefficient(state.current, 2, 2)
        state.substitute(Automorphism(x - y ** (i - 2) * (t / (2 * c)), y), "classify_X9k_J10k()")


def _check_support(state, allowed):
    extra = [m for m in state.current.itermonoms() if m not in allowed]
    if extra:
        raise ReductionError(
            "{0} - terms {1} left outside the normal form support".format(state.type.base_label(), sorted(extra)),
            current=str(state.current),
        )


def classify_X9k_J10k(state):
    """Records of X[9+k] and J[10+k]; two when the exponent of the moduli monomial is odd, one when even."""
    n, first = _moduli_exponent(state)
    _kill_xy_terms(state, n, first)
    data = state.data
    state.replace(weighted_jet(state.current, data.weight, data.degree), "classify_X9k_J10k()")
    if state.type.family == "X9k":
        leading = (4, 0)
        support_free = True
    else:
        leading = (3, 0)
        support_free = False
    _check_support(state, [leading, (2, 2), (0, n)])
    b0, b1, b2 = (coefficient(state.current, *m) for m in (leading, (2, 2), (0, n)))
    if b2 == 0:
        raise DegenerateInput(
            "{0} germ with vanishing coefficient of y^{1}".format(state.type.base_label(), n),
            restriction="a != 0",
            family=state.type.family,
        )
    return scaling_records(state.type, [(leading, b0, support_free), ((2, 2), b1, True)], ((0, n), b2))


def _pure_powers(f, axis):
    """Lowest exponent of a pure power of the given axis (0 for x, 1 for y) in f, None when absent."""
    exponents = [m[axis] for m in f.itermonoms() if m[1 - axis] == 0 and m[axis] > 0]
    return min(exponents) if exponents else None


def _quartic_axes(state):
    """Send the doubled lines of jet(f,4) = b*g1^2*g2^2 to the axes, over Q or over Q(t) when they are conjugate."""
    h = homogeneous_part(state.current, 4)
    _c, factors = h.factor_list()
    factors = [(g, m) for g, m in factors if order(g) > 0]
    if len(factors) == 2 and all(order(g) == 1 and m == 2 for g, m in factors):
        (g1, _m1), (g2, _m2) = factors
        state.substitute(send_to_axes(g1, g2), "classify_Y()")
        return None
    if len(factors) == 1 and order(factors[0][0]) == 2 and factors[0][1] == 2:
        g = factors[0][0]
        modulus = upoly([coefficient(g, 0, 2), coefficient(g, 1, 1), coefficient(g, 2, 0)])
        field = QuadExt.from_modulus(modulus)
        state.enter_field(field)
        x, y = state.current.ring.gens
        t = field.t
        state.substitute(send_to_axes(y - x * t, y - x * field.conjugate(t)), "classify_Y()")
        return field
    raise ReductionError("classify_Y() - quartic jet {0} is not a product of two squares".format(h), factors=[str(g) for g, _m in factors])


def _kill_chain(state):
    """Remove x^m*y and x*y^m for 2m - 2 <= the current lowest pure power, smallest m first."""
    x, y = state.current.ring.gens
    b = coefficient(state.current, 2, 2)
    two_b = b + b
    zero = state.current.ring.domain.zero
    for _step in range(4 * (state.milnor + 2)):
        r, s = _pure_powers(state.current, 0), _pure_powers(state.current, 1)
        candidates = []
        for (i, j), c in state.current.iterterms():
            if c == zero:
                continue
            if j == 1 and i >= 3 and (r is None or 2 * i - 2 <= r):
                candidates.append((i, "y", c))
            elif i == 1 and j >= 3 and (s is None or 2 * j - 2 <= s):
                candidates.append((j, "x", c))
        if not candidates:
            return r, s
        m, axis, c = min(candidates, key=lambda item: (item[0], item[1]))
        if axis == "y":
            phi = Automorphism(x, y - monomial_term(state.current.ring, m - 2, 0, c / two_b))
        else:
            phi = Automorphism(x - monomial_term(state.current.ring, 0, m - 2, c / two_b), y)
        state.substitute(phi, "classify_Y()")
    raise ReductionError("classify_Y() - term elimination did not terminate", current=str(state.current))


def _real_root(p):
    return not p.is_zero and p.degree() > 0 and sturm_count(p, Interval.real_line()) > 0


def _shifted_restriction(f0, axis, sigma):
    """sigma + f0 restricted to the given coordinate axis, as a univariate polynomial."""
    powers = dict((m[axis], c) for m, c in f0.iterterms() if m[1 - axis] == 0)
    powers[0] = powers.get(0, 0) + sigma
    top = max(powers)
    return upoly([powers.get(k, 0) for k in range(top, -1, -1)])


def _rational_Y_records(state, r, s):
    b, d, e = (coefficient(state.current, *m) for m in ((2, 2), (r, 0), (0, s)))
    records = scaling_records(SingularityType("Yrs", r=r, s=s), [((2, 2), b, True), ((r, 0), d, True)], ((0, s), e))
    records += scaling_records(SingularityType("Yrs", r=s, s=r), [((2, 2), b, True), ((s, 0), e, True)], ((0, r), d))
    return sorted_records(records)


def _conjugate_Y_records(state, field, r):
    """Y[r,r] whose doubled lines are real and conjugate over Q."""
    base = SingularityType("Yrs", r=r, s=r)
    b = field.rational(coefficient(state.current, 2, 2))
    de = field.rational(coefficient(state.current, r, 0) * coefficient(state.current, 0, r))
    sigma = sign(b)
    if r % 2:
        p = upoly([1, 0, -(de * de) / abs(b) ** r])
        return sorted_records(
            [record_in_interval(base, (sigma, flip), p, interval) for flip in (1, -1) for interval in (Interval.positive(), Interval.negative())]
        )
    value = de / abs(b) ** (r // 2)
    if de < 0:
        return sorted_records(
            [
                record_in_interval(base, (sigma, -1), upoly([1, value]), Interval.real_line()),
                record_in_interval(base, (sigma, 1), upoly([1, -value]), Interval.real_line()),
            ]
        )
    f0 = jet(state.original, state.determinacy_degree)
    if _real_root(_shifted_restriction(f0, 0, sigma)):
        return [record_in_interval(base, (sigma, -sigma), upoly([1, sigma * value]), Interval.real_line())]
    return [record_in_interval(base, (sigma, sigma), upoly([1, -sigma * value]), Interval.real_line())]


def _Ytilde_records(state, field, r):
    """Ytilde[r]: the definite quartic case, worked out over the imaginary quadratic field."""
    base = SingularityType("Ytilde", r=r)
    b = field.rational(coefficient(state.current, 2, 2))
    de = field.rational(coefficient(state.current, r, 0) * coefficient(state.current, 0, r))
    sigma = sign(coefficient(state.original, 4, 0))
    if r % 2:
        p = upoly([1] + [0] * 7 + [-(de**4) * (16 / b) ** (2 * r)])
        return sorted_records([record_in_interval(base, (sigma,), p, interval) for interval in (Interval.positive(), Interval.negative())])
    p = upoly([1, 0, 0, 0, -(de**2) * (16 / abs(b)) ** r])
    f0 = jet(state.original, state.determinacy_degree)
    crosses = _real_root(_shifted_restriction(f0, 0, sigma)) or _real_root(_shifted_restriction(f0, 1, sigma))
    interval = Interval.positive() if (sigma < 0) == crosses else Interval.negative()
    return [record_in_interval(base, (sigma,), p, interval)]


def classify_Y(state):
    """Records of Y[r,s] and Ytilde[r]."""
    split = split_real_Y(state.original)
    field = _quartic_axes(state)
    r, s = _kill_chain(state)
    if r is None or s is None:
        raise ReductionError("classify_Y() - no pure powers of x and y left", current=str(state.current))
    if r + s + 1 != state.milnor:
        raise ReductionError("classify_Y() - exponents {0}, {1} do not match Milnor number {2}".format(r, s, state.milnor))
    if field is not None and r != s:
        raise ReductionError("classify_Y() - conjugate lines with unequal exponents {0}, {1}".format(r, s))
    state.data = type_data("Yrs", r=r, s=s)
    state.type = SingularityType("Ytilde", r=r) if split == "Ytilde" else SingularityType("Yrs", r=r, s=s)
    state.replace(weighted_jet(state.current, state.data.weight, state.data.degree), "classify_Y()")
    _check_support(state, [(2, 2), (r, 0), (0, s)])
    state.log("info", "classify_Y() - {0} over {1}".format(state.type.base_label(), field or "Q"))
    if field is None:
        return _rational_Y_records(state, r, s)
    if split == "Ytilde":
        return _Ytilde_records(state, field, r)
    return _conjugate_Y_records(state, field, r)
