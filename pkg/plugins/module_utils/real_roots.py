# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from collections import namedtuple

from sympy import Poly, Symbol, sstr
from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import format_rational, sign

Z = Symbol("z")


def upoly(coefficients, gen=Z):
    """Univariate Poly over QQ from a coefficient list (highest degree first) or a sympy expression."""
    if isinstance(coefficients, (list, tuple)):
        return Poly([QQ.to_sympy(QQ.convert(c)) for c in coefficients], gen, domain=QQ)
    return Poly(coefficients, gen, domain=QQ)


def evaluate(p, value):
    """p(value) for a QQ element value, as a QQ element."""
    result = QQ.zero
    for c in p.rep.to_list():
        result = result * value + c
    return result


def format_upoly(p):
    return sstr(p.as_expr(), order="lex").replace("**", "^")


class Interval(namedtuple("Interval", ["lower", "upper", "lower_closed", "upper_closed"])):
    """Interval with QQ endpoints; None stands for an infinite endpoint, which is always open."""

    __slots__ = ()

    def __new__(cls, lower, upper, lower_closed=False, upper_closed=False):
        if lower is not None:
            lower = QQ.convert(lower)
        if upper is not None:
            upper = QQ.convert(upper)
        if lower is not None and upper is not None and lower > upper:
            raise ValueError("Interval lower bound {0} exceeds upper bound {1}".format(lower, upper))
        return super(Interval, cls).__new__(cls, lower, upper, lower_closed and lower is not None, upper_closed and upper is not None)

    @classmethod
    def closed(cls, lower, upper):
        return cls(lower, upper, True, True)

    @classmethod
    def point(cls, value):
        return cls(value, value, True, True)

    @classmethod
    def real_line(cls):
        return cls(None, None)

    @classmethod
    def positive(cls):
        return cls(0, None)

    @classmethod
    def negative(cls):
        return cls(None, 0)

    @classmethod
    def nonpositive(cls):
        return cls(None, 0, False, True)

    def is_empty(self):
        return self.lower is not None and self.lower == self.upper and not (self.lower_closed and self.upper_closed)

    def contains(self, value):
        value = QQ.convert(value)
        if self.lower is not None and (value < self.lower or (value == self.lower and not self.lower_closed)):
            return False
        if self.upper is not None and (value > self.upper or (value == self.upper and not self.upper_closed)):
            return False
        return True

    def negate(self):
        return Interval(
            None if self.upper is None else -self.upper,
            None if self.lower is None else -self.lower,
            self.upper_closed,
            self.lower_closed,
        )

    def sort_key(self):
        """Lower endpoint first, -inf before everything."""
        if self.lower is None:
            return (0, QQ.zero, 0)
        return (1, self.lower, 0 if self.lower_closed else 1)

    def to_dict(self):
        return dict(
            lower="-inf" if self.lower is None else format_rational(self.lower),
            upper="+inf" if self.upper is None else format_rational(self.upper),
            lower_closed=self.lower_closed,
            upper_closed=self.upper_closed,
        )

    def __str__(self):
        return "{0}{1}, {2}{3}".format(
            "[" if self.lower_closed else "(",
            "-inf" if self.lower is None else format_rational(self.lower),
            "+inf" if self.upper is None else format_rational(self.upper),
            "]" if self.upper_closed else ")",
        )


def _check_nonzero(p):
    if p.is_zero:
        raise ValueError("Expected a nonzero polynomial")


def sturm_count(p, interval):
    """Number of distinct real roots of p in interval, respecting open and closed endpoints."""
    _check_nonzero(p)
    if interval.is_empty():
        return 0
    q = p.sqf_part()
    lower = None if interval.lower is None else QQ.to_sympy(interval.lower)
    upper = None if interval.upper is None else QQ.to_sympy(interval.upper)
    count = q.count_roots(lower, upper)
    if interval.lower is not None and not interval.lower_closed and evaluate(q, interval.lower) == 0:
        count -= 1
    if interval.upper is not None and not interval.upper_closed and evaluate(q, interval.upper) == 0 and interval.upper != interval.lower:
        count -= 1
    return count


def isolate_real_roots(p):
    """Disjoint closed intervals, increasing, each holding exactly one distinct real root of p."""
    _check_nonzero(p)
    q = p.sqf_part()
    if q.degree() <= 0:
        return []
    bounds = [[a, b] for (a, b), _mult in q.intervals()]
    # neighbours may touch, and a rational root comes back as a point interval
    for left, right in zip(bounds, bounds[1:]):
        while left[1] >= right[0]:
            if left[0] == left[1] and right[0] == right[1]:
                raise ValueError("Root isolation of {0} returned a repeated root".format(format_upoly(q)))
            if left[0] != left[1]:
                left[0], left[1] = q.refine_root(left[0], left[1], steps=1)
            if right[0] != right[1]:
                right[0], right[1] = q.refine_root(right[0], right[1], steps=1)
    intervals = [Interval.closed(QQ.from_sympy(a), QQ.from_sympy(b)) for a, b in bounds]
    for interval in intervals:
        if sturm_count(q, interval) != 1:
            raise ValueError("{0} is not isolated by {1}".format(format_upoly(q), interval))
    return intervals


def factor_rational(p):
    """Monic irreducible factors of p over Q with multiplicities, sorted by degree then coefficients."""
    _check_nonzero(p)
    _coeff, factors = p.factor_list()
    result = [(factor.monic(), mult) for factor, mult in factors if factor.degree() > 0]
    return sorted(result, key=lambda item: (item[0].degree(), [c for c in item[0].rep.to_list()]))


def minpoly_in_interval(p, interval):
    """m_I(p): the monic irreducible divisor of p carrying the unique root of p in interval, isolated by interval."""
    count = sturm_count(p, interval)
    if count == 0:
        raise ValueError("{0} has no real root in {1}".format(format_upoly(p), interval))
    if count > 1:
        raise ValueError("{0} has {1} real roots in {2}".format(format_upoly(p), count, interval))
    for factor, _mult in factor_rational(p):
        if sturm_count(factor, interval) == 1:
            return AlgebraicNumber(factor, interval)
    raise ValueError("No irreducible factor of {0} has its root in {1}".format(format_upoly(p), interval))


class AlgebraicNumber(namedtuple("AlgebraicNumber", ["minpoly", "interval"])):
    """Real algebraic number: monic irreducible minpoly over Q plus an interval isolating one of its roots."""

    __slots__ = ()

    @classmethod
    def rational(cls, value):
        value = QQ.convert(value)
        return cls(upoly([1, -value]), Interval.point(value))

    def is_rational(self):
        return self.minpoly.degree() == 1

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("{0} is not rational".format(self))
        c1, c0 = self.minpoly.rep.to_list()
        return -c0 / c1

    def _finite_interval(self):
        lower, upper = self.interval.lower, self.interval.upper
        if lower is not None and upper is not None:
            return lower, upper
        bound = QQ.one + max(abs(c) for c in self.minpoly.rep.to_list()[1:])
        return (-bound if lower is None else lower), (bound if upper is None else upper)

    def refine(self):
        """Halve the isolating interval."""
        if self.is_rational():
            return AlgebraicNumber(self.minpoly, Interval.point(self.rational_value()))
        lower, upper = self._finite_interval()
        middle = (lower + upper) / 2
        left = Interval.closed(lower, middle)
        if sturm_count(self.minpoly, left) == 1:
            return AlgebraicNumber(self.minpoly, left)
        return AlgebraicNumber(self.minpoly, Interval.closed(middle, upper))

    def sign_of(self, h):
        """Exact sign of h at this number, h a univariate Poly over QQ."""
        h = upoly(h.rep.to_list(), self.minpoly.gen) if h.gen != self.minpoly.gen else h
        if h.is_zero or h.rem(self.minpoly).is_zero:
            return 0
        if self.is_rational():
            return sign(evaluate(h, self.rational_value()))
        number = self
        while True:
            lower, upper = number._finite_interval()
            window = Interval.closed(lower, upper)
            if sturm_count(h, window) == 0:
                return sign(evaluate(h, lower))
            number = number.refine()

    def sign(self):
        return self.sign_of(upoly([1, 0], self.minpoly.gen))

    def compare(self, value):
        """sign(self - value) for a rational value."""
        return self.sign_of(upoly([1, -QQ.convert(value)], self.minpoly.gen))

    def minpoly_str(self):
        return format_upoly(self.minpoly)

    def to_dict(self):
        return dict(minpoly=self.minpoly_str(), interval=self.interval.to_dict())

    def __str__(self):
        return "root of {0} in {1}".format(self.minpoly_str(), self.interval)
