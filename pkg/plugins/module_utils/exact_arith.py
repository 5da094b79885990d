# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

from sympy import Poly, Rational, sqrt
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from ansible_collections.singularities.realforms.plugins.module_utils.errors import ReductionError


def bipoly_ring(domain=QQ):
    """Return (ring, x, y) for bivariate polynomials over domain."""
    return ring("x,y", domain)


QQ_RING, QQ_X, QQ_Y = bipoly_ring()


def to_rational(value):
    """Convert int, str ("p/q") or a sympy Rational to an element of QQ."""
    if isinstance(value, str):
        value = Rational(value.strip())
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ.from_sympy(value)
    return QQ.convert(value)


def format_rational(value):
    """Render a QQ element as "p" or "p/q"."""
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0}/{1}".format(value.numerator, value.denominator)


def to_domain(K, value):
    """Convert value (int, QQ or K element) into the coefficient domain K."""
    if K.of_type(value):
        return value
    if QQ.of_type(value):
        return K.convert_from(value, QQ)
    return K.convert(value)


def sign(value):
    return (value > 0) - (value < 0)


def coefficient(f, i, j):
    return f.get((i, j), f.ring.domain.zero)


def monomial_term(poly_ring, i, j, coeff=None):
    if coeff is None:
        coeff = poly_ring.domain.one
    return poly_ring.from_dict({(i, j): coeff})


def lift(f, poly_ring):
    """Move f into poly_ring, converting its coefficients."""
    if f.ring == poly_ring:
        return f
    return poly_ring.from_dict(dict(f), f.ring.domain)


def select_terms(f, predicate):
    return f.ring.from_dict(dict((m, c) for m, c in f.iterterms() if predicate(m)))


def jet(f, n):
    """Sum of the terms of f of standard degree <= n."""
    return select_terms(f, lambda m: m[0] + m[1] <= n)


def homogeneous_part(f, n):
    return select_terms(f, lambda m: m[0] + m[1] == n)


def order(f):
    """Lowest standard degree of a term of f, None for the zero polynomial."""
    if not f:
        return None
    return min(i + j for i, j in f.itermonoms())


def monomial_divides(divisor, monomial):
    return divisor[0] <= monomial[0] and divisor[1] <= monomial[1]


def term_divide(f, divisor):
    """Exact division of f by the single term divisor; every term of f must be divisible."""
    if len(divisor) != 1:
        raise ValueError("term_divide() - divisor must be a single term, got {0}".format(divisor))
    (dmonom, dcoeff), = divisor.iterterms()
    result = {}
    for monom, coeff in f.iterterms():
        if not monomial_divides(dmonom, monom):
            raise ValueError("term_divide() - {0} is not divisible by {1}".format(f, divisor))
        result[(monom[0] - dmonom[0], monom[1] - dmonom[1])] = coeff / dcoeff
    return f.ring.from_dict(result)


class Automorphism(object):
    """Coordinate change x -> x_image, y -> y_image of the local ring."""

    def __init__(self, x_image, y_image):
        if x_image.ring != y_image.ring:
            if x_image.ring.domain == QQ:
                x_image = lift(x_image, y_image.ring)
            else:
                y_image = lift(y_image, x_image.ring)
        self.ring = x_image.ring
        self.x_image = x_image
        self.y_image = y_image
        zero = self.ring.domain.zero
        if coefficient(x_image, 0, 0) != zero or coefficient(y_image, 0, 0) != zero:
            raise ValueError("Automorphism images must vanish at the origin, got {0} and {1}".format(x_image, y_image))
        if self.linear_determinant() == zero:
            raise ValueError("Automorphism is not locally invertible: {0}, {1}".format(x_image, y_image))

    @classmethod
    def identity(cls, poly_ring=QQ_RING):
        x, y = poly_ring.gens
        return cls(x, y)

    @classmethod
    def linear(cls, a, b, c, d, poly_ring=QQ_RING):
        """x -> a*x + b*y, y -> c*x + d*y"""
        x, y = poly_ring.gens
        K = poly_ring.domain
        return cls(x * to_domain(K, a) + y * to_domain(K, b), x * to_domain(K, c) + y * to_domain(K, d))

    def linear_part(self):
        return (
            coefficient(self.x_image, 1, 0),
            coefficient(self.x_image, 0, 1),
            coefficient(self.y_image, 1, 0),
            coefficient(self.y_image, 0, 1),
        )

    def linear_determinant(self):
        a, b, c, d = self.linear_part()
        return a * d - b * c

    def is_linear(self):
        return all(i + j == 1 for i, j in list(self.x_image.itermonoms()) + list(self.y_image.itermonoms()))

    def inverse(self):
        if not self.is_linear():
            raise ValueError("Only linear automorphisms can be inverted explicitly")
        a, b, c, d = self.linear_part()
        det = a * d - b * c
        return Automorphism.linear(d / det, -b / det, -c / det, a / det, self.ring)

    def lift(self, poly_ring):
        return Automorphism(lift(self.x_image, poly_ring), lift(self.y_image, poly_ring))

    def truncate(self, n):
        return Automorphism(jet(self.x_image, n), jet(self.y_image, n))

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.x_image == other.x_image and self.y_image == other.y_image

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Automorphism(x -> {0}, y -> {1})".format(self.x_image, self.y_image)


def apply_substitution(f, phi):
    """Return f(x_image, y_image), expanded."""
    if f.ring != phi.ring:
        if f.ring.domain == QQ:
            f = lift(f, phi.ring)
        else:
            phi = phi.lift(f.ring)
    x, y = f.ring.gens
    return f.compose([(x, phi.x_image), (y, phi.y_image)])


def compose_automorphisms(phi, psi):
    """phi o psi: apply(apply(f, psi), phi) == apply(f, compose_automorphisms(phi, psi))."""
    return Automorphism(apply_substitution(psi.x_image, phi), apply_substitution(psi.y_image, phi))


class QuadExt(object):
    """Q[t]/(t^2 + p*t + q) for an irreducible modulus, computed in a sympy AlgebraicField.

    The field is generated by theta = sqrt(p^2 - 4q) so that t = (theta - p) / 2.
    """

    def __init__(self, p, q):
        self.p = QQ.convert(p)
        self.q = QQ.convert(q)
        self.discriminant = self.p * self.p - 4 * self.q
        theta = sqrt(QQ.to_sympy(self.discriminant))
        if theta.is_Rational:
            raise ValueError("Modulus t^2 + ({0})t + ({1}) is reducible over Q".format(self.p, self.q))
        self.is_real = self.discriminant > 0
        self.domain = QQ.algebraic_field(theta)
        self.t = self.domain([QQ(1, 2), -self.p / 2])

    @classmethod
    def from_modulus(cls, modulus):
        """Build from a sympy Poly of degree 2 over QQ."""
        if modulus.degree() != 2:
            raise ValueError("Modulus must have degree 2, got {0}".format(modulus))
        lc, p, q = modulus.monic().rep.to_list()
        return cls(p, q)

    @property
    def discriminant_sign(self):
        return "real" if self.is_real else "imaginary"

    def modulus(self, gen):
        return Poly([QQ.to_sympy(c) for c in (QQ(1), self.p, self.q)], gen, domain=QQ)

    def ring(self):
        return bipoly_ring(self.domain)

    def element(self, a, b=0):
        return ExtElem(self, to_domain(self.domain, a) + to_domain(self.domain, b) * self.t)

    def _theta_coordinates(self, value):
        coords = list(value.to_list())
        while len(coords) < 2:
            coords.insert(0, QQ.zero)
        return coords[-1], coords[-2]

    def coordinates(self, value):
        """(a, b) with value = a + b*t."""
        c0, c1 = self._theta_coordinates(value)
        return c0 + c1 * self.p, 2 * c1

    def conjugate(self, value):
        c0, c1 = self._theta_coordinates(value)
        return self.domain([-c1, c0])

    def is_rational(self, value):
        return self._theta_coordinates(value)[1] == QQ.zero

    def rational(self, value):
        c0, c1 = self._theta_coordinates(value)
        if c1 != QQ.zero:
            raise ReductionError("Expected a rational element of {0}, got {1}".format(self, value))
        return c0

    def __eq__(self, other):
        return isinstance(other, QuadExt) and (self.p, self.q) == (other.p, other.q)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "QuadExt(t^2 + ({0})*t + ({1}))".format(format_rational(self.p), format_rational(self.q))


class ExtElem(object):
    """Element a + b*t of a QuadExt."""

    def __init__(self, field, value):
        self.field = field
        self.value = to_domain(field.domain, value)

    @property
    def coordinates(self):
        return self.field.coordinates(self.value)

    def _wrap(self, value):
        return ExtElem(self.field, value)

    def _other(self, other):
        if isinstance(other, ExtElem):
            return other.value
        return to_domain(self.field.domain, other)

    def __add__(self, other):
        return self._wrap(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.value - self._other(other))

    def __rsub__(self, other):
        return self._wrap(self._other(other) - self.value)

    def __mul__(self, other):
        return self._wrap(self.value * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.value / self._other(other))

    def __neg__(self):
        return self._wrap(-self.value)

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.field == other.field and self.value == other.value
        return self.value == self._other(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coordinates)

    def __repr__(self):
        a, b = self.coordinates
        return "{0} + ({1})*t".format(format_rational(a), format_rational(b))


def field_conjugate(e):
    """Image of e under the nontrivial automorphism of its field; rationals are fixed."""
    if not isinstance(e, ExtElem):
        return e
    return ExtElem(e.field, e.field.conjugate(e.value))


def conjugate_poly(f, field):
    """Apply field_conjugate to every coefficient of a BiPoly over field."""
    return f.ring.from_dict(dict((m, field.conjugate(c)) for m, c in f.iterterms()))
