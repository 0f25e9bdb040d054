"""Exact scalars in Q(i, sqrt 3).

A scalar is stored as four rationals (w, x, y, z) meaning
w + x*i + y*sqrt(3) + z*i*sqrt(3).
"""
import re
from dataclasses import dataclass
from fractions import Fraction

import sympy

from src.errors import ScalarDivisionError

_ZERO = Fraction(0)
_ONE = Fraction(1)

_COMPONENT = r'(-?\d+/\d+)'
_FULL_FORM = re.compile(
    rf'^{_COMPONENT} \+ {_COMPONENT}\*i \+ {_COMPONENT}\*r3 \+ {_COMPONENT}\*i\*r3$'
)


def _q3_mul(p, q, r, t):
    # (p + q*sqrt3)(r + t*sqrt3)
    return p * r + 3 * q * t, p * t + q * r


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f'cannot build a rational from {value!r}')


@dataclass(frozen=True, slots=True)
class Scalar:
    w: Fraction = _ZERO
    x: Fraction = _ZERO
    y: Fraction = _ZERO
    z: Fraction = _ZERO

    def __post_init__(self):
        for name in ('w', 'x', 'y', 'z'):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, _as_fraction(value))

    @classmethod
    def of(cls, value):
        if isinstance(value, Scalar):
            return value
        return cls(_as_fraction(value))

    @classmethod
    def i(cls):
        return cls(_ZERO, _ONE)

    @classmethod
    def sqrt3(cls):
        return cls(_ZERO, _ZERO, _ONE)

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    @property
    def is_zero(self):
        return not (self.w or self.x or self.y or self.z)

    @property
    def is_rational(self):
        return not (self.x or self.y or self.z)

    @property
    def is_real(self):
        return not (self.x or self.z)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar(self.w + other, self.x, self.y, self.z)
            return NotImplemented
        return Scalar(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.of(other))

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar(self.w * other, self.x * other, self.y * other, self.z * other)
            return NotImplemented
        if other.is_rational:
            r = other.w
            return Scalar(self.w * r, self.x * r, self.y * r, self.z * r)
        if self.is_rational:
            r = self.w
            return Scalar(other.w * r, other.x * r, other.y * r, other.z * r)
        # (A1 + B1 i)(A2 + B2 i) with A, B in Q(sqrt3)
        a1a2 = _q3_mul(self.w, self.y, other.w, other.y)
        b1b2 = _q3_mul(self.x, self.z, other.x, other.z)
        a1b2 = _q3_mul(self.w, self.y, other.x, other.z)
        b1a2 = _q3_mul(self.x, self.z, other.w, other.y)
        return Scalar(
            a1a2[0] - b1b2[0],
            a1b2[0] + b1a2[0],
            a1a2[1] - b1b2[1],
            a1b2[1] + b1a2[1],
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ScalarDivisionError(Scalar.of(other))
            return self * (Fraction(1) / other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.invert()

    def conjugate(self):
        return Scalar(self.w, -self.x, self.y, -self.z)

    def invert(self):
        """Multiplicative inverse, solving the 4x4 rational system of multiplication by self."""
        if self.is_zero:
            raise ScalarDivisionError(self)
        if self.is_rational:
            return Scalar(1 / self.w)
        basis = (Scalar(_ONE), Scalar(_ZERO, _ONE), Scalar(_ZERO, _ZERO, _ONE), Scalar(_ZERO, _ZERO, _ZERO, _ONE))
        columns = [(self * e).components for e in basis]
        rows = [[columns[c][r] for c in range(4)] + [_ONE if r == 0 else _ZERO] for r in range(4)]
        for col in range(4):
            pivot = next(r for r in range(col, 4) if rows[r][col] != 0)
            rows[col], rows[pivot] = rows[pivot], rows[col]
            lead = rows[col][col]
            rows[col] = [v / lead for v in rows[col]]
            for r in range(4):
                if r != col and rows[r][col] != 0:
                    factor = rows[r][col]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
        return Scalar(*(rows[r][4] for r in range(4)))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.components == other.components
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.w == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.w)
        return hash(self.components)

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_rational:
            return str(self.w)
        w, x, y, z = (f'{c.numerator}/{c.denominator}' for c in self.components)
        return f'{w} + {x}*i + {y}*r3 + {z}*i*r3'

    def __repr__(self):
        return f'<Scalar {self}>'

    @classmethod
    def parse(cls, text):
        text = text.strip()
        match = _FULL_FORM.match(text)
        if match:
            return cls(*(Fraction(g) for g in match.groups()))
        return cls(Fraction(text))

    def to_sympy(self):
        r3 = sympy.sqrt(3)
        return (sympy.Rational(self.w.numerator, self.w.denominator)
                + sympy.Rational(self.x.numerator, self.x.denominator) * sympy.I
                + sympy.Rational(self.y.numerator, self.y.denominator) * r3
                + sympy.Rational(self.z.numerator, self.z.denominator) * sympy.I * r3)

    @classmethod
    def from_sympy(cls, expr):
        expr = sympy.expand(sympy.sympify(expr))
        re_part, im_part = expr.as_real_imag()
        parts = []
        for part in (sympy.expand(re_part), sympy.expand(im_part)):
            surd = part.coeff(sympy.sqrt(3))
            rest = sympy.expand(part - surd * sympy.sqrt(3))
            if not (rest.is_Rational and surd.is_Rational):
                raise ValueError(f'{expr} is not an element of Q(i, sqrt 3)')
            parts.append((Fraction(int(rest.p), int(rest.q)), Fraction(int(surd.p), int(surd.q))))
        (w, y), (x, z) = parts
        return cls(w, x, y, z)

    def to_dict(self):
        return {
            'w': str(self.w),
            'x': str(self.x),
            'y': str(self.y),
            'z': str(self.z),
        }


ZERO = Scalar()
ONE = Scalar(_ONE)
I = Scalar.i()
SQRT3 = Scalar.sqrt3()
