from ..exceptions import DivisionByZero, NotDivisible, ParseError
from .cyclotomic import CycNum
from .mpoly import MPoly


class RatFn(object):
    """Fraction num/den of two polynomials in the same ring.

    Fractions are not reduced to lowest terms; constant denominators are
    folded into the numerator and a zero numerator gets denominator 1.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if den.ring != num.ring:
            raise ValueError(f"Ring mismatch: {num.ring} and {den.ring}")
        if den.is_zero():
            raise DivisionByZero(den)
        if num.is_zero():
            den = num.ring.one
        elif den.is_constant() and den.constant_value() != 1:
            num = num * den.constant_value().inverse()
            den = num.ring.one
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, MPoly):
            return RatFn(other)
        try:
            return RatFn(self.ring.constant(other))
        except TypeError:
            return None

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        try:
            self.to_poly()
        except NotDivisible:
            return False
        return True

    def to_poly(self):
        if self.den.is_constant():
            return self.num
        return self.num.exact_div(self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        if other.den.is_constant():
            return RatFn(self.num + other.num * self.den, self.den)
        if self.den.is_constant():
            return RatFn(self.num * other.den + other.num, other.den)
        return RatFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (CycNum, int)):
            return RatFn(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.den.is_constant():
            return RatFn(self.num * other.num, self.den)
        if self.den.is_constant():
            return RatFn(self.num * other.num, other.den)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero(self)
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFn(self.num**exponent, self.den**exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def diff(self, i):
        if self.den.is_constant():
            return RatFn(self.num.diff(i))
        return RatFn(
            self.num.diff(i) * self.den - self.num * self.den.diff(i), self.den**2
        )

    def compose(self, images):
        return RatFn(self.num.compose(images), self.den.compose(images))

    def cancel_by(self, factor):
        """Divide numerator and denominator by ``factor`` as often as both allow."""
        num, den = self.num, self.den
        while not den.is_constant():
            try:
                reduced_num = num.exact_div(factor)
                reduced_den = den.exact_div(factor)
            except NotDivisible:
                break
            num, den = reduced_num, reduced_den
        return RatFn(num, den)

    def __repr__(self):
        return f"RatFn({self.num!s}, {self.den!s})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    @property
    def data(self):
        return {"num": self.num.serializable_data(), "den": self.den.serializable_data()}

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, ring, data):
        try:
            return cls(MPoly.from_data(ring, data["num"]), MPoly.from_data(ring, data["den"]))
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a rational function") from error


def as_ratfn(value, ring):
    if isinstance(value, RatFn):
        return value
    if isinstance(value, MPoly):
        return RatFn(value)
    return RatFn(ring.constant(value))
