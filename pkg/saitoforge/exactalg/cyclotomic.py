import math
from functools import lru_cache

from sympy import QQ, Dummy, Poly, cyclotomic_poly

from ..exceptions import DivisionByZero, ParseError

_ZETA = Dummy("zeta")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(order: int):
    """Integer coefficients of the cyclotomic polynomial of ``order``,
    lowest degree first. The leading coefficient is always 1."""
    poly = cyclotomic_poly(order, _ZETA, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def field_degree(order: int) -> int:
    return len(cyclotomic_coefficients(order)) - 1


def to_rational(value):
    if isinstance(value, str):
        return parse_rational(value)
    return QQ(value)


def parse_rational(text: str):
    text = text.strip()
    try:
        if "/" in text:
            numerator, denominator = text.split("/")
            return QQ(int(numerator), int(denominator))
        return QQ(int(text))
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError(text, "as an exact rational") from error


def format_rational(value) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _reduce(values, order):
    """Reduce a coefficient list modulo the cyclotomic polynomial."""
    phi = cyclotomic_coefficients(order)
    degree = len(phi) - 1
    values = list(values)
    for k in range(len(values) - 1, degree - 1, -1):
        top = values[k]
        if top:
            shift = k - degree
            for j in range(degree):
                if phi[j]:
                    values[shift + j] -= top * phi[j]
            values[k] = QQ(0)
    values = values[:degree]
    values.extend(QQ(0) for _ in range(degree - len(values)))
    return values


class CycNum(object):
    """An element of the cyclotomic field Q(zeta_N).

    The value is sum(coeffs[j] * zeta_N**j) with coefficients reduced modulo
    the N-th cyclotomic polynomial. Rational values are always stored with
    order 1, other values keep the order they were built in; equality
    promotes both operands to a common order.

    Attributes:
        order: N
        coeffs: tuple of sympy QQ rationals of length phi(N)
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None

    def __init__(self, order, coeffs, reduced=False):
        order = int(order)
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        values = [to_rational(c) for c in coeffs]
        if not reduced:
            values = _reduce(values, order)
        if order > 1 and not any(values[1:]):
            order, values = 1, values[:1]
        self.order = order
        self.coeffs = tuple(values)

    @classmethod
    def rational(cls, value):
        return cls(1, (to_rational(value),), reduced=True)

    @classmethod
    def zeta(cls, order, power=1):
        """zeta_N**power, stored in Q(zeta_{N/2}) when N = 2 mod 4."""
        order = int(order)
        power %= order
        sign = 1
        if order % 4 == 2:
            half = order // 2
            # zeta_{2m} = -zeta_m**((m + 1) / 2) for odd m
            sign = -1 if power % 2 else 1
            power = (power * ((half + 1) // 2)) % half
            order = half
        values = [QQ(0)] * (power + 1)
        values[power] = QQ(sign)
        return cls(order, values)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, QQ.dtype)):
            return cls.rational(value)
        raise TypeError(f"Cannot interpret {value!r} as a cyclotomic number")

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return self.order == 1

    def is_one(self):
        return self.order == 1 and self.coeffs[0] == 1

    def to_rational(self):
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def promote(self, order):
        order = int(order)
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        values = [QQ(0)] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            values[j * step] = c
        return CycNum(order, values)

    def _aligned(self, other):
        if self.order == other.order:
            return self.order, self.coeffs, other.coeffs
        order = self.order * other.order // math.gcd(self.order, other.order)
        return order, self.promote(order).coeffs, other.promote(order).coeffs

    def __add__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.order == 1:
            values = list(self.coeffs)
            values[0] += other.coeffs[0]
            return CycNum(self.order, values, reduced=True)
        if self.order == 1:
            return other.__add__(self)
        order, left, right = self._aligned(other)
        return CycNum(order, [a + b for a, b in zip(left, right)], reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.coeffs], reduced=True)

    def __sub__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.order == 1:
            factor = other.coeffs[0]
            return CycNum(self.order, [c * factor for c in self.coeffs], reduced=True)
        if self.order == 1:
            return other.__mul__(self)
        order, left, right = self._aligned(other)
        values = [QQ(0)] * (len(left) + len(right) - 1)
        for i, a in enumerate(left):
            if a:
                for j, b in enumerate(right):
                    if b:
                        values[i + j] += a * b
        return CycNum(order, values)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero(self)
        if self.order == 1:
            return CycNum.rational(QQ(1) / self.coeffs[0])
        element = Poly(list(reversed(self.coeffs)), _ZETA, domain=QQ)
        modulus = Poly(
            list(reversed(cyclotomic_coefficients(self.order))), _ZETA, domain=QQ
        )
        inverse = element.invert(modulus)
        values = [QQ.from_sympy(c) for c in reversed(inverse.all_coeffs())]
        return CycNum(self.order, values)

    def __truediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = CycNum.rational(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        _, left, right = self._aligned(other)
        return left == right

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return f"CycNum({self.order}, {[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.order == 1:
            return format_rational(self.coeffs[0])
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(format_rational(c))
                continue
            power = f"z{self.order}" if j == 1 else f"z{self.order}^{j}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{format_rational(c)}*{power}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    @property
    def data(self):
        return {
            "order": self.order,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data):
        try:
            return cls(int(data["order"]), [parse_rational(c) for c in data["coeffs"]])
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a cyclotomic number") from error


def cyc_arith(a, b, op):
    """Exact cyclotomic arithmetic: ``op`` is one of add, mul, inv."""
    a = CycNum.coerce(a)
    if op == "add":
        return a + CycNum.coerce(b)
    if op == "mul":
        return a * CycNum.coerce(b)
    if op == "inv":
        return a.inverse()
    raise ValueError(f"Unknown cyclotomic operation {op}")


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def imaginary_unit():
    return CycNum.zeta(4)


def i_sqrt3():
    return CycNum.zeta(3) - CycNum.zeta(3, 2)


def sqrt2():
    return CycNum.zeta(8) + CycNum.zeta(8, 7)


def sqrt3():
    return -imaginary_unit() * i_sqrt3()


def sqrt5():
    return CycNum.zeta(5) - CycNum.zeta(5, 2) - CycNum.zeta(5, 3) + CycNum.zeta(5, 4)
