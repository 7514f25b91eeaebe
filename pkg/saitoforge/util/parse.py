"""Exact scalars from user input.

Accepted: rationals, i, sqrt(2), sqrt(3), sqrt(5), zeta(N) and sums,
products and integer powers of these, e.g. "12*i*sqrt(3)" or "-60*sqrt(5)".
"""

from sympy import Add, Function, I, Integer, Mul, Pow, Rational, SympifyError, Tuple, sympify

from ..exactalg import CycNum, imaginary_unit, sqrt2, sqrt3, sqrt5
from ..exceptions import ParseError

ROOT_OF_UNITY = Function("root_of_unity")

_LOCALS = {"i": I, "I": I, "zeta": ROOT_OF_UNITY}

_SQUARE_ROOTS = {2: sqrt2, 3: sqrt3, 5: sqrt5}


def _convert(expression, source):
    if isinstance(expression, Rational):
        return CycNum.rational(int(expression.p)) / int(expression.q)
    if expression == I:
        return imaginary_unit()
    if isinstance(expression, ROOT_OF_UNITY):
        (order,) = expression.args
        if not isinstance(order, Integer) or order < 1:
            raise ParseError(source, "(zeta needs a positive integer order)")
        return CycNum.zeta(int(order))
    if isinstance(expression, Add):
        values = [_convert(arg, source) for arg in expression.args]
        return sum(values[1:], values[0])
    if isinstance(expression, Mul):
        value = CycNum.rational(1)
        for arg in expression.args:
            value = value * _convert(arg, source)
        return value
    if isinstance(expression, Pow):
        base, exponent = expression.args
        if exponent == Rational(1, 2) and isinstance(base, Integer) and int(base) in _SQUARE_ROOTS:
            return _SQUARE_ROOTS[int(base)]()
        if exponent == Rational(-1, 2) and isinstance(base, Integer) and int(base) in _SQUARE_ROOTS:
            return _SQUARE_ROOTS[int(base)]().inverse()
        if isinstance(exponent, Integer):
            return _convert(base, source) ** int(exponent)
    raise ParseError(source, f"(unsupported term {expression})")


def parse_scalar(text):
    """An exact CycNum from a string."""
    try:
        expression = sympify(str(text), locals=_LOCALS)
    except (SympifyError, SyntaxError, TypeError) as error:
        raise ParseError(text, "as an exact scalar") from error
    if isinstance(expression, (tuple, Tuple)):
        raise ParseError(text, "(a single scalar is expected)")
    return _convert(expression, text)


def parse_vector(text):
    """Comma separated exact scalars, "1,0" or "12*i*sqrt(3), 1"."""
    try:
        expression = sympify(f"({text},)", locals=_LOCALS)
    except (SympifyError, SyntaxError, TypeError) as error:
        raise ParseError(text, "as a vector of exact scalars") from error
    return [_convert(value, text) for value in expression]
