from functools import reduce
import operator

from ..exceptions import DivisionByZero, ParseError
from .cyclotomic import CycNum
from .mpoly import MPoly
from .ratfn import RatFn


def is_zero(value):
    if isinstance(value, (CycNum, MPoly, RatFn)):
        return value.is_zero()
    return value == 0


def _sum(values):
    values = list(values)
    if not values:
        return 0
    return reduce(operator.add, values)


class MatrixR(object):
    """Square matrix over CycNum, MPoly or RatFn.

    Entries are indexed ``m[row, column]``. Upper indices of the geometric
    objects are rows, lower indices are columns.
    """

    __slots__ = ("n", "rows")
    __hash__ = None

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        self.n = len(self.rows)
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("MatrixR must be square")

    @classmethod
    def build(cls, n, entry):
        return cls([[entry(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n, value, zero=0):
        return cls.build(n, lambda i, j: value if i == j else zero)

    @classmethod
    def identity(cls, n, one=1, zero=0):
        return cls.scalar(n, one, zero)

    @classmethod
    def diagonal(cls, values, zero=0):
        values = list(values)
        return cls.build(len(values), lambda i, j: values[i] if i == j else zero)

    @classmethod
    def zeros(cls, n, zero=0):
        return cls.build(n, lambda i, j: zero)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def row(self, i):
        return list(self.rows[i])

    def column(self, j):
        return [row[j] for row in self.rows]

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, value in enumerate(row):
                yield i, j, value

    def map(self, function):
        return MatrixR([[function(v) for v in row] for row in self.rows])

    def transpose(self):
        return MatrixR(zip(*self.rows))

    def trace(self):
        return _sum(self.rows[i][i] for i in range(self.n))

    def __add__(self, other):
        return MatrixR(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return MatrixR(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return self.map(operator.neg)

    def __mul__(self, other):
        if isinstance(other, MatrixR):
            columns = list(zip(*other.rows))
            return MatrixR(
                [
                    [_sum(a * b for a, b in zip(row, column)) for column in columns]
                    for row in self.rows
                ]
            )
        return self.map(lambda v: v * other)

    def __rmul__(self, other):
        return self.map(lambda v: other * v)

    def apply(self, vector):
        """Matrix times column vector."""
        return [_sum(a * b for a, b in zip(row, vector)) for row in self.rows]

    def commutator(self, other):
        return self * other - other * self

    def diff(self, i):
        return self.map(lambda v: v.diff(i))

    def is_zero(self):
        return all(is_zero(v) for row in self.rows for v in row)

    def __eq__(self, other):
        if not isinstance(other, MatrixR):
            return NotImplemented
        return self.n == other.n and (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def minor(self, i, j):
        return MatrixR(
            [
                [v for c, v in enumerate(row) if c != j]
                for r, row in enumerate(self.rows)
                if r != i
            ]
        )

    def det(self):
        n = self.n
        if n == 0:
            return 1
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        terms = []
        for j, value in enumerate(self.rows[0]):
            if is_zero(value):
                continue
            cofactor = value * self.minor(0, j).det()
            terms.append(cofactor if j % 2 == 0 else -cofactor)
        if not terms:
            return self.rows[0][0]
        return _sum(terms)

    def adjugate(self):
        n = self.n
        if n == 1:
            return MatrixR([[self.rows[0][0] ** 0]])
        if n == 2:
            (a, b), (c, d) = self.rows
            return MatrixR([[d, -b], [-c, a]])
        return MatrixR.build(
            n,
            lambda i, j: (
                self.minor(j, i).det() if (i + j) % 2 == 0 else -self.minor(j, i).det()
            ),
        )

    def adjugate_det(self):
        return self.adjugate(), self.det()

    def __repr__(self):
        return f"MatrixR({[[str(v) for v in row] for row in self.rows]})"

    __str__ = __repr__

    @property
    def data(self):
        return [[v.serializable_data() for v in row] for row in self.rows]

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data, entry):
        try:
            return cls([[entry(v) for v in row] for row in data])
        except (TypeError, ValueError) as error:
            raise ParseError(data, "as a matrix") from error


def mat_adjugate_det(matrix):
    return matrix.adjugate_det()


def inverse(matrix):
    """Exact inverse; a polynomial matrix with non-constant determinant
    becomes a matrix of rational functions."""
    adjugate, det = matrix.adjugate_det()
    if is_zero(det):
        raise DivisionByZero(det)
    if isinstance(det, CycNum):
        return adjugate * det.inverse()
    if isinstance(det, MPoly):
        if det.is_constant():
            return adjugate * det.constant_value().inverse()
        return adjugate.map(lambda v: RatFn(v, det) if isinstance(v, MPoly) else v / det)
    if isinstance(det, RatFn):
        factor = det.inverse()
        return adjugate.map(lambda v: factor * v)
    return adjugate.map(lambda v: v / det)


def to_ratfn_matrix(matrix, ring):
    def convert(value):
        if isinstance(value, RatFn):
            return value
        if isinstance(value, MPoly):
            return RatFn(value)
        return RatFn(ring.constant(value))

    return matrix.map(convert)


def to_poly_matrix(matrix):
    """Convert a matrix of RatFn to MPoly entries; NotDivisible if impossible."""
    return matrix.map(lambda v: v.to_poly() if isinstance(v, RatFn) else v)
