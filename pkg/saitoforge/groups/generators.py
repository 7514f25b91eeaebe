"""Generator matrices of the rank two reflection groups and the monomial groups.

Matrices act on column vectors of the coordinates u; a polynomial p is moved
by g through (g.p)(u) = p(g u).
"""

from ..exactalg import CycNum, MatrixR, imaginary_unit, inverse, sqrt2

ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def matrix(rows):
    return MatrixR([[CycNum.coerce(v) for v in row] for row in rows])


def identity(n):
    return MatrixR.identity(n, ONE, ZERO)


def diagonal(values):
    return MatrixR.diagonal([CycNum.coerce(v) for v in values], ZERO)


def conjugate_by(g, h):
    """h^-1 g h."""
    return inverse(h) * g * h


def rho():
    return matrix([[0, 1], [1, 0]])


def tau(m):
    return diagonal([CycNum.zeta(m), 1])


def sigma(m):
    return conjugate_by(rho(), tau(m))


def r():
    return diagonal([1, -1])


def s():
    return diagonal([CycNum.zeta(8, 7), CycNum.zeta(8)])


def r1():
    i = imaginary_unit()
    scale = CycNum.zeta(3) / 2
    return matrix([[-1 - i, 1 - i], [-1 - i, -1 + i]]) * scale


def r2():
    i = imaginary_unit()
    scale = CycNum.zeta(3) / 2
    return matrix([[-1 + i, -1 + i], [1 + i, -1 - i]]) * scale


def r3():
    return matrix([[1, -1], [-1, -1]]) * sqrt2().inverse()


def r4():
    return diagonal([1, imaginary_unit()])


def golden():
    """zeta_5 + zeta_5^-1 + 1."""
    return CycNum.zeta(5) + CycNum.zeta(5, 4) + 1


def r5():
    i = imaginary_unit()
    t = golden()
    scale = CycNum.zeta(5, 2) / 2
    return matrix([[-t + i, -t + 1], [t - 1, -t - i]]) * scale


def transposition(n, k):
    """Swap of the coordinates k and k + 1."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[k][k] = rows[k + 1][k + 1] = 0
    rows[k][k + 1] = rows[k + 1][k] = 1
    return matrix(rows)


def monomial_generators(m, p, n):
    """Generators of G(m, p, n) as monomial matrices."""
    if n == 2:
        if p == 1:
            return [tau(m), rho()]
        if p == m:
            return [sigma(m), rho()]
        return [sigma(m), _power(tau(m), p), rho()]
    generators = [transposition(n, k) for k in range(n - 1)]
    if p < m:
        values = [CycNum.zeta(m, p)] + [1] * (n - 1)
        generators.append(diagonal(values))
    if p > 1:
        twisted = [[0] * n for _ in range(n)]
        twisted[0][1] = CycNum.zeta(m, m - 1)
        twisted[1][0] = CycNum.zeta(m)
        for k in range(2, n):
            twisted[k][k] = 1
        generators.append(matrix(twisted))
    return generators


def _power(g, k):
    result = identity(g.n)
    for _ in range(k):
        result = result * g
    return result
