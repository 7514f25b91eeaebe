import unittest

from saitoforge.exactalg import (
    CycNum,
    MatrixR,
    PolyRing,
    RatFn,
    i_sqrt3,
    imaginary_unit,
    inverse,
    linsolve,
    sqrt2,
    sqrt3,
    sqrt5,
    univariate_common_roots,
)
from saitoforge.exceptions import DivisionByZero, Inconsistent, NotDivisible, ParseError
from saitoforge.tests import base

__all__ = ["TestCycNum", "TestMPoly", "TestRatFn", "TestMatrix", "TestLinsolve", "TestRoots"]

ORDERS = (1, 3, 4, 5, 8, 12)


def random_scalar(rng, order=None):
    order = order or rng.choice(ORDERS)
    value = CycNum.rational(0)
    for k in range(order):
        numerator = rng.randint(-4, 4)
        if numerator:
            value = value + CycNum.zeta(order, k) * (CycNum.rational(numerator) / rng.randint(1, 3))
    return value


def random_poly(rng, ring, terms=3, degree=3):
    value = ring.zero
    for _ in range(rng.randint(0, terms)):
        exps = [rng.randint(0, degree) for _ in range(ring.ngens)]
        value = value + ring.monomial(exps, random_scalar(rng, rng.choice((1, 3))))
    return value


class TestCycNum(base.SaitoForgeTestCase):
    def test_square_roots(self):
        self.assertEqual(imaginary_unit() ** 2, CycNum.rational(-1))
        self.assertEqual(i_sqrt3() ** 2, CycNum.rational(-3))
        self.assertEqual(sqrt2() ** 2, CycNum.rational(2))
        self.assertEqual(sqrt3() ** 2, CycNum.rational(3))
        self.assertEqual(sqrt5() ** 2, CycNum.rational(5))

    def test_zeta_of_twice_an_odd_order(self):
        zeta = CycNum.zeta(6)
        self.assertEqual(zeta**3, CycNum.rational(-1))
        self.assertEqual(zeta, -(CycNum.zeta(3) ** 2))
        self.assertEqual(zeta.order, 3)

    def test_rational_values_demote(self):
        value = CycNum.zeta(5) + CycNum.zeta(5, 4)
        golden = value + 1
        self.assertEqual(golden * golden - golden, CycNum.rational(1))
        self.assertEqual((golden * golden - golden).order, 1)

    def test_field_laws(self):
        for _ in range(1000):
            a = random_scalar(self.random)
            b = random_scalar(self.random)
            c = random_scalar(self.random)
            self.assertEqual((a + b) * c, a * c + b * c)
            self.assertEqual(a * b, b * a)
            if not b.is_zero():
                self.assertEqual((a * b) / b, a)

    def test_inverse_of_zero(self):
        with self.assertRaises(DivisionByZero):
            CycNum.rational(0).inverse()

    def test_serialization(self):
        value = sqrt5() / 6
        self.assertEqual(CycNum.from_data(value.serializable_data()), value)
        self.assertEqual((CycNum.rational(1) / 6).serializable_data()["coeffs"], ["1/6"])
        with self.assertRaises(ParseError):
            CycNum.from_data({"order": 1})


class TestMPoly(base.SaitoForgeTestCase):
    def setUp(self):
        super().setUp()
        self.ring = PolyRing(["x", "y"], [3, 2])
        self.x, self.y = self.ring.gens()

    def test_ring_laws(self):
        for _ in range(1000):
            a = random_poly(self.random, self.ring)
            b = random_poly(self.random, self.ring)
            c = random_poly(self.random, self.ring)
            self.assertEqual((a + b) * c, a * c + b * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a - a, self.ring.zero)

    def test_exact_division(self):
        for _ in range(1000):
            a = random_poly(self.random, self.ring)
            b = random_poly(self.random, self.ring)
            if b.is_zero():
                continue
            self.assertEqual((a * b).exact_div(b), a)

    def test_not_divisible(self):
        with self.assertRaises(NotDivisible):
            (self.x + 1).exact_div(self.y)
        with self.assertRaises(DivisionByZero):
            self.x.exact_div(self.ring.zero)

    def test_weighted_degree(self):
        p = self.x**2 - self.y**3 * 4
        self.assertTrue(p.is_homogeneous())
        self.assertEqual(p.weighted_degree(), 6)
        self.assertFalse((self.x + self.y).is_homogeneous())

    def test_coefficients_in_one_variable(self):
        p = self.x**2 * self.y + self.x * self.y**3 + 5
        self.assertEqual(p.degree(0), 2)
        self.assertEqual(p.coeff(0, 2), self.y)
        self.assertEqual(p.coeff(0, 1), self.y**3)
        self.assertEqual(p.coeff(0, 0), self.ring.constant(5))

    def test_compose(self):
        ring = PolyRing(["u", "v"])
        u, v = ring.gens()
        p = self.x**2 - self.y**3 * 4
        self.assertEqual(p.compose([u**3 + v**3, u * v]), (u**3 - v**3) ** 2)

    def test_diff(self):
        p = self.x**2 * self.y
        self.assertEqual(p.diff(0), self.x * self.y * 2)
        self.assertEqual(p.diff(1), self.x**2)

    def test_embed(self):
        ring = PolyRing(["x", "y", "a", "b"], [3, 2, 1, 1])
        self.assertEqual(self.x.embed(ring, [0, 1]), ring.gen(0))


class TestRatFn(base.SaitoForgeTestCase):
    def setUp(self):
        super().setUp()
        self.ring = PolyRing(["x", "y"])
        self.x, self.y = self.ring.gens()

    def test_quotient_rule(self):
        f = RatFn(self.x, self.y)
        self.assertEqual(f.diff(1), RatFn(-self.x, self.y**2))
        self.assertEqual(f.diff(0), RatFn(self.ring.one, self.y))

    def test_common_denominator(self):
        total = RatFn(self.x, self.y) + RatFn(self.y, self.y)
        self.assertEqual(total.den, self.y)
        self.assertEqual(total.num, self.x + self.y)

    def test_polynomial_values(self):
        f = RatFn(self.x * self.y + self.y, self.y)
        self.assertTrue(f.is_polynomial())
        self.assertEqual(f.to_poly(), self.x + 1)
        self.assertFalse(RatFn(self.x, self.y).is_polynomial())

    def test_constant_denominator_folds(self):
        f = RatFn(self.x, self.ring.constant(2))
        self.assertEqual(f.den, self.ring.one)
        self.assertEqual(f.num, self.x * (CycNum.rational(1) / 2))

    def test_zero_denominator(self):
        with self.assertRaises(DivisionByZero):
            RatFn(self.x, self.ring.zero)

    def test_mixed_arithmetic(self):
        f = RatFn(self.ring.one, self.x)
        self.assertEqual(self.x * f, RatFn(self.ring.one))
        self.assertEqual(f * self.x, self.ring.one)


class TestMatrix(base.SaitoForgeTestCase):
    def setUp(self):
        super().setUp()
        self.ring = PolyRing(["x", "y"])
        self.x, self.y = self.ring.gens()

    def test_adjugate(self):
        for _ in range(100):
            n = self.random.randint(1, 3)
            m = MatrixR.build(n, lambda i, j: random_poly(self.random, self.ring, 2, 2))
            adjugate, det = m.adjugate_det()
            identity = MatrixR.identity(n, det, self.ring.zero)
            self.assertEqual(m * adjugate, identity)
            self.assertEqual(adjugate * m, identity)

    def test_inverse_over_scalars(self):
        m = MatrixR([[CycNum.rational(2), imaginary_unit()], [CycNum.rational(1), CycNum.rational(3)]])
        product = m * inverse(m)
        self.assertEqual(product, MatrixR.identity(2, CycNum.rational(1), CycNum.rational(0)))

    def test_inverse_of_polynomial_matrix(self):
        m = MatrixR([[self.x, self.y], [self.ring.one, self.x]])
        m_inverse = inverse(m)
        self.assertTrue(isinstance(m_inverse[0, 0], RatFn))
        identity = MatrixR.identity(2, self.ring.one, self.ring.zero)
        self.assertEqual(m * m_inverse, identity)

    def test_singular(self):
        m = MatrixR([[self.x, self.x], [self.y, self.y]])
        self.assertTrue(m.det().is_zero())
        with self.assertRaises(DivisionByZero):
            inverse(m)

    def test_commutator(self):
        a = MatrixR([[self.x, self.ring.one], [self.ring.zero, self.x]])
        self.assertTrue(a.commutator(a).is_zero())


class TestLinsolve(base.SaitoForgeTestCase):
    def test_unique_solution(self):
        solution = linsolve([[1, 1], [1, -1]], [3, 1])
        self.assertTrue(solution.is_unique)
        self.assertEqual(list(solution), [CycNum.rational(2), CycNum.rational(1)])

    def test_kernel(self):
        solution = linsolve([[1, 2, 3]], [6])
        self.assertEqual(len(solution.nullspace), 2)
        self.assertEqual(solution.particular[0], CycNum.rational(6))

    def test_inconsistent(self):
        with self.assertRaises(Inconsistent):
            linsolve([[1, 1], [2, 2]], [1, 3])


class TestRoots(base.SaitoForgeTestCase):
    def test_common_roots(self):
        one = CycNum.rational(1)
        # (a - 1)(a + 2) and (a - 1)(a - 5)
        first = [CycNum.rational(-2), one, one]
        second = [CycNum.rational(5), CycNum.rational(-6), one]
        self.assertEqual(univariate_common_roots([first, second]), [one])

    def test_cyclotomic_roots(self):
        one = CycNum.rational(1)
        w = i_sqrt3()
        # (a - i sqrt3)(a + 1)
        roots = univariate_common_roots([[-w, one - w, one]])
        self.assertEqual(len(roots), 2)
        self.assertTrue(any(root == w for root in roots))
        self.assertTrue(any(root == -one for root in roots))

    def test_no_common_root(self):
        one = CycNum.rational(1)
        self.assertEqual(univariate_common_roots([[one, one], [-one, one]]), [])

    def test_all_zero(self):
        with self.assertRaises(ValueError):
            univariate_common_roots([[CycNum.rational(0)]])
