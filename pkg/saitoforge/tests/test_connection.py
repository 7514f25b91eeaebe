from saitoforge.connection import (
    POLYNOMIAL_LIFT,
    OmegaFamily,
    check_pole_orders,
    euler_identity_residual,
    first_flatness_failure,
    leading_block_determinant,
    natural_connection,
)
from saitoforge.exactalg import CycNum, MatrixR
from saitoforge.tests import base

__all__ = ["TestNaturalConnection", "TestPoleOrders"]


def q(n, d=1):
    return CycNum.rational(n) / d


class TestNaturalConnection(base.SaitoForgeTestCase):
    def test_g332_entries(self):
        group = base.group("G(3,3,2)")
        x, y = group.x_ring.gens()
        family = natural_connection(group)
        P_x, P_y = family.P
        self.assertEqual(P_x[0, 0], x * q(-2, 3))
        self.assertEqual(P_x[1, 0], y * q(2, 9))
        self.assertEqual(P_x[0, 1], y**2 * 4)
        self.assertEqual(P_x[1, 1], x * q(-1, 3))
        self.assertEqual(P_y[0, 1], x * y * -6)
        self.assertEqual(P_y[1, 1], y**2 * 2)
        self.assertEqual(P_y[0, 0], P_x[0, 1])

    def test_flat_and_homogeneous(self):
        for name in self.groups("duality") + self.groups("rank3"):
            family = natural_connection(base.group(name))
            self.assertEqual(first_flatness_failure(family), (None, None))
            self.assertTrue(euler_identity_residual(family).is_zero())
            self.assertEqual(family.symmetry_violations(), [])
            self.assertEqual(family.degree_violations(), [])

    def test_perturbed_family(self):
        group = base.group("G(3,3,2)")
        family = natural_connection(group)
        P_x, P_y = family.P
        bent = MatrixR(
            [[P_x[0, 0] + group.discriminant_x, P_x[0, 1] + 1], [P_x[1, 0], P_x[1, 1]]]
        )
        broken = OmegaFamily(group, [bent, P_y])
        self.assertFalse(euler_identity_residual(broken).is_zero())
        self.assertIn((0, 0, 1), broken.degree_violations())
        self.assertIn((0, 0, 1), broken.symmetry_violations())

    def test_restore(self):
        group = base.group("G4")
        family = natural_connection(group)
        restored = OmegaFamily.from_data(family.data, group)
        self.assertEqual(restored.P, family.P)


class TestPoleOrders(base.SaitoForgeTestCase):
    def test_g332_constant(self):
        group = base.group("G(3,3,2)")
        report = check_pole_orders(natural_connection(group))
        self.assertEqual(report.constants[0], q(2, 9))
        self.assertEqual(leading_block_determinant(group), q(2, 9))
        self.assertIn((POLYNOMIAL_LIFT, 0, "pass"), report.items)

    def test_duality_groups(self):
        for name in self.groups("duality"):
            report = check_pole_orders(natural_connection(base.group(name)))
            self.assertIn(0, report.constants)
            self.assertFalse(report.constants[0].is_zero())
