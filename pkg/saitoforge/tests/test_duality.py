from saitoforge.duality import (
    FAILS_ASS2,
    NATURAL,
    NOT_REGULAR,
    bi_flat_residual,
    dual_almost,
    dual_saito,
    euler_consistency,
    family_shift,
    natural_almost,
    natural_ass_test,
)
from saitoforge.exactalg import CycNum
from saitoforge.exceptions import SingularTwist
from saitoforge.saito import check_ass, check_ss
from saitoforge.structures import coordinate_field
from saitoforge.tests import base

__all__ = ["TestAlmostDuality", "TestNaturalAlmost"]


class TestAlmostDuality(base.SaitoForgeTestCase):
    def test_round_trip(self):
        for name in ("G(3,3,2)", "G4"):
            S = base.saito(name)
            d1 = S.ring.weights[0]
            for r in (CycNum.rational(0), CycNum.rational(1) / d1, CycNum.rational(1)):
                A = dual_almost(S, r=r)
                self.assertEqual(A.r, r)
                self.assertEqual(dual_saito(A), S)

    def test_dual_is_almost_saito(self):
        for name in self.groups("duality"):
            S = base.saito(name)
            A = dual_almost(S)
            self.assertZero(check_ass(A))
            self.assertTrue(all(v.is_zero() for v in euler_consistency(A)))
            self.assertTrue(all(M.is_zero() for M in bi_flat_residual(S, A)))

    def test_shifted_unit(self):
        S = base.saito("G(3,3,2)")
        value = self.random.randint(1, 5)
        A = dual_almost(S, value=value)
        self.assertEqual(A.E[0], S.E[0] - value)
        self.assertEqual(dual_saito(A).mult, S.mult)

    def test_family_shift(self):
        A = dual_almost(base.saito("G(3,3,2)"))
        shifted = family_shift(A, 0, 1)
        self.assertEqual(shifted.r, A.r + 1)
        self.assertZero(check_ass(shifted))
        self.assertEqual(shifted.e, A.e)
        S = dual_saito(shifted)
        self.assertZero(check_ss(S))
        self.assertEqual(S.gamma, dual_saito(A).gamma)

    def test_singular_twist(self):
        S = base.saito("G(3,3,2)")
        zero = S.ring.zero
        with self.assertRaises(SingularTwist):
            dual_almost(S.replace(E=[zero, zero]))


class TestNaturalAlmost(base.SaitoForgeTestCase):
    def test_natural_unit(self):
        for name in self.groups("single_line"):
            group = base.group(name)
            e = coordinate_field(group.x_ring, 0)
            verdict = natural_ass_test(group, e)
            self.assertEqual(verdict, NATURAL)
            self.assertTrue(verdict.is_natural)
            self.assertEqual(verdict.data["verdict"], NATURAL)

    def test_natural_structure_is_dual(self):
        group = base.group("G4")
        e = coordinate_field(group.x_ring, 0)
        A = natural_almost(group, e)
        self.assertEqual(A.r, CycNum.rational(1) / 6)
        self.assertTrue(all(v.is_zero() for v in euler_consistency(A)))
        self.assertEqual(dual_saito(A), base.saito("G4"))

    def test_overdetermined(self):
        group = base.group("G12")
        verdict = natural_ass_test(group, coordinate_field(group.x_ring, 0))
        self.assertEqual(verdict, FAILS_ASS2)
        self.assertIsNotNone(verdict.residual)

    def test_not_regular(self):
        group = base.group("G(3,3,2)")
        zero = group.x_ring.zero
        self.assertEqual(natural_ass_test(group, [zero, zero]), NOT_REGULAR)
