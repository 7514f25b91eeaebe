from saitoforge.connection import natural_connection
from saitoforge.exactalg import CycNum, MatrixR
from saitoforge.exceptions import AssumptionViolated, DivisionByZero
from saitoforge.saito import (
    check_ss,
    extract_expansion,
    natural_saito,
    scale_structure,
    shift_euler,
    vanishing_gamma_entries,
)
from saitoforge.tests import base

__all__ = ["TestExpansion", "TestNaturalSaito", "TestEquivalences"]


def q(n, d=1):
    return CycNum.rational(n) / d


class TestExpansion(base.SaitoForgeTestCase):
    def test_g332(self):
        group = base.group("G(3,3,2)")
        ring = group.x_ring
        _, y = ring.gens()
        expansion = extract_expansion(natural_connection(group))
        self.assertTrue(all(g.is_zero() for g in expansion.gamma))
        self.assertTrue(expansion.a.is_zero())
        self.assertEqual(
            expansion.D[0],
            MatrixR.diagonal(
                [ring.constant(q(-2, 3)), ring.constant(q(-1, 3))], ring.zero
            ),
        )
        self.assertEqual(
            expansion.D[1],
            MatrixR([[ring.zero, y * -6], [ring.constant(q(-1, 3)), ring.zero]]),
        )

    def test_overdetermined(self):
        for name in self.groups("overdetermined"):
            with self.assertRaises(AssumptionViolated):
                natural_saito(base.group(name))


class TestNaturalSaito(base.SaitoForgeTestCase):
    def test_g332(self):
        S = base.saito("G(3,3,2)")
        ring = S.ring
        x, y = ring.gens()
        self.assertEqual(S.mult[1], MatrixR([[ring.zero, y * 9], [ring.one, ring.zero]]))
        self.assertEqual(S.E, [x, y * q(2, 3)])
        self.assertEqual(S.unit_index, 0)
        self.assertEqual(
            S.discriminant_matrix(), MatrixR([[x, y**2 * 6], [y * q(2, 3), x]])
        )
        self.assertTrue(all(v.is_zero() for v in vanishing_gamma_entries(S)))

    def test_axioms(self):
        for name in self.groups("duality") + self.groups("rank3"):
            S = base.saito(name)
            self.assertZero(check_ss(S))
            self.assertEqual(S.discriminant_matrix().det(), S.group.discriminant_x)

    def test_perturbation_is_detected(self):
        S = base.saito("G(3,3,2)")
        report = check_ss(S.replace(mult=[S.mult[0], S.mult[1] * 2]))
        self.assertFalse(report.is_zero())
        self.assertFalse(report.family_is_zero("commutativity"))
        self.assertTrue(report.family_is_zero("unit"))
        self.assertEqual(report.data["status"], "fail")

    def test_unit_entry_added_to_c_y(self):
        S = base.saito("G(3,3,2)")
        ring = S.ring
        bump = MatrixR([[ring.one, ring.zero], [ring.zero, ring.zero]])
        report = check_ss(S.replace(mult=[S.mult[0], S.mult[1] + bump]))
        self.assertFalse(report.is_zero())
        self.assertFalse(report.family_is_zero("ss2"))
        self.assertFalse(report.family_is_zero("commutativity"))
        self.assertTrue(report.family_is_zero("associativity"))


class TestEquivalences(base.SaitoForgeTestCase):
    def test_shift_euler(self):
        S = base.saito("G(3,3,2)")
        shifted = shift_euler(S, self.random.randint(1, 9))
        self.assertZero(check_ss(shifted))
        self.assertEqual(shifted.E[1], S.E[1])

    def test_scale(self):
        S = base.saito("G4")
        scaled = scale_structure(S, q(3, 2))
        self.assertZero(check_ss(scaled))
        self.assertEqual(scaled.e[0], S.ring.constant(q(2, 3)))
        with self.assertRaises(DivisionByZero):
            scale_structure(S, 0)
