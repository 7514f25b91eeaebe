from saitoforge.connection import natural_connection
from saitoforge.covering import (
    LOGARITHMIC,
    CoveringMap,
    covering_rows,
    find_natural_e_lines,
    is_covered,
    parametric_structure,
    pushforward,
    semi_invariant_basis,
    verify_covering_table,
)
from saitoforge.exactalg import CycNum
from saitoforge.exceptions import AssumptionViolated
from saitoforge.saito import check_ass
from saitoforge.tests import base

__all__ = ["TestCoveringMap", "TestCoveringTable", "TestLineSearch"]


def line(a, b):
    return CycNum.rational(a), CycNum.rational(b)


class TestCoveringMap(base.SaitoForgeTestCase):
    def test_branch_divisor(self):
        target = base.group("G(4,2,2)")
        source = base.group("G(4,4,2)")
        x, y = source.x_ring.gens()
        covering = CoveringMap(source, target, [x, y**2])
        self.assertTrue(covering.pulls_back_invariants())
        power, divisor = covering.branch_divisor()
        self.assertEqual(power, y**2)
        self.assertEqual(divisor, target.x_ring.gen(1))

    def test_degrees_are_checked(self):
        source = base.group("G(4,4,2)")
        with self.assertRaises(ValueError):
            CoveringMap(source, base.group("G(4,2,2)"), source.x_ring.gens())

    def test_pushforward(self):
        target = base.group("G(4,2,2)")
        source = base.group("G(4,4,2)")
        x, y = source.x_ring.gens()
        covering = CoveringMap(source, target, [x, y**2])
        pushed, poles = pushforward(base.saito("G(4,4,2)"), covering)
        self.assertEqual(pushed.ring, target.x_ring)
        self.assertTrue(poles.multiplication_is_polynomial)
        self.assertFalse(poles.has_worse_poles)
        self.assertEqual(poles.logarithmic_entries, poles.of_kind("Gamma", LOGARITHMIC))

    def test_semi_invariants(self):
        group = base.group("G(4,2,2)")
        subgroup = base.group("G(4,4,2)")
        u, v = subgroup.u_ring.gens()
        self.assertEqual(semi_invariant_basis(group, subgroup), [u**4 + v**4, u * v])


class TestCoveringTable(base.SaitoForgeTestCase):
    def test_rows(self):
        self.assertEqual(len(covering_rows(base.group("G(4,2,2)"))), 3)
        self.assertEqual(len(covering_rows(base.group("G(6,3,2)"))), 1)
        self.assertEqual(len(covering_rows(base.group("G19"))), 3)
        for name in ("G(4,1,2)", "G(4,4,2)", "G4"):
            with self.assertRaises(AssumptionViolated):
                covering_rows(base.group(name))

    def test_is_covered(self):
        self.assertTrue(is_covered(base.group("G(4,2,2)")))
        self.assertTrue(is_covered(base.group("G7")))
        self.assertFalse(is_covered(base.group("G4")))

    def test_tables(self):
        for name in self.groups("covering"):
            report = verify_covering_table(base.group(name))
            self.assertEqual(
                [row["status"] for row in report.rows],
                ["pass"] * len(covering_rows(base.group(name))),
            )

    def test_selected_row(self):
        report = verify_covering_table(base.group("G(4,2,2)"), rows=[2])
        self.assertEqual([row["row"] for row in report.rows], [2])
        self.assertEqual(report.rows[0]["subgroup"], "G(2,1,2)")
        self.assertEqual(report.rows[0]["e"], ["-2", "1"])


class TestLineSearch(base.SaitoForgeTestCase):
    def test_single_line(self):
        for name in self.groups("single_line"):
            search = find_natural_e_lines(base.group(name))
            self.assertEqual(search.lines, [line(1, 0)])

    def test_three_lines(self):
        for name in self.groups("three_lines"):
            search = find_natural_e_lines(base.group(name))
            self.assertEqual(len(search), 3)
            self.assertIn(line(1, 0), search.lines)

    def test_g422_lines(self):
        search = find_natural_e_lines(base.group("G(4,2,2)"))
        self.assertCountEqual(search.lines, [line(1, 0), line(2, 1), line(-2, 1)])
        self.assertIn(line(-2, 1), search.lines)
        self.assertIn(line(2, 1), search.lines)
        self.assertEqual(search.data["group"], "G(4,2,2)")

    def test_parametric_structure_keeps_dimension_two(self):
        group = base.group("G(4,2,2)")
        A = parametric_structure(group, natural_connection(group))
        self.assertEqual(A.ring.ngens, 4)
        self.assertEqual(A.n, 2)
        report = check_ass(A)
        self.assertEqual(len(report.families["ass2"]), 2)
        self.assertEqual(len(report.families["ass4"]), 2)
