from saitoforge.constants import SCHEMA
from saitoforge.exactalg import CycNum
from saitoforge.exceptions import TableMismatch, UsageError
from saitoforge.flat import flat_ring
from saitoforge.tables import (
    TableGenerator,
    TableRow,
    compare_row,
    generate_row,
    render_text,
    table_row,
)
from saitoforge.tests import base
from saitoforge.util import thread_count

__all__ = ["TestTableRows", "TestTableGenerator"]


class TestTableRows(base.SaitoForgeTestCase):
    def test_reference_rows(self):
        for name in self.groups("tables"):
            result = compare_row(base.group(name), table_row(name))
            self.assertEqual(result.data["status"], "pass")
            self.assertTrue(all(not scale.is_zero() for scale in result.scales))

    def test_g332(self):
        result = compare_row(base.group("G(3,3,2)"), table_row("G(3,3,2)"))
        self.assertEqual(result.data["t1"], "u^3 + v^3")
        self.assertEqual(result.scales, [CycNum.rational(1), CycNum.rational(1)])
        s = flat_ring((3, 2)).gen(1)
        self.assertEqual(result.product[0], s * 9)
        self.assertTrue(result.product[1].is_zero())

    def test_mismatch(self):
        reference = table_row("G(3,3,2)")
        wrong = TableRow(
            "G(3,3,2)", reference.t1, reference.t2, lambda s: (s * 8, s * 0)
        )
        with self.assertRaises(TableMismatch) as context:
            compare_row(base.group("G(3,3,2)"), wrong)
        self.assertIn("component 1", str(context.exception))

    def test_rows_outside_the_tables(self):
        self.assertIsNone(table_row("G(4,2,2)"))
        self.assertIsNone(table_row("G7"))
        self.assertEqual(generate_row("G(4,2,2)"), {"group": "G(4,2,2)", "status": "skipped"})


class TestTableGenerator(base.SaitoForgeTestCase):
    def test_sequential_and_parallel_agree(self):
        groups = ["G(3,3,2)", "G(4,4,2)", "G(3,1,2)"]
        sequential = TableGenerator(groups, threads=1).run()
        parallel = TableGenerator(groups, threads=2).run()
        self.assertEqual(sequential, parallel)
        self.assertEqual([row["group"] for row in sequential], groups)
        text = render_text(sequential)
        self.assertEqual(len(text.splitlines()), len(groups) + 1)

    def test_thread_count(self):
        self.assertEqual(thread_count({}), SCHEMA.DEFAULT_THREADS)
        self.assertEqual(thread_count({SCHEMA.THREADS_ENV: "4"}), 4)
        for value in ("0", "many"):
            with self.assertRaises(UsageError):
                thread_count({SCHEMA.THREADS_ENV: value})
