import contextlib
import io
import json
import os
import tempfile

from saitoforge.cli import build_parser, main
from saitoforge.constants import SCHEMA
from saitoforge.exceptions import UsageError
from saitoforge.report import RunConfig
from saitoforge.serialization import store
from saitoforge.tests import base

__all__ = ["TestCommandLine", "TestRunConfig"]


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue()


def run_json(*argv):
    code, output = run(*argv, "--json")
    return code, json.loads(output)["payload"]


class TestCommandLine(base.SaitoForgeTestCase):
    def test_group(self):
        code, output = run("group", "G(3,3,2)")
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertTrue(output.startswith("group G(3,3,2): pass"))

    def test_saito_golden(self):
        code, payload = run_json("saito", "G(3,3,2)")
        self.assertEqual(code, SCHEMA.EXIT_OK)
        with open(base.golden_path("saito_g332.json")) as handle:
            expected = json.load(handle)
        self.assertEqual(payload["results"]["structure"], expected)
        self.assertEqual(payload["results"]["axioms"]["status"], "pass")

    def test_json_is_deterministic(self):
        first = run("connection", "G4", "--json")
        self.assertEqual(first, run("connection", "G4", "--json"))
        self.assertEqual(first[0], SCHEMA.EXIT_OK)

    def test_flat(self):
        code, payload = run_json("saito", "G(3,3,2)", "--flat")
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertEqual(payload["results"]["structure"]["ring"]["names"], ["t1", "t2"])
        C_y = payload["results"]["structure"]["C"][1]
        self.assertEqual(C_y[0][1][0]["coeff"]["coeffs"], ["9"])

    def test_failing_unit(self):
        code, payload = run_json("test-e", "G12", "--e", "1,0")
        self.assertEqual(code, SCHEMA.EXIT_FAILURE)
        self.assertEqual(payload["status"], "fail")
        self.assertEqual(payload["results"]["verdict"]["verdict"], "FailsASS2")

    def test_computation_error(self):
        code, payload = run_json("saito", "G23")
        self.assertEqual(code, SCHEMA.EXIT_FAILURE)
        self.assertEqual(payload["error"]["name"], "UnsupportedGroup")

    def test_usage_errors(self):
        for argv in (
            ("saito", "H3"),
            ("test-e", "G4"),
            ("test-e", "G4", "--e", "1,"),
            ("dual", "G4", "--r", "one"),
            ("cover", "G(4,2,2)", "--row", "0"),
            ("verify", "/nonexistent/structure.json"),
            (),
        ):
            code, _ = run(*argv)
            self.assertEqual(code, SCHEMA.EXIT_USAGE, argv)

    def test_verify(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "g4.json")
            store(path, base.saito("G4"))
            code, payload = run_json("verify", path)
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertEqual(payload["command"], "verify")

    def test_dual_and_out(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "dual.json")
            code, _ = run("dual", "G(3,3,2)", "--r", "1/3", "--out", path)
            with open(path) as handle:
                envelope = json.load(handle)
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertEqual(envelope["schema"], SCHEMA.VERSION)
        self.assertEqual(envelope["payload"]["results"]["structure"]["r"]["coeffs"], ["1/3"])

    def test_cover_row(self):
        code, payload = run_json("cover", "G(4,2,2)", "--row", "1")
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertEqual(len(payload["results"]["covering"]["rows"]), 1)

    def test_tables(self):
        with tempfile.TemporaryDirectory() as directory:
            code, _ = run("tables", "G(3,3,2)", "G4", "--out", directory)
            self.assertTrue(os.path.exists(os.path.join(directory, "tables.txt")))
            with open(os.path.join(directory, "tables.json")) as handle:
                rows = json.load(handle)["payload"]["results"]["rows"]
        self.assertEqual(code, SCHEMA.EXIT_OK)
        self.assertEqual([row["group"] for row in rows], ["G(3,3,2)", "G4"])


class TestRunConfig(base.SaitoForgeTestCase):
    def test_exact_flags(self):
        arguments = build_parser().parse_args(["dual", "G4", "--lambda", "1/2", "--r", "1/6"])
        config = RunConfig.from_arguments(arguments)
        self.assertEqual(str(config.value), "1/2")
        self.assertEqual(str(config.r), "1/6")
        self.assertIsNone(config.nu)

    def test_validation(self):
        with self.assertRaises(UsageError):
            RunConfig("test-e", group="G4")
        with self.assertRaises(UsageError):
            RunConfig("group")
