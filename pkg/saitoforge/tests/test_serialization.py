import json
import os
import tempfile

from saitoforge.connection import natural_connection
from saitoforge.constants import SCHEMA
from saitoforge.duality import dual_almost
from saitoforge.exceptions import ParseError, SchemaMismatch
from saitoforge.flat import flat_structure
from saitoforge.serialization import dumps, kind_of, load, load_store, loads
from saitoforge.tests import base

__all__ = ["TestSerialization"]


class TestSerialization(base.SaitoForgeTestCase):
    def setUp(self):
        super().setUp()
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_group(self):
        for name in ("G(3,1,2)", "G4"):
            group = base.group(name)
            restored = load_store(self.path("group.json"), group)
            self.assertEqual(restored.name, group.name)
            self.assertEqual(restored.invariants, group.invariants)

    def test_saito_round_trip(self):
        S = base.saito("G4")
        self.assertEqual(load_store(self.path("saito.json"), S), S)
        flat = flat_structure(base.saito("G(3,1,2)"))
        restored = loads(dumps(flat), attach_group=True)
        self.assertEqual(restored, flat)
        self.assertEqual(restored.group.name, "G(3,1,2)")
        self.assertEqual(restored.flat_change, flat.flat_change)

    def test_connection(self):
        family = natural_connection(base.group("G(3,3,2)"))
        restored = loads(dumps(family))
        self.assertEqual(restored.P, family.P)

    def test_almost_saito(self):
        A = dual_almost(base.saito("G(3,1,2)"))
        text = dumps(A)
        self.assertIn('"1/6"', text)
        self.assertEqual(kind_of(A), SCHEMA.KIND_ALMOST_SAITO)
        self.assertEqual(loads(text), A)

    def test_deterministic(self):
        S = base.saito("G(3,3,2)")
        self.assertEqual(dumps(S), dumps(loads(dumps(S))))
        self.assertTrue(dumps(S).endswith("}\n"))

    def test_loading_reattaches_group(self):
        S = base.saito("G(3,3,2)")
        restored = load_store(self.path("saito.json"), S)
        self.assertEqual(restored.group.name, "G(3,3,2)")
        self.assertEqual(dumps(restored), dumps(S))
        self.assertIsNone(loads(dumps(S), attach_group=False).group)

    def test_report(self):
        payload = {"command": "verify", "status": "pass"}
        self.assertEqual(loads(dumps(payload)), payload)

    def test_truncated_file(self):
        with open(self.path("broken.json"), "w") as handle:
            handle.write(dumps(base.saito("G(3,3,2)"))[:100])
        with self.assertRaises(ParseError):
            load(self.path("broken.json"))

    def test_schema_version(self):
        envelope = json.loads(dumps(base.group("G4")))
        envelope["schema"] = "v0"
        with self.assertRaises(SchemaMismatch):
            loads(json.dumps(envelope))
