from saitoforge.tests.test_exactalg import *
from saitoforge.tests.test_groups import *
from saitoforge.tests.test_connection import *
from saitoforge.tests.test_saito import *
from saitoforge.tests.test_flat import *
from saitoforge.tests.test_duality import *
from saitoforge.tests.test_covering import *
from saitoforge.tests.test_tables import *
from saitoforge.tests.test_serialization import *
from saitoforge.tests.test_cli import *
import unittest

if __name__ == "__main__":
    unittest.main()
