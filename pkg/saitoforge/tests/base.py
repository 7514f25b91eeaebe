from functools import lru_cache
import json
import os
import random

import pytest

import unittest

from saitoforge import build_group, natural_saito


def get_profiles():
    profiles = {}
    with open(
        os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.json")
    ) as f:
        profiles = json.load(f)
    return profiles


@lru_cache(maxsize=None)
def group(name):
    return build_group(name)


@lru_cache(maxsize=None)
def saito(name):
    return natural_saito(group(name))


def golden_path(name):
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden", name)


base = unittest.TestCase


class SaitoForgeTestCase(base):
    SEED = 20240601

    @pytest.fixture(autouse=True)
    def setUpProfile(self, get_profile):
        # "quick" runs the small groups only; "full" sweeps the catalog.
        self.profile = get_profiles()[get_profile]

    def setUp(self):
        self.random = random.Random(self.SEED)

    def groups(self, key):
        return list(self.profile.get(key, []))

    def assertZero(self, report):
        self.assertTrue(report.is_zero(), report.summary())
