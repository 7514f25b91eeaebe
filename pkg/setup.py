#!/usr/bin/env python

try:
    from setuptools import setup, Command
except ImportError:
    from distutils.core import setup, Command

from pathlib import Path
import sys


class TestCommand(Command):
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        """
        Finds all the tests modules in tests/, and runs them.
        """
        from saitoforge import tests
        import unittest

        unittest.main(tests, argv=sys.argv[:1])


version = "0.1.0"

this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    name="saito-forge",
    version=version,
    description=(
        "Exact natural Saito structures for finite complex reflection groups"
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="Apache 2",
    packages=[
        "saitoforge",
        "saitoforge.constants",
        "saitoforge.exactalg",
        "saitoforge.groups",
        "saitoforge.tests",
        "saitoforge.util",
    ],
    package_data={"saitoforge.tests": ["config.json", "golden/*.json"]},
    cmdclass={"test": TestCommand},
    install_requires=["sympy>=1.12"],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["saito-forge = saitoforge.cli:main"]},
)
