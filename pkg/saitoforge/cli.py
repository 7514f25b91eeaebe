"""saito-forge: natural Saito structures of complex reflection groups.

Usage examples:

    saito-forge group "G(3,3,2)"
    saito-forge saito G4 --flat --json
    saito-forge test-e G12 --e "1,0"
    saito-forge tables --out ./tables
"""

import argparse
import logging
import os
import sys

from .connection import check_pole_orders, natural_connection
from .constants import SCHEMA
from .covering import find_natural_e_lines, verify_covering_table
from .duality import dual_almost, dual_saito, family_shift, natural_ass_test
from .exceptions import ParseError, SaitoForgeError, UsageError
from .flat import coordinates_from_change, flat_structure, frame_coordinates
from .groups import build_group
from .report import Report, RunConfig
from .saito import check_ass, check_ss, natural_saito
from .serialization import dumps, load
from .structures import AlmostSaitoData, SaitoData
from .tables import TableGenerator, render_text
from .util import thread_count


def build_parser():
    parser = argparse.ArgumentParser(
        prog="saito-forge",
        description="Exact natural Saito structures on orbit spaces of reflection groups.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text, group=True):
        sub = commands.add_parser(name, help=help_text)
        if group:
            sub.add_argument("group", help='group name, "G(m,p,n)" or "G4" ... "G22"')
        sub.add_argument("--json", action="store_true", help="print the JSON report")
        sub.add_argument("--out", help="write the JSON report to this path")
        return sub

    command("group", "basic invariants and discriminant")
    command("connection", "the natural connection Delta * Omega")
    saito = command("saito", "the natural Saito structure")
    saito.add_argument("--flat", action="store_true", help="express it in flat coordinates")
    command("flat", "flat coordinates")
    verify = command("verify", "check the axioms of a stored structure", group=False)
    verify.add_argument("file")
    dual = command("dual", "the dual almost Saito structure")
    dual.add_argument("--lambda", dest="lambda_", help="Euler field shift, exact scalar")
    dual.add_argument("--r", help="parameter r, default 1/d_1")
    dual.add_argument("--nu", help="shift of the parameter along the family")
    test = command("test-e", "test a unit field for a natural almost Saito structure")
    test.add_argument("--e", help='components, e.g. "1,0" or "12*i*sqrt(3),1"')
    command("search-e", "find the unit field lines with a natural structure")
    cover = command("cover", "verify the covering table")
    cover.add_argument("--row", type=int, help="only this row (1-based)")
    tables = command("tables", "regenerate the flat coordinate tables", group=False)
    tables.add_argument("groups", nargs="*", help="default: every tabulated group")
    return parser


class Runner(object):
    """Run one validated command and collect its Report."""

    def __init__(self, config, enable_logging=False):
        self.config = config
        self.threads = thread_count() if config.command == "tables" else 1
        self.enable_logging = enable_logging
        if enable_logging:
            self.__log_valid_parameters()

    def __log_valid_parameters(self):
        for parameter, value in self.config.__dict__.items():
            if not value:
                continue
            logging.info(f"{parameter}: {value}")
        logging.info(f"threads: {self.threads}")

    def run(self):
        config = self.config
        report = Report(config.command, config.group)
        handler = getattr(self, "run_" + config.command.replace("-", "_"))
        try:
            group = build_group(config.group, self.enable_logging) if config.group else None
            handler(report, group)
        except SaitoForgeError as error:
            if isinstance(error, (UsageError, ParseError)):
                raise
            logging.log(logging.WARN, "%s failed: %s", config.command, error)
            report.fail(error)
        return report.finish()

    def run_group(self, report, group):
        report.add("group", group)

    def run_connection(self, report, group):
        family = natural_connection(group, enable_logging=self.enable_logging)
        report.add("connection", family)
        report.add("properties", check_pole_orders(family))

    def run_saito(self, report, group):
        S = natural_saito(group, enable_logging=self.enable_logging)
        if self.config.flat:
            S = flat_structure(S, enable_logging=self.enable_logging)
        report.add("structure", S)
        residuals = check_ss(S)
        report.check("axioms", residuals.is_zero(), residuals)

    def run_flat(self, report, group):
        S = natural_saito(group, enable_logging=self.enable_logging)
        flat = flat_structure(S, enable_logging=self.enable_logging)
        X = flat.flat_change
        t = coordinates_from_change(X, group.x_ring)
        report.add("X", [[str(v) for v in row] for row in X.rows])
        report.add("t", [str(v) for v in t])
        report.add("t_of_u", [str(v) for v in frame_coordinates(flat, group)])

    def run_verify(self, report, group):
        try:
            structure = load(self.config.path)
        except OSError as error:
            raise UsageError(f"Cannot read {self.config.path}: {error}") from None
        if isinstance(structure, SaitoData):
            residuals = check_ss(structure)
        elif isinstance(structure, AlmostSaitoData):
            residuals = check_ass(structure)
        else:
            raise ParseError(self.config.path, "(no Saito or almost Saito structure)")
        report.check("axioms", residuals.is_zero(), residuals)

    def run_dual(self, report, group):
        config = self.config
        S = natural_saito(group, enable_logging=self.enable_logging)
        A = dual_almost(S, config.value, config.r)
        if config.nu is not None:
            A = family_shift(A, 0, config.nu)
        report.add("structure", A)
        residuals = check_ass(A)
        report.check("axioms", residuals.is_zero(), residuals)
        if config.value.is_zero() and config.nu is None:
            report.check("round trip", dual_saito(A) == S)

    def run_test_e(self, report, group):
        e = [group.x_ring.constant(v) for v in self.config.e]
        if len(e) != group.rank:
            raise UsageError(f"--e needs {group.rank} components")
        verdict = natural_ass_test(group, e, enable_logging=self.enable_logging)
        report.check("verdict", verdict.is_natural, verdict)

    def run_search_e(self, report, group):
        search = find_natural_e_lines(group, enable_logging=self.enable_logging)
        report.check("lines", len(search) > 0, search)

    def run_cover(self, report, group):
        rows = [self.config.row] if self.config.row else None
        report.add(
            "covering",
            verify_covering_table(group, rows, enable_logging=self.enable_logging),
        )

    def run_tables(self, report, group):
        generator = TableGenerator(
            self.config.groups, self.threads, enable_logging=self.enable_logging
        )
        rows = generator.run()
        report.check("rows", all(row["status"] != "fail" for row in rows), rows)
        if self.config.out:
            os.makedirs(self.config.out, exist_ok=True)
            with open(os.path.join(self.config.out, "tables.txt"), "w", encoding="utf-8") as handle:
                handle.write(render_text(rows))


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")


def _write(report, config):
    text = dumps(report)
    if config.out:
        path = config.out
        if config.command == "tables":
            path = os.path.join(config.out, "tables.json")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    if config.output_format == "json":
        sys.stdout.write(text)
    else:
        sys.stdout.write(report.text)


def main(argv=None):
    parser = build_parser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else SCHEMA.EXIT_USAGE
    _configure_logging(arguments.verbose)
    try:
        config = RunConfig.from_arguments(arguments)
        report = Runner(config, enable_logging=arguments.verbose > 0).run()
    except (UsageError, ParseError) as error:
        sys.stderr.write(f"saito-forge: {type(error).__name__}: {error}\n")
        return SCHEMA.EXIT_USAGE
    _write(report, config)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
