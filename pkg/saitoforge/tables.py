"""Flat coordinates and the product of the second flat vector field with
itself for the rank two duality groups, checked against the reference
tables.

Each row lists t^1, t^2 as polynomials in (u, v) and the two components of
d_{t^2} * d_{t^2} as polynomials in s = t^2. Computed rows are compared up
to rescaling t^a -> lambda_a t^a with the unit kept equal to d_{t^1}.
"""

import logging

from .constants import CATALOG
from .exactalg import CycNum, i_sqrt3, sqrt5
from .exceptions import SaitoForgeError, TableMismatch
from .flat import flat_structure, frame_coordinates
from .groups import build_group, parse_group_name
from .groups.catalog import icosahedral_forms, octahedral_forms, tetrahedral_forms
from .saito import natural_saito
from .structures import coordinate_field
from .util import map_ordered

D_T1 = "d_t1"
D_T2 = "d_t2"


def _q(numerator, denominator=1):
    return CycNum.rational(numerator) / denominator


class TableRow(object):
    """One reference row.

    Attributes:
        name: catalog name
        t1, t2: callables u_ring -> MPoly
        entry: callable s -> (coefficient of d_t1, coefficient of d_t2)
    """

    def __init__(self, name, t1, t2, entry):
        self.name = name
        self.t1 = t1
        self.t2 = t2
        self.entry = entry

    def coordinates(self, u_ring):
        return self.t1(u_ring), self.t2(u_ring)

    def product(self, ring):
        return self.entry(ring.gen(1))


def _monomial_row(m, p):
    name = f"G({m},{p},2)"
    if p == 1:
        return TableRow(
            name,
            lambda ring: _uv(ring, m) - (_sum(ring, m) ** 2) * _q(1, 4 * m),
            lambda ring: _sum(ring, m),
            lambda s: (s**2 * _q(m - 1, 4 * m * m), -(s * _q(m - 2, 2 * m))),
        )
    return TableRow(
        name,
        lambda ring: _sum(ring, m),
        lambda ring: ring.gen(0) * ring.gen(1),
        lambda s: (s ** (m - 2) * (m * m), s * 0),
    )


def _uv(ring, m):
    u, v = ring.gens()
    return u**m * v**m


def _sum(ring, m):
    u, v = ring.gens()
    return u**m + v**m


def _forms(family):
    def build(ring, key, power=1):
        return family(ring)[key] ** power

    return build


_T = _forms(tetrahedral_forms)
_O = _forms(octahedral_forms)
_I = _forms(icosahedral_forms)


def _exceptional_rows():
    w = i_sqrt3()
    r5 = sqrt5()
    return {
        "G4": TableRow(
            "G4",
            lambda ring: _T(ring, "t"),
            lambda ring: _T(ring, "f"),
            lambda s: (s * (-w / 16), s * 0),
        ),
        "G5": TableRow(
            "G5",
            lambda ring: _T(ring, "f", 3) - _T(ring, "t", 2) * (6 * w),
            lambda ring: _T(ring, "t"),
            lambda s: (s**2 * -432, s * 0),
        ),
        "G6": TableRow(
            "G6",
            lambda ring: _T(ring, "t", 2) + _T(ring, "f", 3) * (w * _q(5, 288)),
            lambda ring: _T(ring, "f"),
            lambda s: (s**4 * _q(-5, 1024), s**2 * (-w / 48)),
        ),
        "G8": TableRow(
            "G8",
            lambda ring: _O(ring, "t"),
            lambda ring: _O(ring, "h"),
            lambda s: (s * _q(9, 4), s * 0),
        ),
        "G9": TableRow(
            "G9",
            lambda ring: _O(ring, "t", 2) - _O(ring, "h", 3) * _q(11, 16),
            lambda ring: _O(ring, "h"),
            lambda s: (s**4 * _q(495, 256), s**2 * _q(9, 8)),
        ),
        "G10": TableRow(
            "G10",
            lambda ring: _O(ring, "h", 3) - _O(ring, "t", 2) * _q(7, 12),
            lambda ring: _O(ring, "t"),
            lambda s: (s**2 * _q(35, 36), s * _q(1, 3)),
        ),
        "G14": TableRow(
            "G14",
            lambda ring: _O(ring, "t", 2) + _O(ring, "f", 4) * 66,
            lambda ring: _O(ring, "f"),
            lambda s: (s**6 * 44352, s**3 * -96),
        ),
        "G16": TableRow(
            "G16",
            lambda ring: _I(ring, "t"),
            lambda ring: _I(ring, "h"),
            lambda s: (s * (r5 * _q(-3, 400)), s * 0),
        ),
        "G17": TableRow(
            "G17",
            lambda ring: _I(ring, "t", 2) + _I(ring, "h", 3) * (r5 * _q(29, 12000)),
            lambda ring: _I(ring, "h"),
            lambda s: (s**4 * _q(319, 3200000), s**2 * (r5 * _q(-9, 2000))),
        ),
        "G18": TableRow(
            "G18",
            lambda ring: _I(ring, "h", 3) + _I(ring, "t", 2) * (r5 * 38),
            lambda ring: _I(ring, "t"),
            lambda s: (s**2 * 16720, s * (r5 * -32)),
        ),
        "G20": TableRow(
            "G20",
            lambda ring: _I(ring, "t"),
            lambda ring: _I(ring, "f"),
            lambda s: (s**3 * (r5 / 48), s * 0),
        ),
        "G21": TableRow(
            "G21",
            lambda ring: _I(ring, "t", 2) - _I(ring, "f", 5) * (r5 * _q(29, 14400)),
            lambda ring: _I(ring, "f"),
            lambda s: (s**8 * _q(551, 1658880), s**4 * (r5 / 288)),
        ),
    }


def table_row(name):
    """The reference row of a catalog group, or None when it has none."""
    kind, params = parse_group_name(name)
    if kind == "monomial":
        m, p, n = params
        if n != 2 or p not in (1, m):
            return None
        return _monomial_row(m, p)
    return _exceptional_rows().get(f"G{params}")


def default_groups():
    return list(CATALOG.TABLE_MONOMIAL + CATALOG.TABLE_EXCEPTIONAL + CATALOG.TABLE_ICOSAHEDRAL)


def _scale(expected, computed, label):
    """lambda with expected == lambda * computed."""
    exps, coeff = computed.leading_term()
    factor = expected.monomial_coeff(exps) / coeff
    if factor.is_zero() or expected != computed * factor:
        raise TableMismatch(label, "coordinate", expected, computed)
    return factor


class TableResult(object):
    """A computed row next to the reference one."""

    def __init__(self, group, coordinates, product, scales):
        self.group = group
        self.coordinates = coordinates
        self.product = product
        self.scales = scales

    @property
    def data(self):
        return {
            "group": self.group.name,
            "t1": str(self.coordinates[0]),
            "t2": str(self.coordinates[1]),
            "product": {D_T1: str(self.product[0]), D_T2: str(self.product[1])},
            "scales": [str(value) for value in self.scales],
            "status": "pass",
        }

    def serializable_data(self):
        return self.data


def compare_row(group, row, flat=None):
    """Compute the flat structure of ``group`` and compare with ``row``.

    Raises TableMismatch naming the first differing entry.
    """
    if flat is None:
        flat = flat_structure(natural_saito(group))
    ring = flat.ring
    if any(a != b for a, b in zip(flat.e, coordinate_field(ring, 0))):
        raise TableMismatch(group.name, "unit", D_T1, flat.e)
    computed = frame_coordinates(flat, group)
    expected = row.coordinates(group.u_ring)
    scales = [
        _scale(b, a, f"{group.name} t{k + 1}")
        for k, (a, b) in enumerate(zip(computed, expected))
    ]
    first, second = scales
    s = ring.gen(1) * second.inverse()
    images = [ring.gen(0), s]
    column = flat.mult[1].column(1)
    product = (
        column[0].compose(images) * (first * first / (second * second)),
        column[1].compose(images) * (first / second),
    )
    reference = row.product(ring)
    for k, (a, b) in enumerate(zip(product, reference)):
        if a != b:
            raise TableMismatch(group.name, f"d_t2 * d_t2 component {k + 1}", b, a)
    return TableResult(group, [c * f for c, f in zip(computed, scales)], product, scales)


def generate_row(name):
    """Worker for the table sweep: the row data, or the failure it raised."""
    row = table_row(name)
    if row is None:
        return {"group": name, "status": "skipped"}
    try:
        return compare_row(build_group(name), row).serializable_data()
    except SaitoForgeError as error:
        return {
            "group": name,
            "status": "fail",
            "error": type(error).__name__,
            "message": str(error),
        }


class TableGenerator(object):
    """Regenerate the table rows of several groups, possibly in parallel."""

    def __init__(self, groups=None, threads=None, enable_logging=False):
        self.groups = list(groups) if groups else default_groups()
        self.threads = threads
        if enable_logging:
            self.__log_valid_parameters()
        self.enable_logging = enable_logging

    def __log_valid_parameters(self):
        for parameter, value in self.__dict__.items():
            if parameter.startswith("_TableGenerator__"):
                parameter = parameter.replace("_TableGenerator__", "")
            if not value:
                continue
            logging.info(f"{parameter}: {value}")

    def run(self):
        rows = map_ordered(generate_row, self.groups, self.threads)
        if self.enable_logging:
            failed = [row["group"] for row in rows if row["status"] == "fail"]
            logging.info("%d table rows, failures: %s", len(rows), failed or "none")
        return rows


def render_text(rows):
    lines = [f"G | t1 | t2 | {D_T2} * {D_T2}"]
    for row in rows:
        if row["status"] != "pass":
            lines.append(f"{row['group']} | {row['status']} {row.get('error', '')}".rstrip())
            continue
        product = row["product"]
        lines.append(
            " | ".join(
                [
                    row["group"],
                    row["t1"],
                    row["t2"],
                    f"({product[D_T1]})*{D_T1} + ({product[D_T2]})*{D_T2}",
                ]
            )
        )
    return "\n".join(lines) + "\n"
