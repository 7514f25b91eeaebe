"""Saito structures pushed forward along branched coverings of orbit spaces.

For K a normal subgroup of G the map M_K -> M_G is given by polynomials
x = pi(x'). A G/K-invariant Saito structure on M_K descends through the
frame change x' -> pi(x'); the multiplication stays polynomial and the
connection acquires a logarithmic pole along the branch divisor.
"""

import logging

from .connection import natural_connection
from .constants import CATALOG
from .duality import dual_saito, natural_almost, natural_ass_test, regular_mult
from .exactalg import CycNum, MatrixR, PolyRing, RatFn, i_sqrt3, sqrt5, univariate_common_roots
from .exceptions import (
    AssumptionViolated,
    NotDivisible,
    NotEquivariant,
    NotInvariant,
    RegularityFailure,
    TableMismatch,
    ZeroProjection,
)
from .frames import FrameChange
from .groups import (
    build_group,
    express_in,
    quotient_table,
    semi_invariant_project,
)
from .groups import generators as gen
from .groups.catalog import monomial_name
from .saito import check_ass, natural_saito
from .structures import AlmostSaitoData, SaitoData, euler_vector

POLYNOMIAL = "polynomial"
LOGARITHMIC = "logarithmic"
WORSE = "worse"

MAX_POLE_ORDER = 4


class CoveringMap(object):
    """The map M_K -> M_G, x = pi(x').

    Attributes:
        source: the subgroup K
        target: the group G
        substitution: pi as MPoly in K's invariant ring, one per G coordinate
    """

    def __init__(self, source, target, substitution, order=None):
        self.source = source
        self.target = target
        self.substitution = list(substitution)
        self.order = order
        for value, d in zip(self.substitution, target.degrees):
            if not value.is_homogeneous() or value.weighted_degree() != d:
                raise ValueError(f"{value} does not have weighted degree {d}")

    @property
    def name(self):
        return f"{self.source.name} -> {self.target.name}"

    def pulls_back_invariants(self):
        """pi(x'(u)) == x(u) for every basic invariant of G."""
        images = [value.compose(self.source.invariants) for value in self.substitution]
        return all(a == b for a, b in zip(images, self.target.invariants))

    def branch_divisor(self):
        """The pair (b', b): b' a power of the last source coordinate with
        b(pi(x')) = b', read off the Jacobian determinant of pi."""
        change = FrameChange(self.substitution)
        det = change.jacobian.det()
        ring = self.source.x_ring
        if det.is_constant():
            return ring.one, self.target.x_ring.one
        exps, _ = det.leading_term()
        last = ring.ngens - 1
        if len(det) != 1 or any(e for k, e in enumerate(exps) if k != last):
            raise NotEquivariant(self.name, f"(Jacobian determinant {det})")
        power = ring.gen(last) ** (exps[last] + 1)
        try:
            divisor = express_in(power, self.substitution, self.target.x_ring)
        except NotInvariant:
            raise NotEquivariant(self.name, power) from None
        return power, divisor

    def __repr__(self):
        return f"<CoveringMap {self.name}>"

    @property
    def data(self):
        return {
            "source": self.source.name,
            "target": self.target.name,
            "map": [str(value) for value in self.substitution],
        }

    def serializable_data(self):
        return self.data


class PoleReport(object):
    """Classification of the pushed-forward entries.

    ``entries`` maps (kind, alpha, gamma, beta) to polynomial, logarithmic
    or worse, kind being "C" or "Gamma".
    """

    def __init__(self, divisor):
        self.divisor = divisor
        self.entries = {}

    def record(self, key, classification):
        self.entries[key] = classification

    def of_kind(self, kind, classification):
        return sorted(
            key for key, value in self.entries.items() if key[0] == kind and value == classification
        )

    @property
    def multiplication_is_polynomial(self):
        return all(
            value == POLYNOMIAL for key, value in self.entries.items() if key[0] == "C"
        )

    @property
    def logarithmic_entries(self):
        return self.of_kind("Gamma", LOGARITHMIC)

    @property
    def has_worse_poles(self):
        return any(value == WORSE for value in self.entries.values())

    def __repr__(self):
        return f"<PoleReport logarithmic={self.logarithmic_entries}>"

    @property
    def data(self):
        return {
            "divisor": str(self.divisor),
            "entries": [
                {"kind": key[0], "index": [k + 1 for k in key[1:]], "pole": value}
                for key, value in sorted(self.entries.items())
                if value != POLYNOMIAL
            ],
            "multiplication_polynomial": self.multiplication_is_polynomial,
        }

    def serializable_data(self):
        return self.data


def descend(value, covering, branch, cache):
    """Write a function of x' invariant under G/K as a function of x.

    Returns (entry, classification) where the smallest j with b^j * value
    a polynomial in x decides between polynomial (j = 0), logarithmic
    (j = 1) and worse.
    """
    source_power, divisor = branch
    if not isinstance(value, RatFn):
        value = RatFn(value)
    target = covering.target.x_ring
    multiplier = value.ring.one
    for order in range(MAX_POLE_ORDER + 1):
        try:
            numerator = (value.num * multiplier).exact_div(value.den)
        except NotDivisible:
            multiplier = multiplier * source_power
            continue
        try:
            reduced = express_in(numerator, covering.substitution, target, cache)
        except NotInvariant:
            raise NotEquivariant(covering.name, value) from None
        if order == 0:
            return RatFn(reduced), POLYNOMIAL
        classification = LOGARITHMIC if order == 1 else WORSE
        return RatFn(reduced, divisor**order), classification
    raise NotEquivariant(covering.name, value)


def pushforward(S, covering):
    """The Saito structure S of M_K carried to M_G along the covering.

    Returns the pushed structure over G's invariant ring and the PoleReport
    of its entries.
    """
    change = FrameChange(covering.substitution)
    branch = covering.branch_divisor()
    report = PoleReport(branch[1])
    cache = {}
    target = covering.target.x_ring

    def push(kind, matrices):
        result = []
        for alpha, matrix in enumerate(matrices):
            rows = []
            for gamma, row in enumerate(matrix.rows):
                values = []
                for beta, value in enumerate(row):
                    entry, classification = descend(value, covering, branch, cache)
                    report.record((kind, alpha, gamma, beta), classification)
                    values.append(_simplify(entry))
                rows.append(values)
            result.append(rows)
        return [MatrixR(rows) for rows in result]

    gamma = push("Gamma", change.connection(S.gamma))
    mult = push("C", change.multiplication(S.mult))
    E = [descend(v, covering, branch, cache)[0] for v in change.vector(S.E)]
    e = [descend(v, covering, branch, cache)[0] for v in change.vector(S.e)]
    pushed = SaitoData(
        target,
        gamma,
        mult,
        [_simplify(v) for v in E],
        [_simplify(v) for v in e],
        group=covering.target,
    )
    return pushed, report


def _simplify(value):
    if isinstance(value, RatFn) and value.is_polynomial():
        return value.to_poly()
    return value


class CoveringRow(object):
    """One row of a covering table.

    Attributes:
        e: components of the unit field as CycNum
        subgroup: catalog name of K
        conjugator: h with K replaced by h^-1 K h, or None
        substitution: builds pi from the generators of K's invariant ring
    """

    def __init__(self, e, subgroup, substitution, conjugator=None):
        self.e = [CycNum.coerce(v) for v in e]
        self.subgroup = subgroup
        self.substitution = substitution
        self.conjugator = conjugator

    def build(self, target):
        source = build_group(self.subgroup)
        if self.conjugator is not None:
            source = source.conjugate(self.conjugator(), name=f"{source.name}^h")
        x, y = source.x_ring.gens()
        return CoveringMap(source, target, self.substitution(x, y))

    def __repr__(self):
        return f"<CoveringRow {self.subgroup} e={[str(v) for v in self.e]}>"


def covering_rows(group):
    """Rows of the covering table of a group, in table order."""
    name = group.name
    if group.family == "monomial":
        if group.params is None or group.rank != 2:
            raise AssumptionViolated("covering table", f"for {name}: no covering table")
        m, p, _ = group.params
        if p in (1, m):
            raise AssumptionViolated("covering table", f"for {name}: no proper normal subgroup of the table")
        k = m // p
        if p > 2:
            return [
                CoveringRow([1, 0], monomial_name(m, m, 2), lambda x, y: [x, y**k])
            ]
        return [
            CoveringRow([1, 0], monomial_name(m, m, 2), lambda x, y: [x, y**k]),
            CoveringRow(
                [-2, 1], monomial_name(k, 1, 2), lambda x, y: [y**2 - 2 * x, x]
            ),
            CoveringRow(
                [-2, -1],
                monomial_name(k, 1, 2),
                lambda x, y: [y**2 - 2 * x, -x],
                conjugator=lambda: gen.tau(m),
            ),
        ]
    twelve = 12 * i_sqrt3()
    sixty = 60 * sqrt5()
    rows = {
        "G7": [
            CoveringRow([1, 0], "G5", lambda x, y: [x, y**2]),
            CoveringRow([0, 1], "G6", lambda x, y: [y**3, x]),
            CoveringRow(
                [twelve, 1], "G6", lambda x, y: [-(y**3) + x * twelve, x], conjugator=gen.s
            ),
        ],
        "G11": [
            CoveringRow([1, 0], "G10", lambda x, y: [x, y**2]),
            CoveringRow([0, 1], "G9", lambda x, y: [y**3, x]),
            CoveringRow([1, 1], "G14", lambda x, y: [x + 108 * y**4, x]),
        ],
        "G15": [CoveringRow([1, 0], "G14", lambda x, y: [x, y**2])],
        "G19": [
            CoveringRow([1, 0], "G18", lambda x, y: [x, y**2]),
            CoveringRow([0, 1], "G17", lambda x, y: [y**3, x]),
            CoveringRow([-sixty, 1], "G21", lambda x, y: [x * (-sixty) + y**5, x]),
        ],
    }
    if name not in rows:
        raise AssumptionViolated("covering table", f"for {name}: no covering table")
    return rows[name]


class CoveringReport(object):
    def __init__(self, group):
        self.group = group
        self.rows = []

    def add(self, index, row, covering, poles):
        self.rows.append(
            {
                "row": index + 1,
                "e": [str(v) for v in row.e],
                "subgroup": covering.source.name,
                "map": [str(v) for v in covering.substitution],
                "poles": poles.serializable_data(),
                "status": "pass",
            }
        )

    @property
    def data(self):
        return {"group": self.group.name, "rows": self.rows}

    def serializable_data(self):
        return self.data


def verify_covering_table(group, rows=None, enable_logging=False):
    """Check every row of the covering table of ``group``.

    For each row the natural Saito structure of K is pushed forward; the
    unit must be the tabulated field, the multiplication must descend
    polynomially, the connection may only have a logarithmic pole, and
    the result must be the dual of the natural almost Saito structure of
    G with that unit.
    """
    table = covering_rows(group)
    selected = range(len(table)) if rows is None else [r - 1 for r in rows]
    report = CoveringReport(group)
    for index in selected:
        row = table[index]
        covering = row.build(group)
        if not covering.pulls_back_invariants():
            raise TableMismatch(index + 1, "map", group.invariants, covering.substitution)
        S = natural_saito(covering.source)
        pushed, poles = pushforward(S, covering)
        expected = [group.x_ring.constant(v) for v in row.e]
        if any(a != b for a, b in zip(pushed.e, expected)):
            raise TableMismatch(index + 1, "e", row.e, pushed.e)
        if not poles.multiplication_is_polynomial:
            raise TableMismatch(index + 1, "C", POLYNOMIAL, poles.of_kind("C", LOGARITHMIC))
        if poles.has_worse_poles:
            raise TableMismatch(index + 1, "Gamma", LOGARITHMIC, poles.of_kind("Gamma", WORSE))
        dual = dual_saito(natural_almost(group, expected))
        if any(a != b for a, b in zip(dual.mult, pushed.mult)):
            raise TableMismatch(index + 1, "multiplication", "dual of the natural structure", "pushforward")
        if any(a != b for a, b in zip(dual.gamma, pushed.gamma)):
            raise TableMismatch(index + 1, "connection", "dual of the natural structure", "pushforward")
        if enable_logging:
            logging.info(
                "%s row %d: %s verified, logarithmic entries %s",
                group.name,
                index + 1,
                covering.name,
                poles.logarithmic_entries,
            )
        report.add(index, row, covering, poles)
    return report


def semi_invariant_basis(group, subgroup):
    """Basic invariants of K that are semi-invariants of G/K, the ones of
    top degree being G-invariant."""
    table = quotient_table(group, subgroup)
    if table.order == 1:
        return list(subgroup.invariants)
    if not table.is_multiplicative():
        raise AssumptionViolated("abelian quotient", f"G/K is not abelian for {group.name}, {subgroup.name}")
    adjusted = []
    for alpha, z in enumerate(subgroup.invariants):
        try:
            value = semi_invariant_project(z, table, alpha)
        except ZeroProjection:
            raise AssumptionViolated("abelian quotient", f"no semi-invariant of degree {subgroup.degrees[alpha]}") from None
        if subgroup.degrees[alpha] == subgroup.d1 and not table.is_trivial(alpha):
            raise AssumptionViolated("invariant top degree", f"{z} is not invariant under {group.name}")
        adjusted.append(value)
    return adjusted


class LineSearch(object):
    """Unit field lines [a : b] carrying a natural almost Saito structure.

    Attributes:
        lines: normalised representatives, last nonzero coordinate 1
        degrees: largest degree in (a, b) of the residual forms
    """

    def __init__(self, group, lines, degrees=None):
        self.group = group
        self.lines = list(lines)
        self.degrees = degrees

    def __len__(self):
        return len(self.lines)

    def __repr__(self):
        return f"<LineSearch {self.group.name}: {len(self.lines)} lines>"

    @property
    def data(self):
        return {
            "group": self.group.name,
            "lines": [[str(a), str(b)] for a, b in self.lines],
            "residual_degree": self.degrees,
        }

    def serializable_data(self):
        return self.data


def parametric_structure(group, family):
    """The natural almost Saito structure with e = a d_x + b d_y over the
    ring (x, y, a, b)."""
    x_ring = group.x_ring
    ring = PolyRing(list(x_ring.names) + ["a", "b"], list(x_ring.weights) + [1, 1])
    positions = list(range(x_ring.ngens))
    delta = family.delta.embed(ring, positions)
    omega = [
        P.map(lambda v: RatFn(v.embed(ring, positions), delta)) for P in family.P
    ]
    a, b = ring.gen(ring.ngens - 2), ring.gen(ring.ngens - 1)
    e = [a, b]
    mult = regular_mult(omega, e)
    return AlmostSaitoData(
        ring,
        omega,
        mult,
        [v.embed(ring, positions) for v in euler_vector(x_ring)],
        e,
        CycNum.rational(1) / group.d1,
        group=group,
    )


def _residual_forms(report, ring):
    """Binary forms in (a, b): the coefficients of every x, y monomial in
    the numerators of the ASS1 and ASS2 residuals."""
    n = ring.ngens - 2
    forms = {}
    for family in ("ass1", "ass2"):
        for _, residual in report.families.get(family, []):
            for position, value in enumerate(report.values(residual)):
                numerator = value.num if isinstance(value, RatFn) else value
                for exps, coeff in numerator.terms.items():
                    key = (family, id(residual), position, exps[:n])
                    forms.setdefault(key, {})[exps[n:]] = coeff
    unique = []
    for form in forms.values():
        if form not in unique:
            unique.append(form)
    return unique


def _line_candidates(forms):
    candidates = []
    if all(
        sum((c for (i, j), c in form.items() if j == 0), CycNum.rational(0)).is_zero()
        for form in forms
    ):
        candidates.append((CycNum.rational(1), CycNum.rational(0)))
    polynomials = []
    for form in forms:
        degree = max(i for i, _ in form)
        coefficients = [CycNum.rational(0)] * (degree + 1)
        for (i, _), c in form.items():
            coefficients[i] = coefficients[i] + c
        polynomials.append(coefficients)
    try:
        roots = univariate_common_roots(polynomials)
    except ValueError:
        roots = []
    candidates.extend((root, CycNum.rational(1)) for root in roots)
    return candidates


def find_natural_e_lines(group, family=None, enable_logging=False):
    """The lines [a : b] for which e = a d_x + b d_y gives a natural almost
    Saito structure."""
    if family is None:
        family = natural_connection(group)
    ring = group.x_ring
    if group.max_deg_multiplicity == 1 or group.rank != 2:
        e = [ring.one] + [ring.zero] * (group.rank - 1)
        verdict = natural_ass_test(group, e, family)
        lines = [(CycNum.rational(1), CycNum.rational(0))] if verdict.is_natural else []
        return LineSearch(group, lines, 0)

    A = parametric_structure(group, family)
    report = check_ass(A)
    forms = _residual_forms(report, A.ring)
    degrees = max((sum(k) for form in forms for k in form), default=0)
    if enable_logging:
        logging.info(
            "%s: %d residual forms in (a, b) of degree at most %d",
            group.name,
            len(forms),
            degrees,
        )
    lines = []
    for a, b in _line_candidates(forms):
        e = [ring.constant(a), ring.constant(b)]
        verdict = natural_ass_test(group, e, family)
        if verdict.name == "NotRegular":
            raise RegularityFailure([str(a), str(b)])
        if verdict.is_natural:
            lines.append((a, b))
    if enable_logging:
        logging.info(
            "%s: lines %s", group.name, [[str(a), str(b)] for a, b in lines]
        )
    return LineSearch(group, lines, degrees)


def is_covered(group):
    return group.name in CATALOG.COVERED_EXCEPTIONAL or (
        group.family == "monomial" and group.rank == 2
    )
